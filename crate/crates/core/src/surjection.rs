//! The surjection model of the operad 𝒮₂: nondegenerate surjections of
//! complexity at most 2, their differential, operadic composition, the
//! symmetric-group action and the coinvariant complexes.
//!
//! Signs are expressed through caesuras, the non-final occurrences of a value.

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::int::Int;
use crate::ring::{factorial, Ring};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    seq: Vec<u8>,
    n: u8,
}

impl Surjection {
    /// Validates surjectivity onto `1..=max` and nondegeneracy.
    pub fn new(seq: Vec<u8>) -> Result<Self> {
        let n = seq.iter().copied().max().unwrap_or(0);
        if seq.is_empty() {
            return Err(Error::Invalid("empty surjection".into()));
        }
        if seq.contains(&0) {
            return Err(Error::Invalid("surjection values start at 1".into()));
        }
        let mut seen = vec![false; n as usize + 1];
        for &v in &seq {
            seen[v as usize] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::Invalid(format!("{seq:?} is not surjective onto 1..{n}")));
        }
        if !nondegenerate(&seq) {
            return Err(Error::Invalid(format!("{seq:?} has equal adjacent entries")));
        }
        Ok(Surjection { seq, n })
    }

    /// Caller guarantees the invariants.
    pub(crate) fn raw(seq: Vec<u8>, n: u8) -> Self {
        debug_assert!(nondegenerate(&seq));
        Surjection { seq, n }
    }

    pub fn identity() -> Self {
        Surjection { seq: vec![1], n: 1 }
    }

    pub fn seq(&self) -> &[u8] {
        &self.seq
    }

    pub fn arity(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.seq.len() - self.n as usize
    }

    pub fn complexity(&self) -> usize {
        complexity(&self.seq)
    }

    pub fn is_caesura(&self, j: usize) -> bool {
        self.seq[j + 1..].contains(&self.seq[j])
    }

    fn caesura_flags(&self) -> Vec<bool> {
        (0..self.seq.len()).map(|j| self.is_caesura(j)).collect()
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Surjection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.seq.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Surjection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let seq = Vec::<u8>::deserialize(d)?;
        Surjection::new(seq).map_err(serde::de::Error::custom)
    }
}

pub fn nondegenerate(seq: &[u8]) -> bool {
    seq.windows(2).all(|w| w[0] != w[1])
}

/// Maximum over value pairs of the number of alternations in the
/// two-value subsequence.
pub fn complexity(seq: &[u8]) -> usize {
    let n = seq.iter().copied().max().unwrap_or(0);
    let mut best = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let mut last = 0u8;
            let mut blocks = 0usize;
            for &v in seq {
                if (v == i || v == j) && v != last {
                    blocks += 1;
                    last = v;
                }
            }
            best = best.max(blocks.saturating_sub(1));
        }
    }
    best
}

/// Signed faces of a basis surjection.
pub fn boundary(u: &Surjection) -> Vec<(Surjection, i64)> {
    let seq = &u.seq;
    let caes = u.caesura_flags();
    let mut before = vec![0usize; seq.len()];
    let mut c = 0;
    for j in 0..seq.len() {
        before[j] = c;
        if caes[j] {
            c += 1;
        }
    }
    let mut acc: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    for j in 0..seq.len() {
        let prev = seq[..j].iter().rposition(|&w| w == seq[j]);
        if !caes[j] && prev.is_none() {
            continue;
        }
        if j > 0 && j + 1 < seq.len() && seq[j - 1] == seq[j + 1] {
            continue;
        }
        let mut v = seq.clone();
        v.remove(j);
        let s = if caes[j] { before[j] + 1 } else { before[prev.unwrap()] };
        *acc.entry(v).or_insert(0) += if s % 2 == 0 { 1 } else { -1 };
    }
    acc.into_iter().filter(|(_, c)| *c != 0).map(|(v, c)| (Surjection::raw(v, u.n), c)).collect()
}

#[derive(Clone, Copy, PartialEq)]
enum Mark {
    U,
    V,
    Plain,
}

/// Basis-level operadic composition `u ∘ᵢ v`.
pub fn compose_basis(u: &Surjection, i: usize, v: &Surjection) -> Vec<(Surjection, i64)> {
    assert!(i >= 1 && i <= u.arity(), "slot {i} outside 1..={}", u.arity());
    let i8 = i as u8;
    let nv = v.n;
    let k = u.seq.iter().filter(|&&w| w == i8).count();
    let lv = v.seq.len();
    let ucaes = u.caesura_flags();
    let vcaes = v.caesura_flags();
    let arity = u.n + nv - 1;
    let mut acc: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    let mut cuts = vec![0usize; k - 1];
    loop {
        let mut bounds = Vec::with_capacity(k + 1);
        bounds.push(0);
        bounds.extend_from_slice(&cuts);
        bounds.push(lv - 1);
        let mut res = Vec::with_capacity(u.seq.len() + lv + k);
        let mut marks = Vec::with_capacity(res.capacity());
        let mut t = 0;
        for (q, &w) in u.seq.iter().enumerate() {
            if w == i8 {
                for r in bounds[t]..=bounds[t + 1] {
                    res.push(v.seq[r] + i8 - 1);
                    marks.push(if r == bounds[t + 1] && t + 1 < k {
                        Mark::U
                    } else if vcaes[r] {
                        Mark::V
                    } else {
                        Mark::Plain
                    });
                }
                t += 1;
            } else {
                res.push(if w < i8 { w } else { w + nv - 1 });
                marks.push(if ucaes[q] { Mark::U } else { Mark::Plain });
            }
        }
        if nondegenerate(&res) {
            let mut inv = 0usize;
            let mut seen_v = 0usize;
            for m in &marks {
                match m {
                    Mark::V => seen_v += 1,
                    Mark::U => inv += seen_v,
                    Mark::Plain => {}
                }
            }
            assert!(complexity(&res) <= 2, "composition left 𝒮₂: {res:?}");
            *acc.entry(res).or_insert(0) += if inv % 2 == 0 { 1 } else { -1 };
        }
        // next nondecreasing cut tuple
        let mut idx = cuts.len();
        loop {
            if idx == 0 {
                return acc
                    .into_iter()
                    .filter(|(_, c)| *c != 0)
                    .map(|(s, c)| (Surjection::raw(s, arity), c))
                    .collect();
            }
            idx -= 1;
            if cuts[idx] + 1 < lv {
                cuts[idx] += 1;
                let val = cuts[idx];
                for c in &mut cuts[idx + 1..] {
                    *c = val;
                }
                break;
            }
        }
    }
}

/// Relabels values by `sigma` (a permutation of `1..=n`, as `sigma[v−1]`).
pub fn sn_act(u: &Surjection, sigma: &[u8]) -> Surjection {
    assert_eq!(sigma.len(), u.arity(), "permutation size must equal the arity");
    Surjection::raw(u.seq.iter().map(|&v| sigma[v as usize - 1]).collect(), u.n)
}

/// Parity of a permutation given as a sequence.
pub fn perm_sign(p: &[u8]) -> i64 {
    let mut inv = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Lexicographically least relabeling of `u` and the permutation achieving it:
/// values are renumbered in order of first occurrence.
pub fn orbit_representative(u: &Surjection) -> (Surjection, Vec<u8>) {
    let mut sigma = vec![0u8; u.arity()];
    let mut next = 1;
    for &v in &u.seq {
        if sigma[v as usize - 1] == 0 {
            sigma[v as usize - 1] = next;
            next += 1;
        }
    }
    (sn_act(u, &sigma), sigma)
}

pub fn is_orbit_representative(u: &Surjection) -> bool {
    let mut next = 1;
    for &v in &u.seq {
        if v == next {
            next += 1;
        } else if v > next {
            return false;
        }
    }
    true
}

/// Basis of 𝒮₂(n) in degree `deg`, lexicographically ordered.
pub fn basis(n: usize, deg: usize) -> Vec<Surjection> {
    enumerate(n, deg, false)
}

/// Orbit representatives of the free S_n action on the degree-`deg` basis.
pub fn orbit_basis(n: usize, deg: usize) -> Vec<Surjection> {
    enumerate(n, deg, true)
}

fn enumerate(n: usize, deg: usize, reps_only: bool) -> Vec<Surjection> {
    let mut out = Vec::new();
    if n == 0 || n > 12 {
        return out;
    }
    let len = n + deg;
    let mut seq = Vec::with_capacity(len);
    let mut counts = vec![0usize; n + 1];
    grow(n as u8, len, reps_only, &mut seq, &mut counts, &mut out);
    out
}

fn grow(n: u8, len: usize, reps_only: bool, seq: &mut Vec<u8>, counts: &mut [usize], out: &mut Vec<Surjection>) {
    let missing = counts[1..].iter().filter(|&&c| c == 0).count();
    if seq.len() == len {
        if missing == 0 {
            out.push(Surjection::raw(seq.clone(), n));
        }
        return;
    }
    if len - seq.len() < missing {
        return;
    }
    let cap = if reps_only { (n as usize).min(n as usize - missing + 1) as u8 } else { n };
    for v in 1..=cap {
        if seq.last() == Some(&v) {
            continue;
        }
        seq.push(v);
        if complexity_le2_with_last(seq) {
            counts[v as usize] += 1;
            grow(n, len, reps_only, seq, counts, out);
            counts[v as usize] -= 1;
        }
        seq.pop();
    }
}

// The prefix was already within complexity 2; only pairs involving the new
// last value can have grown.
fn complexity_le2_with_last(seq: &[u8]) -> bool {
    let v = *seq.last().unwrap();
    let n = seq.iter().copied().max().unwrap();
    for w in 1..=n {
        if w == v {
            continue;
        }
        let mut last = 0u8;
        let mut blocks = 0;
        for &x in seq {
            if (x == v || x == w) && x != last {
                blocks += 1;
                last = x;
            }
        }
        if blocks > 3 {
            return false;
        }
    }
    true
}

/// Top degree of 𝒮₂(n).
pub fn top_degree(n: usize) -> usize {
    n.saturating_sub(1)
}

/// A homogeneous element of 𝒮₂(n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadChain {
    arity: usize,
    elem: FreeElement<Surjection>,
}

impl OperadChain {
    pub fn zero(arity: usize, ring: Ring) -> Self {
        OperadChain { arity, elem: FreeElement::zero(ring) }
    }

    pub fn basis(u: Surjection, ring: Ring) -> Self {
        OperadChain { arity: u.arity(), elem: FreeElement::basis(ring, u) }
    }

    pub fn from_seq(seq: &[u8], ring: Ring) -> Result<Self> {
        Ok(Self::basis(Surjection::new(seq.to_vec())?, ring))
    }

    /// Checks common arity, common degree and complexity ≤ 2.
    pub fn from_element(arity: usize, elem: FreeElement<Surjection>) -> Result<Self> {
        let mut deg = None;
        for u in elem.keys() {
            if u.arity() != arity {
                return Err(Error::Invalid(format!("{u} does not have arity {arity}")));
            }
            if deg.is_some_and(|d| d != u.degree()) {
                return Err(Error::Invalid("operad chain is not homogeneous".into()));
            }
            if u.complexity() > 2 {
                return Err(Error::Invalid(format!("{u} has complexity {} > 2", u.complexity())));
            }
            deg = Some(u.degree());
        }
        Ok(OperadChain { arity, elem })
    }

    fn from_map(arity: usize, ring: Ring, m: BTreeMap<Surjection, Int>) -> Self {
        OperadChain { arity, elem: FreeElement::from_terms(ring, m) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn ring(&self) -> Ring {
        self.elem.ring()
    }

    pub fn element(&self) -> &FreeElement<Surjection> {
        &self.elem
    }

    pub fn degree(&self) -> Option<usize> {
        self.elem.keys().next().map(Surjection::degree)
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    pub fn coeff(&self, u: &Surjection) -> Int {
        self.elem.coeff(u)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Surjection, &Int)> {
        self.elem.iter()
    }

    pub fn len(&self) -> usize {
        self.elem.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elem.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity);
        OperadChain { arity: self.arity, elem: self.elem.add(&o.elem) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity);
        OperadChain { arity: self.arity, elem: self.elem.sub(&o.elem) }
    }

    pub fn scale(&self, c: i64) -> Self {
        OperadChain { arity: self.arity, elem: self.elem.scale(&Int::from(c)) }
    }

    pub fn change_ring(&self, ring: Ring) -> Self {
        OperadChain { arity: self.arity, elem: self.elem.change_ring(ring) }
    }

    pub fn differential(&self) -> Self {
        let mut out = BTreeMap::new();
        for (u, c) in self.elem.iter() {
            for (v, s) in boundary(u) {
                let e = out.entry(v).or_insert(Int::ZERO);
                *e += &(c * &Int::from(s));
            }
        }
        Self::from_map(self.arity, self.ring(), out)
    }

    /// `self ∘ᵢ other`.
    pub fn compose(&self, i: usize, other: &Self) -> Self {
        assert!(i >= 1 && i <= self.arity, "slot {i} outside 1..={}", self.arity);
        let mut out = BTreeMap::new();
        for (u, a) in self.elem.iter() {
            for (v, b) in other.elem.iter() {
                let ab = a * b;
                for (w, s) in compose_basis(u, i, v) {
                    let e = out.entry(w).or_insert(Int::ZERO);
                    *e += &(&ab * &Int::from(s));
                }
            }
        }
        Self::from_map(self.arity + other.arity - 1, self.ring(), out)
    }

    /// Relabels every term by `sigma`.
    pub fn relabel(&self, sigma: &[u8]) -> Self {
        OperadChain { arity: self.arity, elem: self.elem.map_keys(|u| Some((sn_act(u, sigma), 1))) }
    }

    /// Image in the coinvariants; `twisted` identifies `u·σ` with `sgn(σ)·u`.
    pub fn project(&self, twisted: bool) -> FreeElement<Surjection> {
        self.elem.map_keys(|u| {
            let (r, sigma) = orbit_representative(u);
            Some((r, if twisted { perm_sign(&sigma) } else { 1 }))
        })
    }
}

impl fmt::Display for OperadChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.elem.fmt(f)
    }
}

pub fn identity_chain(ring: Ring) -> OperadChain {
    OperadChain::basis(Surjection::identity(), ring)
}

/// The surjection `(1,2,1,3,1,…,1,k+1,1)` of arity `k+1` and degree `k`.
pub fn brace_generator(k: usize, ring: Ring) -> OperadChain {
    assert!(k >= 1 && k < 255);
    let mut seq = vec![1u8];
    for j in 2..=k as u8 + 1 {
        seq.push(j);
        seq.push(1);
    }
    OperadChain::basis(Surjection::raw(seq, k as u8 + 1), ring)
}

pub fn cup_generator(ring: Ring) -> OperadChain {
    OperadChain::basis(Surjection::raw(vec![1, 2], 2), ring)
}

/// `((1,2,1) ∘₁ ⋯ ((1,2,1) ∘₁ (1,2,1)))`: the left-iterated brace
/// `x₁{x₂}⋯{x_k}` up to the action's degree twist.
pub fn left_brace_chain(k: usize, ring: Ring) -> OperadChain {
    assert!(k >= 1);
    let g = brace_generator(1, ring);
    let mut ch = identity_chain(ring);
    for _ in 1..k {
        ch = g.compose(1, &ch);
    }
    ch
}

/// The chain acting as `x₁{x₂}⋯{x_k}` on degree-zero-parity inputs.
pub fn brace_monomial(k: usize, ring: Ring) -> OperadChain {
    let c = if k >= 3 { (k - 1) * (k - 2) / 2 } else { 0 };
    left_brace_chain(k, ring).scale(crate::ring::sign(c % 2 == 1))
}

/// `((1,2) ∘₂ b) ∘₁ a`.
pub fn cup_chains(a: &OperadChain, b: &OperadChain) -> OperadChain {
    cup_generator(a.ring()).compose(2, b).compose(1, a)
}

/// Parity of a cochain's degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(d: usize) -> Parity {
        if d % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub(crate) fn bit(self) -> usize {
        self as usize
    }
}

/// The arity-`k` chain acting as `x^[k] = x{x}⋯{x}` on every `x` whose
/// degree has the given parity.
pub fn power_chain(k: usize, parity: Parity, ring: Ring) -> OperadChain {
    let m = parity.bit();
    // one sign per factor j with j·m − (j−1) odd
    let flips = (1..k).filter(|&j| (j * m + j + 1) % 2 == 1).count();
    left_brace_chain(k, ring).scale(crate::ring::sign(flips % 2 == 1))
}

/// Chain acting as `x^[i] * x^[k]` for `x` of the given parity.
pub fn cup_power_chain(i: usize, k: usize, parity: Parity, ring: Ring) -> OperadChain {
    let m = parity.bit();
    let ya = (i * m + 1 + i) % 2; // parity of i·m − (i−1)
    let s = ((k - 1) * ya) % 2 == 1;
    cup_chains(&power_chain(i, parity, ring), &power_chain(k, parity, ring)).scale(crate::ring::sign(s))
}

/// ξ₁ as an operad chain: `x^[p]` for odd-degree `x` (any `x` when p = 2,
/// where it is `(1,2,1)`).
pub fn xi1_chain(p: u32, ring: Ring) -> Result<OperadChain> {
    if !crate::ring::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let parity = if p == 2 { Parity::Even } else { Parity::Odd };
    Ok(power_chain(p as usize, parity, ring))
}

/// ζ₁ = Σ_{i=1}^{p−1} −(p−1)!/(i!(p−i)!)·x^[i]*x^[p−i], coefficients taken in ℤ
/// and reduced into `ring`.
pub fn zeta1_chain(p: u32, ring: Ring) -> Result<OperadChain> {
    if !crate::ring::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if p == 2 {
        return Err(Error::Hypothesis("p·deg(x) being odd".into()));
    }
    let p = p as usize;
    let mut out = OperadChain::zero(p, ring);
    for i in 1..p {
        let c = factorial(p as u64 - 1)
            .div_exact(factorial(i as u64).as_i64().unwrap() * factorial((p - i) as u64).as_i64().unwrap())
            .unwrap();
        let term = cup_power_chain(i, p - i, Parity::Odd, Ring::Integers);
        let scaled = OperadChain { arity: p, elem: term.elem.scale(&-c) };
        out = out.add(&scaled.change_ring(ring));
    }
    Ok(out)
}

/// The complex 𝒮₂(n) over `ring`, degrees `0..=n−1`.
pub fn s2_complex(n: usize, ring: Ring) -> Result<ChainComplex<Surjection>> {
    let mut b = BTreeMap::new();
    for d in 0..=top_degree(n) {
        b.insert(d as i64, basis(n, d));
    }
    ChainComplex::from_differential(ring, b, |u| FreeElement::from_terms(ring, boundary(u).into_iter().map(|(v, c)| (v, Int::from(c)))))
}

/// 𝒮₂(n) ⊗_{S_n} 𝕜 (`twisted = false`) or ⊗_{S_n} ±𝕜 (`twisted = true`),
/// on lexicographically least orbit representatives.
pub fn coinvariant_complex(n: usize, ring: Ring, twisted: bool) -> Result<ChainComplex<Surjection>> {
    let mut b = BTreeMap::new();
    for d in 0..=top_degree(n) {
        b.insert(d as i64, orbit_basis(n, d));
    }
    ChainComplex::from_differential(ring, b, |u| {
        OperadChain::basis(u.clone(), ring).differential().project(twisted)
    })
}

/// A forest of brace trees: a vertex value and the subforests filling the gaps
/// between its consecutive occurrences. Top-level trees multiply by cup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceTree {
    pub value: u8,
    pub gaps: Vec<Vec<BraceTree>>,
}

/// Reads a surjection as a cup product of nested braces.
pub fn parse_forest(seg: &[u8]) -> Vec<BraceTree> {
    let mut trees = Vec::new();
    let mut i = 0;
    while i < seg.len() {
        let v = seg[i];
        let last = i + seg[i..].iter().rposition(|&w| w == v).unwrap();
        let occ: Vec<usize> = (i..=last).filter(|&k| seg[k] == v).collect();
        let gaps = occ.windows(2).map(|w| parse_forest(&seg[w[0] + 1..w[1]])).collect();
        trees.push(BraceTree { value: v, gaps });
        i = last + 1;
    }
    trees
}

pub fn preorder(forest: &[BraceTree], acc: &mut Vec<u8>) {
    for t in forest {
        acc.push(t.value);
        for g in &t.gaps {
            preorder(g, acc);
        }
    }
}

/// Koszul sign parity of reordering inputs `1..n` of degree parities `ms` into `order`.
pub fn koszul_parity(order: &[u8], ms: &[usize]) -> usize {
    let mut s = 0;
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            if order[a] > order[b] {
                s += ms[order[a] as usize - 1] * ms[order[b] as usize - 1];
            }
        }
    }
    s % 2
}

/// Degree twist of the action: for every caesura, the total degree of the
/// values whose first occurrence is at or before it.
pub fn caesura_twist(u: &Surjection, ms: &[usize]) -> usize {
    let mut seen = vec![false; u.arity() + 1];
    let mut acc = 0;
    let mut s = 0;
    for (j, &v) in u.seq.iter().enumerate() {
        if !seen[v as usize] {
            seen[v as usize] = true;
            acc += ms[v as usize - 1];
        }
        if u.is_caesura(j) {
            s += acc;
        }
    }
    s % 2
}

/// Total sign with which `u` acts on inputs of degree parities `ms`,
/// relative to evaluating its brace forest.
pub fn action_sign(u: &Surjection, ms: &[usize]) -> i64 {
    let mut order = Vec::new();
    preorder(&parse_forest(&u.seq), &mut order);
    crate::ring::sign((koszul_parity(&order, ms) + caesura_twist(u, ms)) % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(seq: &[u8]) -> Surjection {
        Surjection::new(seq.to_vec()).unwrap()
    }

    const Z: Ring = Ring::Integers;

    #[test]
    fn complexity_examples() {
        assert_eq!(s(&[1, 2]).complexity(), 1);
        assert_eq!(s(&[1, 2, 1]).complexity(), 2);
        assert_eq!(s(&[1, 2, 1, 2]).complexity(), 3);
    }

    #[test]
    fn validation() {
        assert!(Surjection::new(vec![1, 1, 2]).is_err());
        assert!(Surjection::new(vec![1, 3]).is_err());
        assert!(Surjection::new(vec![]).is_err());
        assert_eq!(s(&[2, 1, 2]).degree(), 1);
    }

    #[test]
    fn differential_of_generators() {
        assert!(cup_generator(Z).differential().is_zero());
        let d = brace_generator(1, Z).differential();
        let expect = OperadChain::from_seq(&[1, 2], Z).unwrap().sub(&OperadChain::from_seq(&[2, 1], Z).unwrap());
        assert_eq!(d, expect);
    }

    #[test]
    fn composition_unit_and_cup_associativity() {
        let cup = cup_generator(Z);
        let id = identity_chain(Z);
        assert_eq!(cup.compose(1, &cup), OperadChain::from_seq(&[1, 2, 3], Z).unwrap());
        assert_eq!(cup.compose(1, &cup), cup.compose(2, &cup));
        let b = brace_generator(2, Z);
        assert_eq!(id.compose(1, &b), b);
        assert_eq!(b.compose(2, &id), b);
    }

    #[test]
    fn brace_generators_shape() {
        assert_eq!(brace_generator(1, Z), OperadChain::from_seq(&[1, 2, 1], Z).unwrap());
        assert_eq!(brace_generator(2, Z), OperadChain::from_seq(&[1, 2, 1, 3, 1], Z).unwrap());
        for k in 1..5 {
            assert_eq!(brace_generator(k, Z).degree(), Some(k));
        }
    }

    #[test]
    fn power_chain_small() {
        assert_eq!(power_chain(1, Parity::Odd, Z), identity_chain(Z));
        assert_eq!(power_chain(2, Parity::Even, Z), brace_generator(1, Z));
        assert_eq!(xi1_chain(2, Z).unwrap(), brace_generator(1, Z));
        assert!(matches!(zeta1_chain(2, Z), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn zeta1_at_three_is_two_cup_terms() {
        let z = zeta1_chain(3, Z).unwrap();
        let expect = cup_power_chain(1, 2, Parity::Odd, Z).add(&cup_power_chain(2, 1, Parity::Odd, Z)).scale(-1);
        assert_eq!(z, expect);
    }

    #[test]
    fn orbit_representatives() {
        let u = s(&[2, 1, 3, 1]);
        let (r, sigma) = orbit_representative(&u);
        assert_eq!(r, s(&[1, 2, 3, 2]));
        assert_eq!(sn_act(&u, &sigma), r);
        assert!(is_orbit_representative(&r));
        assert!(!is_orbit_representative(&u));
        assert_eq!(sn_act(&s(&[1, 2]), &[2, 1]), s(&[2, 1]));
    }

    #[test]
    fn enumeration_counts() {
        // 𝒮₂(2): (1,2),(2,1) / (1,2,1),(2,1,2)
        assert_eq!(basis(2, 0).len(), 2);
        assert_eq!(basis(2, 1).len(), 2);
        assert_eq!(basis(2, 2).len(), 0);
        for n in 1..=4 {
            for d in 0..n {
                assert_eq!(orbit_basis(n, d).len() * (1..=n).product::<usize>(), basis(n, d).len());
            }
        }
    }

    #[test]
    fn parse_forest_of_brace_and_cup() {
        let f = parse_forest(&[1, 2, 1, 3]);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].value, 1);
        assert_eq!(f[0].gaps, vec![vec![BraceTree { value: 2, gaps: vec![] }]]);
        assert_eq!(f[1], BraceTree { value: 3, gaps: vec![] });
    }

    #[test]
    fn surjection_json() {
        let u = s(&[1, 2, 1]);
        let j = serde_json::to_string(&u).unwrap();
        assert_eq!(j, "[1,2,1]");
        assert_eq!(serde_json::from_str::<Surjection>(&j).unwrap(), u);
        assert!(serde_json::from_str::<Surjection>("[1,1]").is_err());
    }
}
