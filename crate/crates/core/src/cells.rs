//! Cellular chain complexes of configuration spaces in the plane: the
//! composition complexes B₂(n) with twisted or constant coefficients, the
//! permutation complex F₂(n), and the inclusion I: F₂(n) → 𝒮₂(n).

use crate::complex::{induced_map_rank, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::int::Int;
use crate::ring::{binom_int, binom_minus1, sign, Ring};
use crate::surjection::{cup_chains, left_brace_chain, perm_sign, s2_complex, OperadChain};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    Twisted,
    Constant,
}

/// A composition `(k₁,…,k_ℓ)` of `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct CompCell(Vec<u8>);

impl CompCell {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a composition")));
        }
        Ok(CompCell(parts))
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().map(|&k| k as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree of the dual generator ε(k).
    pub fn eps_degree(&self) -> usize {
        self.n() - self.len()
    }
}

impl TryFrom<Vec<u8>> for CompCell {
    type Error = Error;
    fn try_from(v: Vec<u8>) -> Result<Self> {
        CompCell::new(v)
    }
}

impl From<CompCell> for Vec<u8> {
    fn from(c: CompCell) -> Vec<u8> {
        c.0
    }
}

impl fmt::Display for CompCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A permutation `σ` of `1..=n` with a composition of `n` cutting it into blocks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PermCellRepr", into = "PermCellRepr")]
pub struct PermCell {
    perm: Vec<u8>,
    comp: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct PermCellRepr {
    perm: Vec<u8>,
    comp: Vec<u8>,
}

impl TryFrom<PermCellRepr> for PermCell {
    type Error = Error;
    fn try_from(r: PermCellRepr) -> Result<Self> {
        PermCell::new(r.perm, r.comp)
    }
}

impl From<PermCell> for PermCellRepr {
    fn from(c: PermCell) -> Self {
        PermCellRepr { perm: c.perm, comp: c.comp }
    }
}

impl PermCell {
    pub fn new(perm: Vec<u8>, comp: Vec<u8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &v in &perm {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
            }
            seen[v as usize] = true;
        }
        let c = CompCell::new(comp)?;
        if c.n() != n {
            return Err(Error::Invalid(format!("composition {c} does not sum to {n}")));
        }
        Ok(PermCell { perm, comp: c.0 })
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn comp(&self) -> &[u8] {
        &self.comp
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn eps_degree(&self) -> usize {
        self.perm.len() - self.comp.len()
    }
}

impl fmt::Display for PermCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.perm.iter().map(u8::to_string).collect();
        let c: Vec<String> = self.comp.iter().map(u8::to_string).collect();
        write!(f, "({};{})", p.join(","), c.join(","))
    }
}

/// All compositions of `n`, ordered by number of parts, then lexicographically.
pub fn compositions(n: usize) -> Vec<CompCell> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<CompCell> = (0..1u64 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1u8;
            for g in 0..n - 1 {
                if mask & (1 << g) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            CompCell(parts)
        })
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut p: Vec<u8> = (1..=n as u8).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Coefficient of `e(…,kᵢ+kᵢ₊₁,…)` in `∂e(k)` when merging blocks `i, i+1` (`i` 1-based).
pub fn merge_coefficient(k: &[u8], i: usize, coeff: Coefficients) -> Int {
    let (a, b) = (k[i - 1] as u64, k[i] as u64);
    match coeff {
        Coefficients::Twisted => {
            let c = binom_int(a + b, a);
            if i % 2 == 1 {
                c
            } else {
                -c
            }
        }
        Coefficients::Constant => {
            let s = i - 1 + k[..i].iter().map(|&x| x as usize).sum::<usize>();
            let c = binom_minus1(a, b);
            if s % 2 == 0 {
                c
            } else {
                -c
            }
        }
    }
}

fn merged(k: &[u8], i: usize) -> CompCell {
    let mut v = k[..i - 1].to_vec();
    v.push(k[i - 1] + k[i]);
    v.extend_from_slice(&k[i + 1..]);
    CompCell(v)
}

/// The cell complex on `e(k₁,…,k_ℓ)`, graded by `ℓ`; the differential merges
/// adjacent blocks.
pub fn b2_e_complex(n: usize, coeff: Coefficients, ring: Ring) -> Result<ChainComplex<CompCell>> {
    let mut basis: BTreeMap<i64, Vec<CompCell>> = BTreeMap::new();
    for c in compositions(n) {
        basis.entry(c.len() as i64).or_default().push(c);
    }
    ChainComplex::from_differential(ring, basis, |c| {
        let k = c.parts();
        FreeElement::from_terms(ring, (1..k.len()).map(|i| (merged(k, i), merge_coefficient(k, i, coeff))))
    })
}

/// The dual complex on `ε(k₁,…,k_ℓ)` in degree `n − ℓ`; the differential
/// splits one block into two with the transposed coefficients.
pub fn b2_eps_complex(n: usize, coeff: Coefficients, ring: Ring) -> Result<ChainComplex<CompCell>> {
    let mut basis: BTreeMap<i64, Vec<CompCell>> = BTreeMap::new();
    for c in compositions(n) {
        basis.entry(c.eps_degree() as i64).or_default().push(c);
    }
    ChainComplex::from_differential(ring, basis, |c| FreeElement::from_terms(ring, eps_split_terms(c, coeff)))
}

/// Terms of `dε(k)`: every split of a block into two nonempty parts.
pub fn eps_split_terms(c: &CompCell, coeff: Coefficients) -> Vec<(CompCell, Int)> {
    let k = c.parts();
    let mut out = Vec::new();
    for i in 0..k.len() {
        for a in 1..k[i] {
            let mut m = k[..i].to_vec();
            m.push(a);
            m.push(k[i] - a);
            m.extend_from_slice(&k[i + 1..]);
            let coef = merge_coefficient(&m, i + 1, coeff);
            if !coef.is_zero() {
                out.push((CompCell(m), coef));
            }
        }
    }
    out
}

/// `dε(σ; k)`: each block is split into an ordered pair of sub-blocks keeping
/// σ's internal order, i.e. all shuffles of the two parts.
pub fn f2_differential(cell: &PermCell) -> Vec<(PermCell, i64)> {
    let n = cell.n();
    let l = cell.comp.len();
    let mut acc: BTreeMap<PermCell, i64> = BTreeMap::new();
    let mut start = 0usize;
    for (i0, &k) in cell.comp.iter().enumerate() {
        let k = k as usize;
        let block = &cell.perm[start..start + k];
        for a in 1..k {
            for mask in 0u32..1 << k {
                if mask.count_ones() as usize != a {
                    continue;
                }
                let p: Vec<u8> = (0..k).filter(|j| mask & (1 << j) != 0).map(|j| block[j]).collect();
                let q: Vec<u8> = (0..k).filter(|j| mask & (1 << j) == 0).map(|j| block[j]).collect();
                // pairs (Q-element before P-element) in σ's block
                let mut inv = 0;
                for x in 0..k {
                    for y in x + 1..k {
                        if mask & (1 << x) == 0 && mask & (1 << y) != 0 {
                            inv += 1;
                        }
                    }
                }
                let mut perm = cell.perm[..start].to_vec();
                perm.extend_from_slice(&p);
                perm.extend_from_slice(&q);
                perm.extend_from_slice(&cell.perm[start + k..]);
                let mut comp = cell.comp[..i0].to_vec();
                comp.push(a as u8);
                comp.push((k - a) as u8);
                comp.extend_from_slice(&cell.comp[i0 + 1..]);
                let e = inv + (i0 + 1) + start + a + n + l;
                *acc.entry(PermCell { perm, comp }).or_insert(0) += sign(e % 2 == 1);
            }
        }
        start += k;
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// Cells of F₂(n) by ε-degree, ordered by composition then permutation.
pub fn f2_basis(n: usize) -> BTreeMap<i64, Vec<PermCell>> {
    let perms = permutations(n);
    let mut basis: BTreeMap<i64, Vec<PermCell>> = BTreeMap::new();
    for c in compositions(n) {
        for p in &perms {
            basis
                .entry(c.eps_degree() as i64)
                .or_default()
                .push(PermCell { perm: p.clone(), comp: c.0.clone() });
        }
    }
    basis
}

/// The ε-side complex F₂(n), graded by `n − ℓ`.
pub fn f2_complex(n: usize, ring: Ring) -> Result<ChainComplex<PermCell>> {
    ChainComplex::from_differential(ring, f2_basis(n), |c| {
        FreeElement::from_terms(ring, f2_differential(c).into_iter().map(|(k, v)| (k, Int::from(v))))
    })
}

/// Image of `ε(σ; k)` in the coinvariants, identified with `±ε(k)`.
pub fn project_cell(cell: &PermCell, coeff: Coefficients) -> (CompCell, i64) {
    let l = cell.comp.len();
    let tri = l * (l + 1) / 2;
    let s = match coeff {
        Coefficients::Twisted => {
            let weighted: usize = cell.comp.iter().enumerate().map(|(j, &k)| j * k as usize).sum();
            let base = sign((weighted + tri) % 2 == 1);
            base * perm_sign(&cell.perm)
        }
        Coefficients::Constant => sign((cell.n() * l + tri) % 2 == 1),
    };
    (CompCell(cell.comp.clone()), s)
}

/// The coinvariant complex of F₂(n) built on the cells `ε(id; k)`.
pub fn f2_coinvariant_complex(n: usize, coeff: Coefficients, ring: Ring) -> Result<ChainComplex<CompCell>> {
    let mut basis: BTreeMap<i64, Vec<CompCell>> = BTreeMap::new();
    for c in compositions(n) {
        basis.entry(c.eps_degree() as i64).or_default().push(c);
    }
    let id: Vec<u8> = (1..=n as u8).collect();
    ChainComplex::from_differential(ring, basis, |c| {
        let cell = PermCell { perm: id.clone(), comp: c.0.clone() };
        let (_, s0) = project_cell(&cell, coeff);
        let mut out = FreeElement::zero(ring);
        for (t, v) in f2_differential(&cell) {
            let (tc, s) = project_cell(&t, coeff);
            out.add_term(tc, Int::from(v * s * s0));
        }
        out
    })
}

/// Left-associated cup product of left-iterated brace chains of sizes `k`.
pub fn cup_monomial(k: &[u8], ring: Ring) -> OperadChain {
    let mut ch = left_brace_chain(k[0] as usize, ring);
    for &kk in &k[1..] {
        ch = cup_chains(&ch, &left_brace_chain(kk as usize, ring));
    }
    ch
}

/// Tabulates I on the cells of F₂(n), sharing the chain for each composition.
pub struct Inclusion {
    ring: Ring,
    monomials: HashMap<Vec<u8>, OperadChain>,
}

impl Inclusion {
    pub fn new(ring: Ring) -> Self {
        Inclusion { ring, monomials: HashMap::new() }
    }

    /// `I(ε(σ; k)) = (−1)^{n−ℓ} σ·(x₁{x₂}⋯{x_{k₁}} * ⋯)`.
    pub fn apply(&mut self, cell: &PermCell) -> OperadChain {
        let ring = self.ring;
        let mono = self.monomials.entry(cell.comp.clone()).or_insert_with(|| cup_monomial(&cell.comp, ring));
        let s = sign(cell.eps_degree() % 2 == 1);
        mono.relabel(&cell.perm).scale(s)
    }
}

pub fn inclusion_i(cell: &PermCell, ring: Ring) -> OperadChain {
    Inclusion::new(ring).apply(cell)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainMapReport {
    pub n: usize,
    pub cells_checked: usize,
    pub pass: bool,
    pub counterexample: Option<PermCell>,
}

/// Checks `I(dc) = ∂I(c)` exactly over ℤ for every cell of F₂(n).
pub fn verify_chain_map(n: usize) -> ChainMapReport {
    let mut inc = Inclusion::new(Ring::Integers);
    let mut cache: HashMap<PermCell, OperadChain> = HashMap::new();
    let mut map = |c: &PermCell| -> OperadChain { cache.entry(c.clone()).or_insert_with(|| inc.apply(c)).clone() };
    verify_chain_map_with(n, &mut map)
}

/// The chain-map check for an arbitrary candidate map on cells.
pub fn verify_chain_map_with<F: FnMut(&PermCell) -> OperadChain>(n: usize, map: &mut F) -> ChainMapReport {
    let mut checked = 0;
    for cells in f2_basis(n).values() {
        for c in cells {
            checked += 1;
            let rhs = map(c).differential();
            let mut lhs = OperadChain::zero(n, Ring::Integers);
            for (t, v) in f2_differential(c) {
                lhs = lhs.add(&map(&t).scale(v));
            }
            if lhs != rhs {
                return ChainMapReport { n, cells_checked: checked, pass: false, counterexample: Some(c.clone()) };
            }
        }
    }
    ChainMapReport { n, cells_checked: checked, pass: true, counterexample: None }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiIsoReport {
    pub n: usize,
    pub p: u32,
    pub betti_f2: Vec<usize>,
    pub betti_s2: Vec<usize>,
    pub induced_ranks: Vec<usize>,
    pub pass: bool,
}

/// Compares the homology of F₂(n) and 𝒮₂(n) over 𝔽_p and the rank of the map
/// induced by I in each degree.
pub fn verify_quasi_iso(n: usize, p: u32) -> Result<QuasiIsoReport> {
    let ring = Ring::prime_field(p)?;
    let f2 = f2_complex(n, ring)?;
    let s2 = s2_complex(n, ring)?;
    let mut inc = Inclusion::new(ring);
    let map = ChainMap::from_fn(&f2, &s2, |c| inc.apply(c).element().clone())?;
    let betti_f2 = f2.homology()?.betti_vec();
    let betti_s2 = s2.homology()?.betti_vec();
    let mut induced_ranks = Vec::new();
    for d in 0..n as i64 {
        induced_ranks.push(induced_map_rank(&map, &f2, &s2, d)?);
    }
    let pass = betti_f2 == betti_s2 && induced_ranks == betti_f2;
    Ok(QuasiIsoReport { n, p, betti_f2, betti_s2, induced_ranks, pass })
}

/// Σ_ℓ (−1)^{n−ℓ}·#{compositions of n into ℓ parts}.
pub fn euler_characteristic_of_compositions(n: usize) -> i64 {
    compositions(n).iter().map(|c| sign(c.eps_degree() % 2 == 1)).sum()
}

/// ε(p) as an integral chain of B₂(p).
pub fn eps_top(p: usize) -> FreeElement<CompCell> {
    FreeElement::basis(Ring::Integers, CompCell(vec![p as u8]))
}

/// Σ_{i=1}^{p−1} (p−1)!/(i!(p−i)!)·ε(i, p−i) reduced mod p.
pub fn bockstein_formula(p: u32) -> FreeElement<CompCell> {
    let ring = Ring::PrimeField(p);
    let pp = p as u64;
    FreeElement::from_terms(
        ring,
        (1..pp).map(|i| {
            let c = crate::ring::factorial(pp - 1)
                .div_exact(crate::ring::factorial(i).as_i64().unwrap() * crate::ring::factorial(pp - i).as_i64().unwrap())
                .unwrap();
            (CompCell(vec![i as u8, (pp - i) as u8]), c)
        }),
    )
}

/// −Σ_{i=1}^{p−1} ((−1)^i / i)·ε(i, p−i) in 𝔽_p.
pub fn bockstein_formula_inverse_form(p: u32) -> FreeElement<CompCell> {
    let ring = Ring::PrimeField(p);
    FreeElement::from_terms(
        ring,
        (1..p as u64).map(|i| {
            let inv = crate::ring::inv_mod(i, p as u64) as i64;
            let c = if i % 2 == 0 { -inv } else { inv };
            (CompCell(vec![i as u8, (p as u64 - i) as u8]), Int::from(c))
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cc(v: &[u8]) -> CompCell {
        CompCell::new(v.to_vec()).unwrap()
    }

    #[test]
    fn e_side_examples() {
        let z = Ring::Integers;
        let t = b2_e_complex(3, Coefficients::Twisted, z).unwrap();
        let d = t.apply(&FreeElement::basis(z, cc(&[1, 1, 1]))).unwrap();
        assert_eq!(d, FreeElement::from_terms(z, [(cc(&[2, 1]), Int::from(2)), (cc(&[1, 2]), Int::from(-2))]));
        let t2 = b2_e_complex(2, Coefficients::Twisted, z).unwrap();
        assert_eq!(t2.apply(&FreeElement::basis(z, cc(&[1, 1]))).unwrap(), FreeElement::from_terms(z, [(cc(&[2]), Int::from(2))]));
        let c2 = b2_e_complex(2, Coefficients::Constant, z).unwrap();
        assert!(c2.apply(&FreeElement::basis(z, cc(&[1, 1]))).unwrap().is_zero());
    }

    #[test]
    fn eps_side_example() {
        let z = Ring::Integers;
        let t = b2_eps_complex(3, Coefficients::Twisted, z).unwrap();
        let d = t.apply(&eps_top(3)).unwrap();
        assert_eq!(d, FreeElement::from_terms(z, [(cc(&[1, 2]), Int::from(3)), (cc(&[2, 1]), Int::from(3))]));
    }

    #[test]
    fn composition_and_permutation_counts() {
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(f2_basis(3).values().map(Vec::len).sum::<usize>(), 24);
        assert_eq!(permutations(3)[1], vec![1, 3, 2]);
    }

    #[test]
    fn inclusion_examples() {
        let z = Ring::Integers;
        let top = PermCell::new(vec![1, 2], vec![2]).unwrap();
        assert_eq!(inclusion_i(&top, z), left_brace_chain(2, z).scale(-1));
        let bottom = PermCell::new(vec![1, 2], vec![1, 1]).unwrap();
        assert_eq!(inclusion_i(&bottom, z), OperadChain::from_seq(&[1, 2], z).unwrap());
    }

    #[test]
    fn cell_json() {
        let c = PermCell::new(vec![2, 1, 3], vec![1, 2]).unwrap();
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"perm":[2,1,3],"comp":[1,2]}"#);
        assert_eq!(serde_json::from_str::<PermCell>(&j).unwrap(), c);
        assert!(serde_json::from_str::<PermCell>(r#"{"perm":[1,1],"comp":[2]}"#).is_err());
        assert_eq!(serde_json::to_string(&cc(&[1, 2])).unwrap(), "[1,2]");
        assert!(serde_json::from_str::<CompCell>("[0,2]").is_err());
    }

    #[test]
    fn chain_map_small() {
        assert!(verify_chain_map(2).pass);
        assert!(verify_chain_map(3).pass);
    }
}
