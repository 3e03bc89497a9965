//! Dense Hochschild cochains of a finite-dimensional associative algebra and
//! the brace, cup, bracket and differential on them.
//!
//! A cochain of arity `m` is a tensor `x[a₁,…,a_m, out]` in row-major order,
//! with `deg(x) = m`. Over 𝔽_p entries are kept in `0..p`; over ℤ they are
//! exact integers.

use crate::error::{Error, Result};
use crate::int::Int;
use crate::ring::Ring;
use std::fmt::Debug;

pub(crate) trait Coef: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `acc += a·b` without reduction.
    fn mac(acc: &mut Self, a: &Self, b: &Self);
    fn normalize(&mut self, p: u64);
    /// `acc ± a`, normalized.
    fn add_signed(acc: &mut Self, a: &Self, negate: bool, p: u64);
    fn negated(&self, p: u64) -> Self;
}

impl Coef for u64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn mac(acc: &mut Self, a: &Self, b: &Self) {
        *acc += a * b;
    }
    #[inline]
    fn normalize(&mut self, p: u64) {
        *self = if p == 2 { *self & 1 } else { *self % p };
    }
    #[inline]
    fn add_signed(acc: &mut Self, a: &Self, negate: bool, p: u64) {
        let a = *a % p;
        *acc = if negate { (*acc % p + p - a) % p } else { (*acc + a) % p };
    }
    fn negated(&self, p: u64) -> Self {
        (p - *self % p) % p
    }
}

impl Coef for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn mac(acc: &mut Self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *acc += &(a * b);
        }
    }
    fn normalize(&mut self, _p: u64) {}
    fn add_signed(acc: &mut Self, a: &Self, negate: bool, _p: u64) {
        if negate {
            *acc += &-a;
        } else {
            *acc += a;
        }
    }
    fn negated(&self, _p: u64) -> Self {
        -self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Data {
    Fp(Vec<u64>),
    Z(Vec<Int>),
}

impl Data {
    fn zeros(ring: Ring, len: usize) -> Data {
        match ring {
            Ring::PrimeField(_) => Data::Fp(vec![0; len]),
            Ring::Integers => Data::Z(vec![Int::ZERO; len]),
        }
    }

    fn len(&self) -> usize {
        match self {
            Data::Fp(v) => v.len(),
            Data::Z(v) => v.len(),
        }
    }
}

/// A multilinear map `A^{⊗m} → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    ring: Ring,
    dim: usize,
    arity: usize,
    pub(crate) data: Data,
}

fn modulus(ring: Ring) -> u64 {
    ring.characteristic() as u64
}

impl Cochain {
    pub fn zero(ring: Ring, dim: usize, arity: usize) -> Self {
        Cochain { ring, dim, arity, data: Data::zeros(ring, dim.pow(arity as u32 + 1)) }
    }

    /// Entries in row-major order, reduced into `ring`.
    pub fn from_entries(ring: Ring, dim: usize, arity: usize, entries: Vec<Int>) -> Result<Self> {
        let len = dim.pow(arity as u32 + 1);
        if entries.len() != len {
            return Err(Error::DimensionMismatch(format!("arity-{arity} cochain on a {dim}-dimensional algebra needs {len} entries, got {}", entries.len())));
        }
        let data = match ring {
            Ring::PrimeField(p) => Data::Fp(entries.iter().map(|e| e.rem_euclid_u64(p as u64)).collect()),
            Ring::Integers => Data::Z(entries),
        };
        Ok(Cochain { ring, dim, arity, data })
    }

    pub fn from_i64(ring: Ring, dim: usize, arity: usize, entries: &[i64]) -> Result<Self> {
        Self::from_entries(ring, dim, arity, entries.iter().map(|&e| Int::from(e)).collect())
    }

    /// The basis cochain sending the tuple at flat index `idx` to 1.
    pub fn unit_vector(ring: Ring, dim: usize, arity: usize, idx: usize) -> Self {
        let mut c = Self::zero(ring, dim, arity);
        match &mut c.data {
            Data::Fp(v) => v[idx] = 1,
            Data::Z(v) => v[idx] = Int::ONE,
        }
        c
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Cohomological degree, equal to the arity.
    pub fn degree(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.len() == 0
    }

    pub fn entry(&self, idx: usize) -> Int {
        match &self.data {
            Data::Fp(v) => Int::from(v[idx]),
            Data::Z(v) => v[idx].clone(),
        }
    }

    pub fn entries(&self) -> Vec<Int> {
        (0..self.len()).map(|i| self.entry(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Fp(v) => v.iter().all(|&e| e == 0),
            Data::Z(v) => v.iter().all(Int::is_zero),
        }
    }

    pub fn nonzero_entries(&self) -> usize {
        match &self.data {
            Data::Fp(v) => v.iter().filter(|&&e| e != 0).count(),
            Data::Z(v) => v.iter().filter(|e| !e.is_zero()).count(),
        }
    }

    fn check_compatible(&self, o: &Cochain) -> Result<()> {
        if self.ring != o.ring {
            return Err(Error::RingMismatch(self.ring.name(), o.ring.name()));
        }
        if self.dim != o.dim {
            return Err(Error::DimensionMismatch(format!("algebra dimensions {} and {}", self.dim, o.dim)));
        }
        Ok(())
    }

    fn combine(&self, o: &Cochain, negate: bool) -> Cochain {
        self.check_compatible(o).expect("compatible cochains");
        assert_eq!(self.arity, o.arity, "adding cochains of arities {} and {}", self.arity, o.arity);
        let p = modulus(self.ring);
        let data = match (&self.data, &o.data) {
            (Data::Fp(a), Data::Fp(b)) => Data::Fp(
                a.iter()
                    .zip(b)
                    .map(|(&x, y)| {
                        let mut r = x;
                        u64::add_signed(&mut r, y, negate, p);
                        r
                    })
                    .collect(),
            ),
            (Data::Z(a), Data::Z(b)) => Data::Z(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| {
                        let mut r = x.clone();
                        Int::add_signed(&mut r, y, negate, 0);
                        r
                    })
                    .collect(),
            ),
            _ => unreachable!(),
        };
        Cochain { ring: self.ring, dim: self.dim, arity: self.arity, data }
    }

    pub fn add(&self, o: &Cochain) -> Cochain {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Cochain) -> Cochain {
        self.combine(o, true)
    }

    pub fn neg(&self) -> Cochain {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Cochain {
        self.scale_int(&Int::from(c))
    }

    pub fn scale_int(&self, c: &Int) -> Cochain {
        let data = match &self.data {
            Data::Fp(v) => {
                let p = modulus(self.ring);
                let c = c.rem_euclid_u64(p);
                Data::Fp(v.iter().map(|&e| e * c % p).collect())
            }
            Data::Z(v) => Data::Z(v.iter().map(|e| e * c).collect()),
        };
        Cochain { ring: self.ring, dim: self.dim, arity: self.arity, data }
    }

    /// Reduction of an integral cochain into `ring`, or the balanced lift of
    /// a mod-p cochain to ℤ.
    pub fn change_ring(&self, ring: Ring) -> Cochain {
        let entries = match &self.data {
            Data::Fp(v) => v.iter().map(|&e| self.ring.balanced(&Int::from(e))).collect(),
            Data::Z(v) => v.clone(),
        };
        Cochain::from_entries(ring, self.dim, self.arity, entries).expect("same shape")
    }

    /// Divides an integral cochain by `d`, failing if some entry is not divisible.
    pub fn div_exact(&self, d: i64) -> Option<Cochain> {
        let Data::Z(v) = &self.data else { return None };
        let q: Option<Vec<Int>> = v.iter().map(|e| e.div_exact(d)).collect();
        Some(Cochain { ring: self.ring, dim: self.dim, arity: self.arity, data: Data::Z(q?) })
    }

    /// Whether `self ≡ other` modulo `p` (both integral or both over 𝔽_p).
    pub fn congruent_mod(&self, other: &Cochain, p: u64) -> bool {
        self.arity == other.arity && self.entries().iter().zip(other.entries()).all(|(a, b)| (a - &b).rem_euclid_u64(p) == 0)
    }
}

/// `x(a₁,…,a_{slot−1}, y(b…), a_{slot+1},…)`.
fn partial_g<C: Coef>(x: &[C], mx: usize, slot: usize, y: &[C], my: usize, d: usize, p: u64) -> Vec<C> {
    let na = d.pow(slot as u32);
    let nb = d.pow(my as u32);
    let tail = d.pow((mx - slot) as u32); // remaining inputs and the output
    let mut r = vec![C::zero(); na * nb * tail];
    for a in 0..na {
        for b in 0..nb {
            let out = &mut r[(a * nb + b) * tail..(a * nb + b + 1) * tail];
            for c in 0..d {
                let yv = &y[b * d + c];
                if yv.is_zero() {
                    continue;
                }
                let xs = &x[(a * d + c) * tail..(a * d + c + 1) * tail];
                for (o, xv) in out.iter_mut().zip(xs) {
                    C::mac(o, xv, yv);
                }
            }
            for o in out.iter_mut() {
                o.normalize(p);
            }
        }
    }
    r
}

/// `acc ± x∘_slot y`, the leaf step of a brace with no intermediate tensor.
#[allow(clippy::too_many_arguments)]
fn partial_acc_g<C: Coef>(acc: &mut [C], x: &[C], mx: usize, slot: usize, y: &[C], my: usize, d: usize, p: u64, negate: bool) {
    let na = d.pow(slot as u32);
    let nb = d.pow(my as u32);
    let tail = d.pow((mx - slot) as u32);
    let y: Vec<C> = if negate { y.iter().map(|v| v.negated(p)).collect() } else { y.to_vec() };
    for a in 0..na {
        for b in 0..nb {
            let out = &mut acc[(a * nb + b) * tail..(a * nb + b + 1) * tail];
            let mut touched = false;
            for c in 0..d {
                let yv = &y[b * d + c];
                if yv.is_zero() {
                    continue;
                }
                touched = true;
                let xs = &x[(a * d + c) * tail..(a * d + c + 1) * tail];
                for (o, xv) in out.iter_mut().zip(xs) {
                    C::mac(o, xv, yv);
                }
            }
            if touched {
                for o in out.iter_mut() {
                    o.normalize(p);
                }
            }
        }
    }
}

fn partial_acc(acc: &mut Cochain, x: &Cochain, slot: usize, y: &Cochain, negate: bool) {
    let p = modulus(x.ring);
    let (d, mx, my) = (x.dim, x.arity, y.arity);
    match (&mut acc.data, &x.data, &y.data) {
        (Data::Fp(r), Data::Fp(a), Data::Fp(b)) => partial_acc_g(r, a, mx, slot, b, my, d, p, negate),
        (Data::Z(r), Data::Z(a), Data::Z(b)) => partial_acc_g(r, a, mx, slot, b, my, d, p, negate),
        _ => unreachable!(),
    }
}

fn partial(x: &Cochain, slot: usize, y: &Cochain) -> Cochain {
    let p = modulus(x.ring);
    let data = match (&x.data, &y.data) {
        (Data::Fp(a), Data::Fp(b)) => Data::Fp(partial_g(a, x.arity, slot, b, y.arity, x.dim, p)),
        (Data::Z(a), Data::Z(b)) => Data::Z(partial_g(a, x.arity, slot, b, y.arity, x.dim, p)),
        _ => unreachable!(),
    };
    Cochain { ring: x.ring, dim: x.dim, arity: x.arity + y.arity - 1, data }
}

/// Gerstenhaber–Voronov brace `x{y₁,…,y_r}`: the signed sum over increasing
/// slot tuples. `None` when `x` has fewer than `r` inputs.
pub fn brace_opt(x: &Cochain, ys: &[&Cochain]) -> Option<Cochain> {
    let r = ys.len();
    if r == 0 {
        return Some(x.clone());
    }
    if x.arity < r {
        return None;
    }
    for y in ys {
        x.check_compatible(y).expect("compatible cochains");
    }
    let arity = x.arity + ys.iter().map(|y| y.arity).sum::<usize>() - r;
    let mut acc = Cochain::zero(x.ring, x.dim, arity);
    // prefix[j] = Σ_{t<j} arity(y_t)
    let mut prefix = vec![0usize; r + 1];
    for j in 0..r {
        prefix[j + 1] = prefix[j] + ys[j].arity;
    }
    brace_rec(x, ys, &prefix, r - 1, x.arity, 0, &mut acc);
    Some(acc)
}

fn brace_rec(t: &Cochain, ys: &[&Cochain], prefix: &[usize], j: usize, upper: usize, sign: usize, acc: &mut Cochain) {
    let y = ys[j];
    for slot in j..upper {
        let s = sign + (y.arity + 1) * (slot + j + prefix[j]); // (m−1)(p − j + Σ) mod 2
        if j == 0 {
            partial_acc(acc, t, slot, y, s % 2 == 1);
        } else {
            brace_rec(&partial(t, slot, y), ys, prefix, j - 1, slot, s, acc);
        }
    }
}

/// `x{y₁,…,y_r}`; the zero cochain (of the formal arity, clamped at 0) when
/// the insertions do not fit.
pub fn brace(x: &Cochain, ys: &[&Cochain]) -> Cochain {
    brace_opt(x, ys).unwrap_or_else(|| {
        let formal = x.arity as isize + ys.iter().map(|y| y.arity as isize).sum::<isize>() - ys.len() as isize;
        Cochain::zero(x.ring, x.dim, formal.max(0) as usize)
    })
}

pub fn brace1(x: &Cochain, y: &Cochain) -> Cochain {
    brace(x, &[y])
}

/// `[a,b] = a{b} − (−1)^{|a||b|} b{a}` with `|x| = deg x + 1`.
pub fn bracket(a: &Cochain, b: &Cochain) -> Cochain {
    let ab = brace1(a, b);
    let ba = brace1(b, a);
    if (a.arity + 1) * (b.arity + 1) % 2 == 0 {
        ab.sub(&ba)
    } else {
        ab.add(&ba)
    }
}

/// `x^[k] = x{x}⋯{x}` (k − 1 braces, left-iterated).
pub fn power(x: &Cochain, k: usize) -> Cochain {
    assert!(k >= 1, "power needs k ≥ 1");
    let mut r = x.clone();
    for _ in 1..k {
        r = brace1(&r, x);
    }
    r
}

/// `[⋯[[y,x],x]⋯,x]` with `k` brackets.
pub fn ad_pow(x: &Cochain, y: &Cochain, k: usize) -> Cochain {
    let mut r = y.clone();
    for _ in 0..k {
        r = bracket(&r, x);
    }
    r
}

/// `(ad x)^k (y) = [x,[x,⋯[x,y]⋯]]`.
pub fn ad_left_pow(x: &Cochain, y: &Cochain, k: usize) -> Cochain {
    let mut r = y.clone();
    for _ in 0..k {
        r = bracket(x, &r);
    }
    r
}

/// A finite-dimensional associative algebra given by structure constants
/// `e_i·e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocAlgebra {
    ring: Ring,
    dim: usize,
    names: Vec<String>,
    constants: Vec<Int>,
    unit: Option<usize>,
    mu: Cochain,
}

impl AssocAlgebra {
    /// Validates shape, associativity and (if given) the unit.
    pub fn new(ring: Ring, names: Vec<String>, constants: Vec<Int>, unit: Option<usize>) -> Result<Self> {
        let dim = names.len();
        if dim == 0 {
            return Err(Error::Invalid("algebra of dimension 0".into()));
        }
        let mu = Cochain::from_entries(ring, dim, 2, constants)?;
        let constants = mu.entries();
        let alg = AssocAlgebra { ring, dim, names, constants, unit, mu };
        if !alg.is_associative() {
            return Err(Error::Invalid("structure constants are not associative".into()));
        }
        if let Some(u) = unit {
            if u >= dim {
                return Err(Error::Invalid(format!("unit index {u} out of range")));
            }
            for i in 0..dim {
                for k in 0..dim {
                    let want = if i == k { Int::ONE } else { Int::ZERO };
                    if alg.c(u, i, k) != want || alg.c(i, u, k) != want {
                        return Err(Error::Invalid(format!("basis element {u} is not a unit")));
                    }
                }
            }
        }
        Ok(alg)
    }

    fn from_table(ring: Ring, names: &[&str], table: &[(usize, usize, usize)], unit: Option<usize>) -> Self {
        let d = names.len();
        let mut c = vec![Int::ZERO; d * d * d];
        for &(i, j, k) in table {
            c[(i * d + j) * d + k] = Int::ONE;
        }
        AssocAlgebra::new(ring, names.iter().map(|s| s.to_string()).collect(), c, unit).expect("built-in algebra")
    }

    /// 𝕜[ε]/ε² on the basis (1, ε).
    pub fn dual_numbers(ring: Ring) -> Self {
        Self::from_table(ring, &["1", "e"], &[(0, 0, 0), (0, 1, 1), (1, 0, 1)], Some(0))
    }

    /// 𝕜[t]/t³ on the basis (1, t, t²).
    pub fn truncated_polynomials(ring: Ring) -> Self {
        let mut table = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i + j < 3 {
                    table.push((i, j, i + j));
                }
            }
        }
        Self::from_table(ring, &["1", "t", "t2"], &table, Some(0))
    }

    /// 2×2 matrices on the basis e₁₁, e₁₂, e₂₁, e₂₂. The unit is not a basis vector.
    pub fn matrices2(ring: Ring) -> Self {
        let mut table = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    table.push((2 * i + j, 2 * j + k, 2 * i + k));
                }
            }
        }
        Self::from_table(ring, &["e11", "e12", "e21", "e22"], &table, None)
    }

    /// Upper triangular 2×2 matrices on the basis e₁₁, e₁₂, e₂₂.
    pub fn upper_triangular2(ring: Ring) -> Self {
        Self::from_table(ring, &["e11", "e12", "e22"], &[(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)], None)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn constants(&self) -> &[Int] {
        &self.constants
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> Int {
        self.constants[(i * self.dim + j) * self.dim + k].clone()
    }

    /// The multiplication as an arity-2 cochain.
    pub fn mu(&self) -> &Cochain {
        &self.mu
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        let r = self.ring;
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for o in 0..d {
                        let mut lhs = Int::ZERO;
                        let mut rhs = Int::ZERO;
                        for m in 0..d {
                            lhs += &(&self.c(a, b, m) * &self.c(m, c, o));
                            rhs += &(&self.c(b, c, m) * &self.c(a, m, o));
                        }
                        if !r.reduce(lhs - rhs).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The same structure constants over another ring.
    pub fn change_ring(&self, ring: Ring) -> Result<Self> {
        let consts = self.constants.iter().map(|c| self.ring.balanced(c)).collect();
        AssocAlgebra::new(ring, self.names.clone(), consts, self.unit)
    }

    pub fn zero(&self, arity: usize) -> Cochain {
        Cochain::zero(self.ring, self.dim, arity)
    }

    /// The unit as a 0-cochain, when it is a basis vector.
    pub fn unit_cochain(&self) -> Option<Cochain> {
        self.unit.map(|u| Cochain::unit_vector(self.ring, self.dim, 0, u))
    }

    fn check(&self, x: &Cochain) -> Result<()> {
        if x.ring != self.ring {
            return Err(Error::RingMismatch(self.ring.name(), x.ring.name()));
        }
        if x.dim != self.dim {
            return Err(Error::DimensionMismatch(format!("cochain on dimension {} used with algebra of dimension {}", x.dim, self.dim)));
        }
        Ok(())
    }

    /// Pointwise product `(x ∪ y)(a, b) = x(a)·y(b)`.
    pub fn cup_plain(&self, x: &Cochain, y: &Cochain) -> Result<Cochain> {
        self.check(x)?;
        self.check(y)?;
        let p = modulus(self.ring);
        let d = self.dim;
        let data = match (&x.data, &y.data, &self.mu.data) {
            (Data::Fp(a), Data::Fp(b), Data::Fp(c)) => Data::Fp(cup_g(a, x.arity, b, y.arity, c, d, p)),
            (Data::Z(a), Data::Z(b), Data::Z(c)) => Data::Z(cup_g(a, x.arity, b, y.arity, c, d, p)),
            _ => unreachable!(),
        };
        Ok(Cochain { ring: self.ring, dim: d, arity: x.arity + y.arity, data })
    }

    /// `x * y = (−1)^{deg x·deg y} x ∪ y`.
    pub fn cup(&self, x: &Cochain, y: &Cochain) -> Result<Cochain> {
        let c = self.cup_plain(x, y)?;
        Ok(if x.arity * y.arity % 2 == 1 { c.neg() } else { c })
    }

    /// `∂x = −[μ, x] = −μ{x} + (−1)^{deg x − 1} x{μ}`.
    pub fn differential(&self, x: &Cochain) -> Result<Cochain> {
        self.check(x)?;
        Ok(bracket(&self.mu, x).neg())
    }
}

fn cup_g<C: Coef>(x: &[C], mx: usize, y: &[C], my: usize, c: &[C], d: usize, p: u64) -> Vec<C> {
    let na = d.pow(mx as u32);
    let nb = d.pow(my as u32);
    let mut r = vec![C::zero(); na * nb * d];
    let mut m = vec![C::zero(); d * d];
    for a in 0..na {
        // m[Y][o] = Σ_X x[a,X]·c[X,Y,o]
        m.iter_mut().for_each(|e| *e = C::zero());
        for xi in 0..d {
            let xv = &x[a * d + xi];
            if xv.is_zero() {
                continue;
            }
            for (e, cv) in m.iter_mut().zip(&c[xi * d * d..(xi + 1) * d * d]) {
                C::mac(e, xv, cv);
            }
        }
        m.iter_mut().for_each(|e| e.normalize(p));
        for b in 0..nb {
            let out = &mut r[(a * nb + b) * d..(a * nb + b + 1) * d];
            for yi in 0..d {
                let yv = &y[b * d + yi];
                if yv.is_zero() {
                    continue;
                }
                for (o, mv) in out.iter_mut().zip(&m[yi * d..(yi + 1) * d]) {
                    C::mac(o, yv, mv);
                }
            }
            out.iter_mut().for_each(|e| e.normalize(p));
        }
    }
    r
}
