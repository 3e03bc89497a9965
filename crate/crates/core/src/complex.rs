//! Graded chain complexes on explicit bases, homology over prime fields and
//! the Bockstein of a mod-p cycle.

use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::int::Int;
use crate::ring::Ring;
use crate::sparse::{to_spvec, ColumnReducer, SpVec, SparseMatrix};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

pub trait Key: Ord + Clone + Hash + Debug {}
impl<T: Ord + Clone + Hash + Debug> Key for T {}

/// `diff[d]` maps degree `d` to degree `d − 1`; rows index the basis of
/// `d − 1`, columns the basis of `d`.
#[derive(Clone, Debug)]
pub struct ChainComplex<K: Key> {
    ring: Ring,
    basis: BTreeMap<i64, Vec<K>>,
    index: HashMap<K, (i64, usize)>,
    diff: BTreeMap<i64, SparseMatrix>,
}

impl<K: Key> ChainComplex<K> {
    /// Builds the complex from a basis and the differential of each basis key.
    /// Terms of `d(k)` outside degree `deg(k) − 1` are rejected.
    pub fn from_differential<F>(ring: Ring, basis: BTreeMap<i64, Vec<K>>, mut d: F) -> Result<Self>
    where
        F: FnMut(&K) -> FreeElement<K>,
    {
        let mut index = HashMap::new();
        for (deg, keys) in &basis {
            for (i, k) in keys.iter().enumerate() {
                if index.insert(k.clone(), (*deg, i)).is_some() {
                    return Err(Error::Invalid(format!("basis key {k:?} listed twice")));
                }
            }
        }
        let mut diff = BTreeMap::new();
        for (deg, keys) in &basis {
            let rows = basis.get(&(deg - 1)).map_or(0, Vec::len);
            let mut m = SparseMatrix::zero(rows, 0);
            for k in keys {
                let img = d(k);
                let mut col = Vec::with_capacity(img.len());
                for (t, c) in img.iter() {
                    match index.get(t) {
                        Some(&(td, ti)) if td == deg - 1 => col.push((ti, c.clone())),
                        _ => {
                            return Err(Error::DimensionMismatch(format!(
                                "d({k:?}) has term {t:?} outside degree {}",
                                deg - 1
                            )))
                        }
                    }
                }
                m.push_col(col, ring);
            }
            diff.insert(*deg, m);
        }
        Ok(ChainComplex { ring, basis, index, diff })
    }

    /// Builds the complex from explicit matrices; shapes are checked by
    /// [`ChainComplex::verify`].
    pub fn from_matrices(ring: Ring, basis: BTreeMap<i64, Vec<K>>, diff: BTreeMap<i64, SparseMatrix>) -> Self {
        let mut index = HashMap::new();
        for (deg, keys) in &basis {
            for (i, k) in keys.iter().enumerate() {
                index.insert(k.clone(), (*deg, i));
            }
        }
        ChainComplex { ring, basis, index, diff }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.basis.keys().copied()
    }

    pub fn basis(&self, deg: i64) -> &[K] {
        self.basis.get(&deg).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, deg: i64) -> usize {
        self.basis(deg).len()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }

    pub fn locate(&self, k: &K) -> Option<(i64, usize)> {
        self.index.get(k).copied()
    }

    /// The differential out of degree `deg` (an empty matrix if absent).
    pub fn differential(&self, deg: i64) -> SparseMatrix {
        self.diff
            .get(&deg)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.dim(deg - 1), self.dim(deg)))
    }

    pub fn differential_ref(&self, deg: i64) -> Option<&SparseMatrix> {
        self.diff.get(&deg)
    }

    pub fn set_entry_for_test(&mut self, deg: i64, row: usize, col: usize, v: Int) {
        let m = self.diff.get_mut(&deg).expect("degree present");
        let colv = &mut m.cols[col];
        colv.retain(|e| e.0 != row);
        colv.push((row, v));
        colv.sort_by_key(|e| e.0);
    }

    /// Degree of a homogeneous element; `None` for zero, error if mixed or unknown.
    pub fn degree_of(&self, z: &FreeElement<K>) -> Result<Option<i64>> {
        let mut deg = None;
        for k in z.keys() {
            let (d, _) = self
                .locate(k)
                .ok_or_else(|| Error::Invalid(format!("{k:?} is not a basis key")))?;
            if deg.is_some_and(|e| e != d) {
                return Err(Error::Invalid("element is not homogeneous".into()));
            }
            deg = Some(d);
        }
        Ok(deg)
    }

    pub fn to_vec(&self, z: &FreeElement<K>) -> Result<(i64, Vec<(usize, Int)>)> {
        let Some(deg) = self.degree_of(z)? else { return Ok((0, Vec::new())) };
        let mut v: Vec<(usize, Int)> = z.iter().map(|(k, c)| (self.index[k].1, c.clone())).collect();
        v.sort_by_key(|e| e.0);
        Ok((deg, v))
    }

    pub fn from_vec(&self, deg: i64, v: &[(usize, Int)], ring: Ring) -> FreeElement<K> {
        let b = self.basis(deg);
        FreeElement::from_terms(ring, v.iter().map(|(i, c)| (b[*i].clone(), c.clone())))
    }

    /// Applies the differential to a homogeneous element, over the complex's ring.
    pub fn apply(&self, z: &FreeElement<K>) -> Result<FreeElement<K>> {
        let (deg, v) = self.to_vec(z)?;
        if v.is_empty() {
            return Ok(FreeElement::zero(self.ring));
        }
        let img = self.differential(deg).mul_vec(&v, self.ring);
        Ok(self.from_vec(deg - 1, &img, self.ring))
    }

    /// Checks `d ∘ d = 0` exactly, after checking matrix shapes.
    pub fn verify(&self) -> Result<bool> {
        for (deg, m) in &self.diff {
            if m.ncols() != self.dim(*deg) || m.rows != self.dim(deg - 1) {
                return Err(Error::DimensionMismatch(format!(
                    "differential out of degree {deg} is {}x{}, expected {}x{}",
                    m.rows,
                    m.ncols(),
                    self.dim(deg - 1),
                    self.dim(*deg)
                )));
            }
        }
        for (deg, m) in &self.diff {
            if let Some(prev) = self.diff.get(&(deg - 1)) {
                if !prev.mul(m, self.ring).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn field_p(&self) -> Result<u64> {
        match self.ring {
            Ring::PrimeField(p) => Ok(p as u64),
            Ring::Integers => Err(Error::IntegralHomology),
        }
    }

    /// The same complex with entries reduced into `ring`.
    pub fn change_ring(&self, ring: Ring) -> Self {
        let diff = self
            .diff
            .iter()
            .map(|(d, m)| {
                let mut n = SparseMatrix::zero(m.rows, 0);
                for col in &m.cols {
                    n.push_col(col.iter().cloned(), ring);
                }
                (*d, n)
            })
            .collect();
        ChainComplex { ring, basis: self.basis.clone(), index: self.index.clone(), diff }
    }

    pub fn homology(&self) -> Result<HomologySummary<K>> {
        self.homology_inner(false)
    }

    pub fn homology_with_representatives(&self) -> Result<HomologySummary<K>> {
        self.homology_inner(true)
    }

    fn homology_inner(&self, reps: bool) -> Result<HomologySummary<K>> {
        let p = self.field_p()?;
        let mut ranks = BTreeMap::new();
        for (deg, m) in &self.diff {
            ranks.insert(*deg, crate::sparse::rank_mod_p(m, p));
        }
        let mut betti = BTreeMap::new();
        let mut representatives = BTreeMap::new();
        for deg in self.basis.keys() {
            let b = self.dim(*deg) - ranks.get(deg).copied().unwrap_or(0) - ranks.get(&(deg + 1)).copied().unwrap_or(0);
            betti.insert(*deg, b);
            if reps && b > 0 {
                representatives.insert(*deg, self.representatives(*deg, p));
            }
        }
        Ok(HomologySummary { ring: self.ring, betti, representatives: reps.then_some(representatives) })
    }

    fn representatives(&self, deg: i64, p: u64) -> Vec<FreeElement<K>> {
        let mut bnd = ColumnReducer::new(p, false);
        if let Some(m) = self.diff.get(&(deg + 1)) {
            for c in 0..m.ncols() {
                bnd.push(&m.col_mod_p(c, p), c);
            }
        }
        let kernel = crate::sparse::kernel_mod_p(&self.differential(deg), p);
        let mut out = Vec::new();
        for z in kernel {
            if bnd.push(&z, usize::MAX).is_none() {
                let v: Vec<(usize, Int)> = z.iter().map(|&(i, c)| (i, Int::from(c))).collect();
                out.push(self.from_vec(deg, &v, self.ring));
            }
        }
        out
    }

    /// Whether a homogeneous element is a boundary (over a prime field).
    pub fn is_boundary(&self, z: &FreeElement<K>) -> Result<bool> {
        let p = self.field_p()?;
        let (deg, v) = self.to_vec(z)?;
        if v.is_empty() {
            return Ok(true);
        }
        let Some(m) = self.diff.get(&(deg + 1)) else { return Ok(false) };
        Ok(crate::sparse::solve_mod_p(m, &to_spvec(&v, p), p).is_some())
    }

    pub fn is_cycle(&self, z: &FreeElement<K>) -> Result<bool> {
        Ok(self.apply(z)?.is_zero())
    }
}

/// β(z): lift `z` to ℤ, write `d(z) = p·y` and return `y mod p`.
/// Coefficients of a mod-p input are lifted to their balanced representatives.
pub fn bockstein<K: Key>(c_int: &ChainComplex<K>, p: u32, z: &FreeElement<K>) -> Result<FreeElement<K>> {
    if c_int.ring() != Ring::Integers {
        return Err(Error::Invalid("bockstein needs the integral complex".into()));
    }
    let fp = Ring::prime_field(p)?;
    let zr = z.ring();
    let lift = FreeElement::from_terms(Ring::Integers, z.iter().map(|(k, c)| (k.clone(), zr.balanced(c))));
    let dz = c_int.apply(&lift)?;
    let mut y = FreeElement::zero(fp);
    for (k, c) in dz.iter() {
        let q = c.div_exact(p as i64).ok_or(Error::NotModPCycle)?;
        y.add_term(k.clone(), q);
    }
    Ok(y)
}

#[derive(Clone, Debug)]
pub struct HomologySummary<K: Key> {
    pub ring: Ring,
    pub betti: BTreeMap<i64, usize>,
    pub representatives: Option<BTreeMap<i64, Vec<FreeElement<K>>>>,
}

impl<K: Key> HomologySummary<K> {
    pub fn betti(&self, deg: i64) -> usize {
        self.betti.get(&deg).copied().unwrap_or(0)
    }

    /// Betti numbers as a dense vector over degrees `0..=max`.
    pub fn betti_vec(&self) -> Vec<usize> {
        let Some(&max) = self.betti.keys().max() else { return Vec::new() };
        (0..=max).map(|d| self.betti(d)).collect()
    }

    pub fn nonzero(&self) -> BTreeMap<i64, usize> {
        self.betti.iter().filter(|(_, b)| **b > 0).map(|(d, b)| (*d, *b)).collect()
    }
}

/// A degree-preserving linear map between complexes, one matrix per degree
/// (rows index the target basis, columns the source basis).
#[derive(Clone, Debug, Default)]
pub struct ChainMap {
    pub maps: BTreeMap<i64, SparseMatrix>,
}

impl ChainMap {
    pub fn get<K: Key, L: Key>(&self, deg: i64, src: &ChainComplex<K>, tgt: &ChainComplex<L>) -> SparseMatrix {
        self.maps
            .get(&deg)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(tgt.dim(deg), src.dim(deg)))
    }

    pub fn identity<K: Key>(c: &ChainComplex<K>) -> ChainMap {
        let mut maps = BTreeMap::new();
        for d in c.degrees() {
            let mut m = SparseMatrix::zero(c.dim(d), 0);
            for i in 0..c.dim(d) {
                m.push_col([(i, Int::ONE)], c.ring());
            }
            maps.insert(d, m);
        }
        ChainMap { maps }
    }

    /// Tabulates a map given on source basis keys. Image terms must be basis
    /// keys of the target in the same degree.
    pub fn from_fn<K: Key, L: Key, F>(src: &ChainComplex<K>, tgt: &ChainComplex<L>, mut f: F) -> Result<ChainMap>
    where
        F: FnMut(&K) -> FreeElement<L>,
    {
        let ring = tgt.ring();
        let mut maps = BTreeMap::new();
        for d in src.degrees() {
            let mut m = SparseMatrix::zero(tgt.dim(d), 0);
            for k in src.basis(d) {
                let img = f(k);
                let mut col = Vec::with_capacity(img.len());
                for (t, c) in img.iter() {
                    match tgt.locate(t) {
                        Some((td, ti)) if td == d => col.push((ti, c.clone())),
                        _ => {
                            return Err(Error::DimensionMismatch(format!(
                                "image of {k:?} has term {t:?} outside target degree {d}"
                            )))
                        }
                    }
                }
                m.push_col(col, ring);
            }
            maps.insert(d, m);
        }
        Ok(ChainMap { maps })
    }
}

/// Checks `d f = f d` out of degree `deg`; returns a witnessing source basis
/// element on failure.
pub fn check_chain_map<K: Key, L: Key>(f: &ChainMap, src: &ChainComplex<K>, tgt: &ChainComplex<L>, deg: i64) -> Result<()> {
    let ring = tgt.ring();
    let lhs = tgt.differential(deg).mul(&f.get(deg, src, tgt), ring);
    let rhs = f.get(deg - 1, src, tgt).mul(&src.differential(deg), ring);
    for c in 0..src.dim(deg) {
        if lhs.cols[c] != rhs.cols[c] {
            return Err(Error::NotChainMap(format!("fails on {:?} in degree {deg}", src.basis(deg)[c])));
        }
    }
    Ok(())
}

/// Rank of the map induced on degree-`deg` homology over the target's prime field.
pub fn induced_map_rank<K: Key, L: Key>(f: &ChainMap, src: &ChainComplex<K>, tgt: &ChainComplex<L>, deg: i64) -> Result<usize> {
    let p = tgt.field_p()?;
    check_chain_map(f, src, tgt, deg)?;
    check_chain_map(f, src, tgt, deg + 1)?;
    let fd = f.get(deg, src, tgt);
    let mut red = ColumnReducer::new(p, false);
    if let Some(b) = tgt.diff.get(&(deg + 1)) {
        for c in 0..b.ncols() {
            red.push(&b.col_mod_p(c, p), c);
        }
    }
    let base = red.rank();
    for z in crate::sparse::kernel_mod_p(&src.differential(deg), p) {
        let v: Vec<(usize, Int)> = z.iter().map(|&(i, c)| (i, Int::from(c))).collect();
        let img: SpVec = to_spvec(&fd.mul_vec(&v, tgt.ring()), p);
        red.push(&img, usize::MAX);
    }
    Ok(red.rank() - base)
}
