//! Sparse matrices and exact elimination over prime fields.

use crate::int::Int;
use crate::ring::{inv_mod, Ring};
use std::collections::HashMap;

/// Sparse vector over 𝔽_p: sorted indices, nonzero residues in `1..p`.
pub type SpVec = Vec<(usize, u64)>;

/// Column-major sparse matrix with exact integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, Int)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, ncols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vec::new(); ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Builds a column from unsorted `(row, value)` pairs, summing duplicates.
    pub fn push_col(&mut self, entries: impl IntoIterator<Item = (usize, Int)>, ring: Ring) {
        let mut acc: Vec<(usize, Int)> = entries.into_iter().collect();
        acc.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Int)> = Vec::with_capacity(acc.len());
        for (r, v) in acc {
            assert!(r < self.rows, "row {r} out of bounds ({})", self.rows);
            match out.last_mut() {
                Some((lr, lv)) if *lr == r => *lv = ring.add(lv, &v),
                _ => out.push((r, ring.reduce(v))),
            }
        }
        out.retain(|e| !e.1.is_zero());
        self.cols.push(out);
    }

    pub fn get(&self, r: usize, c: usize) -> Int {
        self.cols[c]
            .binary_search_by_key(&r, |e| e.0)
            .map(|i| self.cols[c][i].1.clone())
            .unwrap_or(Int::ZERO)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Int)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        SparseMatrix { rows: self.ncols(), cols }
    }

    /// `self * other` with entries reduced into `ring`.
    pub fn mul(&self, other: &SparseMatrix, ring: Ring) -> SparseMatrix {
        assert_eq!(self.ncols(), other.rows, "inner dimensions differ");
        let mut out = SparseMatrix::zero(self.rows, 0);
        for col in &other.cols {
            let mut acc: HashMap<usize, Int> = HashMap::new();
            for (k, v) in col {
                for (r, w) in &self.cols[*k] {
                    let e = acc.entry(*r).or_insert(Int::ZERO);
                    *e = ring.add(e, &ring.mul(v, w));
                }
            }
            out.push_col(acc, ring);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn mul_vec(&self, v: &[(usize, Int)], ring: Ring) -> Vec<(usize, Int)> {
        let mut acc: HashMap<usize, Int> = HashMap::new();
        for (k, c) in v {
            for (r, w) in &self.cols[*k] {
                let e = acc.entry(*r).or_insert(Int::ZERO);
                *e = ring.add(e, &ring.mul(c, w));
            }
        }
        let mut out: Vec<(usize, Int)> = acc.into_iter().filter(|e| !e.1.is_zero()).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn col_mod_p(&self, c: usize, p: u64) -> SpVec {
        to_spvec(&self.cols[c], p)
    }
}

pub fn to_spvec(v: &[(usize, Int)], p: u64) -> SpVec {
    v.iter()
        .filter_map(|(i, x)| {
            let r = x.rem_euclid_u64(p);
            (r != 0).then_some((*i, r))
        })
        .collect()
}

/// `a + c·b` over 𝔽_p.
pub fn axpy(a: &SpVec, c: u64, b: &SpVec, p: u64) -> SpVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * b[j].1 % p));
            j += 1;
        } else {
            let v = (a[i].1 + c * b[j].1) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

struct Pivot {
    col: SpVec,
    combo: SpVec,
}

/// Incremental column reduction. Each accepted column is stored normalized
/// with its lowest (largest-index) entry equal to 1; the combination of input
/// columns producing it is tracked when requested.
pub struct ColumnReducer {
    p: u64,
    track: bool,
    pivots: HashMap<usize, Pivot>,
}

pub struct Reduction {
    pub residual: SpVec,
    /// `original = residual + Σ combo_j · (input column j)` when tracking.
    pub combo: SpVec,
}

impl ColumnReducer {
    pub fn new(p: u64, track: bool) -> Self {
        ColumnReducer { p, track, pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the stored pivots without modifying them.
    pub fn reduce(&self, v: &SpVec) -> Reduction {
        let p = self.p;
        let mut cur = v.clone();
        let mut combo: SpVec = Vec::new();
        while let Some(&(r, c)) = cur.last() {
            let Some(piv) = self.pivots.get(&r) else { break };
            let f = p - c;
            cur = axpy(&cur, f, &piv.col, p);
            if self.track {
                combo = axpy(&combo, c, &piv.combo, p);
            }
        }
        Reduction { residual: cur, combo }
    }

    /// Adds column `v` with identifier `id`. Returns the kernel combination
    /// when `v` is dependent on earlier columns (only meaningful when tracking).
    pub fn push(&mut self, v: &SpVec, id: usize) -> Option<SpVec> {
        let p = self.p;
        let red = self.reduce(v);
        // residual = v − Σ combo_j col_j
        let mut own: SpVec = if self.track {
            let neg: SpVec = red.combo.iter().map(|&(j, c)| (j, (p - c) % p)).collect();
            axpy(&neg, 1, &vec![(id, 1)], p)
        } else {
            Vec::new()
        };
        match red.residual.last() {
            None => Some(own),
            Some(&(r, c)) => {
                let inv = inv_mod(c, p);
                let col: SpVec = red.residual.iter().map(|&(i, x)| (i, x * inv % p)).collect();
                if self.track {
                    own = own.iter().map(|&(i, x)| (i, x * inv % p)).collect();
                }
                self.pivots.insert(r, Pivot { col, combo: own });
                None
            }
        }
    }
}

/// Rank of a sparse matrix over 𝔽_p. Columns are processed sparsest first
/// (a Markowitz-style ordering that keeps fill-in low).
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let mut order: Vec<usize> = (0..m.ncols()).collect();
    order.sort_by_key(|&c| (m.cols[c].len(), c));
    let mut red = ColumnReducer::new(p, false);
    for c in order {
        red.push(&m.col_mod_p(c, p), c);
    }
    red.rank()
}

/// Basis of the kernel of `m` over 𝔽_p, as sparse vectors indexed by columns.
pub fn kernel_mod_p(m: &SparseMatrix, p: u64) -> Vec<SpVec> {
    let mut red = ColumnReducer::new(p, true);
    let mut out = Vec::new();
    for c in 0..m.ncols() {
        if let Some(k) = red.push(&m.col_mod_p(c, p), c) {
            out.push(k);
        }
    }
    out
}

/// Solves `m x = b` over 𝔽_p if possible.
pub fn solve_mod_p(m: &SparseMatrix, b: &SpVec, p: u64) -> Option<SpVec> {
    let mut red = ColumnReducer::new(p, true);
    for c in 0..m.ncols() {
        red.push(&m.col_mod_p(c, p), c);
    }
    let r = red.reduce(b);
    r.residual.is_empty().then_some(r.combo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let nr = rows.len();
        let nc = rows[0].len();
        let mut m = SparseMatrix::zero(nr, 0);
        for c in 0..nc {
            m.push_col((0..nr).map(|r| (r, Int::from(rows[r][c]))), Ring::Integers);
        }
        m
    }

    #[test]
    fn rank_small() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_mod_p(&m, 7), 2);
        let m = dense(&[&[1, 1], &[1, 2]]);
        assert_eq!(rank_mod_p(&m, 2), 2);
        let m = dense(&[&[2, 0], &[0, 2]]);
        assert_eq!(rank_mod_p(&m, 2), 0);
    }

    #[test]
    fn kernel_vectors_are_in_kernel() {
        let m = dense(&[&[1, 2, 3, 0], &[0, 1, 1, 1], &[1, 3, 4, 1]]);
        let p = 5;
        let ker = kernel_mod_p(&m, p);
        assert_eq!(ker.len(), 4 - rank_mod_p(&m, p));
        for k in &ker {
            let v: Vec<(usize, Int)> = k.iter().map(|&(i, c)| (i, Int::from(c))).collect();
            assert!(m.mul_vec(&v, Ring::PrimeField(5)).is_empty());
        }
    }

    #[test]
    fn solve_round_trip() {
        let m = dense(&[&[1, 2], &[3, 4], &[5, 6]]);
        let b = to_spvec(&m.mul_vec(&[(0, Int::from(2)), (1, Int::from(1))], Ring::Integers), 11);
        let x = solve_mod_p(&m, &b, 11).unwrap();
        let xv: Vec<(usize, Int)> = x.iter().map(|&(i, c)| (i, Int::from(c))).collect();
        assert_eq!(to_spvec(&m.mul_vec(&xv, Ring::PrimeField(11)), 11), b);
        assert!(solve_mod_p(&m, &vec![(0, 1)], 11).is_some() || rank_mod_p(&m, 11) < 3);
    }
}
