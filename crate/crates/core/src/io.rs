//! JSON file formats for algebras, cochains and operad chains.
//!
//! Algebra: `{"p": 3 | "Z", "dim", "basis_names", "structure_constants", "unit"}`
//! with `structure_constants[i][j][k]` the coefficient of `e_k` in `e_i·e_j`.
//! Cochain: `{"arity", "tensor"}` with the tensor nested `arity + 1` levels
//! deep, inputs first and the output index last.

use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::hochschild::{AssocAlgebra, Cochain};
use crate::int::Int;
use crate::ring::Ring;
use crate::surjection::{OperadChain, Surjection};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Largest tensor a cochain file may describe.
pub const MAX_TENSOR: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Prime(u32),
    Named(String),
}

impl RingSpec {
    pub fn ring(&self) -> Result<Ring> {
        match self {
            RingSpec::Prime(p) => Ring::prime_field(*p),
            RingSpec::Named(s) if s == "Z" => Ok(Ring::Integers),
            RingSpec::Named(s) => Err(Error::Invalid(format!("ring {s:?}; expected a prime or \"Z\""))),
        }
    }

    pub fn of(ring: Ring) -> Self {
        match ring {
            Ring::Integers => RingSpec::Named("Z".into()),
            Ring::PrimeField(p) => RingSpec::Prime(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub p: RingSpec,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub structure_constants: Vec<Vec<Vec<Int>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
}

impl AlgebraFile {
    pub fn of(alg: &AssocAlgebra) -> Self {
        let d = alg.dim();
        let sc = (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| alg.c(i, j, k)).collect()).collect()).collect();
        AlgebraFile { p: RingSpec::of(alg.ring()), dim: d, basis_names: alg.names().to_vec(), structure_constants: sc, unit: alg.unit() }
    }

    pub fn build(&self) -> Result<AssocAlgebra> {
        let ring = self.p.ring()?;
        let d = self.dim;
        if d == 0 || d > 16 {
            return Err(Error::Invalid(format!("dimension {d}; supported 1..=16")));
        }
        if self.basis_names.len() != d {
            return Err(Error::DimensionMismatch(format!("{} basis names for dimension {d}", self.basis_names.len())));
        }
        let shape_ok = self.structure_constants.len() == d
            && self.structure_constants.iter().all(|r| r.len() == d && r.iter().all(|c| c.len() == d));
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!("structure constants must be {d}×{d}×{d}")));
        }
        let flat = self.structure_constants.iter().flatten().flatten().cloned().collect();
        AssocAlgebra::new(ring, self.basis_names.clone(), flat, self.unit)
    }
}

pub fn algebra_from_json(text: &str) -> Result<AssocAlgebra> {
    let f: AlgebraFile = serde_json::from_str(text).map_err(json_err)?;
    f.build()
}

pub fn algebra_to_json(alg: &AssocAlgebra) -> String {
    serde_json::to_string(&AlgebraFile::of(alg)).expect("serializable")
}

/// Built-in algebras by short name: `dual`, `trunc3`, `mat2`, `ut2`.
pub fn builtin_algebra(name: &str, ring: Ring) -> Result<AssocAlgebra> {
    Ok(match name {
        "dual" => AssocAlgebra::dual_numbers(ring),
        "trunc3" => AssocAlgebra::truncated_polynomials(ring),
        "mat2" => AssocAlgebra::matrices2(ring),
        "ut2" => AssocAlgebra::upper_triangular2(ring),
        _ => return Err(Error::Invalid(format!("unknown algebra {name:?}; built-ins are dual, trunc3, mat2, ut2"))),
    })
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse { pos: e.column(), msg: e.to_string() }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CochainFile {
    arity: usize,
    tensor: Value,
}

fn nest(entries: &[Int], dim: usize, depth: usize) -> Value {
    if depth == 1 {
        return Value::Array(entries.iter().map(|e| serde_json::to_value(e).expect("serializable")).collect());
    }
    let step = entries.len() / dim;
    Value::Array((0..dim).map(|i| nest(&entries[i * step..(i + 1) * step], dim, depth - 1)).collect())
}

fn flatten(v: &Value, dim: usize, depth: usize, out: &mut Vec<Int>) -> Result<()> {
    let Value::Array(items) = v else { return Err(Error::Invalid("tensor levels must be arrays".into())) };
    if items.len() != dim {
        return Err(Error::DimensionMismatch(format!("tensor level of length {} for dimension {dim}", items.len())));
    }
    for item in items {
        if depth == 1 {
            out.push(serde_json::from_value(item.clone()).map_err(|e| Error::Invalid(format!("tensor entry: {e}")))?);
        } else {
            flatten(item, dim, depth - 1, out)?;
        }
    }
    Ok(())
}

pub fn cochain_to_json(c: &Cochain) -> String {
    let f = CochainFile { arity: c.arity(), tensor: nest(&c.entries(), c.dim(), c.arity() + 1) };
    serde_json::to_string(&f).expect("serializable")
}

/// Reads a cochain on `alg`; entries are reduced into the algebra's ring.
pub fn cochain_from_json(text: &str, alg: &AssocAlgebra) -> Result<Cochain> {
    let f: CochainFile = serde_json::from_str(text).map_err(json_err)?;
    let size = (alg.dim() as u128).checked_pow(f.arity as u32 + 1).unwrap_or(u128::MAX);
    if size > MAX_TENSOR as u128 {
        return Err(Error::OutOfRange(format!("arity {} on dimension {} exceeds {MAX_TENSOR} entries", f.arity, alg.dim())));
    }
    let mut entries = Vec::with_capacity(size as usize);
    flatten(&f.tensor, alg.dim(), f.arity + 1, &mut entries)?;
    Cochain::from_entries(alg.ring(), alg.dim(), f.arity, entries)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainTerm {
    seq: Surjection,
    coeff: Int,
}

pub fn chain_to_json(c: &OperadChain) -> String {
    let terms: Vec<ChainTerm> = c.terms().map(|(u, k)| ChainTerm { seq: u.clone(), coeff: c.ring().balanced(k) }).collect();
    serde_json::to_string(&terms).expect("serializable")
}

/// Reads `[{seq, coeff}, …]`; every sequence must have the given arity.
pub fn chain_from_json(text: &str, arity: usize, ring: Ring) -> Result<OperadChain> {
    let terms: Vec<ChainTerm> = serde_json::from_str(text).map_err(json_err)?;
    let elem = FreeElement::from_terms(ring, terms.into_iter().map(|t| (t.seq, t.coeff)));
    OperadChain::from_element(arity, elem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_roundtrip_is_bit_exact() {
        let r = Ring::prime_field(3).unwrap();
        for alg in [AssocAlgebra::dual_numbers(r), AssocAlgebra::matrices2(Ring::Integers)] {
            let j = algebra_to_json(&alg);
            let back = algebra_from_json(&j).unwrap();
            assert_eq!(algebra_to_json(&back), j);
            assert_eq!(back.mu(), alg.mu());
        }
        let j = algebra_to_json(&AssocAlgebra::dual_numbers(r));
        assert_eq!(j, r#"{"p":3,"dim":2,"basis_names":["1","e"],"structure_constants":[[[1,0],[0,1]],[[0,1],[0,0]]],"unit":0}"#);
    }

    #[test]
    fn algebra_validation() {
        let nonassoc = r#"{"p":"Z","dim":2,"basis_names":["x","y"],"structure_constants":[[[0,1],[0,0]],[[0,0],[1,0]]]}"#;
        assert!(algebra_from_json(nonassoc).is_err());
        let bad_ring = r#"{"p":4,"dim":1,"basis_names":["1"],"structure_constants":[[[1]]]}"#;
        assert_eq!(algebra_from_json(bad_ring).unwrap_err(), Error::NotPrime(4));
        let bad_shape = r#"{"p":2,"dim":2,"basis_names":["1","e"],"structure_constants":[[[1,0]]]}"#;
        assert!(matches!(algebra_from_json(bad_shape), Err(Error::DimensionMismatch(_))));
        let bad_unit = r#"{"p":2,"dim":1,"basis_names":["1"],"structure_constants":[[[0]]],"unit":0}"#;
        assert!(algebra_from_json(bad_unit).is_err());
        assert!(algebra_from_json("{").is_err());
    }

    #[test]
    fn cochain_roundtrip_is_bit_exact() {
        let alg = AssocAlgebra::upper_triangular2(Ring::Integers);
        let c = Cochain::from_i64(Ring::Integers, 3, 1, &[1, -2, 3, 0, 0, 0, i64::MAX, 5, -7]).unwrap();
        let big = c.scale(4);
        for x in [c, big] {
            let j = cochain_to_json(&x);
            let back = cochain_from_json(&j, &alg).unwrap();
            assert_eq!(back, x);
            assert_eq!(cochain_to_json(&back), j);
        }
        let j = cochain_to_json(&Cochain::from_i64(Ring::Integers, 3, 0, &[1, 2, 3]).unwrap());
        assert_eq!(j, r#"{"arity":0,"tensor":[1,2,3]}"#);
    }

    #[test]
    fn cochain_shape_errors() {
        let alg = AssocAlgebra::dual_numbers(Ring::prime_field(5).unwrap());
        assert!(cochain_from_json(r#"{"arity":1,"tensor":[1,2,3,4]}"#, &alg).is_err());
        assert!(cochain_from_json(r#"{"arity":1,"tensor":[[1,2],[3]]}"#, &alg).is_err());
        assert!(cochain_from_json(r#"{"arity":40,"tensor":[]}"#, &alg).is_err());
        assert!(cochain_from_json(r#"{"arity":0,"tensor":[1,"x"]}"#, &alg).is_err());
        let c = cochain_from_json(r#"{"arity":0,"tensor":[7,-1]}"#, &alg).unwrap();
        assert_eq!(c.entries(), vec![Int::from(2), Int::from(4)]);
    }

    #[test]
    fn chain_roundtrip() {
        let b = crate::surjection::left_brace_chain(2, Ring::Integers);
        let c = b.sub(&b).sub(&b);
        let j = chain_to_json(&c);
        assert_eq!(chain_from_json(&j, 2, Ring::Integers).unwrap(), c);
        assert!(chain_from_json(&j, 3, Ring::Integers).is_err());
        assert!(chain_from_json(r#"[{"seq":[1,1],"coeff":1}]"#, 1, Ring::Integers).is_err());
    }
}
