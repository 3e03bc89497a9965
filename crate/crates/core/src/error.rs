use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("homology over ℤ unsupported; use a prime field or bockstein")]
    IntegralHomology,
    #[error("not a mod-p cycle")]
    NotModPCycle,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("hypothesis violated: requires {0}")]
    Hypothesis(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
