use thiserror::Error;

/// Errors shared by the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("modulus must be a monic polynomial of degree {expected} with coefficients below {p}")]
    BadModulus { expected: u32, p: u64 },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("field size {q} exceeds the discrete-log table limit {limit}")]
    TableLimit { q: u64, limit: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a {d}-th power")]
    NoRoot { d: u64 },
    #[error("values belong to different field specs")]
    SpecMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("code is not self-orthogonal at e = {e}")]
    NotSelfOrthogonal { e: u32 },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}
