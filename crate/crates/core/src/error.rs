use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation {op} has arity {arity} but was given {given} arguments")]
    ArityMismatch { op: usize, arity: usize, given: usize },
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("inconsistent congruences modulo {0} and {1}")]
    InconsistentCongruence(BigInt, BigInt),
    #[error("factorization incomplete; unfactored cofactor {cofactor}")]
    IncompleteFactorization { cofactor: BigInt },
    #[error("local hypothesis fails at p = {0}: the fiber needs more generators")]
    CounterexamplePrime(u64),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
