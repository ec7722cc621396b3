use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field size {p}^{exponent} exceeds the table guard 2^24")]
    FieldTooLarge { p: u32, exponent: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u32>),
    #[error("element {0} is not a primitive element")]
    NotPrimitive(u32),
    #[error("operands belong to different field towers")]
    TowerMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("invalid coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("enumeration of {count} words exceeds the guard of {guard}")]
    GuardExceeded { count: u128, guard: u128 },
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("invalid weight enumerator: {0}")]
    InvalidEnumerator(String),
    #[error("polynomials use different q contexts ({0} vs {1})")]
    ContextMismatch(u64, u64),
    #[error("operation requires prime q, tower has q = {p}^{s}")]
    NonPrimeQ { p: u32, s: u32 },
    #[error("cyclotomic value is not a rational integer: {0}")]
    NonIntegral(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
