use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial parse error: {0}")]
    Parse(String),

    #[error("polynomial must be monic")]
    NonMonic,

    #[error("polynomial must have degree >= 1")]
    DegreeZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("polynomial is zero modulo {0}")]
    ZeroModP(u64),

    #[error("Z[theta] is not maximal at p = {0}; this field is not supported")]
    NonMaximalAtP(u64),

    #[error("basis change matrix must be unimodular (det = +/-1, got {0})")]
    NonUnimodular(BigInt),

    #[error("elements belong to different bases")]
    BasisMismatch,

    #[error("enumeration of {needed} points exceeds budget {budget}")]
    BudgetExceeded { needed: BigInt, budget: u64 },

    #[error("sampled mode requires an explicit seed and sample count")]
    MissingSeed,

    #[error("zeta_K({m}) diverges: the Euler product has a pole at m = 1")]
    ZetaPole { m: i64 },

    #[error("zeta estimate is degenerate: tail bound {tail} swallows value {value}")]
    DegenerateZeta { value: f64, tail: f64 },

    #[error("prime index {index} out of range ({count} primes above {p})")]
    PrimeIndexOutOfRange { p: u64, index: usize, count: usize },

    #[error("{0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
