use thiserror::Error;

/// Errors raised by the polynomial, matrix and Pell routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("polynomial has non-integral coefficients")]
    NotIntegral,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("d must be nonzero")]
    ZeroD,

    #[error("r must be nonzero")]
    ZeroR,

    #[error("normalizer (-d)^(n/2) is irrational for d = {d}, n = {n}")]
    OddIndexUndefined { d: i64, n: u32 },

    #[error("normalizer is irrational for base {base}, m = {m}, n = {n}")]
    IrrationalNormalizer { base: i64, m: usize, n: u32 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("(P, Q) does not satisfy the Pell equation")]
    NotASolution,

    #[error("d = {0} is not one of 1, -1, 2, -2")]
    UnsupportedD(i64),

    #[error("m = {0} is not prime")]
    NotPrime(usize),

    #[error("m must be at least 2, got {0}")]
    DegreeTooSmall(usize),

    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

impl Error {
    /// Stable variant name, printed by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::NotIntegral => "NotIntegral",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ZeroD => "ZeroD",
            Error::ZeroR => "ZeroR",
            Error::OddIndexUndefined { .. } => "OddIndexUndefined",
            Error::IrrationalNormalizer { .. } => "IrrationalNormalizer",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NotASolution => "NotASolution",
            Error::UnsupportedD(_) => "UnsupportedD",
            Error::NotPrime(_) => "NotPrime",
            Error::DegreeTooSmall(_) => "DegreeTooSmall",
            Error::Json(_) => "JsonError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
