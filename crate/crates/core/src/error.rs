use num_rational::BigRational;
use thiserror::Error;

/// Errors raised by the exact and numerical layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("Gamma has a pole at {0}")]
    GammaPole(BigRational),

    #[error("constant contains Gamma({0}) and is symbolic-only")]
    SymbolicOnly(BigRational),

    #[error("{what}: {reason}")]
    Domain { what: &'static str, reason: String },

    #[error("truncation order {order} must be smaller than n = {n}")]
    TruncationTooLarge { order: usize, n: usize },

    #[error("not enough terms: index {needed} requested, {available} available")]
    InsufficientTerms { needed: usize, available: usize },

    #[error("series square root: {0}")]
    SeriesSqrt(String),

    #[error("v+/v- factorization has no solution at order {order}")]
    Factorization { order: usize },

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain {
        what,
        reason: reason.into(),
    }
}
