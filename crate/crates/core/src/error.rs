use thiserror::Error;

/// Errors produced by semigroup and ideal operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i32),
    #[error("generators have gcd {0}; the monoid they generate is not cofinite")]
    GcdNotOne(i32),
    #[error("{0} is not a nonzero element of the semigroup")]
    NotMember(i32),
    #[error("the semigroup is already all of N")]
    AlreadyFull,
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(i32),
    #[error("ideal is not contained in the semigroup")]
    NotContained,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("internal disagreement between two computations of {0}")]
    InternalDisagreement(&'static str),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
