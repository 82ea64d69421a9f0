use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("integer overflow converting to machine integers")]
    Overflow,
    #[error("the cone is not pointed")]
    NotPointed,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("search box reached its cap ({cap}) without stabilizing: {what}")]
    BoxInsufficient { what: String, cap: i64 },
    #[error("no lift found for overlap class: {0}")]
    LiftNotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
