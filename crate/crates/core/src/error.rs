use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("square root of negative number {0}")]
    NegativeRadicand(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("{0}")]
    InvalidShape(String),
    #[error("element is not supported on the first {0} strands")]
    NotInSubalgebra(usize),
    #[error("relation failed: {0}")]
    RelationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
