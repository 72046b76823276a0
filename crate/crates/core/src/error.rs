use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("diagram of ({lambda}) is not contained in diagram of ({nu})")]
    NotContained { lambda: String, nu: String },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("tableau is already standard")]
    AlreadyStandard,
    #[error("tableau is not colour-semistandard: {0}")]
    NotColourSemistandard(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size {size} exceeds the recursion cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
}
