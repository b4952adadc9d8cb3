use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable context mismatch: {0}")]
    ContextMismatch(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("the zero polynomial has no top part")]
    ZeroPolynomial,
    #[error("weight frame mismatch: {0}")]
    FrameMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invariance violated: {0}")]
    NotInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
