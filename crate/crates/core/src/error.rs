use thiserror::Error;

/// Errors raised by the optimization library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("search space must contain at least one dimension")]
    EmptySpace,
    #[error("invalid dimension {index}: {reason}")]
    InvalidDimension { index: usize, reason: String },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("value outside the domain of dimension {index}")]
    OutOfDomain { index: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("invalid sample set: {0}")]
    Samples(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
