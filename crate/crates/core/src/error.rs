use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index ({i}, {j}) out of range for size {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("matrix size {n} is below the minimum {min} for this operation")]
    SizeTooSmall { n: usize, min: usize },

    #[error("extension column {j0} outside 3..={max}")]
    ColumnOutOfRange { j0: usize, max: usize },

    #[error("expected {expected} parameter bits, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("matrix of size {n} is not multi-symmetric")]
    NotMultiSymmetric { n: usize },

    #[error("{what}: dimension {dim} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        dim: usize,
        cap: usize,
    },

    #[error("invalid sequence text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("N = {n} must be even and at least 4")]
    InvalidOrder { n: usize },

    #[error("{context}: {message}")]
    Io { context: String, message: String },

    /// An identity that must hold for every input failed. Never expected;
    /// raised instead of returning a silently wrong answer.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(context: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Error::Io {
            context: context.into(),
            message: err.to_string(),
        }
    }
}
