use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: a permutation needs at least one point")]
    InvalidDimension(usize),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotABijection(String),

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("{what} of size {requested} exceeds the cap of {cap} (use an explicit override)")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid wiring: {0}")]
    Wiring(String),

    #[error("library is not group-closed: {0}")]
    ClosureViolation(String),

    #[error("gate {0} is not in the library")]
    NotInLibrary(String),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("configuration error: {0}")]
    Configuration(String),

    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn at_line(line: usize, err: impl std::fmt::Display) -> Self {
        Error::Line {
            line,
            message: err.to_string(),
        }
    }
}
