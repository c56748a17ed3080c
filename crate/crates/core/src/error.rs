use thiserror::Error;

/// Errors raised by the library.
///
/// Structural violations of partition specs are data (see
/// [`crate::whisker::Violation`]) and only surface here when a build is
/// rejected.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("partition spec rejected: {}", .0.join("; "))]
    Rejected(Vec<String>),

    /// An identity that holds for every valid input failed; this always
    /// indicates a bug or a counterexample worth reporting.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
