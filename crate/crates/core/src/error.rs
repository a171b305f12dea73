//! Error types shared by all estimators.

/// Error raised by signal constructors, estimators, and studies.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The input data violates a precondition (non-finite samples,
    /// mismatched lengths, records shorter than one segment, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested configuration is unsatisfiable (grid extent past
    /// the Nyquist bin, non-reduced rational, overlap out of range, ...).
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn config(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}
