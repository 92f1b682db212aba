use thiserror::Error;

/// Errors reported by the region evaluators.
#[derive(Debug, Error)]
pub enum Error {
    /// An input distribution, channel, or power split failed validation.
    #[error("validation error: {0}")]
    Validation(String),

    /// An operation was called with arguments outside its contract.
    #[error("usage error: {0}")]
    Usage(String),

    /// A scalar argument was outside the mathematical domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal consistency check failed (numerical breakdown).
    #[error("numeric inconsistency: {0}")]
    Numeric(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed document: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
