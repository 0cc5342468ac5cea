use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input violates a mathematical precondition of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Operand shapes do not line up (e.g. series of different lengths).
    #[error("usage error: {0}")]
    Usage(String),
    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("invariant violation: {0}")]
    Invariant(String),
    /// The request is valid but outside what this build implements.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
