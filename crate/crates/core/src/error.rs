use thiserror::Error;

/// Errors raised by constructors and computations in this crate.
///
/// Axiom and diagram checks never return errors for failed identities;
/// those are reported as data. Errors are reserved for malformed input,
/// arithmetic impossibilities and exhausted budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("element is not invertible: {reason}")]
    NotInvertible { reason: String, witness: Vec<String> },

    #[error("invalid construction: {0}")]
    Construction(String),

    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    Resource {
        what: String,
        needed: String,
        budget: String,
    },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
