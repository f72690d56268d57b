use thiserror::Error;

/// Errors produced by evaluation, verification and root-finding routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input: violated a constructor or operation precondition.
    #[error("invalid input: {0}")]
    Validation(String),

    /// A resource guard was hit (summand count, series degree, lattice size).
    #[error("resource guard exceeded: {0}")]
    Resource(String),

    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Internal consistency violated; indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
