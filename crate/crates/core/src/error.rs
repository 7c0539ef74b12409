use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An explicit materialization would exceed the configured budget.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An internal cross-check failed (two routes disagreed).
    #[error("verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn resource(msg: impl Into<String>) -> Error {
    Error::Resource(msg.into())
}

pub(crate) fn verification(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}
