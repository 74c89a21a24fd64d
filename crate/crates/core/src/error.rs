use thiserror::Error;

/// Errors reported by the library.
///
/// `Inconsistency` is reserved for violations of analytic guarantees that the
/// implementation is supposed to certify (e.g. a constructed point set missing
/// its error bound); callers should treat it as a bug report, not bad input.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("precision error: {0}")]
    Precision(String),
    #[error("divergent quantity: {0}")]
    Divergence(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
}
