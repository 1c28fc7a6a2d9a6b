use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (poles, zero
    /// denominators, out-of-range indices).
    #[error("domain error: {0}")]
    Domain(String),
    /// A truncated series was requested outside its convergence region.
    #[error("divergent series: {0}")]
    Divergence(String),
    /// The computation would exceed the configured size limits.
    #[error("resource limit: {0}")]
    Resource(String),
    /// Caller supplied an unknown name, malformed value or empty selection.
    #[error("usage error: {0}")]
    Usage(String),
    /// Two power series with different coefficient conventions were combined.
    #[error("series convention mismatch: {left} vs {right}")]
    ConventionMismatch { left: &'static str, right: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
