use thiserror::Error;

/// Errors raised by ring arithmetic, graph construction and spectral routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("usage error: {0}")]
    Usage(String),

    /// The input is well formed but lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested computation exceeds a configured budget.
    #[error("resource limit: {what} needs {needed}, limit is {limit} (try {hint})")]
    Resource {
        what: String,
        needed: u64,
        limit: u64,
        hint: &'static str,
    },

    /// An iterative method failed to converge.
    #[error(
        "no convergence in {method} after {iterations} iterations (last residual {residual:e})"
    )]
    Numeric {
        method: &'static str,
        iterations: usize,
        residual: f64,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
