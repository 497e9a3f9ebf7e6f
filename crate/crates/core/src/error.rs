//! Error type shared by every module.

use thiserror::Error;

/// Failure modes of the numerical routines and the command-line layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of the routine.
    #[error("domain error: {0}")]
    Domain(String),
    /// Valid input that this implementation does not handle.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An iterative method stopped before meeting its tolerance.
    #[error("no convergence: estimate {estimate:e}, error estimate {error:e}")]
    NonConvergence { estimate: f64, error: f64 },
    /// A linear system was numerically singular.
    #[error("ill-conditioned: {0}")]
    Conditioning(String),
    /// Bad command-line or config input.
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
