//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Operation outside its mathematical domain (zero polynomial, q = 0, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Text input failed to parse.
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A projective matrix specialized to determinant zero.
    #[error("singular specialization: {object}")]
    Singular { object: String },

    /// Root refinement did not converge within the iteration cap.
    #[error("root refinement did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
