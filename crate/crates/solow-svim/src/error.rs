//! Error type shared across the solver kit.

use thiserror::Error;

/// Errors reported by the solver kit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside a function's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A result exceeded the representable f64 range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A series failed to reach its tolerance within the term cap.
    #[error("series did not converge within {max_terms} terms (tol {tol:e})")]
    NonConvergence { max_terms: usize, tol: f64 },

    /// A transform-domain shift would have produced a negative exponent,
    /// which signals a malformed iterate.
    #[error("negative exponent: {0}")]
    NegativeExponent(String),

    /// Model or evaluation parameters violated an invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
