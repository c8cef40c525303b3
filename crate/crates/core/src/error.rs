//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A polynomial or series evaluation left the representable range.
    #[error("overflow in {0}")]
    Overflow(String),

    /// A state could not be represented below the requested tail tolerance.
    #[error("truncation failure: tail mass {deficit:.3e} exceeds {tail_tol:.3e} at n_max = {n_max}")]
    Truncation {
        n_max: usize,
        deficit: f64,
        tail_tol: f64,
    },

    /// Matrix or vector dimensions do not agree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// An eigendecomposition failed to converge.
    #[error("spectral decomposition failed: {0}")]
    Spectral(String),

    /// The trace underlying a phase is too close to zero for arg to be meaningful.
    #[error("undefined phase: |trace| = {trace_abs:.3e} is below 1e-12")]
    UndefinedPhase { trace_abs: f64 },

    /// An expectation value that must be real carries a large imaginary part.
    #[error("hermiticity failure: imaginary residual {residual:.3e}")]
    Hermiticity { residual: f64 },
}
