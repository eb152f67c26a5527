//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally valid input the implementation deliberately rejects,
    /// e.g. the cos/cos selector on an odd grid where `cos θ_j` vanishes.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// Evaluation at a genuine (non-removable) pole.
    #[error("pole at {argument}: {context}")]
    Pole { argument: f64, context: String },

    /// Quadrature failed to meet the requested tolerance; carries the best
    /// estimate obtained so far.
    #[error("quadrature did not converge: best estimate {best:e}, error estimate {error_estimate:e}")]
    NoConvergence { best: f64, error_estimate: f64 },

    /// No closed form or table entry for the requested input.
    #[error("not available: {0}")]
    NotAvailable(String),

    /// Exact-arithmetic capacity limit exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
