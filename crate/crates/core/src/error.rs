//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A (model, variable) or similar combination has no defined value.
    #[error("unsupported combination: {0}")]
    Unsupported(String),

    /// Lookup of a constant key that does not exist in the reference table.
    #[error("unknown constant key `{0}`")]
    UnknownKey(String),

    /// The constant exists but has no closed-form evaluation path.
    #[error("constant `{0}` has no closed form")]
    NoClosedForm(String),

    /// An iteration or quadrature failed to reach its tolerance in budget.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// The integrand returned NaN or infinity at an interior point.
    #[error("non-finite integrand value at x = {0}")]
    NonFinite(f64),

    /// A caller-facing precondition was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal invariant failed (e.g. rejection-sampling trial cap).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
