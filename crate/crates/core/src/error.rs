use thiserror::Error;

/// Errors produced by the geometry, arithmetic and quadrature routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The cmc tangency analysis requires the second axis to lie in a small
    /// neighbourhood of the first.
    #[error("neighbourhood hypothesis violated: distance sum {sum} >= rho {rho}")]
    Neighbourhood { sum: f64, rho: f64 },

    #[error("quadrature did not converge: estimate {estimate}, error {abs_err} > target {target}")]
    Quadrature {
        estimate: f64,
        abs_err: f64,
        target: f64,
    },

    /// A threshold comparison cannot be decided at the available accuracy.
    #[error("indeterminate comparison: |{value} - {threshold}| < {abs_err}")]
    Indeterminate {
        value: f64,
        threshold: f64,
        abs_err: f64,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
