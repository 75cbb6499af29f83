use thiserror::Error;

/// Errors raised by channel, state and bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter violated its domain; `name` identifies the offending input.
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {estimate:e}, error {abs_error:e})")]
    QuadratureNonConvergence {
        subdivisions: usize,
        estimate: f64,
        abs_error: f64,
    },

    /// A covariance matrix failed the uncertainty principle.
    #[error("unphysical covariance matrix: {0}")]
    Unphysical(String),

    #[error("mode index {index} out of range for a {modes}-mode state")]
    ModeIndex { index: usize, modes: usize },

    #[error("{0}")]
    Spec(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            reason,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
