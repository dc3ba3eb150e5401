use thiserror::Error;

/// Errors raised by the evaluators and the numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not reach tolerance {tol:e} within {subdivisions} subdivisions (estimate {estimate:e})")]
    Convergence { tol: f64, estimate: f64, subdivisions: usize },

    #[error("finite-difference step {step:e} underflowed at x = {x}")]
    StepUnderflow { step: f64, x: f64 },

    #[error("numerov solution overflowed at abscissa {at}")]
    Overflow { at: f64 },

    #[error("no bound state in energy bracket [{lo}, {hi}]")]
    BracketExhausted { lo: f64, hi: f64 },

    #[error("grid too coarse: {got} points, need at least {need}")]
    GridTooCoarse { got: usize, need: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
