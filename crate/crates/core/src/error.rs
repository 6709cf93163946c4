use thiserror::Error;

/// Errors raised by parameter validation, special functions and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("invalid parameters for derivative kind: {0}")]
    Kind(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("gamma function pole at {0}")]
    Pole(f64),
    #[error("operation not available for this superpotential family: {0}")]
    Family(String),
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("Laguerre parameter alpha = {0} must exceed -1")]
    Alpha(f64),
    #[error("quadrature did not converge: |refined - coarse| = {difference:e} > {tolerance:e}")]
    NonConvergence { difference: f64, tolerance: f64 },
    #[error("eigenvalue iteration stalled after {iterations} iterations (last change {change:e})")]
    Convergence { iterations: usize, change: f64 },
    #[error("spectrum request cannot be resolved: {0}")]
    Spectrum(String),
    #[error("singular banded system: zero pivot in column {0}")]
    Solve(usize),
    #[error("decay signal unusable: {0}")]
    Signal(String),
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("non-finite state at step {0}")]
    NonFinite(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
