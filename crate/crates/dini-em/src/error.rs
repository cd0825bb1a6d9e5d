//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid parameters, malformed configuration, incompatible grids.
    #[error("configuration error: {0}")]
    Config(String),

    /// A user-supplied coefficient returned a non-finite value.
    #[error("model `{name}` returned a non-finite {what} at t={t}, x={x:?}")]
    Model {
        name: String,
        what: &'static str,
        t: f64,
        x: Vec<f64>,
    },

    /// Quadrature or other numeric routine hit a non-finite sample.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// The simulated state left the admissible region (overflow / NaN).
    #[error("simulation blow-up at step {step} (t={t}): |Y| = {norm}")]
    Blowup { step: usize, t: f64, norm: f64 },

    /// Interpolation requested off the available fine grid.
    #[error("interpolation error: {0}")]
    Interpolation(String),

    /// Regression asked for with too few usable points.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Finite-difference discretization is not usable as configured.
    #[error("discretization error: {0}")]
    Discretization(String),

    /// An experiment could not produce a statistic.
    #[error("experiment failure: {0}")]
    Experiment(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
