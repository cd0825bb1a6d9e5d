//! Euler-Maruyama integration and strong-convergence experiments for SDEs
//! whose coefficients are merely Dini- or Holder-Dini-continuous.
//!
//! The library is organized around a small pipeline:
//!
//! - [`modulus`] — moduli of continuity, Dini-integral and concavity checks;
//! - [`model`] — drift/diffusion pairs with regularity metadata, the built-in
//!   model zoo, and the cut-off truncation used for linear-growth coefficients;
//! - [`path`] — reproducible Brownian increments on a fine grid, with exact
//!   coarsening so a reference solution and a coarse scheme share one path;
//! - [`scheme`] — the Euler-Maruyama recursion, its continuous-time
//!   interpolant, and the closed-form geometric-Brownian-motion benchmark;
//! - [`experiment`] — Monte Carlo error tables, log-log rate regression,
//!   one-step gap moments, truncation and moment-bound experiments;
//! - [`kolmogorov`] — a 1-d implicit finite-difference solver for the backward
//!   Kolmogorov equation, used to probe the sqrt(interval) gradient scaling;
//! - [`config`], [`runner`], [`plot`] — the batch / CLI surface.

pub mod config;
pub mod error;
pub mod experiment;
pub mod kolmogorov;
pub mod model;
pub mod modulus;
pub mod path;
pub mod plot;
pub mod runner;
pub mod scheme;

pub use error::{Error, Result};
