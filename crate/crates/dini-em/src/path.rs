//! Brownian increments on a uniform grid, with reproducible per-replica
//! randomness and exact coarsening.
//!
//! Every replica draws from its own counter-based stream keyed by
//! `(master_seed, replica_id)`, so the generated increments do not depend on
//! evaluation order or on how many workers are running. Coarsening sums fine
//! increments in ascending index order with balanced (pairwise) grouping; for
//! power-of-two factors this makes `coarsen(coarsen(g, 2), 2)` bitwise equal
//! to `coarsen(g, 4)`, which lets a fine reference and several coarse schemes
//! share one path exactly.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Hard cap on `n_steps * dim` per grid; beyond this the increment array does
/// not fit in memory anyway.
const MAX_SAMPLES: u64 = 1 << 40;

/// Where a grid's randomness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub master_seed: u64,
    pub replica_id: u64,
    /// Product of all coarsening factors applied since generation.
    pub coarsening_from_root: u64,
}

/// d-dimensional Brownian increments on a uniform grid.
#[derive(Debug, Clone)]
pub struct BrownianGrid {
    dim: usize,
    horizon: f64,
    n_steps: usize,
    dt: f64,
    /// Row-major `(step, coordinate)`.
    increments: Vec<f64>,
    provenance: Provenance,
}

impl BrownianGrid {
    /// Draw a fresh grid of i.i.d. `N(0, dt)` increments from the stream
    /// keyed by `(master_seed, replica_id)`.
    pub fn generate(
        dim: usize,
        horizon: f64,
        n_steps: usize,
        master_seed: u64,
        replica_id: u64,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Config("dimension must be >= 1".to_string()));
        }
        if n_steps == 0 {
            return Err(Error::Config("n_steps must be >= 1".to_string()));
        }
        if !(horizon > 0.0) || !horizon.is_finite() {
            return Err(Error::Config(format!("horizon must be positive, got {horizon}")));
        }
        let samples = (n_steps as u64)
            .checked_mul(dim as u64)
            .filter(|&n| n <= MAX_SAMPLES)
            .ok_or_else(|| {
                Error::Config(format!("n_steps * dim = {n_steps} * {dim} overflows the sample budget"))
            })?;

        let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
        rng.set_stream(replica_id);
        let dt = horizon / n_steps as f64;
        let scale = dt.sqrt();
        let increments: Vec<f64> = (0..samples)
            .map(|_| {
                let z: f64 = rng.sample(StandardNormal);
                scale * z
            })
            .collect();

        Ok(BrownianGrid {
            dim,
            horizon,
            n_steps,
            dt,
            increments,
            provenance: Provenance { master_seed, replica_id, coarsening_from_root: 1 },
        })
    }

    /// Build a grid from explicit increments (tests, synthetic data).
    pub fn from_increments(
        dim: usize,
        horizon: f64,
        increments: Vec<f64>,
        provenance: Provenance,
    ) -> Result<Self> {
        if dim == 0 || increments.is_empty() || increments.len() % dim != 0 {
            return Err(Error::Config("increment array shape does not match dimension".to_string()));
        }
        if increments.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config("non-finite increment".to_string()));
        }
        let n_steps = increments.len() / dim;
        Ok(BrownianGrid {
            dim,
            horizon,
            n_steps,
            dt: horizon / n_steps as f64,
            increments,
            provenance,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Increment vector of step `i` (length `dim`).
    pub fn step(&self, i: usize) -> &[f64] {
        &self.increments[i * self.dim..(i + 1) * self.dim]
    }

    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    /// Merge every `factor` consecutive steps into one.
    ///
    /// Block sums run in ascending index order with balanced grouping and no
    /// compensation; determinism of the exact bit pattern is the contract.
    pub fn coarsen(&self, factor: usize) -> Result<Self> {
        if factor == 0 {
            return Err(Error::Config("coarsening factor must be >= 1".to_string()));
        }
        if self.n_steps % factor != 0 {
            return Err(Error::Config(format!(
                "coarsening factor {factor} does not divide n_steps {}",
                self.n_steps
            )));
        }
        let coarse_steps = self.n_steps / factor;
        let mut increments = Vec::with_capacity(coarse_steps * self.dim);
        for j in 0..coarse_steps {
            for c in 0..self.dim {
                let start = (j * factor) * self.dim + c;
                increments.push(strided_pairwise_sum(&self.increments, start, factor, self.dim));
            }
        }
        Ok(BrownianGrid {
            dim: self.dim,
            horizon: self.horizon,
            n_steps: coarse_steps,
            dt: self.horizon / coarse_steps as f64,
            increments,
            provenance: Provenance {
                coarsening_from_root: self.provenance.coarsening_from_root * factor as u64,
                ..self.provenance
            },
        })
    }

    /// Dump raw increments as little-endian f64, row-major `(step, coordinate)`.
    pub fn write_raw<W: std::io::Write>(&self, w: &mut W) -> Result<()> {
        for v in &self.increments {
            w.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }
}

/// Sum `count` elements of `xs` starting at `start` with stride `stride`,
/// grouped as a balanced binary tree over ascending indices.
fn strided_pairwise_sum(xs: &[f64], start: usize, count: usize, stride: usize) -> f64 {
    match count {
        0 => 0.0,
        1 => xs[start],
        2 => xs[start] + xs[start + stride],
        n => {
            let half = n / 2;
            strided_pairwise_sum(xs, start, half, stride)
                + strided_pairwise_sum(xs, start + half * stride, n - half, stride)
        }
    }
}

/// Grid projection `eta_delta(s) = floor(s/delta) * delta`, with an ulp guard
/// so points already on the grid map to themselves exactly.
pub fn eta(s: f64, delta: f64) -> f64 {
    debug_assert!(delta > 0.0 && s >= 0.0);
    let q = s / delta;
    let r = q.round();
    if (q - r).abs() <= 1e-12 * q.abs().max(1.0) {
        // s is a grid point up to rounding noise: keep it
        return s;
    }
    q.floor() * delta
}

/// Pooled per-coordinate statistics over a collection of grids.
#[derive(Debug, Clone)]
pub struct IncrementStats {
    pub mean: Vec<f64>,
    pub variance: Vec<f64>,
    pub max_abs: f64,
    pub samples_per_coord: usize,
}

/// Pool mean, variance and max |increment| per coordinate across grids of
/// identical shape.
pub fn increment_stats(grids: &[BrownianGrid]) -> Result<IncrementStats> {
    let first = grids.first().ok_or_else(|| Error::Config("empty grid collection".to_string()))?;
    let (dim, n_steps) = (first.dim, first.n_steps);
    for g in grids {
        if g.dim != dim || g.n_steps != n_steps {
            return Err(Error::Config(format!(
                "grid shape mismatch: expected {n_steps}x{dim}, got {}x{}",
                g.n_steps, g.dim
            )));
        }
    }
    let n = grids.len() * n_steps;
    let mut mean = vec![0.0; dim];
    let mut max_abs = 0.0f64;
    for g in grids {
        for i in 0..n_steps {
            for (c, v) in g.step(i).iter().enumerate() {
                mean[c] += v;
                max_abs = max_abs.max(v.abs());
            }
        }
    }
    for m in &mut mean {
        *m /= n as f64;
    }
    let mut variance = vec![0.0; dim];
    for g in grids {
        for i in 0..n_steps {
            for (c, v) in g.step(i).iter().enumerate() {
                let d = v - mean[c];
                variance[c] += d * d;
            }
        }
    }
    let denom = if n > 1 { n - 1 } else { 1 };
    for v in &mut variance {
        *v /= denom as f64;
    }
    Ok(IncrementStats { mean, variance, max_abs, samples_per_coord: n })
}
