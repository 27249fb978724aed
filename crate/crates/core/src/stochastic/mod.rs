//! Monte Carlo route: Euler schemes for the Y chart and for the particle
//! system, the exponential-functional sampler, KS distances, and the
//! change-of-measure identity checks.

mod girsanov;
mod sampling;

pub use girsanov::{check_dufresne, check_girsanov, check_iden, GirsanovVariant, McComparison};
pub use sampling::{
    gamma_inverse_cdf, ks_distance, sample_exp_functionals, sample_expfunctional, simulate_particles,
    simulate_particles_many, simulate_y, simulate_y_functionals, ExpFunctionals, TabulatedCdf, YFunctionals,
};

use rayon::prelude::*;

use crate::particles::ParticleParams;
use crate::quad::RngStream;
use crate::specfun::HpParams;

/// Path count, time steps and seed shared by the Monte Carlo routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub n_paths: usize,
    pub n_steps: usize,
    pub seed: u64,
}

impl McConfig {
    pub fn new(n_paths: usize, n_steps: usize, seed: u64) -> Self {
        Self { n_paths, n_steps, seed }
    }

    /// Stream for path `path` of independent sample family `side`.
    pub fn stream(&self, side: u64, path: usize) -> RngStream {
        RngStream::new(self.seed, stream_id(side, 0, path))
    }

    /// Runs `f` over all paths of family `side` in parallel, keeping path order.
    pub fn map_paths<T, F>(&self, side: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&mut RngStream) -> T + Sync,
    {
        (0..self.n_paths).into_par_iter().map(|i| f(&mut self.stream(side, i))).collect()
    }
}

impl Default for McConfig {
    fn default() -> Self {
        Self { n_paths: 100_000, n_steps: 2000, seed: 20_240_601 }
    }
}

pub(crate) fn stream_id(side: u64, retry: u64, path: usize) -> u64 {
    (side << 40) | (retry << 32) | path as u64
}

/// What produced a sample set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleSource {
    Hp { params: HpParams, start: f64 },
    Particles { params: ParticleParams },
}

/// Monte Carlo draws together with everything needed to regenerate them.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    pub values: Vec<f64>,
    pub source: SampleSource,
    pub t: f64,
    pub mc: McConfig,
}

impl SampleSet {
    /// sinh of Euler endpoints of the Y chart started at `y0`.
    pub fn hp_endpoints(params: HpParams, y0: f64, t: f64, mc: McConfig) -> Self {
        let values = mc.map_paths(0, |s| simulate_y(params, y0, t, mc.n_steps, s).sinh());
        Self { values, source: SampleSource::Hp { params, start: y0 }, t, mc }
    }

    /// Draws of x₀e^{B_t} + ∫ e^{B} dγ^{(ν)}.
    pub fn expfunctional_draws(params: HpParams, x0: f64, t: f64, mc: McConfig) -> Self {
        let values = mc.map_paths(1, |s| sample_expfunctional(params, x0, t, mc.n_steps, s));
        Self { values, source: SampleSource::Hp { params, start: x0.asinh() }, t, mc }
    }

    pub fn ks_distance<F: Fn(f64) -> f64>(&self, cdf: F) -> f64 {
        ks_distance(&self.values, cdf)
    }

    pub fn mean(&self) -> McEstimate {
        McEstimate::from_values(&self.values)
    }
}

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_err: f64,
}

impl McEstimate {
    pub fn from_values(values: &[f64]) -> Self {
        let n = values.len() as f64;
        let mean = pairwise_sum(values) / n;
        let dev: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
        let var = pairwise_sum(&dev) / (n - 1.0).max(1.0);
        Self { mean, std_err: (var / n).sqrt() }
    }

    pub fn scaled(self, c: f64) -> Self {
        Self { mean: c * self.mean, std_err: c.abs() * self.std_err }
    }
}

/// Order-fixed pairwise summation.
pub fn pairwise_sum(x: &[f64]) -> f64 {
    if x.len() <= 32 {
        return x.iter().sum();
    }
    let (a, b) = x.split_at(x.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}
