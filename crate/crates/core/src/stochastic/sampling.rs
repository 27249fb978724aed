use statrs::function::gamma::gamma_lr;

use super::{stream_id, McConfig};
use crate::error::{Error, Result};
use crate::particles::{ParticleParams, ParticleState};
use crate::quad::{gauss_legendre, RngStream};
use crate::specfun::HpParams;

/// Euler–Maruyama endpoint of dY = (μ tanh Y + ν sech Y) dt + dB.
pub fn simulate_y(params: HpParams, y0: f64, t: f64, n_steps: usize, stream: &mut RngStream) -> f64 {
    let (mu, nu) = (params.mu(), params.nu());
    let dt = t / n_steps.max(1) as f64;
    let sq = dt.sqrt();
    let mut y = y0;
    for _ in 0..n_steps.max(1) {
        y += (mu * y.tanh() + nu / y.cosh()) * dt + sq * stream.normal();
    }
    y
}

/// Endpoint of the Y chart with the path integrals ∫ sinh Y/cosh² Y ds and
/// ∫ ds/cosh² Y (trapezoid rule).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YFunctionals {
    pub end: f64,
    pub int_sinh_sech2: f64,
    pub int_sech2: f64,
}

pub fn simulate_y_functionals(params: HpParams, y0: f64, t: f64, n_steps: usize, stream: &mut RngStream) -> YFunctionals {
    let (mu, nu) = (params.mu(), params.nu());
    let n = n_steps.max(1);
    let dt = t / n as f64;
    let sq = dt.sqrt();
    let integrands = |y: f64| {
        let s = 1.0 / y.cosh();
        (y.sinh() * s * s, s * s)
    };
    let mut y = y0;
    let (mut a, mut b) = integrands(y);
    let (mut ia, mut ib) = (0.5 * a, 0.5 * b);
    for _ in 0..n {
        y += (mu * y.tanh() + nu / y.cosh()) * dt + sq * stream.normal();
        (a, b) = integrands(y);
        ia += a;
        ib += b;
    }
    ia -= 0.5 * a;
    ib -= 0.5 * b;
    YFunctionals { end: y, int_sinh_sech2: ia * dt, int_sech2: ib * dt }
}

/// One path of B^{(μ)}: 𝓐_t = ∫ e^{2B} ds, a_t = ∫ e^{B} ds (trapezoid),
/// B_t, and the Itô integral ∫ e^{B} dγ with an independent γ (left point).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpFunctionals {
    pub big_a: f64,
    pub small_a: f64,
    pub b_end: f64,
    pub stoch_int: f64,
}

pub fn sample_exp_functionals(mu: f64, t: f64, n_steps: usize, stream: &mut RngStream) -> ExpFunctionals {
    let n = n_steps.max(1);
    let dt = t / n as f64;
    let sq = dt.sqrt();
    let mut b = 0.0f64;
    let mut e = 1.0f64;
    let (mut big_a, mut small_a, mut stoch) = (0.5, 0.5, 0.0);
    for _ in 0..n {
        stoch += e * sq * stream.normal();
        b += mu * dt + sq * stream.normal();
        e = b.exp();
        big_a += e * e;
        small_a += e;
    }
    big_a -= 0.5 * e * e;
    small_a -= 0.5 * e;
    ExpFunctionals { big_a: big_a * dt, small_a: small_a * dt, b_end: b, stoch_int: stoch }
}

/// One draw of x₀e^{B_t^{(μ)}} + ∫₀^t e^{B_s^{(μ)}} dγ_s^{(ν)}, equal in law to
/// sinh(Y_t) started from sinh Y₀ = x₀.
pub fn sample_expfunctional(params: HpParams, x0: f64, t: f64, n_steps: usize, stream: &mut RngStream) -> f64 {
    let f = sample_exp_functionals(params.mu(), t, n_steps, stream);
    x0 * f.b_end.exp() + f.stoch_int + params.nu() * f.small_a
}

/// Sup distance between the empirical CDF of `samples` and `cdf`.
pub fn ks_distance<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> f64 {
    let mut x = samples.to_vec();
    x.sort_by(f64::total_cmp);
    let n = x.len() as f64;
    x.iter()
        .enumerate()
        .map(|(i, &v)| {
            let f = cdf(v);
            (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max)
}

/// CDF of a density on ℝ tabulated on u = sinh y.
#[derive(Debug, Clone)]
pub struct TabulatedCdf {
    y_edges: Vec<f64>,
    cum: Vec<f64>,
    mass: f64,
}

impl TabulatedCdf {
    /// Integrates `density` over panels of width `h` in y on [−y_max, y_max]
    /// and normalizes by the captured mass.
    pub fn from_density<F: FnMut(f64) -> Result<f64>>(mut density: F, y_max: f64, h: f64) -> Result<Self> {
        let n_panels = (2.0 * y_max / h).ceil() as usize;
        let h = 2.0 * y_max / n_panels as f64;
        let (gx, gw) = gauss_legendre(6);
        let mut y_edges = Vec::with_capacity(n_panels + 1);
        let mut cum = Vec::with_capacity(n_panels + 1);
        let mut acc = 0.0;
        y_edges.push(-y_max);
        cum.push(0.0);
        for p in 0..n_panels {
            let a = -y_max + p as f64 * h;
            for (&x, &w) in gx.iter().zip(&gw) {
                let y = a + 0.5 * h * (x + 1.0);
                acc += 0.5 * h * w * density(y.sinh())? * y.cosh();
            }
            y_edges.push(a + h);
            cum.push(acc);
        }
        if !(acc > 0.0) {
            return Err(Error::Domain("tabulated density has no mass".into()));
        }
        for c in &mut cum {
            *c /= acc;
        }
        Ok(Self { y_edges, cum, mass: acc })
    }

    /// Mass captured before normalization.
    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn cdf(&self, u: f64) -> f64 {
        let y = u.asinh();
        let (first, last) = (self.y_edges[0], *self.y_edges.last().expect("non-empty"));
        if y <= first {
            return 0.0;
        }
        if y >= last {
            return 1.0;
        }
        let h = (last - first) / (self.y_edges.len() - 1) as f64;
        let i = (((y - first) / h) as usize).min(self.y_edges.len() - 2);
        let s = (y - self.y_edges[i]) / h;
        self.cum[i] + s * (self.cum[i + 1] - self.cum[i])
    }
}

/// Quantile of the Gamma(shape, 1) law by bisection on the regularized
/// lower incomplete Gamma function.
pub fn gamma_inverse_cdf(shape: f64, p: f64) -> f64 {
    let mut hi = shape.max(1.0);
    while gamma_lr(shape, hi) < p {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    while hi - lo > 1e-12 * hi.max(1e-300) {
        let mid = 0.5 * (lo + hi);
        if gamma_lr(shape, mid) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

const COLLISION_GAP: f64 = 1e-4;
const MAX_RESAMPLES: u64 = 16;

/// Euler endpoint of the interacting particle system
/// dX_n = √(2(1+X_n²)) dW_n + 2{(1−N−Re s)X_n + Im s + Σ_{j≠n}(1+X_n²)/(X_n−X_j)} dt.
///
/// A step that would bring two particles closer than 1e−4 or reorder them
/// is retried with half the step, down to t/(64·n_steps).
pub fn simulate_particles(
    pp: &ParticleParams,
    x0: &ParticleState,
    t: f64,
    n_steps: usize,
    stream: &mut RngStream,
) -> Result<ParticleState> {
    let n = x0.len();
    if n != pp.n() {
        return Err(Error::Domain(format!("state has {n} particles, parameters say {}", pp.n())));
    }
    let a = 1.0 - pp.n() as f64 - pp.s_re();
    let b = pp.s_im();
    let dt = t / n_steps.max(1) as f64;
    let floor = t / (64.0 * n_steps.max(1) as f64);
    let mut x = x0.as_slice().to_vec();
    let mut drift = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut left = t;
    let mut h = dt;
    let mut retries = 0usize;
    while left > 1e-15 * t {
        let step = h.min(left);
        for i in 0..n {
            let xi = x[i];
            let q = 1.0 + xi * xi;
            let inter: f64 = (0..n).filter(|&j| j != i).map(|j| q / (xi - x[j])).sum();
            drift[i] = 2.0 * (a * xi + b + inter);
        }
        let sq = step.sqrt();
        for i in 0..n {
            next[i] = x[i] + drift[i] * step + (2.0 * (1.0 + x[i] * x[i])).sqrt() * sq * stream.normal();
        }
        let ok = next.windows(2).all(|w| w[0] - w[1] >= COLLISION_GAP) && next.iter().all(|v| v.is_finite());
        if ok {
            x.copy_from_slice(&next);
            left -= step;
            h = dt;
        } else {
            h *= 0.5;
            retries += 1;
            if h < floor {
                return Err(Error::StepFloor { floor, retries });
            }
        }
    }
    ParticleState::new(x)
}

/// `mc.n_paths` particle endpoints; a path that hits the step floor is
/// redrawn from a fresh stream.
pub fn simulate_particles_many(pp: &ParticleParams, x0: &ParticleState, t: f64, mc: &McConfig) -> Result<Vec<ParticleState>> {
    use rayon::prelude::*;
    (0..mc.n_paths)
        .into_par_iter()
        .map(|i| {
            let mut last = None;
            for retry in 0..MAX_RESAMPLES {
                let mut s = RngStream::new(mc.seed, stream_id(7, retry, i));
                match simulate_particles(pp, x0, t, mc.n_steps, &mut s) {
                    Ok(p) => return Ok(p),
                    Err(e) => last = Some(e),
                }
            }
            Err(last.expect("at least one attempt"))
        })
        .collect()
}
