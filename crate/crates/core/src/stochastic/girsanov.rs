use super::sampling::{gamma_inverse_cdf, sample_exp_functionals, simulate_y, simulate_y_functionals};
use super::{McConfig, McEstimate};
use crate::error::{Error, Result};
use crate::specfun::{arccot, HpParams};

const MIN_PATHS: usize = 10_000;

/// Two independent Monte Carlo estimates of quantities that should agree,
/// with a 3σ half-width for their difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McComparison {
    pub lhs: McEstimate,
    pub rhs: McEstimate,
    pub ci: f64,
}

impl McComparison {
    fn new(lhs: McEstimate, rhs: McEstimate) -> Self {
        let ci = 3.0 * (lhs.std_err.powi(2) + rhs.std_err.powi(2)).sqrt();
        Self { lhs, rhs, ci }
    }

    pub fn difference(&self) -> f64 {
        (self.lhs.mean - self.rhs.mean).abs()
    }

    pub fn passes(&self) -> bool {
        self.difference() <= self.ci
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GirsanovVariant {
    /// (μ, ν) against (1−μ, −ν) with the terminal weight e^{(1/2−μ)t} W e^{2νh}.
    Endpoint,
    /// (μ, ν) against (μ, 0) with the path weight involving the scarf potential.
    Path,
}

fn require_paths(mc: &McConfig) -> Result<()> {
    if mc.n_paths < MIN_PATHS {
        return Err(Error::TooFewSamples { needed: MIN_PATHS, got: mc.n_paths });
    }
    Ok(())
}

fn h(y: f64) -> f64 {
    y.sinh().atan()
}

/// E^{(μ,ν)}_{y₀}[F(Y_t)] against its change-of-measure expression.
pub fn check_girsanov<F>(params: HpParams, t: f64, y0: f64, variant: GirsanovVariant, f: F, mc: &McConfig) -> Result<McComparison>
where
    F: Fn(f64) -> f64 + Sync,
{
    require_paths(mc)?;
    let (mu, nu) = (params.mu(), params.nu());
    let lhs = mc.map_paths(10, |s| f(simulate_y(params, y0, t, mc.n_steps, s)));
    let rhs = match variant {
        GirsanovVariant::Endpoint => {
            let dual = HpParams::from_mu_nu(1.0 - mu, -nu);
            let weight = |y: f64| (1.0 + y.sinh().powi(2)).powf(mu - 0.5) * (2.0 * nu * h(y)).exp();
            let c = ((0.5 - mu) * t).exp() / weight(y0);
            mc.map_paths(11, |s| {
                let y = simulate_y(dual, y0, t, mc.n_steps, s);
                c * weight(y) * f(y)
            })
        }
        GirsanovVariant::Path => {
            let base = HpParams::from_mu_nu(mu, 0.0);
            mc.map_paths(12, |s| {
                let p = simulate_y_functionals(base, y0, t, mc.n_steps, s);
                let log_w = nu * (h(p.end) - h(y0)) + nu * (1.0 - 2.0 * mu) / 2.0 * p.int_sinh_sech2
                    - nu * nu / 2.0 * p.int_sech2;
                log_w.exp() * f(p.end)
            })
        }
    };
    Ok(McComparison::new(McEstimate::from_values(&lhs), McEstimate::from_values(&rhs)))
}

/// e^{μ²t/2} E[𝓐^{(μ)−1/2} ψ(1/𝓐^{(μ)})] against
/// e^{(1−μ)²t/2} E[𝓐^{(1−μ)−1/2} ψ(1/𝓐^{(1−μ)} + 2γ_{1/2−μ})].
pub fn check_dufresne<F>(mu: f64, t: f64, psi: F, mc: &McConfig) -> Result<McComparison>
where
    F: Fn(f64) -> f64 + Sync,
{
    require_paths(mc)?;
    if !(mu < 0.5) {
        return Err(Error::Domain(format!("identity needs mu < 1/2, got {mu}")));
    }
    let shape = 0.5 - mu;
    let lhs = mc.map_paths(20, |s| {
        let a = sample_exp_functionals(mu, t, mc.n_steps, s).big_a;
        psi(1.0 / a) / a.sqrt()
    });
    let rhs = mc.map_paths(21, |s| {
        let a = sample_exp_functionals(1.0 - mu, t, mc.n_steps, s).big_a;
        let g = gamma_inverse_cdf(shape, s.uniform());
        psi(1.0 / a + 2.0 * g) / a.sqrt()
    });
    Ok(McComparison::new(
        McEstimate::from_values(&lhs).scaled((mu * mu * t / 2.0).exp()),
        McEstimate::from_values(&rhs).scaled(((1.0 - mu).powi(2) * t / 2.0).exp()),
    ))
}

/// Density of β_{𝓐_t} + ν a_t at u under μ against its (1−μ, −ν) expression
/// weighted by e^{(1/2−μ)t} η(u), η(u) = W(u) e^{ν(π − 2 arccot u)}.
pub fn check_iden(mu: f64, nu: f64, t: f64, u: f64, mc: &McConfig) -> Result<McComparison> {
    require_paths(mc)?;
    let gauss = |a: f64, centre: f64| (-(centre * centre) / (2.0 * a)).exp() / (2.0 * std::f64::consts::PI * a).sqrt();
    let lhs = mc.map_paths(30, |s| {
        let f = sample_exp_functionals(mu, t, mc.n_steps, s);
        gauss(f.big_a, u - nu * f.small_a)
    });
    let rhs = mc.map_paths(31, |s| {
        let f = sample_exp_functionals(1.0 - mu, t, mc.n_steps, s);
        gauss(f.big_a, u + nu * f.small_a)
    });
    let eta = (1.0 + u * u).powf(mu - 0.5) * (nu * (std::f64::consts::PI - 2.0 * arccot(u))).exp();
    Ok(McComparison::new(
        McEstimate::from_values(&lhs),
        McEstimate::from_values(&rhs).scaled(((0.5 - mu) * t).exp() * eta),
    ))
}
