use std::f64::consts::PI;

use nalgebra::DMatrix;

use super::km::checked_det;
use super::params::{lambda_sn, vandermonde, ParticleParams, ParticleState};
use crate::error::{Error, Result};
use crate::quad::{composite_gauss, gauss_legendre, QuadConfig};
use crate::specfun::{romanovski, weight_w, ContinuousMode};
use crate::spectral::{norm_sq, transmission_sq, SpectralScheme};

/// Both spectral evaluations of the particle density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParticleDensity {
    /// e^{−λt} V(y)/V(x) det[q_t(x_n, y_j)].
    pub det_form: f64,
    /// The same quantity from the ordered-label integral of products of
    /// eigenfunction determinants.
    pub ordered_form: f64,
}

impl SpectralParticleDensity {
    pub fn relative_gap(&self) -> f64 {
        (self.det_form - self.ordered_form).abs() / self.det_form.abs()
    }
}

/// Real eigenfunction components at u. The discrete labels carry R_n; a
/// continuous label m carries (1+u²)^{α/2} times the real and imaginary
/// parts of Ψ_m(x) and Ψ_m(−x).
struct Labels {
    alpha: f64,
    t: f64,
    discrete: Vec<(usize, f64)>,
}

impl Labels {
    fn new(alpha: f64, t: f64) -> Result<Self> {
        let top = alpha.ceil() as usize;
        let discrete = (0..top)
            .filter(|&n| (n as f64) < alpha)
            .map(|n| {
                let nf = n as f64;
                Ok((n, (-nf * (2.0 * alpha - nf) * t).exp() / norm_sq(n, alpha)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { alpha, t, discrete })
    }

    fn discrete_at(&self, n: usize, u: f64) -> Result<f64> {
        romanovski(n, self.alpha, 0.0, u)
    }

    /// Spectral weight per unit m on m > 0, with the factor 1/2 of the
    /// two-mode average.
    fn continuous_weight(&self, m: f64) -> f64 {
        let a = self.alpha;
        2.0 * 0.5 * (-(a * a + m * m) * self.t).exp() * transmission_sq(a, m) / (2.0 * PI)
    }

    fn continuous_at(&self, mode: &ContinuousMode, u: f64) -> Result<[f64; 4]> {
        let s = (0.5 * self.alpha * u.mul_add(u, 1.0).ln()).exp();
        let p = mode.psi(u)?;
        let q = mode.psi(-u)?;
        Ok([s * p.re, s * p.im, s * q.re, s * q.im])
    }
}

fn det2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Spectral form of the particle density for Im s = 0: the determinant of
/// one-particle spectral kernels q_t^{(α)}, α = N + Re s − 1/2, and for
/// N ≤ 2 its expansion as an integral over ordered pairs of spectral labels.
pub fn particles_density_spectral(
    pp: ParticleParams,
    t: f64,
    x: &ParticleState,
    y: &ParticleState,
    cfg: &QuadConfig,
) -> Result<SpectralParticleDensity> {
    if pp.s_im() != 0.0 {
        return Err(Error::Domain("spectral particle density needs Im s = 0".into()));
    }
    let n = pp.n();
    if n > 2 || x.len() != n || y.len() != n {
        return Err(Error::Domain("spectral particle density is implemented for N <= 2".into()));
    }
    let alpha = pp.alpha();
    let (xs, ys) = (x.as_slice(), y.as_slice());
    let scheme = SpectralScheme::build(alpha, t, cfg)?;
    let mut entries = Vec::with_capacity(n * n);
    for &xn in xs {
        let row = scheme.row(xn)?;
        for &yj in ys {
            entries.push(row.density(yj)?);
        }
    }
    let pref = (-lambda_sn(&pp) * t).exp() * vandermonde(ys) / vandermonde(xs);
    let det_form = pref * checked_det(DMatrix::from_row_slice(n, n, &entries))?;

    let weights: f64 = ys.iter().map(|&u| weight_w(alpha, u)).product();
    let ordered = if n == 1 {
        scheme.density(xs[0], ys[0])? / weights
    } else {
        ordered_pairs(alpha, t, [xs[0], xs[1]], [ys[0], ys[1]], cfg)?
    };
    Ok(SpectralParticleDensity { det_form, ordered_form: pref * weights * ordered })
}

/// Σ over unordered label pairs {ι₁, ι₂} of w₁w₂ det[φ(x)] det[φ(y)], with
/// the continuous–continuous part integrated over the triangle m₁ > m₂.
fn ordered_pairs(alpha: f64, t: f64, x: [f64; 2], y: [f64; 2], cfg: &QuadConfig) -> Result<f64> {
    let labels = Labels::new(alpha, t)?;
    let pts = [x[0], x[1], y[0], y[1]];
    let disc_vals = labels
        .discrete
        .iter()
        .map(|&(k, w)| Ok((w, pts.iter().map(|&u| labels.discrete_at(k, u)).collect::<Result<Vec<_>>>()?)))
        .collect::<Result<Vec<_>>>()?;
    let pair = |a: &[f64], b: &[f64]| det2([a[0], a[1]], [b[0], b[1]]) * det2([a[2], a[3]], [b[2], b[3]]);

    let mut total = 0.0;
    for i in 0..disc_vals.len() {
        for j in i + 1..disc_vals.len() {
            total += disc_vals[i].0 * disc_vals[j].0 * pair(&disc_vals[i].1, &disc_vals[j].1);
        }
    }

    let cont_at = |m: f64| -> Result<(f64, [[f64; 4]; 4])> {
        let mode = ContinuousMode::new(alpha, m)?;
        let mut comps = [[0.0; 4]; 4];
        for (k, &u) in pts.iter().enumerate() {
            let c = labels.continuous_at(&mode, u)?;
            for s in 0..4 {
                comps[s][k] = c[s];
            }
        }
        Ok((labels.continuous_weight(m), comps))
    };

    let m_max = cfg.gaussian_cutoff(t);
    let panels = (3.0 * m_max).ceil() as usize;
    let outer = composite_gauss(0.0, m_max, panels, 8);
    let (gx, gw) = gauss_legendre(8);
    for &(m1, w1) in &outer {
        let (c1, comp1) = cont_at(m1)?;
        for (wd, vals) in &disc_vals {
            for s in &comp1 {
                total += w1 * c1 * wd * pair(vals, s);
            }
        }
        // inner rule on (0, m1) with panel count scaled to the length
        let inner_panels = ((3.0 * m1).ceil() as usize).max(1);
        let h = m1 / inner_panels as f64;
        for p in 0..inner_panels {
            for (&gxi, &gwi) in gx.iter().zip(&gw) {
                let m2 = h * (p as f64 + 0.5 * (gxi + 1.0));
                let w2 = 0.5 * h * gwi;
                let (c2, comp2) = cont_at(m2)?;
                let mut acc = 0.0;
                for s1 in &comp1 {
                    for s2 in &comp2 {
                        acc += pair(s1, s2);
                    }
                }
                total += w1 * c1 * w2 * c2 * acc;
            }
        }
    }
    Ok(total)
}
