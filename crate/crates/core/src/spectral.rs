//! Spectral expansion of the stationary-case semigroup density q_t^{(α)}
//! (K = 0), together with the generator-level identity checks.
//!
//! The discrete spectrum consists of the Romanovski polynomials R_n with
//! n < α and eigenvalues n(2α − n). The continuous spectrum {α² + m², m ∈ ℝ}
//! carries the Ferrer eigenfunctions Ψ_m(x) = Γ(1+im) P_α^{−im}(x),
//! x = −u/√(1+u²), with spectral density |T(m)|²/(2π) where
//! |T(m)|² = sinh²(πm)/(sinh²(πm) + sin²(πα)), and each eigenspace is spanned
//! by u ↦ Ψ_m(±x). For integer α the reflected functions coincide up to a
//! phase and |T| = 1.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{composite_gauss, integrate, integrate_breaks, richardson_limit, Domain, QuadConfig};
use crate::specfun::{
    arccot, cgamma, romanovski, romanovski_complex, romanovski_norm_sq, weight_w, ContinuousMode, HpParams,
};

/// Squared norm ∫ R_n² W du, finite for n < α.
pub fn norm_sq(n: usize, alpha: f64) -> Result<f64> {
    romanovski_norm_sq(n, alpha)
}

/// Which continuous-spectrum measure to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuousPart {
    /// Transmission-weighted and reflection-symmetrized (the transition density).
    Symmetrized,
    /// Single eigenfunction Ψ_m(x) per label with plain weight |Γ(1+im)|²/(2π),
    /// discrete part restricted to n ≤ ⌊α − 1⌋. Kept for comparison only.
    Unsymmetrized,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteNode {
    pub n: usize,
    /// Order α − n of the Ferrer function carrying this eigenvalue.
    pub mu: f64,
    pub eigenvalue: f64,
    /// Γ(2α+1−n)(α−n)/n!
    pub weight: f64,
    pub norm_sq: f64,
}

#[derive(Debug, Clone)]
struct ContinuousNode {
    mode: ContinuousMode,
    /// Quadrature weight times e^{−(α²+m²)t}·|T(m)|²/(2π), doubled for m ↦ −m.
    coeff: f64,
}

/// Discretized spectral measure for fixed (α, t).
#[derive(Debug, Clone)]
pub struct SpectralScheme {
    pub alpha: f64,
    pub t: f64,
    pub m_max: f64,
    pub discrete: Vec<DiscreteNode>,
    continuous: Vec<ContinuousNode>,
    part: ContinuousPart,
}

/// Transmission coefficient |T(m)|² of the reflection at the origin.
pub fn transmission_sq(alpha: f64, m: f64) -> f64 {
    let sh = (PI * m).sinh().powi(2);
    let s = (PI * alpha).sin().powi(2);
    sh / (sh + s)
}

impl SpectralScheme {
    pub fn build(alpha: f64, t: f64, cfg: &QuadConfig) -> Result<Self> {
        Self::build_with(alpha, t, cfg, ContinuousPart::Symmetrized)
    }

    pub fn build_with(alpha: f64, t: f64, cfg: &QuadConfig, part: ContinuousPart) -> Result<Self> {
        if !(alpha > 0.0 && t > 0.0) {
            return Err(Error::Domain(format!("spectral scheme needs alpha, t > 0 (got {alpha}, {t})")));
        }
        let top = match part {
            ContinuousPart::Symmetrized => (alpha.ceil() as i64 - 1).max(-1),
            ContinuousPart::Unsymmetrized => (alpha - 1.0).floor() as i64,
        };
        let mut discrete = Vec::new();
        for n in 0..=top.max(-1) {
            if top < 0 {
                break;
            }
            let n = n as usize;
            let nf = n as f64;
            let weight = (crate::specfun::ln_gamma(2.0 * alpha + 1.0 - nf)? - crate::specfun::ln_gamma(nf + 1.0)?)
                .exp()
                * (alpha - nf);
            discrete.push(DiscreteNode {
                n,
                mu: alpha - nf,
                eigenvalue: nf * (2.0 * alpha - nf),
                weight,
                norm_sq: norm_sq(n, alpha)?,
            });
        }
        let m_max = cfg.gaussian_cutoff(t);
        let panels = (3.0 * m_max).ceil() as usize;
        let mut continuous = Vec::new();
        for (m, w) in composite_gauss(0.0, m_max, panels, 8) {
            let tr = match part {
                ContinuousPart::Symmetrized => transmission_sq(alpha, m),
                ContinuousPart::Unsymmetrized => 1.0,
            };
            let coeff = 2.0 * w * (-(alpha * alpha + m * m) * t).exp() * tr / (2.0 * PI);
            continuous.push(ContinuousNode { mode: ContinuousMode::new(alpha, m)?, coeff });
        }
        Ok(Self { alpha, t, m_max, discrete, continuous, part })
    }

    /// Number of continuous-rule nodes on m > 0.
    pub fn continuous_len(&self) -> usize {
        self.continuous.len()
    }

    /// Precomputes everything that depends on the starting point `v`.
    pub fn row(&self, v: f64) -> Result<SpectralRow<'_>> {
        let disc = self
            .discrete
            .iter()
            .map(|d| Ok((-d.eigenvalue * self.t).exp() * romanovski(d.n, self.alpha, 0.0, v)? / d.norm_sq))
            .collect::<Result<Vec<_>>>()?;
        let cont = self.continuous.iter().map(|c| c.mode.pair_at(v)).collect::<Result<Vec<_>>>()?;
        Ok(SpectralRow { scheme: self, v, disc, cont })
    }

    /// q_t(v, u).
    pub fn density(&self, v: f64, u: f64) -> Result<f64> {
        self.row(v)?.density(u)
    }
}

/// q_t(v, ·) for a fixed starting point.
pub struct SpectralRow<'a> {
    scheme: &'a SpectralScheme,
    v: f64,
    disc: Vec<f64>,
    cont: Vec<(Complex64, Complex64)>,
}

impl SpectralRow<'_> {
    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn density(&self, u: f64) -> Result<f64> {
        let s = self.scheme;
        let mut total = 0.0;
        for (d, c) in s.discrete.iter().zip(&self.disc) {
            total += c * romanovski(d.n, s.alpha, 0.0, u)?;
        }
        let mut cont = 0.0;
        let sgn_v = self.v > 0.0;
        let sgn_u = u > 0.0;
        for (node, pv) in s.continuous.iter().zip(&self.cont) {
            let pu = node.mode.pair_at(u)?;
            // pair = (Ψ(|x|), Ψ(−|x|)); x = −u/√(1+u²)
            let (av, bv) = if sgn_v { (pv.1, pv.0) } else { (pv.0, pv.1) };
            let (au, bu) = if sgn_u { (pu.1, pu.0) } else { (pu.0, pu.1) };
            let direct = (av.conj() * au).re;
            let val = match s.part {
                ContinuousPart::Symmetrized => 0.5 * (direct + (bv.conj() * bu).re),
                ContinuousPart::Unsymmetrized => direct,
            };
            cont += node.coeff * val;
        }
        let half = 0.5 * s.alpha;
        let scale = (half * (self.v.mul_add(self.v, 1.0).ln() + u.mul_add(u, 1.0).ln())).exp();
        Ok(weight_w(s.alpha, u) * (total + scale * cont))
    }
}

/// q_t^{(α)}(v, u) from the spectral expansion.
pub fn hp_density_spectral(alpha: f64, t: f64, v: f64, u: f64, cfg: &QuadConfig) -> Result<f64> {
    SpectralScheme::build(alpha, t, cfg)?.density(v, u)
}

/// ∫ g(u) du over ℝ through u = sinh y, for integrands decaying like |u|^{−1−α}.
pub fn integrate_sinh<F: FnMut(f64) -> Result<f64>>(mut g: F, alpha: f64, cfg: &QuadConfig) -> Result<f64> {
    let y_max = ((1.0 / cfg.tail_cutoff_epsilon).ln() / alpha.max(0.25)).min(60.0);
    let mut err = None;
    let est = integrate_breaks(
        |y: f64| match g(y.sinh()) {
            Ok(v) => v * y.cosh(),
            Err(e) => {
                err.get_or_insert(e);
                0.0
            }
        },
        &[-y_max, -3.0, 0.0, 3.0, y_max],
        cfg,
    )?;
    match err {
        Some(e) => Err(e),
        None => Ok(est.value),
    }
}

/// ∫ q_t(v, u) du − 1.
pub fn normalization_residual(scheme: &SpectralScheme, v: f64, cfg: &QuadConfig) -> Result<f64> {
    let row = scheme.row(v)?;
    Ok(integrate_sinh(|u| row.density(u), scheme.alpha, cfg)? - 1.0)
}

/// |∫ q_t(v, w) q_s(w, u) dw − q_{t+s}(v, u)| with all three schemes given.
pub fn chapman_kolmogorov_residual(
    qt: &SpectralScheme,
    qs: &SpectralScheme,
    qts: &SpectralScheme,
    v: f64,
    u: f64,
    cfg: &QuadConfig,
) -> Result<f64> {
    let alpha = qt.alpha;
    let rv = qt.row(v)?;
    // q_s(w, u) = W(u) q_s(u, w) / W(w)
    let ru = qs.row(u)?;
    let wu = weight_w(alpha, u);
    let lhs = integrate_sinh(|w| Ok(rv.density(w)? * ru.density(w)? * wu / weight_w(alpha, w)), alpha, cfg)?;
    Ok((lhs - qts.density(v, u)?).abs())
}

/// |W(v) q_t(v, u) − W(u) q_t(u, v)| relative to W(v) q_t(v, u).
pub fn reversibility_residual(scheme: &SpectralScheme, v: f64, u: f64) -> Result<f64> {
    let a = weight_w(scheme.alpha, v) * scheme.density(v, u)?;
    let b = weight_w(scheme.alpha, u) * scheme.density(u, v)?;
    Ok((a - b).abs() / a.abs().max(1e-300))
}

/// ∫∫ e^{−m²t} φ_{α,−m}(v) φ_{α,m}(u) dm W(u) du, which vanishes because
/// ∫ φ_{α,m} W du = 0 for every m.
pub fn check_integral0(alpha: f64, t: f64, v: f64, cfg: &QuadConfig) -> Result<f64> {
    let m_max = cfg.gaussian_cutoff(t);
    let panels = (2.0 * m_max).ceil() as usize;
    let inner_cfg = cfg.with_abs_tol(1e-13).with_rel_tol(1e-10);
    let mut total = 0.0;
    for (m, w) in composite_gauss(0.0, m_max, panels, 8) {
        let mode = ContinuousMode::new(alpha, m)?;
        let inner = |f: &dyn Fn(Complex64) -> f64| -> Result<f64> {
            let mut err = None;
            let y_max = ((1.0 / cfg.tail_cutoff_epsilon).ln() / alpha).min(60.0);
            let est = integrate_breaks(
                |y: f64| match mode.psi(y.sinh()) {
                    Ok(p) => f(p) * (-alpha * y.cosh().ln()).exp(),
                    Err(e) => {
                        err.get_or_insert(e);
                        0.0
                    }
                },
                &[-y_max, -2.0, 0.0, 2.0, y_max],
                &inner_cfg,
            )?;
            err.map_or(Ok(est.value), Err)
        };
        // φ_{α,m}(u) W(u) du = Ψ_m(x) cosh(y)^{−α} dy with u = sinh y
        let i_re = inner(&|p| p.re)?;
        let i_im = inner(&|p| p.im)?;
        let phi_v = (0.5 * alpha * v.mul_add(v, 1.0).ln()).exp() * mode.psi(v)?;
        // φ_{α,−m}(v) = conj φ_{α,m}(v); the m ↦ −m partner is the complex conjugate
        let term = phi_v.conj() * Complex64::new(i_re, i_im);
        total += 2.0 * w * (-(m * m) * t).exp() * term.re;
    }
    Ok(total)
}

/// Fourth-order central-difference application of the generator
/// (1+u²)f'' + (2Au+K)f' with step h, refined by one Richardson halving.
pub fn apply_generator_fd<F: Fn(f64) -> f64>(params: HpParams, f: F, u: f64, h: f64) -> f64 {
    let d = |h: f64| {
        let (fm2, fm1, f0, fp1, fp2) = (f(u - 2.0 * h), f(u - h), f(u), f(u + h), f(u + 2.0 * h));
        let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        let d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
        (d1, d2)
    };
    let (a1, a2) = d(h);
    let (b1, b2) = d(0.5 * h);
    let d1 = (16.0 * b1 - a1) / 15.0;
    let d2 = (16.0 * b2 - a2) / 15.0;
    u.mul_add(u, 1.0) * d2 + (2.0 * params.a() * u + params.k()) * d1
}

/// Default finite-difference step h = 1e−3·(1+|u|).
pub fn default_fd_step(u: f64) -> f64 {
    1e-3 * (1.0 + u.abs())
}

/// L_{A,K}(f·e^{K arccot}/W)(u) − (e^{K arccot u}/W(u))·[L_{2−A,−K} f(u) + 2(1−A) f(u)],
/// with W(u) = (1+u²)^{A−1}.
pub fn check_intertwining<F: Fn(f64) -> f64>(params: HpParams, f: F, u: f64) -> f64 {
    let (a, k) = (params.a(), params.k());
    let gauge = |x: f64| (k * arccot(x) + (1.0 - a) * x.mul_add(x, 1.0).ln()).exp();
    let h = default_fd_step(u);
    let lhs = apply_generator_fd(params, |x| f(x) * gauge(x), u, h);
    let dual = HpParams::from_ak(2.0 - a, -k);
    let rhs = gauge(u) * (apply_generator_fd(dual, &f, u, h) + 2.0 * (1.0 - a) * f(u));
    lhs - rhs
}

/// Both sides of the Cauchy–Beta deformation identity
///
/// Γ(α−n+1/2)/(2π) lim_{ε→0⁺} ∫ R_n^{(α)}(y) (1−iy)^{−α−1/2} (ε−iu+iy)^{−1−iK/2} dy
///   = Γ(α−n+1/2+iK/2)/Γ(1+iK/2) · R_n^{(α,K)}(u) / (1−iu)^{α+(1+iK)/2}.
///
/// The left side is extrapolated from ε = 0.1·2^{−j}, j = 0..5.
pub fn prop3_check(n: usize, alpha: f64, k: f64, u: f64, cfg: &QuadConfig) -> Result<(Complex64, Complex64)> {
    if n as f64 > (alpha - 1.0).floor() || alpha <= 1.0 {
        return Err(Error::Domain(format!("need n <= floor(alpha - 1), got n = {n}, alpha = {alpha}")));
    }
    let nf = n as f64;
    let i = Complex64::new(0.0, 1.0);
    let e1 = Complex64::new(-alpha - 0.5, 0.0);
    let e2 = Complex64::new(-1.0, -0.5 * k);
    let qcfg = cfg.with_rel_tol(1e-12).with_abs_tol(1e-15);
    let pre = cgamma(Complex64::new(alpha - nf + 0.5, 0.0))? / (2.0 * PI);
    let mut samples = Vec::new();
    for j in 0..6 {
        let eps = 0.1 * 0.5f64.powi(j);
        let w = Complex64::new(eps, -u);
        let f = |y: f64| -> Complex64 {
            let r = romanovski_complex(n, alpha, 0.0, y);
            r * ((Complex64::new(1.0, -y)).ln() * e1).exp() * ((w + i * y).ln() * e2).exp()
        };
        let l = 40.0;
        let mut breaks = vec![u - l, u - 1.0, u - 10.0 * eps, u - eps, u, u + eps, u + 10.0 * eps, u + 1.0, u + l];
        breaks.dedup();
        let mid = integrate_breaks(f, &breaks, &qcfg)?.value;
        let right = integrate(|s: f64| f(u + l + s), Domain::HalfLine(0.0), &qcfg, false)?.value;
        let left = integrate(|s: f64| f(u - l - s), Domain::HalfLine(0.0), &qcfg, false)?.value;
        samples.push((eps, pre * (mid + right + left)));
    }
    let lhs = richardson_limit(&samples)?.value;
    let poch = cgamma(Complex64::new(alpha - nf + 0.5, 0.5 * k))? / cgamma(Complex64::new(1.0, 0.5 * k))?;
    let denom = (Complex64::new(1.0, -u).ln() * Complex64::new(alpha + 0.5, 0.5 * k)).exp();
    let rhs = poch * romanovski_complex(n, alpha, k, u) / denom;
    Ok((lhs, rhs))
}
