//! Ferrer functions P_ν^μ(x) on the cut (−1, 1) and the continuous-spectrum
//! eigenfunctions built from them.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{cgamma, rgamma, sin_pi};
use super::hyper::hyp2f1;
use crate::error::{Error, Result};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Series form, accurate for x ≥ 0 where the argument (1 − x)/2 is at most 1/2.
fn ferrer_direct(nu: f64, mu: Complex64, x: f64) -> Result<Complex64> {
    let ratio = ((1.0 + x) / (1.0 - x)).ln();
    let f = hyp2f1(c(-nu), c(1.0 + nu), c(1.0) - mu, c(0.5 * (1.0 - x)))?;
    Ok(rgamma(c(1.0) - mu) * (mu * 0.5 * ratio).exp() * f)
}

/// Ferrer function of the first kind,
/// P_ν^μ(x) = ((1+x)/(1−x))^{μ/2} ₂F₁(−ν, 1+ν; 1−μ; (1−x)/2) / Γ(1−μ).
///
/// For x < 0 the value is obtained from the two solutions at −x through
/// sin(πμ)·P_ν^μ(−x) = sin(π(ν+μ))·Γ(ν+μ+1)/Γ(ν−μ+1)·P_ν^{−μ}(x) − sin(πν)·P_ν^μ(x),
/// so that every hypergeometric argument stays at most 1/2.
pub fn ferrer_p(nu: f64, mu: Complex64, x: f64) -> Result<Complex64> {
    if !(x > -1.0 && x < 1.0) {
        return Err(Error::Domain(format!("Ferrer argument {x} outside (-1, 1)")));
    }
    let one_minus = c(1.0) - mu;
    if one_minus.im == 0.0 && one_minus.re <= 0.0 && one_minus.re == one_minus.re.round() {
        return Err(Error::Domain(format!("Ferrer order {mu}: Gamma(1 - mu) has a pole")));
    }
    if x >= 0.0 {
        return ferrer_direct(nu, mu, x);
    }
    let s = -x;
    let smu = sin_pi(mu);
    if smu.norm() > 1e-6 {
        let plus = ferrer_direct(nu, mu, s)?;
        let minus = ferrer_direct(nu, -mu, s)?;
        // sin(π(ν+μ))·Γ(ν+μ+1) = −π/Γ(−ν−μ)
        let cm = -PI * rgamma(-c(nu) - mu) * rgamma(c(nu + 1.0) - mu);
        return Ok((cm * minus - (PI * nu).sin() * plus) / smu);
    }
    if nu == nu.round() && mu.im == 0.0 && mu.re == mu.re.round() {
        let sign = if ((nu + mu.re) as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        return Ok(sign * ferrer_direct(nu, mu, s)?);
    }
    ferrer_direct(nu, mu, x)
}

/// Continuous-spectrum eigenfunction data for order −im on the cut:
/// Ψ_m(x) = Γ(1+im)·P_α^{−im}(x).
#[derive(Debug, Clone, Copy)]
pub struct ContinuousMode {
    pub alpha: f64,
    pub m: f64,
    /// e^{2i·arg Γ(1+im)}
    phase: Complex64,
    /// sin(π(α − im))·Γ(α+1−im) / (Γ(α+1+im)·sin(−iπm))
    ca: Complex64,
    /// −sin(πα) / sin(−iπm)
    cb: Complex64,
}

impl ContinuousMode {
    pub fn new(alpha: f64, m: f64) -> Result<Self> {
        if m == 0.0 {
            return Err(Error::Domain("continuous mode needs m != 0".into()));
        }
        let g = cgamma(Complex64::new(1.0, m))?;
        let phase = g / g.conj();
        let den = sin_pi(Complex64::new(0.0, -m));
        let ca = -PI * rgamma(Complex64::new(-alpha, m)) * rgamma(Complex64::new(alpha + 1.0, m)) / den;
        let cb = -(PI * alpha).sin() / den;
        Ok(Self { alpha, m, phase, ca, cb })
    }

    /// (Ψ_m(s), Ψ_m(−s)) for s = |u|/√(1+u²), computed from `u` to keep
    /// 1 − s free of cancellation.
    pub fn pair_at(&self, u: f64) -> Result<(Complex64, Complex64)> {
        let a = u.abs();
        let r = a.hypot(1.0);
        let w = 0.5 / (r * (r + a));
        let f = hyp2f1(c(-self.alpha), c(1.0 + self.alpha), Complex64::new(1.0, self.m), c(w))?;
        let plus = Complex64::from_polar(1.0, -self.m * a.asinh()) * f;
        let minus = self.ca * self.phase * plus.conj() + self.cb * plus;
        Ok((plus, minus))
    }

    /// Ψ_m(−u/√(1+u²)).
    pub fn psi(&self, u: f64) -> Result<Complex64> {
        let (plus, minus) = self.pair_at(u)?;
        Ok(if u <= 0.0 { plus } else { minus })
    }
}
