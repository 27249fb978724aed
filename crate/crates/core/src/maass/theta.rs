//! Hartman–Watson function
//! θ_r(t) = r/√(2π³t) e^{π²/2t} ∫₀^∞ e^{−w²/2t} e^{−r cosh w} sinh w sin(πw/t) dw.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{integrate_breaks, QuadConfig};

/// Smallest time accepted by [`theta_hw`].
pub const THETA_MIN_T: f64 = 0.05;

/// θ_r(t) evaluated as r/(2√(2π³t)) Im ∫ e^{−(w−iπ)²/2t} e^{−r cosh w} sinh w dw
/// along the horizontal line Im w = c.
///
/// The integrand is entire, so the line may be moved from the real axis to
/// the saddle height c solving (π − c)/t = r sin c (capped at π/2). This
/// removes most of the e^{π²/2t} cancellation of the real-axis form.
pub fn theta_hw(r: f64, t: f64, cfg: &QuadConfig) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("Hartman-Watson function needs r > 0, got {r}")));
    }
    if t < THETA_MIN_T {
        return Err(Error::Domain(format!("Hartman-Watson function refused for t = {t} < {THETA_MIN_T}")));
    }
    let c = contour_height(r, t);
    let amp = (PI - c).powi(2) / (2.0 * t);
    let l = (1.0 / cfg.tail_cutoff_epsilon).ln() + amp;
    let x_max = 2.0 * t + (2.0 * t * l).sqrt() + 1.0;
    let ic = Complex64::new(0.0, c - PI);
    let f = |x: f64| -> f64 {
        let w = Complex64::new(x, c);
        let g = (x + ic).powi(2) * (-0.5 / t);
        (g - r * w.cosh()).exp().mul_add_sinh(w)
    };
    let qcfg = cfg.with_abs_tol(cfg.abs_tol.max(1e-17 * amp.exp()));
    let est = integrate_breaks(f, &[-x_max, -1.0, 0.0, 1.0, x_max], &qcfg)?;
    Ok(r / (2.0 * (2.0 * PI.powi(3) * t).sqrt()) * est.value)
}

trait MulSinh {
    fn mul_add_sinh(self, w: Complex64) -> f64;
}

impl MulSinh for Complex64 {
    /// Im(self · sinh w)
    fn mul_add_sinh(self, w: Complex64) -> f64 {
        (self * w.sinh()).im
    }
}

fn contour_height(r: f64, t: f64) -> f64 {
    // h(c) = (π − c)/t − r sin c is decreasing on [0, π/2]
    let h = |c: f64| (PI - c) / t - r * c.sin();
    if h(FRAC_PI_2) >= 0.0 {
        return if t >= 2.0 { 0.0 } else { FRAC_PI_2 };
    }
    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Real-axis form of θ_r(t), kept as an independent oracle.
pub fn theta_hw_direct(r: f64, t: f64, cfg: &QuadConfig) -> Result<f64> {
    let w_max = (2.0 * t * (1.0 / cfg.tail_cutoff_epsilon).ln()).sqrt() + PI;
    let pref = r / (2.0 * PI.powi(3) * t).sqrt();
    let f = |w: f64| ((PI * PI - w * w) / (2.0 * t) - r * w.cosh()).exp() * w.sinh() * (PI * w / t).sin();
    let n = ((w_max * 4.0 / t).ceil() as usize).max(8);
    let breaks: Vec<f64> = (0..=n).map(|i| w_max * i as f64 / n as f64).collect();
    Ok(pref * integrate_breaks(f, &breaks, cfg)?.value)
}
