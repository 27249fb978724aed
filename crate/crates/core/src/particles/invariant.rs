use super::params::{vandermonde, ParticleParams, ParticleState};
use crate::error::{Error, Result};
use crate::quad::QuadConfig;
use crate::specfun::arccot;
use crate::spectral::integrate_sinh;

fn one_weight(pp: &ParticleParams, x: f64) -> f64 {
    (1.0 + x * x).powf(-pp.s_re() - pp.n() as f64) * (-2.0 * pp.s_im() * arccot(x)).exp()
}

/// Unnormalized invariant density V(x)² Π (1+x_n²)^{−Re s−N} e^{−2 Im s·arccot x_n}.
pub fn invariant_density(pp: &ParticleParams, x: &ParticleState) -> f64 {
    let v = vandermonde(x.as_slice());
    v * v * x.as_slice().iter().map(|&xi| one_weight(pp, xi)).product::<f64>()
}

/// Mass of [`invariant_density`] over the chamber, for N ≤ 2.
///
/// For N = 2 the integrand is symmetric, so the chamber carries half of
/// ∫∫ (x₁−x₂)² w(x₁)w(x₂) = 2(M₀M₂ − M₁²) with M_k the moments of w.
pub fn invariant_normalize(pp: &ParticleParams, cfg: &QuadConfig) -> Result<f64> {
    let decay = 2.0 * (pp.s_re() + pp.n() as f64) - 1.0;
    let moment = |k: i32| integrate_sinh(|x| Ok(x.powi(k) * one_weight(pp, x)), decay - k as f64, cfg);
    match pp.n() {
        1 => moment(0),
        2 => {
            let (m0, m1, m2) = (moment(0)?, moment(1)?, moment(2)?);
            Ok(m0 * m2 - m1 * m1)
        }
        n => Err(Error::Domain(format!("invariant normalization is implemented for N <= 2, got {n}"))),
    }
}
