use nalgebra::DMatrix;
use num_complex::Complex64;

use super::params::{vandermonde, ParticleState};
use crate::error::{Error, Result};
use crate::specfun::ferrer_p;

/// det[P_α^{−μ_j}(−x_n/√(1+x_n²))] / V(x).
pub fn multivar_legendre_det(alpha: f64, mus: &[Complex64], x: &[f64]) -> Result<Complex64> {
    let n = x.len();
    if mus.len() != n {
        return Err(Error::Domain(format!("{} orders for {n} points", mus.len())));
    }
    let mut entries = Vec::with_capacity(n * n);
    for &xn in x {
        let s = -xn / xn.mul_add(xn, 1.0).sqrt();
        for &mu in mus {
            entries.push(ferrer_p(alpha, -mu, s)?);
        }
    }
    let v = vandermonde(x);
    if v == 0.0 {
        return Err(Error::Domain("points must be distinct".into()));
    }
    Ok(DMatrix::from_row_slice(n, n, &entries).determinant() / v)
}

/// [`multivar_legendre_det`] on an ordered state.
pub fn multivar_legendre_det_state(alpha: f64, mus: &[Complex64], x: &ParticleState) -> Result<Complex64> {
    multivar_legendre_det(alpha, mus, x.as_slice())
}
