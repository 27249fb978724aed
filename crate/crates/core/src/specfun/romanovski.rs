//! Routh–Romanovski polynomials R_n^{(α)} and their non-symmetric deformation
//! R_n^{(α,K)}.

use num_complex::Complex64;

use super::gamma::{cgamma, rgamma};
use super::legendre::ferrer_p;
use crate::error::{Error, Result};

/// R_n^{(α,K)}(u) = c_n iⁿ ((c)_n/n!) ₂F₁(−n, n−2α; c; (1−iu)/2) with
/// c = (1−iK)/2 − α and c_n = (−2)ⁿ n!.
///
/// The terminating series is rearranged as Σ_k (−n)_k (n−2α)_k z^k (c+k)_{n−k} / k!
/// so that a non-positive integer c (half-integer α, K = 0) causes no
/// division by zero.
pub fn romanovski_complex(n: usize, alpha: f64, k: f64, u: f64) -> Complex64 {
    let z = Complex64::new(0.5, -0.5 * u);
    let b = n as f64 - 2.0 * alpha;
    let c = Complex64::new(0.5 - alpha, -0.5 * k);
    let mut sum = Complex64::new(0.0, 0.0);
    // (−n)_k (b)_k / k! · z^k, updated incrementally
    let mut head = Complex64::new(1.0, 0.0);
    for j in 0..=n {
        let jf = j as f64;
        let mut tail = Complex64::new(1.0, 0.0);
        for i in j..n {
            tail *= c + i as f64;
        }
        sum += head * tail;
        head *= (jf - n as f64) * (b + jf) / (jf + 1.0) * z;
    }
    // c_n iⁿ / n! = (−2)ⁿ iⁿ = (−2i)ⁿ
    Complex64::new(0.0, -2.0).powu(n as u32) * sum
}

/// Real-valued R_n^{(α,K)}(u). The imaginary part of the complex-form
/// evaluation must vanish to 1e−10·(1+|value|).
pub fn romanovski(n: usize, alpha: f64, k: f64, u: f64) -> Result<f64> {
    let v = romanovski_complex(n, alpha, k, u);
    if v.im.abs() > 1e-10 * (1.0 + v.re.abs()) {
        return Err(Error::Domain(format!(
            "Romanovski polynomial R_{n} at u = {u} has imaginary residue {:e}",
            v.im
        )));
    }
    Ok(v.re)
}

/// R_n^{(α)} through the Ferrer function of order n − α:
/// 2^{n−α} √π Γ(1+2α−n)/Γ(α+1/2−n) · (1+u²)^{α/2} P_α^{n−α}(−u/√(1+u²)).
pub fn romanovski_ferrer_form(n: usize, alpha: f64, u: f64) -> Result<f64> {
    let nf = n as f64;
    let c = Complex64::new(2f64.powf(nf - alpha) * std::f64::consts::PI.sqrt(), 0.0)
        * cgamma(Complex64::new(1.0 + 2.0 * alpha - nf, 0.0))?
        * rgamma(Complex64::new(alpha + 0.5 - nf, 0.0));
    let x = -u / u.hypot(1.0);
    let p = ferrer_p(alpha, Complex64::new(nf - alpha, 0.0), x)?;
    Ok((c * p).re * (0.5 * alpha * u.mul_add(u, 1.0).ln()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        assert_eq!(romanovski(0, 1.7, 0.4, 3.0).unwrap(), 1.0);
        for &u in &[-2.0, 0.3, 1.5] {
            let r1 = romanovski(1, 2.2, 0.0, u).unwrap();
            assert!((r1 - (1.0 - 4.4) * u).abs() < 1e-13);
        }
        assert!((romanovski(2, 3.0, 0.0, 1.0).unwrap() - 9.0).abs() < 1e-12);
    }

    #[test]
    fn half_integer_alpha_is_finite() {
        // c = 1/2 − α = −2 is a non-positive integer here
        let r = romanovski(2, 2.5, 0.0, 0.7).unwrap();
        let e = (3.0 - 5.0) + (3.0 - 5.0) * (2.0 - 5.0) * 0.49;
        assert!((r - e).abs() < 1e-12, "{r} vs {e}");
    }
}
