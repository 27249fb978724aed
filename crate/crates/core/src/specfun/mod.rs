//! Special functions behind the HP eigen-decomposition: Gamma, Gauss
//! hypergeometric, Ferrer functions, Romanovski polynomials and the
//! eigenfunctions of the generator.

mod gamma;
mod hyper;
mod legendre;
mod romanovski;

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use gamma::{cgamma, cln_gamma, gamma, ln_gamma, pochhammer, rgamma, sin_pi};
pub use hyper::hyp2f1;
pub use legendre::{ferrer_p, ContinuousMode};
pub use romanovski::{romanovski, romanovski_complex, romanovski_ferrer_form};

/// One point of the HP parameter space, stored as (A, K).
///
/// The generator is (1+u²)d²/du² + (2Au + K)d/du; the other charts are
/// α = 1/2 − A, μ = A − 1/2 and ν = K/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HpParams {
    a: f64,
    k: f64,
}

impl HpParams {
    pub fn from_ak(a: f64, k: f64) -> Self {
        Self { a, k }
    }

    pub fn from_alpha(alpha: f64, k: f64) -> Self {
        Self { a: 0.5 - alpha, k }
    }

    pub fn from_mu_nu(mu: f64, nu: f64) -> Self {
        Self { a: mu + 0.5, k: 2.0 * nu }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn alpha(&self) -> f64 {
        0.5 - self.a
    }

    pub fn mu(&self) -> f64 {
        self.a - 0.5
    }

    pub fn nu(&self) -> f64 {
        0.5 * self.k
    }
}

/// arccot with values in (0, π).
pub fn arccot(u: f64) -> f64 {
    FRAC_PI_2 - u.atan()
}

/// Student weight W(u) = (1+u²)^{−α−1/2}.
pub fn weight_w(alpha: f64, u: f64) -> f64 {
    (-(alpha + 0.5) * u.mul_add(u, 1.0).ln()).exp()
}

/// Speed density m(u) = (1+u²)^{A−1} e^{−K arccot u}.
pub fn speed_density(p: HpParams, u: f64) -> f64 {
    ((p.a() - 1.0) * u.mul_add(u, 1.0).ln() - p.k() * arccot(u)).exp()
}

/// Eigenfunction of the generator with continuous-spectrum label `m`.
///
/// For K = 0 this is φ_{α,m}(u) = (1+u²)^{α/2} Γ(1+im) P_α^{−im}(−u/√(1+u²)),
/// smooth in u. For K ≠ 0 it is ₂F₁(−α−im, −α+im; (1−iK)/2 − α; (1−iu)/2).
pub fn phi_eigen(alpha: f64, k: f64, m: f64, u: f64) -> Result<Complex64> {
    if alpha <= 0.0 {
        return Err(Error::Domain(format!("eigenfunction needs alpha > 0, got {alpha}")));
    }
    if k != 0.0 {
        return hyp2f1(
            Complex64::new(-alpha, -m),
            Complex64::new(-alpha, m),
            Complex64::new(0.5 - alpha, -0.5 * k),
            Complex64::new(0.5, -0.5 * u),
        );
    }
    let scale = (0.5 * alpha * u.mul_add(u, 1.0).ln()).exp();
    if m == 0.0 {
        let x = -u / u.hypot(1.0);
        return Ok(scale * ferrer_p(alpha, Complex64::new(0.0, 0.0), x)?);
    }
    Ok(scale * ContinuousMode::new(alpha, m)?.psi(u)?)
}

/// (u+√(1+u²))^{im} (1+u²)^{α/2} ₂F₁(−α, α+1; 1+im; 1/2 + u/(2√(1+u²))),
/// evaluated literally with the principal-branch ₂F₁.
pub fn phi_first_form(alpha: f64, m: f64, u: f64) -> Result<Complex64> {
    let r = u.hypot(1.0);
    let z = if u <= 0.0 { 0.5 / (r * (r - u)) } else { 0.5 + 0.5 * u / r };
    let f = hyp2f1(
        Complex64::new(-alpha, 0.0),
        Complex64::new(alpha + 1.0, 0.0),
        Complex64::new(1.0, m),
        Complex64::new(z, 0.0),
    )?;
    Ok(Complex64::from_polar(r.powf(alpha), m * u.asinh()) * f)
}

/// 2^{−im} (1+u²)^{(α−im)/2} ₂F₁((1+α+im)/2, (im−α)/2; 1+im; 1/(1+u²)),
/// evaluated literally with the principal-branch ₂F₁. This expression is
/// even in u.
pub fn phi_second_form(alpha: f64, m: f64, u: f64) -> Result<Complex64> {
    let q = u.mul_add(u, 1.0);
    let f = hyp2f1(
        Complex64::new(0.5 * (1.0 + alpha), 0.5 * m),
        Complex64::new(-0.5 * alpha, 0.5 * m),
        Complex64::new(1.0, m),
        Complex64::new(1.0 / q, 0.0),
    )?;
    let lnq = q.ln();
    let mag = (0.5 * alpha * lnq).exp();
    let ph = -m * (2f64.ln() + 0.5 * lnq);
    Ok(Complex64::from_polar(mag, ph) * f)
}

/// Squared weighted L² norm of R_n^{(α)}:
/// π n! Γ(2α+1−n) / (2^{2α−2n} (α−n) Γ(α−n+1/2)²).
pub fn romanovski_norm_sq(n: usize, alpha: f64) -> Result<f64> {
    let nf = n as f64;
    if nf >= alpha {
        return Err(Error::Domain(format!("norm of R_{n} needs n < alpha = {alpha}")));
    }
    let ln = PI.ln() + ln_gamma(nf + 1.0)? + ln_gamma(2.0 * alpha + 1.0 - nf)?
        - (2.0 * alpha - 2.0 * nf) * 2f64.ln()
        - (alpha - nf).ln()
        - 2.0 * ln_gamma(alpha - nf + 0.5)?;
    Ok(ln.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_charts_agree() {
        let p = HpParams::from_ak(1.3, -0.8);
        assert_eq!(p.alpha() + p.mu(), 0.0);
        assert_eq!(HpParams::from_alpha(p.alpha(), p.k()), p);
        assert_eq!(HpParams::from_mu_nu(p.mu(), p.nu()), p);
    }

    #[test]
    fn weights() {
        assert_eq!(weight_w(2.3, 0.0), 1.0);
        let p = HpParams::from_ak(1.7, 0.0);
        assert!((speed_density(p, 1.2) - 2.44f64.powf(0.7)).abs() < 1e-14);
        assert!((arccot(0.0) - FRAC_PI_2).abs() < 1e-16);
        assert!(arccot(-1e6) < PI && arccot(1e6) > 0.0);
    }

    #[test]
    fn norm_closed_values() {
        assert!((romanovski_norm_sq(0, 1.0).unwrap() - 2.0).abs() < 1e-13);
        assert!((romanovski_norm_sq(0, 2.0).unwrap() - 4.0 / 3.0).abs() < 1e-13);
        assert!((romanovski_norm_sq(1, 1.5).unwrap() - 2.0 * PI).abs() < 1e-12);
        assert!(romanovski_norm_sq(2, 2.0).is_err());
    }

    #[test]
    fn eigenfunction_forms_on_the_left_half_line() {
        for &alpha in &[0.7, 1.5, 3.0] {
            for &m in &[0.5, 2.0] {
                for i in -5..=0 {
                    let u = i as f64;
                    let a = phi_first_form(alpha, m, u).unwrap();
                    let b = phi_second_form(alpha, m, u).unwrap();
                    let c = phi_eigen(alpha, 0.0, m, u).unwrap();
                    assert!((a - b).norm() <= 1e-10 * a.norm(), "{alpha} {m} {u}: {a} {b}");
                    assert!((a - c).norm() <= 1e-10 * a.norm(), "{alpha} {m} {u}: {a} {c}");
                }
            }
        }
    }

    #[test]
    fn eigenfunction_is_the_analytic_first_form() {
        for &u in &[0.5, 1.0, 3.0, 5.0] {
            let a = phi_first_form(1.5, 0.5, u).unwrap();
            let c = phi_eigen(1.5, 0.0, 0.5, u).unwrap();
            assert!((a - c).norm() <= 1e-10 * a.norm(), "{u}: {a} {c}");
        }
    }

    #[test]
    fn zero_label_is_real() {
        let v = phi_eigen(1.3, 0.0, 0.0, 0.6).unwrap();
        assert!(v.im.abs() < 1e-12);
    }
}
