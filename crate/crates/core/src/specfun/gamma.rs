//! Complex Gamma function by the Lanczos approximation (g = 7, nine terms)
//! with the reflection formula on the left half-plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// True when `z` sits on a pole of the Gamma function.
pub fn is_gamma_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `sin(πz)` with the real part reduced first, so that zeros at the integers
/// are reproduced exactly.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let r = z.re - 2.0 * (z.re / 2.0).round();
    let (s, c) = if r.fract() == 0.0 {
        (0.0, if r == 0.0 { 1.0 } else { -1.0 })
    } else {
        ((PI * r).sin(), (PI * r).cos())
    };
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

fn lanczos_sum(zm1: Complex64) -> Complex64 {
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (zm1 + i as f64);
    }
    x
}

/// Γ(z) for complex `z`.
pub fn cgamma(z: Complex64) -> Result<Complex64> {
    if is_gamma_pole(z) {
        return Err(Error::GammaPole(z.re));
    }
    if z.re < 0.5 {
        let g = cgamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(PI / (sin_pi(z) * g));
    }
    let zm1 = z - 1.0;
    let t = zm1 + LANCZOS_G + 0.5;
    let x = lanczos_sum(zm1);
    Ok((2.0 * PI).sqrt() * (t.ln() * (zm1 + 0.5)).exp() * (-t).exp() * x)
}

/// log Γ(z), continuous on the right half-plane; on the left it is a
/// logarithm of Γ(z) valid for use inside `exp`.
pub fn cln_gamma(z: Complex64) -> Result<Complex64> {
    if is_gamma_pole(z) {
        return Err(Error::GammaPole(z.re));
    }
    if z.re < 0.5 {
        let l = cln_gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(Complex64::new(PI.ln(), 0.0) - sin_pi(z).ln() - l);
    }
    let zm1 = z - 1.0;
    let t = zm1 + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (zm1 + 0.5) * t.ln() - t + lanczos_sum(zm1).ln())
}

/// 1/Γ(z), entire: exactly zero at the poles of Γ.
pub fn rgamma(z: Complex64) -> Complex64 {
    match cgamma(z) {
        Ok(g) => 1.0 / g,
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// Γ(x) for real `x`.
pub fn gamma(x: f64) -> Result<f64> {
    cgamma(Complex64::new(x, 0.0)).map(|g| g.re)
}

/// log|Γ(x)| for real `x`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    cln_gamma(Complex64::new(x, 0.0)).map(|g| g.re)
}

/// Generalized Pochhammer symbol (a)_s = Γ(a+s)/Γ(a).
pub fn pochhammer(a: Complex64, s: Complex64) -> Result<Complex64> {
    Ok((cln_gamma(a + s)? - cln_gamma(a)?).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn half_integer_and_factorial() {
        assert!((cgamma(c(0.5, 0.0)).unwrap().re - PI.sqrt()).abs() < 1e-14);
        assert!((cgamma(c(5.0, 0.0)).unwrap().re - 24.0).abs() < 1e-12);
        assert!((gamma(2.5).unwrap() - 0.75 * PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn reflection_on_imaginary_line() {
        let p = cgamma(c(1.0, 1.0)).unwrap() * cgamma(c(1.0, -1.0)).unwrap();
        assert!((p.re - PI / PI.sinh()).abs() < 1e-13);
        assert!(p.im.abs() < 1e-14);
        assert!((p.re - 0.272_029_055_0).abs() < 1e-10);
    }

    #[test]
    fn negative_and_poles() {
        assert!(matches!(cgamma(c(-2.0, 0.0)), Err(Error::GammaPole(_))));
        assert_eq!(rgamma(c(0.0, 0.0)), c(0.0, 0.0));
        let g = cgamma(c(-0.5, 0.0)).unwrap();
        assert!((g.re + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn log_gamma_matches_gamma() {
        for &z in &[c(0.3, 2.0), c(-3.7, 0.4), c(12.5, -7.0), c(1.0, 0.0)] {
            let a = cgamma(z).unwrap();
            let b = cln_gamma(z).unwrap().exp();
            assert!((a - b).norm() < 1e-12 * a.norm());
        }
    }

    #[test]
    fn recurrence_on_grid() {
        for i in -10..=10 {
            for j in -10..=10 {
                let z = c(i as f64 * 1.3 + 0.17, j as f64 * 1.1);
                let lhs = cgamma(z + 1.0).unwrap();
                let rhs = z * cgamma(z).unwrap();
                assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm(), "{z}");
            }
        }
    }
}
