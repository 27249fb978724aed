//! Gauss hypergeometric function ₂F₁(a, b; c; z).
//!
//! The power series is summed directly for |z| < 0.9. Outside the disc the
//! 1/z connection formula is used, and on the annulus 0.9 ≤ |z| ≤ 1.1 either
//! the 1 − z connection formula (when 1 − z is small) or an analytic
//! continuation of the hypergeometric ODE by Taylor steps from |z| = 1/2.
//! Terminating series (a or b a non-positive integer) are summed for any z.

use num_complex::Complex64;

use super::gamma::{cgamma, rgamma};
use crate::error::{Error, Result};

const MAX_TERMS: usize = 100_000;
const STOP_REL: f64 = 1e-16;
const INNER: f64 = 0.9;
const OUTER: f64 = 1.1;

fn nonpositive_integer(x: Complex64) -> Option<u64> {
    (x.im == 0.0 && x.re <= 0.0 && x.re == x.re.round()).then(|| (-x.re) as u64)
}

fn is_integer(x: Complex64) -> bool {
    x.im == 0.0 && x.re == x.re.round()
}

/// Raw Gauss series with term-ratio recursion. Stops after two consecutive
/// terms below 1e−16 relative to the partial sum, or exactly when the series
/// terminates.
pub(crate) fn series(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let num = (a + kf) * (b + kf);
        if num == Complex64::new(0.0, 0.0) {
            return Ok(sum);
        }
        let den = (c + kf) * (kf + 1.0);
        if den == Complex64::new(0.0, 0.0) {
            return Err(Error::Domain(format!("2F1 lower parameter {c} hits a pole")));
        }
        term *= num / den * z;
        sum += term;
        if term.norm() <= STOP_REL * sum.norm() {
            small += 1;
            if small == 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::SeriesDivergence { terms: MAX_TERMS, modulus: z.norm() })
}

/// ₂F₁(a, b; c; z) on the principal branch (cut along [1, ∞)).
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    if z == Complex64::new(0.0, 0.0) {
        return Ok(one);
    }
    if nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some() {
        return series(a, b, c, z);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::Domain(format!("2F1 lower parameter {c} is a non-positive integer")));
    }
    let s = c - a - b;
    if z == one {
        if s.re <= 0.0 {
            return Err(Error::Domain("2F1 at z = 1 needs re(c - a - b) > 0".into()));
        }
        return Ok(cgamma(c)? * cgamma(s)? * rgamma(c - a) * rgamma(c - b));
    }
    let r = z.norm();
    if r < INNER {
        return series(a, b, c, z);
    }
    if r > OUTER {
        if z.im == 0.0 && z.re > 1.0 {
            return Err(Error::Domain("2F1 evaluated on its branch cut".into()));
        }
        if is_integer(a - b) {
            return Err(Error::Domain("2F1 beyond the unit disc with integer a - b".into()));
        }
        return reciprocal(a, b, c, z);
    }
    if (one - z).norm() < INNER && !is_integer(s) {
        return reflected(a, b, c, z);
    }
    if z.im != 0.0 || z.re < 0.0 {
        return continue_ode(a, b, c, z);
    }
    Err(Error::Domain(format!("2F1 argument {z} too close to the singular point 1")))
}

fn reflected(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let s = c - a - b;
    let w = one - z;
    let gc = cgamma(c)?;
    let a1 = gc * cgamma(s)? * rgamma(c - a) * rgamma(c - b);
    let a2 = gc * cgamma(-s)? * rgamma(a) * rgamma(b);
    let mut out = Complex64::new(0.0, 0.0);
    if a1 != Complex64::new(0.0, 0.0) {
        out += a1 * series(a, b, one - s, w)?;
    }
    if a2 != Complex64::new(0.0, 0.0) {
        out += a2 * (s * w.ln()).exp() * series(c - a, c - b, s + 1.0, w)?;
    }
    Ok(out)
}

fn reciprocal(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let zi = one / z;
    let lmz = (-z).ln();
    let gc = cgamma(c)?;
    let c1 = gc * cgamma(b - a)? * rgamma(b) * rgamma(c - a);
    let c2 = gc * cgamma(a - b)? * rgamma(a) * rgamma(c - b);
    let mut out = Complex64::new(0.0, 0.0);
    if c1 != Complex64::new(0.0, 0.0) {
        out += c1 * (-a * lmz).exp() * series(a, a - c + 1.0, a - b + 1.0, zi)?;
    }
    if c2 != Complex64::new(0.0, 0.0) {
        out += c2 * (-b * lmz).exp() * series(b, b - c + 1.0, b - a + 1.0, zi)?;
    }
    Ok(out)
}

/// Integrates the hypergeometric equation z(1−z)F'' + [c − (a+b+1)z]F' − abF = 0
/// along the ray from 0.5·z/|z| to z with local Taylor expansions.
fn continue_ode(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut p = z * (0.5 / z.norm());
    let mut f = series(a, b, c, p)?;
    let mut df = a * b / c * series(a + 1.0, b + 1.0, c + 1.0, p)?;
    let q1 = -(a + b + 1.0);
    let rr = -a * b;
    loop {
        let rem = z - p;
        let dist = rem.norm();
        if dist == 0.0 {
            return Ok(f);
        }
        let radius = p.norm().min((one - p).norm());
        let step = dist.min(0.5 * radius);
        let h = rem * (step / dist);
        let p0 = p * (one - p);
        let p1 = one - 2.0 * p;
        let q0 = c + q1 * p;
        let (mut c0, mut c1) = (f, df);
        let mut val = c0 + c1 * h;
        let mut der = c1;
        let mut hk = h;
        let mut small = 0;
        for k in 0..2_000usize {
            let kf = k as f64;
            let c2 = -((p1 * (kf * (kf + 1.0)) + q0 * (kf + 1.0)) * c1
                + (-(kf * (kf - 1.0)) + q1 * kf + rr) * c0)
                / (p0 * ((kf + 1.0) * (kf + 2.0)));
            der += c2 * (kf + 2.0) * hk;
            hk *= h;
            let t = c2 * hk;
            val += t;
            c0 = c1;
            c1 = c2;
            if t.norm() <= STOP_REL * val.norm() {
                small += 1;
                if small == 3 {
                    break;
                }
            } else {
                small = 0;
            }
        }
        f = val;
        df = der;
        p += h;
        if step == dist {
            return Ok(f);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(hyp2f1(c(0.3), c(0.2), c(1.5), c(0.0)).unwrap(), c(1.0));
        let z = Complex64::new(0.3, 0.9);
        let b = Complex64::new(0.7, -0.2);
        let v = hyp2f1(c(-1.0), b, c(2.5), z * 3.0).unwrap();
        assert!((v - (c(1.0) - b * z * 3.0 / 2.5)).norm() < 1e-14);
    }

    #[test]
    fn log_closed_form() {
        let v = hyp2f1(c(1.0), c(1.0), c(2.0), c(0.5)).unwrap();
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-14);
        let v = hyp2f1(c(1.0), c(1.0), c(2.0), c(-0.95)).unwrap();
        assert!((v.re - 1.95f64.ln() / 0.95).abs() < 1e-13, "{v}");
        // the 1/z branch is degenerate for integer a − b
        assert!(hyp2f1(c(1.0), c(1.0), c(2.0), c(-3.0)).is_err());
    }

    #[test]
    fn gauss_sum_at_one() {
        let v = hyp2f1(c(0.25), c(0.5), c(2.0), c(1.0)).unwrap();
        let e = cgamma(c(2.0)).unwrap() * cgamma(c(1.25)).unwrap()
            / (cgamma(c(1.75)).unwrap() * cgamma(c(1.5)).unwrap());
        assert!((v - e).norm() < 1e-13);
    }

    #[test]
    fn branches_agree_on_the_annulus() {
        // (1 - z)^(-a) = 2F1(a, b; b; z)
        let a = Complex64::new(0.4, 0.3);
        let b = Complex64::new(1.3, -0.6);
        for &z in &[
            Complex64::new(0.5, 0.866_025_403_784_438_6),
            Complex64::new(0.2, -0.97),
            Complex64::new(-1.05, 0.0),
            Complex64::new(0.95, 0.02),
            Complex64::new(1.5, 2.5),
        ] {
            let v = hyp2f1(a, b, b, z).unwrap();
            let e = (-a * (Complex64::new(1.0, 0.0) - z).ln()).exp();
            assert!((v - e).norm() < 1e-11 * e.norm(), "{z}: {v} vs {e}");
        }
    }

    #[test]
    fn pole_in_lower_parameter() {
        assert!(hyp2f1(c(0.5), c(0.5), c(-2.0), c(0.3)).is_err());
        // terminates before the pole is reached
        assert!(hyp2f1(c(-1.0), c(0.5), c(-2.0), c(0.3)).is_ok());
    }
}
