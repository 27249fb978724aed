//! Numerical machinery shared by the density routes: adaptive quadrature,
//! Gauss–Legendre rules, principal-branch powers, Richardson extrapolation
//! and reproducible random streams.

mod kronrod;
mod rng;

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use rng::RngStream;

/// Tolerances and budgets for adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail_cutoff_epsilon: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-9, abs_tol: 1e-14, max_subdivisions: 4000, tail_cutoff_epsilon: 1e-14 }
    }
}

impl QuadConfig {
    /// Looser defaults for nested multi-dimensional density integrals.
    pub fn nested() -> Self {
        Self { rel_tol: 1e-6, abs_tol: 1e-12, ..Self::default() }
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    /// Cut-off for line integrals weighted by e^{−m²t}:
    /// m_max = √(ln(1/ε)/t) + 5.
    pub fn gaussian_cutoff(&self, t: f64) -> f64 {
        ((1.0 / self.tail_cutoff_epsilon).ln() / t).sqrt() + 5.0
    }
}

/// A quadrature result with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub error_bound: f64,
}

/// Values that can be integrated: reals and complex numbers.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    fn norm(self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn norm(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn norm(self) -> f64 {
        Complex64::norm(self)
    }
}

/// Integration domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Finite(f64, f64),
    /// [a, ∞)
    HalfLine(f64),
    RealLine,
}

/// Adaptive Gauss–Kronrod integration.
///
/// Infinite domains are mapped to finite ones with x = a + s/(1−s) and
/// x = s/(1−s²). With `singular_left` the substitution x = a + s² is applied
/// first, absorbing an inverse-square-root singularity at the left end.
pub fn integrate<T, F>(mut f: F, domain: Domain, cfg: &QuadConfig, singular_left: bool) -> Result<Estimate<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    match (domain, singular_left) {
        (Domain::Finite(a, b), false) => kronrod::adaptive(f, &[a, b], cfg),
        (Domain::Finite(a, b), true) => {
            if b < a {
                return Err(Error::Domain("singular_left needs a <= b".into()));
            }
            kronrod::adaptive(|s: f64| f(a + s * s) * (2.0 * s), &[0.0, (b - a).sqrt()], cfg)
        }
        (Domain::HalfLine(a), false) => kronrod::adaptive(
            |s: f64| {
                let d = 1.0 - s;
                f(a + s / d) * (1.0 / (d * d))
            },
            &[0.0, 1.0],
            cfg,
        ),
        (Domain::HalfLine(a), true) => kronrod::adaptive(
            |s: f64| {
                let d = 1.0 - s;
                let r = s / d;
                f(a + r * r) * (2.0 * r / (d * d))
            },
            &[0.0, 1.0],
            cfg,
        ),
        (Domain::RealLine, false) => kronrod::adaptive(
            |s: f64| {
                let d = 1.0 - s * s;
                f(s / d) * ((1.0 + s * s) / (d * d))
            },
            &[-1.0, 0.0, 1.0],
            cfg,
        ),
        (Domain::RealLine, true) => Err(Error::Domain("singular_left needs a finite left end".into())),
    }
}

/// Adaptive integration over [p₀, p_last] with the given interior break points
/// used as the initial partition.
pub fn integrate_breaks<T, F>(f: F, breaks: &[f64], cfg: &QuadConfig) -> Result<Estimate<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    if breaks.len() < 2 {
        return Err(Error::Domain("need at least two break points".into()));
    }
    kronrod::adaptive(f, breaks, cfg)
}

/// n-point Gauss–Legendre nodes and weights on [−1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = nf * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Composite Gauss–Legendre rule with `panels` equal panels of `order` nodes
/// on [a, b].
pub fn composite_gauss(a: f64, b: f64, panels: usize, order: usize) -> Vec<(f64, f64)> {
    let (x, w) = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    (0..panels)
        .flat_map(|p| {
            let c = a + (p as f64 + 0.5) * h;
            x.iter().zip(&w).map(move |(xi, wi)| (c + 0.5 * h * xi, 0.5 * h * wi)).collect::<Vec<_>>()
        })
        .collect()
}

/// z^a = exp(a·Log z) on the principal branch, arg z ∈ (−π, π].
pub fn principal_power(z: Complex64, a: Complex64) -> Result<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("principal power of zero".into()));
    }
    Ok((a * z.ln()).exp())
}

/// Polynomial (Neville) extrapolation of (h, v(h)) samples to h = 0. The
/// error estimate is the size of the last correction.
pub fn richardson_limit<T: QuadValue>(samples: &[(f64, T)]) -> Result<Estimate<T>> {
    richardson_limit_pow(samples, 1)
}

/// As [`richardson_limit`], with the polynomial taken in h^p (p = 2 for
/// expansions in even powers).
pub fn richardson_limit_pow<T: QuadValue>(samples: &[(f64, T)], p: i32) -> Result<Estimate<T>> {
    if samples.len() < 3 {
        return Err(Error::TooFewSamples { needed: 3, got: samples.len() });
    }
    let h: Vec<f64> = samples.iter().map(|s| s.0.powi(p)).collect();
    let mut p: Vec<T> = samples.iter().map(|s| s.1).collect();
    let n = p.len();
    let mut last = 0.0;
    for level in 1..n {
        for i in 0..n - level {
            let (hi, hj) = (h[i], h[i + level]);
            let next = p[i + 1] + (p[i + 1] - p[i]) * (hj / (hi - hj));
            if i == n - level - 1 {
                last = (next - p[i + 1]).norm();
            }
            p[i] = next;
        }
    }
    Ok(Estimate { value: p[0], error_bound: last })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_integrals() {
        let cfg = QuadConfig::default();
        let e = integrate(|x: f64| x, Domain::Finite(0.0, 1.0), &cfg, false).unwrap();
        assert!((e.value - 0.5).abs() < 1e-15);
        let g = integrate(|x: f64| (-x * x).exp(), Domain::RealLine, &cfg, false).unwrap();
        assert!((g.value - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        let s = integrate(|x: f64| 1.0 / x.sqrt(), Domain::Finite(0.0, 1.0), &cfg, true).unwrap();
        assert!((s.value - 2.0).abs() < 1e-13);
        let h = integrate(|x: f64| (-x).exp(), Domain::HalfLine(1.0), &cfg, false).unwrap();
        assert!((h.value - (-1f64).exp()).abs() < 1e-13);
        let w = integrate(|u: f64| (1.0 + u * u).powf(-1.5), Domain::RealLine, &cfg, false).unwrap();
        assert!((w.value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn gauss_legendre_exactness() {
        let (x, w) = gauss_legendre(12);
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(22)).sum();
        assert!((s - 2.0 / 23.0).abs() < 1e-14);
        let r = composite_gauss(0.0, 3.0, 4, 5);
        let s: f64 = r.iter().map(|(x, w)| w * x.exp()).sum();
        assert!((s - (3f64.exp() - 1.0)).abs() < 1e-11);
    }

    #[test]
    fn powers() {
        let i = Complex64::new(0.0, 1.0);
        assert!((principal_power(i, Complex64::new(2.0, 0.0)).unwrap() + 1.0).norm() < 1e-15);
        let v = principal_power(Complex64::new(1.0, 1.0), i).unwrap();
        let l = 2f64.sqrt().ln();
        let e = (-std::f64::consts::FRAC_PI_4).exp() * Complex64::new(l.cos(), l.sin());
        assert!((v - e).norm() < 1e-15);
        assert!(principal_power(Complex64::new(0.0, 0.0), i).is_err());
    }

    #[test]
    fn extrapolation() {
        let lin: Vec<(f64, f64)> = [0.4, 0.2, 0.1].iter().map(|&h| (h, 1.0 + h)).collect();
        assert!((richardson_limit(&lin).unwrap().value - 1.0).abs() < 1e-14);
        let cos: Vec<(f64, f64)> = [0.4, 0.2, 0.1, 0.05].iter().map(|&h| (h, f64::cos(h))).collect();
        // cubic in h: error h₀h₁h₂h₃/24 ≈ 1.7e−5
        assert!((richardson_limit(&cos).unwrap().value - 1.0).abs() < 2e-5);
        assert!((richardson_limit_pow(&cos, 2).unwrap().value - 1.0).abs() < 1e-9);
        let k: Vec<(f64, f64)> = [0.4, 0.2, 0.1].iter().map(|&h| (h, 3.0)).collect();
        let e = richardson_limit(&k).unwrap();
        assert_eq!((e.value, e.error_bound), (3.0, 0.0));
        assert!(richardson_limit(&lin[..2]).is_err());
    }
}
