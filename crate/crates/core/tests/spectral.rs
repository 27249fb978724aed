use hpk::quad::QuadConfig;
use hpk::specfun::{cgamma, romanovski, weight_w, HpParams};
use hpk::spectral::*;
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

#[test]
fn discrete_spectrum_layout() {
    let s = SpectralScheme::build(2.5, 1.0, &cfg()).unwrap();
    let nodes: Vec<(usize, f64, f64)> = s.discrete.iter().map(|d| (d.n, d.mu, d.eigenvalue)).collect();
    assert_eq!(nodes, vec![(0, 2.5, 0.0), (1, 1.5, 4.0), (2, 0.5, 6.0)]);
    let plain = SpectralScheme::build_with(2.5, 1.0, &cfg(), ContinuousPart::Unsymmetrized).unwrap();
    assert_eq!(plain.discrete.len(), 2);
    let s = SpectralScheme::build(3.0, 1.0, &cfg()).unwrap();
    let ev: Vec<f64> = s.discrete.iter().map(|d| d.eigenvalue).collect();
    assert_eq!(ev, vec![0.0, 5.0, 8.0]);
    assert!(SpectralScheme::build(0.4, 1.0, &cfg()).unwrap().discrete.len() == 1);
    assert!(SpectralScheme::build_with(0.5, 1.0, &cfg(), ContinuousPart::Unsymmetrized).unwrap().discrete.is_empty());
}

#[test]
fn squared_norms() {
    assert!((norm_sq(0, 1.0).unwrap() - 2.0).abs() < 1e-13);
    assert!((norm_sq(0, 2.0).unwrap() - 4.0 / 3.0).abs() < 1e-13);
    for n in 0..=2 {
        let q = integrate_sinh(|u| Ok(romanovski(n, 3.2, 0.0, u)?.powi(2) * weight_w(3.2, u)), 6.4 - 2.0 * n as f64, &cfg())
            .unwrap();
        let c = norm_sq(n, 3.2).unwrap();
        assert!((q - c).abs() < 1e-6 * c);
    }
}

#[test]
fn orthogonality() {
    let alpha = 3.7;
    for n in 0..=2usize {
        for k in (n + 1)..=2 {
            let ip = integrate_sinh(
                |u| Ok(romanovski(n, alpha, 0.0, u)? * romanovski(k, alpha, 0.0, u)? * weight_w(alpha, u)),
                2.0 * alpha - (n + k) as f64,
                &cfg(),
            )
            .unwrap();
            let scale = (norm_sq(n, alpha).unwrap() * norm_sq(k, alpha).unwrap()).sqrt();
            assert!(ip.abs() / scale < 1e-8, "n={n} k={k}: {ip}");
        }
    }
}

#[test]
fn discrete_weights_factorize() {
    let s = SpectralScheme::build(3.2, 0.7, &cfg()).unwrap();
    for d in &s.discrete {
        assert!((d.norm_sq - norm_sq(d.n, 3.2).unwrap()).abs() < 1e-12 * d.norm_sq);
        assert!((d.mu - (3.2 - d.n as f64)).abs() < 1e-15);
    }
}

#[test]
fn long_time_limit_is_stationary() {
    let alpha = 1.5;
    let s = SpectralScheme::build(alpha, 30.0, &cfg()).unwrap();
    let z = PI.sqrt() * cgamma(Complex64::new(alpha, 0.0)).unwrap().re / cgamma(Complex64::new(alpha + 0.5, 0.0)).unwrap().re;
    for &u in &[-2.0, 0.0, 1.0, 3.0] {
        let q = s.density(0.0, u).unwrap();
        assert!((q - weight_w(alpha, u) / z).abs() < 1e-4);
    }
}

#[test]
fn continuous_part_carries_no_mass() {
    for &(alpha, t, v) in &[(1.5, 1.0, 0.0), (2.0, 0.5, 1.0), (3.0, 1.0, 0.0)] {
        assert!(check_integral0(alpha, t, v, &cfg()).unwrap().abs() < 1e-6);
    }
}

#[test]
fn chapman_kolmogorov() {
    let c = cfg();
    let (q4, q6, q10) = (
        SpectralScheme::build(1.5, 0.4, &c).unwrap(),
        SpectralScheme::build(1.5, 0.6, &c).unwrap(),
        SpectralScheme::build(1.5, 1.0, &c).unwrap(),
    );
    for &v in &[-1.0, 0.0, 1.0] {
        for &u in &[-1.0, 0.0, 1.0] {
            assert!(chapman_kolmogorov_residual(&q4, &q6, &q10, v, u, &c).unwrap() < 1e-3);
        }
    }
}

#[test]
fn transmission_weight_limits() {
    assert!(transmission_sq(1.0, 0.7) > 1.0 - 1e-15);
    assert!(transmission_sq(1.5, 1e-4) < 1e-6);
    assert!((transmission_sq(0.5, 5.0) - 1.0).abs() < 1e-12);
}

#[test]
fn generator_on_simple_functions() {
    let p = HpParams::from_ak(1.3, -0.4);
    for &u in &[-1.0, 0.0, 2.5] {
        let h = default_fd_step(u);
        assert!(apply_generator_fd(p, |_| 1.0, u, h).abs() < 1e-9);
        assert!((apply_generator_fd(p, |x| x, u, h) - (2.6 * u - 0.4)).abs() < 1e-9);
    }
}

#[test]
fn intertwining_examples() {
    assert!(check_intertwining(HpParams::from_ak(0.8, 0.6), |_| 1.0, 0.0).abs() < 1e-7);
    assert!(check_intertwining(HpParams::from_ak(2.0, 1.0), |u| u * u, 0.5).abs() < 1e-6);
    assert!(check_intertwining(HpParams::from_ak(1.5, 0.0), |u| u, 1.0).abs() < 1e-6);
}

#[test]
fn cauchy_beta_base_case() {
    let (alpha, k, u) = (2.5, 1.0, 0.7);
    let (lhs, rhs) = prop3_check(0, alpha, k, u, &cfg()).unwrap();
    // ∫(1−iy)^{−a}(w+iy)^{−b} dy = 2πΓ(a+b−1)/(Γ(a)Γ(b))·(1+w)^{1−a−b}, w → −iu
    let (a, b) = (Complex64::new(alpha + 0.5, 0.0), Complex64::new(1.0, 0.5 * k));
    let beta = 2.0 * PI * cgamma(a + b - 1.0).unwrap() / (cgamma(a).unwrap() * cgamma(b).unwrap())
        * Complex64::new(1.0, -u).powc(-(a + b - 1.0));
    let closed = cgamma(a).unwrap() / (2.0 * PI) * beta;
    assert!((rhs - closed).norm() < 1e-10 * closed.norm(), "{rhs} vs {closed}");
    assert!((lhs - rhs).norm() < 1e-4 * rhs.norm());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn positivity_and_reversibility(alpha in 0.6f64..3.5, t in 0.2f64..2.0, v in -3.0f64..3.0, u in -3.0f64..3.0) {
        let s = SpectralScheme::build(alpha, t, &cfg()).unwrap();
        let q = s.density(v, u).unwrap();
        prop_assert!(q >= -1e-8);
        prop_assert!(reversibility_residual(&s, v, u).unwrap() <= 1e-8);
    }

    #[test]
    fn intertwining_polynomials(a in 0.6f64..2.5, k in -1.5f64..1.5, c0 in -1.0f64..1.0, c1 in -1.0f64..1.0, u in -2.0f64..2.0) {
        let f = |x: f64| c0 + c1 * x + x * x;
        let r = check_intertwining(HpParams::from_ak(a, k), f, u);
        prop_assert!(r.abs() <= 1e-5 * (1.0 + u * u).powf(2.0 - a).max(1.0));
    }
}
