use hpk::maass::*;
use hpk::quad::QuadConfig;
use hpk::specfun::{speed_density, HpParams};
use num_complex::Complex64;
use proptest::prelude::*;

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

#[test]
fn distances() {
    let d = |w, y| hyp_distance(HyperbolicPoint::new(w, y).unwrap());
    assert_eq!(d(0.0, 1.0), 0.0);
    assert!((d(0.0, std::f64::consts::E) - 1.0).abs() < 1e-14);
    assert!((d(1.0, 1.0) - 1.5f64.acosh()).abs() < 1e-14);
    assert!(HyperbolicPoint::new(0.0, -1.0).is_err());
}

#[test]
fn phase_has_unit_modulus_for_real_k() {
    let m = MaassRadial::new(1.0, Complex64::new(0.7, 0.0), &cfg());
    for &(w, y) in &[(0.3, 0.5), (-2.0, 3.0), (1.0, 1.0)] {
        assert!((m.phase(HyperbolicPoint::new(w, y).unwrap()).norm() - 1.0).abs() < 1e-14);
    }
}

#[test]
fn moment_closed_forms() {
    let zero = Complex64::new(0.0, 0.0);
    let m = |s, k| maass_moment(s, k, 1.0, &cfg()).unwrap();
    assert!((m(1.0, zero) - 1.0).norm() < 1e-8);
    assert!((m(0.5, zero).re - (-0.125f64).exp()).abs() < 1e-8);
    assert!((m(1.0, Complex64::new(0.0, 0.5)).re - 0.125f64.exp()).abs() < 1e-8);
}

#[test]
fn theta_vanishes_fast_near_zero() {
    let small = theta_hw(0.01, 1.0, &cfg()).unwrap();
    let big = theta_hw(0.5, 1.0, &cfg()).unwrap();
    assert!(small.abs() / big < 0.05);
    assert!(theta_hw(1.0, 0.01, &cfg()).is_err());
}

#[test]
fn density_representations_coincide_structurally() {
    let d = HeatKernelDensity::new(HpParams::from_mu_nu(0.5, 0.0), 1.0, &cfg()).unwrap();
    for &w in &[-1.5, 0.0, 0.7] {
        let (a, b) = (d.density(0.2, w).unwrap(), d.density_alt(0.2, w).unwrap());
        assert!((a - b).abs() < 1e-10 * a);
    }
}

#[test]
fn no_overflow_for_large_imaginary_order() {
    let d = HeatKernelDensity::new(HpParams::from_mu_nu(-1.0, 5.0), 4.0, &cfg()).unwrap();
    for &w in &[-3.0, 0.0, 3.0] {
        let g = d.density(0.0, w).unwrap();
        assert!(g.is_finite() && g >= 0.0);
    }
}

#[test]
fn charfn_tends_to_one() {
    let p = HpParams::from_mu_nu(-1.5, 0.0);
    let c = hp_charfn(p, 1.0, 0.0, 1e-3, &cfg()).unwrap();
    assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-5);
    let f = numeric_fourier(p, 1.0, 0.0, &[1e-3], 7.0, &cfg()).unwrap()[0];
    assert!((c - f).norm() < 1e-8);
}

#[test]
fn clock_ratio_links_the_two_routes() {
    assert_eq!(CLOCK_RATIO, 2.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn speed_measure_symmetry(mu in -2.0f64..0.9, nu in -1.0f64..1.0, v in -2.0f64..2.0, u in -2.0f64..2.0) {
        let p = HpParams::from_mu_nu(mu, nu);
        let d = HeatKernelDensity::new(p, 1.0, &cfg()).unwrap();
        let a = speed_density(p, v) * d.density(v, u).unwrap();
        let b = speed_density(p, u) * d.density(u, v).unwrap();
        prop_assert!((a - b).abs() <= 1e-6 * a.abs().max(b.abs()));
    }

    #[test]
    fn imaginary_order_kernel_is_real(nu in 0.0f64..2.0, w in -3.0f64..3.0, y in 0.1f64..5.0) {
        let p = HyperbolicPoint::new(w, y).unwrap();
        let q = maass_q(1.0, Complex64::new(0.0, nu), p, &cfg()).unwrap();
        prop_assert!(q.im.abs() <= 1e-12 * q.norm().max(1e-300));
    }

    #[test]
    fn theta_contour_matches_real_axis(r in 0.5f64..3.0, t in 0.5f64..3.0) {
        let a = theta_hw(r, t, &cfg()).unwrap();
        let b = theta_hw_direct(r, t, &cfg()).unwrap();
        prop_assert!((a - b).abs() <= 1e-7 * a.abs().max(1e-12));
    }
}
