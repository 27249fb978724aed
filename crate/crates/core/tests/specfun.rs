use hpk::quad::{integrate, Domain, QuadConfig};
use hpk::spectral::{apply_generator_fd, default_fd_step};
use hpk::specfun::*;
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn gamma_special_values() {
    assert!((cgamma(c(0.5, 0.0)).unwrap().re - PI.sqrt()).abs() < 1e-13);
    assert!((cgamma(c(5.0, 0.0)).unwrap().re - 24.0).abs() < 1e-12);
    let prod = cgamma(c(1.0, 1.0)).unwrap() * cgamma(c(1.0, -1.0)).unwrap();
    assert!((prod - c(PI / PI.sinh(), 0.0)).norm() < 1e-13);
    assert!((prod.re - 0.2720290550).abs() < 1e-10);
}

#[test]
fn gamma_poles_are_reported() {
    assert!(cgamma(c(-2.0, 0.0)).is_err());
    assert_eq!(rgamma(c(-3.0, 0.0)), c(0.0, 0.0));
}

#[test]
fn hypergeometric_closed_forms() {
    let z = c(0.3, -0.2);
    assert_eq!(hyp2f1(c(0.4, 1.0), c(2.0, 0.0), c(1.5, 0.0), c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
    let (b, cc) = (c(2.5, 0.5), c(1.7, -0.3));
    let lin = hyp2f1(c(-1.0, 0.0), b, cc, z).unwrap();
    assert!((lin - (c(1.0, 0.0) - b * z / cc)).norm() < 1e-14);
    let log = hyp2f1(c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.5, 0.0)).unwrap();
    assert!((log.re - 2.0 * 2f64.ln()).abs() < 1e-12);
}

#[test]
fn hypergeometric_outside_unit_disk() {
    // atan(x)/x at x = sqrt(3)
    let got = hyp2f1(c(0.5, 0.0), c(1.0, 0.0), c(1.5, 0.0), c(-3.0, 0.0)).unwrap();
    assert!((got.re - PI / 3.0 / 3f64.sqrt()).abs() < 1e-12);
}

#[test]
fn legendre_polynomial_cases() {
    assert!((ferrer_p(1.0, c(0.0, 0.0), 0.3).unwrap() - c(0.3, 0.0)).norm() < 1e-13);
    assert!((ferrer_p(2.0, c(0.0, 0.0), 0.0).unwrap() - c(-0.5, 0.0)).norm() < 1e-13);
    let x = 0.6;
    let p3 = 0.5 * (5.0 * x * x * x - 3.0 * x);
    assert!((ferrer_p(3.0, c(0.0, 0.0), x).unwrap().re - p3).abs() < 1e-12);
}

#[test]
fn romanovski_low_degrees() {
    for &(alpha, k, u) in &[(1.3, 0.0, 0.4), (2.5, 1.0, -2.0)] {
        assert!((romanovski(0, alpha, k, u).unwrap() - 1.0).abs() < 1e-14);
    }
    for &(alpha, u) in &[(1.7, 0.3), (2.5, -1.5), (3.2, 4.0)] {
        let want = (1.0 - 2.0 * alpha) * u;
        assert!((romanovski(1, alpha, 0.0, u).unwrap() - want).abs() < 1e-12 * (1.0 + want.abs()));
    }
    assert!((romanovski(2, 3.0, 0.0, 1.0).unwrap() - 9.0).abs() < 1e-12);
}

#[test]
fn romanovski_ferrer_connection() {
    for &alpha in &[2.5, 3.7] {
        for n in 0..=((alpha - 1.0f64).floor() as usize) {
            for &u in &[-3.0, -0.5, 0.8, 2.5] {
                let r = romanovski(n, alpha, 0.0, u).unwrap();
                let p = romanovski_ferrer_form(n, alpha, u).unwrap();
                assert!((r - p).abs() < 1e-9 * r.abs(), "n={n} alpha={alpha} u={u}: {r} vs {p}");
            }
        }
    }
}

#[test]
fn weight_and_speed_density() {
    assert_eq!(weight_w(2.3, 0.0), 1.0);
    let p = HpParams::from_ak(-0.7, 0.0);
    for &u in &[-2.0, 0.5, 3.0] {
        assert!((speed_density(p, u) - (1.0f64 + u * u).powf(-1.7)).abs() < 1e-15);
    }
    let mass = integrate(|u| weight_w(1.0, u), Domain::RealLine, &QuadConfig::default(), false).unwrap();
    assert!((mass.value - 2.0).abs() < 1e-9);
}

#[test]
fn parameter_charts_round_trip() {
    let p = HpParams::from_ak(-1.0, 0.6);
    assert!((p.alpha() - 1.5).abs() < 1e-15);
    assert!((p.mu() + 1.5).abs() < 1e-15);
    assert!((p.nu() - 0.3).abs() < 1e-15);
    let q = HpParams::from_mu_nu(p.mu(), p.nu());
    assert!((q.a() - p.a()).abs() < 1e-15 && (q.k() - p.k()).abs() < 1e-15);
}

#[test]
fn eigenfunction_is_real_at_zero_frequency() {
    for &u in &[-2.0, 0.0, 1.3] {
        assert!(phi_eigen(1.5, 0.0, 0.0, u).unwrap().im.abs() < 1e-12);
    }
}

#[test]
fn eigenfunction_forms_agree_on_negative_half_line() {
    for &alpha in &[0.7, 1.5, 3.0] {
        for &m in &[0.5, 2.0] {
            for u in -5..=0 {
                let a = phi_first_form(alpha, m, u as f64).unwrap();
                let b = phi_second_form(alpha, m, u as f64).unwrap();
                assert!((a - b).norm() <= 1e-10 * a.norm());
            }
        }
    }
}

#[test]
fn continuous_modes_are_generalized_eigenfunctions() {
    let (alpha, m) = (1.5, 0.8);
    let p = HpParams::from_alpha(alpha, 0.0);
    let mode = ContinuousMode::new(alpha, m).unwrap();
    for &u in &[-1.0, 0.3, 2.0] {
        let re = |x: f64| (1.0 + x * x).powf(alpha / 2.0) * mode.psi(x).unwrap().re;
        let lf = apply_generator_fd(p, re, u, default_fd_step(u));
        let lambda = -(alpha * alpha + m * m);
        assert!((lf - lambda * re(u)).abs() < 1e-6 * (1.0 + re(u).abs()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn romanovski_parity(n in 0usize..4, extra in 0.1f64..3.0, u in -6.0f64..6.0) {
        let alpha = n as f64 + 1.0 + extra;
        let a = romanovski(n, alpha, 0.0, u).unwrap();
        let b = romanovski(n, alpha, 0.0, -u).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((b - sign * a).abs() <= 1e-12 * (1.0 + a.abs()));
    }

    #[test]
    fn romanovski_eigenfunctions(n in 0usize..4, extra in 0.1f64..2.0, k in -1.5f64..1.5, u in -3.0f64..3.0) {
        let alpha = n as f64 + 1.0 + extra;
        // polynomials carrying +K solve the equation with drift coefficient -K
        let p = HpParams::from_alpha(alpha, -k);
        let f = |x: f64| romanovski(n, alpha, k, x).unwrap();
        let lf = apply_generator_fd(p, f, u, default_fd_step(u));
        let ev = -(n as f64) * (2.0 * alpha - n as f64);
        let scale = 1.0 + (1.0 + u * u).powf(n as f64 / 2.0) * (1.0 + ev.abs());
        prop_assert!((lf - ev * f(u)).abs() <= 1e-6 * scale);
    }

    #[test]
    fn eigenfunction_conjugation(alpha in 0.3f64..3.5, m in 0.1f64..3.0, u in -5.0f64..5.0) {
        let a = phi_eigen(alpha, 0.0, m, u).unwrap();
        let b = phi_eigen(alpha, 0.0, -m, u).unwrap();
        prop_assert!((b - a.conj()).norm() <= 1e-10 * (1.0 + a.norm()));
    }

    #[test]
    fn gamma_recurrence(re in -4.5f64..6.0, im in -4.0f64..4.0) {
        prop_assume!((re - re.round()).abs() > 1e-3 || im.abs() > 1e-3);
        let z = c(re, im);
        let lhs = cgamma(z + 1.0).unwrap();
        let rhs = z * cgamma(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm());
    }

    #[test]
    fn gamma_reflection(re in -3.0f64..3.0, im in -3.0f64..3.0) {
        prop_assume!((re - re.round()).abs() > 1e-3 || im.abs() > 1e-3);
        let z = c(re, im);
        let lhs = cgamma(z).unwrap() * cgamma(c(1.0, 0.0) - z).unwrap();
        let rhs = c(PI, 0.0) / sin_pi(z);
        prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm());
    }

    #[test]
    fn hypergeometric_euler_transformation(
        a in -2.0f64..2.0, b in -2.0f64..2.0, cr in 0.5f64..3.0, ci in -1.0f64..1.0, x in -0.9f64..0.6
    ) {
        let (a, b, cc, z) = (c(a, 0.3), c(b, 0.0), c(cr, ci), c(x, 0.0));
        let lhs = hyp2f1(a, b, cc, z).unwrap();
        let rhs = (c(1.0, 0.0) - z).powc(cc - a - b) * hyp2f1(cc - a, cc - b, cc, z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + lhs.norm()));
    }
}
