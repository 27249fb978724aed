use hpk::particles::*;
use hpk::quad::{QuadConfig, RngStream};
use hpk::specfun::ferrer_p;
use hpk::spectral::integrate_sinh;
use hpk::stochastic::{simulate_particles, McConfig};
use num_complex::Complex64;
use proptest::prelude::*;

fn cfg() -> QuadConfig {
    QuadConfig::default()
}

fn state(x: &[f64]) -> ParticleState {
    ParticleState::new(x.to_vec()).unwrap()
}

#[test]
fn clock_exponent_examples() {
    assert_eq!(lambda_sn(&ParticleParams::new(0.7, 0.0, 1).unwrap()), 0.0);
    assert_eq!(lambda_sn(&ParticleParams::new(0.0, 0.0, 2).unwrap()), -2.0);
    assert_eq!(lambda_sn(&ParticleParams::new(1.0, 0.3, 3).unwrap()), -16.0);
}

#[test]
fn states_must_be_ordered() {
    assert!(ParticleState::new(vec![0.0, 1.0]).is_err());
    assert!(ParticleState::new(vec![1.0, 1.0]).is_err());
    assert_eq!(ParticleState::from_unordered(vec![-1.0, 2.0, 0.5]).unwrap().as_slice(), &[2.0, 0.5, -1.0]);
}

#[test]
fn single_particle_legendre_determinant() {
    let (alpha, mu, x) = (1.7, Complex64::new(0.4, 0.3), 0.8);
    let d = multivar_legendre_det(alpha, &[mu], &[x]).unwrap();
    let p = ferrer_p(alpha, -mu, -x / (1.0f64 + x * x).sqrt()).unwrap();
    assert!((d - p).norm() < 1e-12 * p.norm());
}

#[test]
fn legendre_determinant_coincidence_limit() {
    let mus = [Complex64::new(0.9, 0.0), Complex64::new(0.2, 0.5)];
    let at = |e: f64| multivar_legendre_det(1.4, &mus, &[0.3 + e, 0.3 - e]).unwrap();
    let (a, b) = (at(1e-2), at(1e-3));
    assert!(a.norm().is_finite() && b.norm() > 1e-6);
    assert!((a - b).norm() < 1e-3 * b.norm());
}

#[test]
fn density_vanishes_at_collision() {
    let pp = ParticleParams::new(0.25, 0.0, 2).unwrap();
    let k = KmKernel::new(pp, 0.5, &cfg()).unwrap();
    let x = state(&[1.0, -1.0]);
    let at = |e: f64| k.density(&x, &state(&[0.2 + e, 0.2 - e])).unwrap();
    let (a, b) = (at(0.1), at(0.01));
    assert!(b < 0.2 * a, "{a} {b}");
}

#[test]
fn invariant_mass_examples() {
    let one = invariant_normalize(&ParticleParams::new(0.5, 0.0, 1).unwrap(), &cfg()).unwrap();
    assert!((one - 2.0).abs() < 1e-8);
    assert!(invariant_normalize(&ParticleParams::new(0.5, 0.0, 3).unwrap(), &cfg()).is_err());
}

#[test]
fn invariant_density_is_stationary() {
    let pp = ParticleParams::new(0.25, 0.0, 1).unwrap();
    let k = KmKernel::new(pp, 0.5, &cfg()).unwrap();
    for &y in &[-1.0, 0.0, 0.7] {
        let pushed = integrate_sinh(
            |x| Ok(invariant_density(&pp, &state(&[x])) * k.density(&state(&[x]), &state(&[y]))?),
            1.5,
            &cfg(),
        )
        .unwrap();
        let want = invariant_density(&pp, &state(&[y]));
        assert!((pushed - want).abs() < 2e-2 * want, "y={y}: {pushed} vs {want}");
    }
}

#[test]
fn spectral_and_kernel_routes_agree() {
    let pp = ParticleParams::new(0.25, 0.0, 2).unwrap();
    let (x, y) = (state(&[0.5, -0.8]), state(&[1.2, 0.1]));
    let a = km_density(pp, 0.7, &x, &y, &cfg()).unwrap();
    let s = particles_density_spectral(pp, 0.7, &x, &y, &cfg()).unwrap();
    assert!((s.det_form - a).abs() < 1e-2 * a);
    assert!(s.relative_gap() < 1e-2);
}

#[test]
fn particle_paths_stay_ordered_and_reproducible() {
    let pp = ParticleParams::new(0.25, 0.1, 3).unwrap();
    let x = state(&[1.0, 0.0, -1.0]);
    let run = || simulate_particles(&pp, &x, 0.5, 400, &mut RngStream::new(12, 0)).unwrap();
    let a = run();
    assert_eq!(a, run());
    assert!(a.as_slice().windows(2).all(|w| w[0] > w[1]));
    let many = hpk::stochastic::simulate_particles_many(&pp, &x, 0.5, &McConfig::new(64, 200, 3)).unwrap();
    assert_eq!(many.len(), 64);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vandermonde_is_alternating(xs in prop::collection::vec(-5.0f64..5.0, 2..6), i in 0usize..6, j in 0usize..6) {
        let (i, j) = (i % xs.len(), j % xs.len());
        prop_assume!(i != j);
        let mut ys = xs.clone();
        ys.swap(i, j);
        let (a, b) = (vandermonde(&xs), vandermonde(&ys));
        prop_assert!((a + b).abs() <= 1e-12 * a.abs().max(1e-300));
    }

    #[test]
    fn clock_exponent_formula(s in 0.0f64..3.0, n in 1usize..6) {
        let pp = ParticleParams::new(s, 0.0, n).unwrap();
        let nf = n as f64;
        let want = nf * (nf - 1.0) * (1.0 - 2.0 * nf - 3.0 * s) / 3.0;
        prop_assert!((lambda_sn(&pp) - want).abs() <= 1e-12 * (1.0 + want.abs()));
    }

    #[test]
    fn legendre_determinant_is_symmetric(a in -2.0f64..2.0, b in -2.0f64..2.0, m1 in 0.1f64..1.0, m2 in -0.5f64..0.5) {
        prop_assume!((a - b).abs() > 1e-2);
        let mus = [Complex64::new(m1, 0.0), Complex64::new(0.3, m2)];
        let d1 = multivar_legendre_det(1.6, &mus, &[a, b]).unwrap();
        let d2 = multivar_legendre_det(1.6, &mus, &[b, a]).unwrap();
        prop_assert!((d1 - d2).norm() <= 1e-10 * d1.norm().max(1e-300));
    }
}
