use std::f64::consts::PI;

use num_complex::Complex64;

use super::{hyp_distance, HyperbolicPoint};
use crate::error::Result;
use crate::quad::{integrate, integrate_breaks, Domain, QuadConfig};

/// Radial part of the Maass heat kernel,
/// R(r) = ∫_r^∞ z e^{−z²/2t} cosh(2k·arccosh(cosh(z/2)/cosh(r/2))) / √(cosh z − cosh r) dz,
/// together with the prefactor √2 e^{−t/8 − k²t/2}/(2πt)^{3/2}.
#[derive(Debug, Clone)]
pub struct MaassRadial {
    t: f64,
    k: Complex64,
    prefactor: Complex64,
    cfg: QuadConfig,
}

impl MaassRadial {
    pub fn new(t: f64, k: Complex64, cfg: &QuadConfig) -> Self {
        let prefactor = ((k * k * (-t / 2.0)) - t / 8.0).exp() * (2.0f64.sqrt() / (2.0 * PI * t).powf(1.5));
        Self { t, k, prefactor, cfg: *cfg }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn k(&self) -> Complex64 {
        self.k
    }

    /// R(r) with the substitution z = r + s², which removes the inverse
    /// square-root singularity at z = r.
    pub fn radial(&self, r: f64) -> Result<Complex64> {
        let t = self.t;
        let k2 = 2.0 * self.k;
        let ch_r2 = (0.5 * r).cosh();
        let z_max = r + (2.0 * t * (1.0 / self.cfg.tail_cutoff_epsilon).ln()).sqrt() + 2.0 * t * self.k.re.abs() + 1.0;
        let s_max = (z_max - r).sqrt();
        let f = |s: f64| -> Complex64 {
            let s2 = s * s;
            let z = r + s2;
            // cosh(z/2)/cosh(r/2) − 1 without cancellation
            let d = 2.0 * (0.25 * (z + r)).sinh() * (0.25 * s2).sinh() / ch_r2;
            let a = (d + (d * (d + 2.0)).sqrt()).ln_1p();
            let h = 0.5 * s2;
            let sinhc = if h < 1e-8 { 1.0 + h * h / 6.0 } else { h.sinh() / h };
            let den = ((0.5 * (z + r)).sinh() * sinhc).sqrt();
            let base = if den == 0.0 { (2.0f64).sqrt() * s2.max(0.0) } else { 2.0 * z / den };
            (k2 * a).cosh() * (base * (-z * z / (2.0 * t)).exp())
        };
        Ok(integrate(f, Domain::Finite(0.0, s_max), &self.cfg, false)?.value)
    }

    /// Q_{t,k}(i, p).
    pub fn kernel_at(&self, p: HyperbolicPoint) -> Result<Complex64> {
        let r = hyp_distance(p);
        Ok(self.phase(p) * self.prefactor * self.radial(r)?)
    }

    /// e^{ik(2 arg(w + (y+1)i) − π)}
    pub fn phase(&self, p: HyperbolicPoint) -> Complex64 {
        (Complex64::i() * self.k * (2.0 * p.phase_angle() - PI)).exp()
    }

    pub fn prefactor(&self) -> Complex64 {
        self.prefactor
    }
}

/// Semigroup kernel Q_{t,k}(i, p) of the Maass Laplacian.
pub fn maass_q(t: f64, k: Complex64, p: HyperbolicPoint, cfg: &QuadConfig) -> Result<Complex64> {
    MaassRadial::new(t, k, cfg).kernel_at(p)
}

/// ∫_ℍ y^s Q_{t,k}(i, w + iy) dw dy / y², computed in geodesic polar
/// coordinates around i where the measure is sinh r dr dφ.
pub fn maass_moment(s: f64, k: Complex64, t: f64, cfg: &QuadConfig) -> Result<Complex64> {
    let rad = MaassRadial::new(t, k, cfg);
    let inner_cfg = QuadConfig::nested();
    let r_max = (2.0 * t * (1.0 / cfg.tail_cutoff_epsilon).ln()).sqrt() + 2.0 * t * (s.abs() + k.re.abs() + 1.0) + 2.0;
    let mut err = None;
    let outer = |r: f64| -> Complex64 {
        if r == 0.0 || err.is_some() {
            return Complex64::new(0.0, 0.0);
        }
        let radial = match rad.radial(r) {
            Ok(q) => q,
            Err(e) => {
                err = Some(e);
                return Complex64::new(0.0, 0.0);
            }
        };
        // the angular integral is at most 2π e^{|s − 1/2| r}
        if radial.norm() * r.sinh() * ((s - 0.5).abs() * r).exp() < 1e-30 {
            return Complex64::new(0.0, 0.0);
        }
        let er = r.exp();
        let (one_m, one_p) = (2.0 / (er + 1.0), 2.0 * er / (er + 1.0));
        let rho = (0.5 * r).tanh();
        let point = |phi: f64| -> (HyperbolicPoint, f64) {
            let sn = phi.sin();
            let h = (0.5 * phi).sin();
            let den = one_m * one_m + 4.0 * rho * h * h;
            let y = one_m * one_p / den;
            let w = -2.0 * rho * sn / den;
            (HyperbolicPoint::new(w, y).expect("disc image lies in the upper half-plane"), y)
        };
        // y ≤ 1 on |φ| ≥ φ_c; on |φ| < φ_c switch to ψ with dψ = y dφ
        let phi_c = 2.0 * (0.5 * one_m).sqrt().asin();
        let squeeze = one_m / one_p;
        let psi_c = 2.0 * ((0.5 * phi_c).tan() / squeeze).atan();
        let near = |psi: f64| -> Complex64 {
            let (p, y) = point(2.0 * (squeeze * (0.5 * psi).tan()).atan());
            rad.phase(p) * y.powf(s - 1.0)
        };
        let far = |phi: f64| -> Complex64 {
            let (p, y) = point(phi);
            rad.phase(p) * y.powf(s)
        };
        let ang = integrate_breaks(near, &[-psi_c, 0.0, psi_c], &inner_cfg).and_then(|a| {
            let b = integrate_breaks(far, &[phi_c, PI], &inner_cfg)?;
            let c = integrate_breaks(far, &[-PI, -phi_c], &inner_cfg)?;
            Ok(crate::quad::Estimate { value: a.value + b.value + c.value, error_bound: a.error_bound + b.error_bound + c.error_bound })
        });
        match ang {
            Ok(a) => a.value * radial * r.sinh(),
            Err(e) => {
                err = Some(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let total = integrate(outer, Domain::Finite(0.0, r_max), &QuadConfig::nested(), false);
    if let Some(e) = err {
        return Err(e);
    }
    Ok(total?.value * rad.prefactor())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_is_a_probability_density_for_k_zero() {
        let cfg = QuadConfig::default();
        let m = maass_moment(0.0, Complex64::new(0.0, 0.0), 1.0, &cfg).unwrap();
        assert!((m.re - 1.0).abs() < 1e-6 && m.im.abs() < 1e-8, "{m}");
    }

    #[test]
    fn radial_vs_direct_form() {
        let cfg = QuadConfig::default();
        let (t, r) = (0.8f64, 1.3f64);
        let rad = MaassRadial::new(t, Complex64::new(0.7, 0.0), &cfg);
        let direct = |z: f64| {
            if z <= r || z > 50.0 {
                return 0.0;
            }
            let a = ((0.5 * z).cosh() / (0.5 * r).cosh()).acosh();
            z * (-z * z / (2.0 * t)).exp() * (1.4 * a).cosh() / (z.cosh() - r.cosh()).sqrt()
        };
        let want = integrate(direct, Domain::HalfLine(r), &cfg, true).unwrap().value;
        let got = rad.radial(r).unwrap();
        assert!((got.re - want).abs() < 1e-8 * want && got.im.abs() < 1e-12, "{got} {want}");
    }
}
