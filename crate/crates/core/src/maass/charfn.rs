use num_complex::Complex64;

use super::density::HeatKernelDensity;
use super::theta::{theta_hw, THETA_MIN_T};
use crate::error::{Error, Result};
use crate::quad::{gauss_legendre, integrate, integrate_breaks, Domain, QuadConfig};
use crate::specfun::HpParams;

/// E_v[exp(iλ sinh Y_t)] in the Y clock, from
/// e^{−μ²t/2} ∫ dy e^{iλ sinh(v) e^y + μy} ∫₀^∞ dz e^{2iνz}/(2 sinh z)
/// · e^{−λ(1+e^y) coth z} θ_{2λe^{y/2}/sinh z}(t/4).
pub fn hp_charfn(params: HpParams, t: f64, v: f64, lambda: f64, cfg: &QuadConfig) -> Result<Complex64> {
    if lambda == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if lambda < 0.0 {
        return Ok(hp_charfn(params, t, v, -lambda, cfg)?.conj());
    }
    let tau = t / 4.0;
    if tau < THETA_MIN_T {
        return Err(Error::Domain(format!("characteristic function needs t >= {}", 4.0 * THETA_MIN_T)));
    }
    let (mu, nu) = (params.mu(), params.nu());
    let x0 = v.sinh();
    let big_l = (1.0 / cfg.tail_cutoff_epsilon).ln();
    // θ_r(τ) ≲ e^{−(ln r)²/2τ} for small r, which bounds the useful range of y
    let ln_r_floor = -(2.0 * tau * (big_l + 40.0)).sqrt();
    let theta_cfg = cfg.with_rel_tol(1e-10);
    let inner_cfg = QuadConfig::nested().with_rel_tol(1e-8).with_abs_tol(1e-15);

    let mut err = None;
    let mut inner = |y: f64| -> Complex64 {
        if err.is_some() {
            return Complex64::new(0.0, 0.0);
        }
        let ey = y.exp();
        let a = lambda * (1.0 + ey);
        if a >= big_l {
            return Complex64::new(0.0, 0.0);
        }
        let z_min = (a / big_l).atanh();
        let mut zerr = None;
        let f = |z: f64| -> Complex64 {
            if zerr.is_some() {
                return Complex64::new(0.0, 0.0);
            }
            let sh = z.sinh();
            let r = 2.0 * lambda * (0.5 * y).exp() / sh;
            if r.ln() < ln_r_floor {
                return Complex64::new(0.0, 0.0);
            }
            let decay = (-a / z.tanh()).exp();
            if decay == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            match theta_hw(r, tau, &theta_cfg) {
                Ok(th) => Complex64::from_polar(decay * th / (2.0 * sh), 2.0 * nu * z),
                Err(e) => {
                    zerr = Some(e);
                    Complex64::new(0.0, 0.0)
                }
            }
        };
        let z_max = big_l + 5.0;
        // the integrand peaks at z of order a when a is small
        let mut breaks = vec![z_min];
        let mut b = z_min.max(1e-3 * a).max(1e-12) * 4.0;
        while b < z_max {
            breaks.push(b);
            b *= 4.0;
        }
        breaks.push(z_max);
        let est = integrate_breaks(f, &breaks, &inner_cfg);
        if let Some(e) = zerr {
            err = Some(e);
            return Complex64::new(0.0, 0.0);
        }
        match est {
            Ok(e) => e.value * Complex64::from_polar((mu * y).exp(), lambda * x0 * ey),
            Err(e) => {
                err = Some(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };
    let y_hi = (big_l / lambda).ln() + 1.0;
    // near z_min, r ≈ 2L e^{y/2}/(1+e^y) whatever λ is
    let y_lo = 2.0 * (ln_r_floor - (2.0 * big_l).ln()) - 2.0;
    let est = integrate(&mut inner, Domain::Finite(y_lo, y_hi), &QuadConfig::nested().with_rel_tol(1e-7), false);
    if let Some(e) = err {
        return Err(e);
    }
    Ok(est?.value * (-mu * mu * t / 2.0).exp())
}

/// Fourier transform ∫ e^{iλu} g_t(sinh v, u) du of the heat-kernel density,
/// evaluated for several λ from one table of g on u = sinh y.
///
/// g(sinh y) cosh y is tabulated at Gauss nodes on panels covering
/// |y| ≤ `y_max` and interpolated in y, so the oscillatory integral can be
/// resolved without further density evaluations.
pub fn numeric_fourier(params: HpParams, t: f64, v: f64, lambdas: &[f64], y_max: f64, cfg: &QuadConfig) -> Result<Vec<Complex64>> {
    const ORDER: usize = 12;
    const PANEL: f64 = 0.5;
    let density = HeatKernelDensity::new(params, t, cfg)?;
    let x0 = v.sinh();
    let (nodes, _) = gauss_legendre(ORDER);
    let bary = barycentric_weights(&nodes);
    let n_panels = (2.0 * y_max / PANEL).ceil() as usize;
    let h = 2.0 * y_max / n_panels as f64;
    let mut table = Vec::with_capacity(n_panels);
    for p in 0..n_panels {
        let a = -y_max + p as f64 * h;
        let vals = nodes
            .iter()
            .map(|&s| {
                let y = a + 0.5 * h * (s + 1.0);
                Ok(density.density(x0, y.sinh())? * y.cosh())
            })
            .collect::<Result<Vec<f64>>>()?;
        table.push(vals);
    }
    let interp = |p: usize, s: f64| -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for (j, (&xj, &fj)) in nodes.iter().zip(&table[p]).enumerate() {
            let d = s - xj;
            if d == 0.0 {
                return fj;
            }
            let q = bary[j] / d;
            num += q * fj;
            den += q;
        }
        num / den
    };
    let (fine_x, fine_w) = gauss_legendre(16);
    Ok(lambdas
        .iter()
        .map(|&lam| {
            let mut acc = Complex64::new(0.0, 0.0);
            for p in 0..n_panels {
                let a = -y_max + p as f64 * h;
                let ymid = a + 0.5 * h;
                let speed = lam.abs() * (ymid.abs() + 0.5 * h).cosh();
                let sub = ((speed * h / 2.0).ceil() as usize).max(1);
                let hs = h / sub as f64;
                for q in 0..sub {
                    let b = a + q as f64 * hs;
                    for (&xf, &wf) in fine_x.iter().zip(&fine_w) {
                        let y = b + 0.5 * hs * (xf + 1.0);
                        let s = 2.0 * (y - a) / h - 1.0;
                        acc += Complex64::from_polar(interp(p, s) * wf * 0.5 * hs, lam * y.sinh());
                    }
                }
            }
            acc
        })
        .collect())
}

fn barycentric_weights(x: &[f64]) -> Vec<f64> {
    (0..x.len())
        .map(|j| 1.0 / x.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &xi)| x[j] - xi).product::<f64>())
        .collect()
}
