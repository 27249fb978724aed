use num_complex::Complex64;

use super::kernel::MaassRadial;
use super::HyperbolicPoint;
use crate::error::{Error, Result};
use crate::quad::{integrate_breaks, QuadConfig};
use crate::specfun::{arccot, HpParams};

/// HP transition density g_t(x₀, w) in the Y clock built from the Maass
/// kernel with imaginary magnetic field:
/// g_t = e^{(1−4μ²)t/8 − ν²t/2} ∫₀^∞ y^{μ−3/2} Q_{t,iν}(i, (w − x₀y) + iy) dy.
#[derive(Debug, Clone)]
pub struct HeatKernelDensity {
    params: HpParams,
    t: f64,
    main: MaassRadial,
    alt: MaassRadial,
    cfg: QuadConfig,
}

impl HeatKernelDensity {
    pub fn new(params: HpParams, t: f64, cfg: &QuadConfig) -> Result<Self> {
        if !(t > 0.0) {
            return Err(Error::Domain(format!("time must be positive, got {t}")));
        }
        let nu = params.nu();
        let inner = cfg.with_rel_tol(cfg.rel_tol.min(1e-10));
        Ok(Self {
            params,
            t,
            main: MaassRadial::new(t, Complex64::new(0.0, nu), &inner),
            alt: MaassRadial::new(t, Complex64::new(0.0, -nu), &inner),
            cfg: *cfg,
        })
    }

    pub fn params(&self) -> HpParams {
        self.params
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    fn eta_breaks(&self) -> [f64; 5] {
        let l = 12.0 + (2.0 * self.t * (1.0 / self.cfg.tail_cutoff_epsilon).ln()).sqrt();
        [-l, -2.0, 0.0, 2.0, l]
    }

    fn y_integral(&self, rad: &MaassRadial, exponent: f64, x0: f64, w: f64) -> Result<f64> {
        let mut err = None;
        let f = |eta: f64| -> f64 {
            if err.is_some() {
                return 0.0;
            }
            let y = eta.exp();
            let p = match HyperbolicPoint::new(w - x0 * y, y) {
                Ok(p) => p,
                Err(e) => {
                    err = Some(e);
                    return 0.0;
                }
            };
            match rad.kernel_at(p) {
                Ok(q) => (exponent * eta).exp() * q.re,
                Err(e) => {
                    err = Some(e);
                    0.0
                }
            }
        };
        let est = integrate_breaks(f, &self.eta_breaks(), &self.cfg);
        if let Some(e) = err {
            return Err(e);
        }
        Ok(est?.value)
    }

    fn time_factor(&self) -> f64 {
        let (mu, nu, t) = (self.params.mu(), self.params.nu(), self.t);
        ((1.0 - 4.0 * mu * mu) * t / 8.0 - nu * nu * t / 2.0).exp()
    }

    /// Main representation.
    pub fn density(&self, x0: f64, w: f64) -> Result<f64> {
        let mu = self.params.mu();
        Ok(self.time_factor() * self.y_integral(&self.main, mu - 0.5, x0, w)?)
    }

    /// Alternate representation through the (1−μ, −ν) kernel and the speed
    /// measure ratio.
    pub fn density_alt(&self, x0: f64, w: f64) -> Result<f64> {
        let (mu, nu) = (self.params.mu(), self.params.nu());
        let side = |u: f64| (2.0 * nu * arccot(u)).exp() * (1.0 + u * u).powf(0.5 - mu);
        let ratio = side(x0) / side(w);
        Ok(self.time_factor() * ratio * self.y_integral(&self.alt, 0.5 - mu, x0, w)?)
    }
}

/// g_t(x₀, w) from the Maass kernel; `alt` selects the alternate form.
pub fn hp_density_integral(params: HpParams, t: f64, x0: f64, w: f64, alt: bool, cfg: &QuadConfig) -> Result<f64> {
    let d = HeatKernelDensity::new(params, t, cfg)?;
    if alt {
        d.density_alt(x0, w)
    } else {
        d.density(x0, w)
    }
}
