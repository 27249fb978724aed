//! Heat-kernel route: the Hartman–Watson function, the semigroup kernel of
//! the Maass Laplacian on the upper half-plane (analytically continued in
//! k), and the integral representations of the HP density and of its
//! characteristic function built from them.

mod charfn;
mod density;
mod kernel;
mod theta;

use crate::error::{Error, Result};

pub use charfn::{hp_charfn, numeric_fourier};
pub use density::{hp_density_integral, HeatKernelDensity};
pub use kernel::{maass_moment, maass_q, MaassRadial};
pub use theta::{theta_hw, theta_hw_direct};

/// Ratio between the (μ, ν) clock of the kernel route and the HP clock:
/// g_t = q_{t/CLOCK_RATIO}.
pub const CLOCK_RATIO: f64 = 2.0;

/// A point w + iy of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolicPoint {
    w: f64,
    y: f64,
}

impl HyperbolicPoint {
    pub fn new(w: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !w.is_finite() || !y.is_finite() {
            return Err(Error::Domain(format!("{w} + {y}i is not in the upper half-plane")));
        }
        Ok(Self { w, y })
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// cosh(d(i, p)) − 1 = (w² + (y−1)²)/(2y).
    pub fn cosh_distance_m1(&self) -> f64 {
        (self.w * self.w + (self.y - 1.0) * (self.y - 1.0)) / (2.0 * self.y)
    }

    /// arg(w + (y+1)i) ∈ (0, π).
    pub fn phase_angle(&self) -> f64 {
        (self.y + 1.0).atan2(self.w)
    }
}

/// Hyperbolic distance from i to `p`.
pub fn hyp_distance(p: HyperbolicPoint) -> f64 {
    let d = p.cosh_distance_m1();
    (d + (d * (d + 2.0)).sqrt()).ln_1p()
}
