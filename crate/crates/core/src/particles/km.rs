use nalgebra::DMatrix;

use super::params::{lambda_sn, vandermonde, ParticleParams, ParticleState};
use crate::error::{Error, Result};
use crate::maass::{HeatKernelDensity, CLOCK_RATIO};
use crate::quad::{composite_gauss, QuadConfig};

/// Determinant by LU with partial pivoting, flagged as singular when it is
/// below 1e−13 times the product of the row norms.
pub(crate) fn checked_det(m: DMatrix<f64>) -> Result<f64> {
    let scale: f64 = m.row_iter().map(|r| r.norm()).product();
    let det = m.lu().determinant();
    if !(det.abs() >= 1e-13 * scale) {
        return Err(Error::SingularDeterminant { det, scale });
    }
    Ok(det)
}

/// Karlin–McGregor transition density of the particle system with an
/// explicit clock constant c: e^{−λt} V(y)/V(x) det[g_{ct}(x_n, y_j)].
#[derive(Debug, Clone)]
pub struct KmKernel {
    pp: ParticleParams,
    t: f64,
    clock: f64,
    one: HeatKernelDensity,
}

impl KmKernel {
    pub fn new(pp: ParticleParams, t: f64, cfg: &QuadConfig) -> Result<Self> {
        Self::with_clock(pp, t, CLOCK_RATIO, cfg)
    }

    pub fn with_clock(pp: ParticleParams, t: f64, clock: f64, cfg: &QuadConfig) -> Result<Self> {
        if !(clock > 0.0) {
            return Err(Error::Domain(format!("clock constant must be positive, got {clock}")));
        }
        let one = HeatKernelDensity::new(pp.one_particle(), clock * t, cfg)?;
        Ok(Self { pp, t, clock, one })
    }

    pub fn params(&self) -> ParticleParams {
        self.pp
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn clock(&self) -> f64 {
        self.clock
    }

    /// One-particle density g_{ct}(x, y) in HP coordinates.
    pub fn one_particle(&self, x: f64, y: f64) -> Result<f64> {
        self.one.density(x, y)
    }

    fn check(&self, x: &ParticleState, y: &ParticleState) -> Result<()> {
        let n = self.pp.n();
        if x.len() != n || y.len() != n {
            return Err(Error::Domain(format!("states must have {n} particles")));
        }
        Ok(())
    }

    pub fn density(&self, x: &ParticleState, y: &ParticleState) -> Result<f64> {
        self.check(x, y)?;
        let n = self.pp.n();
        let (xs, ys) = (x.as_slice(), y.as_slice());
        let mut entries = Vec::with_capacity(n * n);
        for &xn in xs {
            for &yj in ys {
                entries.push(self.one.density(xn, yj)?);
            }
        }
        let det = checked_det(DMatrix::from_row_slice(n, n, &entries))?;
        Ok((-lambda_sn(&self.pp) * self.t).exp() * vandermonde(ys) / vandermonde(xs) * det)
    }

    /// One-particle densities y ↦ g(x_n, y) tabulated on u = sinh η nodes,
    /// for chamber integrals of the two-particle kernel.
    pub fn table(&self, x: &ParticleState, eta_max: f64, panel: f64) -> Result<KmTable> {
        if self.pp.n() != 2 || x.len() != 2 {
            return Err(Error::Domain("chamber tables are implemented for N = 2".into()));
        }
        let panels = (2.0 * eta_max / panel).ceil() as usize;
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for (eta, w) in composite_gauss(-eta_max, eta_max, panels, 8) {
            nodes.push(eta.sinh());
            weights.push(w * eta.cosh());
        }
        let xs = x.as_slice();
        let f = [0, 1]
            .iter()
            .map(|&k| nodes.iter().map(|&y| self.one.density(xs[k], y)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let pref = (-lambda_sn(&self.pp) * self.t).exp() / vandermonde(xs);
        Ok(KmTable { nodes, weights, f, pref, eta_max, panels })
    }
}

/// Two-particle kernel on a tensor grid: G(y₁, y₂) = C (y₁−y₂)
/// (f₁(y₁)f₂(y₂) − f₁(y₂)f₂(y₁)), symmetric under y₁ ↔ y₂.
#[derive(Debug, Clone)]
pub struct KmTable {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    f: Vec<Vec<f64>>,
    pref: f64,
    eta_max: f64,
    panels: usize,
}

impl KmTable {
    fn kernel(&self, i: usize, j: usize) -> f64 {
        let (f1, f2) = (&self.f[0], &self.f[1]);
        self.pref * (self.nodes[i] - self.nodes[j]) * (f1[i] * f2[j] - f1[j] * f2[i])
    }

    /// ∫_{y₁>y₂} G as half the tensor-product integral over the square,
    /// which avoids resolving the ordering indicator.
    pub fn chamber_mass(&self) -> f64 {
        let n = self.nodes.len();
        let mut total = 0.0;
        for i in 0..n {
            let mut row = 0.0;
            for j in 0..n {
                row += self.weights[j] * self.kernel(i, j);
            }
            total += self.weights[i] * row;
        }
        0.5 * total
    }

    /// CDFs of the top and bottom particle at the panel edges.
    ///
    /// P(y₁ ≤ c) = C (Q₁P₂ − P₁Q₂)(c) with P_k(c) = ∫_{−∞}^c f_k and
    /// Q_k(c) = ∫_{−∞}^c y f_k; the bottom particle uses the upper tails.
    pub fn marginal_cdfs(&self) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
        let per = self.nodes.len() / self.panels;
        let h = 2.0 * self.eta_max / self.panels as f64;
        let mut edges = vec![-self.eta_max];
        let mut lower = vec![[0.0f64; 4]];
        let mut acc = [0.0f64; 4];
        for p in 0..self.panels {
            for i in p * per..(p + 1) * per {
                let (y, w) = (self.nodes[i], self.weights[i]);
                acc[0] += w * self.f[0][i];
                acc[1] += w * y * self.f[0][i];
                acc[2] += w * self.f[1][i];
                acc[3] += w * y * self.f[1][i];
            }
            edges.push(-self.eta_max + (p + 1) as f64 * h);
            lower.push(acc);
        }
        let total = acc;
        let top = lower.iter().map(|a| self.pref * (a[1] * a[2] - a[0] * a[3])).collect();
        let bottom = lower
            .iter()
            .map(|a| {
                let up = [total[0] - a[0], total[1] - a[1], total[2] - a[2], total[3] - a[3]];
                1.0 - self.pref * (up[1] * up[2] - up[0] * up[3])
            })
            .collect();
        (edges, top, bottom)
    }
}

/// e^{−λt} V(y)/V(x) det[g_{2t}(x_n, y_j)] with g from the Maass route.
pub fn km_density(pp: ParticleParams, t: f64, x: &ParticleState, y: &ParticleState, cfg: &QuadConfig) -> Result<f64> {
    KmKernel::new(pp, t, cfg)?.density(x, y)
}
