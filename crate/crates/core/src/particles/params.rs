use crate::error::{Error, Result};
use crate::specfun::HpParams;

/// Parameters of the N-particle HP system: the complex coupling s and N.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleParams {
    s_re: f64,
    s_im: f64,
    n: usize,
}

impl ParticleParams {
    pub fn new(s_re: f64, s_im: f64, n: usize) -> Result<Self> {
        if !(s_re > -0.5) || !s_im.is_finite() {
            return Err(Error::Domain(format!("particle system needs Re(s) > -1/2, got {s_re}")));
        }
        if n == 0 {
            return Err(Error::Domain("particle system needs N >= 1".into()));
        }
        Ok(Self { s_re, s_im, n })
    }

    pub fn s_re(&self) -> f64 {
        self.s_re
    }

    pub fn s_im(&self) -> f64 {
        self.s_im
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// One-particle HP parameters A = 1 − N − Re s, K = 2 Im s.
    pub fn one_particle(&self) -> HpParams {
        HpParams::from_ak(1.0 - self.n as f64 - self.s_re, 2.0 * self.s_im)
    }

    pub fn alpha(&self) -> f64 {
        self.n as f64 + self.s_re - 0.5
    }
}

/// Strictly decreasing particle positions x₁ > x₂ > … > x_N.
#[derive(Debug, Clone, PartialEq)]
pub struct ParticleState(Vec<f64>);

impl ParticleState {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.is_empty() || x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("particle state needs finite coordinates".into()));
        }
        if x.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Domain(format!("particle state must be strictly decreasing: {x:?}")));
        }
        Ok(Self(x))
    }

    /// Sorts into decreasing order; fails on ties.
    pub fn from_unordered(mut x: Vec<f64>) -> Result<Self> {
        x.sort_by(|a, b| b.total_cmp(a));
        Self::new(x)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

/// Vandermonde product Π_{i<j} (x_i − x_j).
pub fn vandermonde(x: &[f64]) -> f64 {
    let mut v = 1.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            v *= x[i] - x[j];
        }
    }
    v
}

/// λ_{s,N} = N(N−1)(1 − 2N − 3 Re s)/3.
pub fn lambda_sn(pp: &ParticleParams) -> f64 {
    let n = pp.n as f64;
    n * (n - 1.0) * (1.0 - 2.0 * n - 3.0 * pp.s_re) / 3.0
}
