//! Adaptive Gauss–Kronrod (7/15) integration with a global error heap.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{Estimate, QuadConfig, QuadValue};
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel with its embedded 7-point Gauss estimate.
pub(crate) fn gk15<T: QuadValue, F: FnMut(f64) -> T>(f: &mut F, a: f64, b: f64) -> (T, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k = k + s * WGK[j];
        if j % 2 == 1 {
            g = g + s * WG[j / 2];
        }
    }
    let k = k * h;
    let g = g * h;
    let err = (k - g).norm();
    (k, err)
}

struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    err: f64,
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Adaptive bisection of the panels with the largest error until the summed
/// error drops below max(abs_tol, rel_tol·|value|).
pub(crate) fn adaptive<T: QuadValue, F: FnMut(f64) -> T>(
    mut f: F,
    breaks: &[f64],
    cfg: &QuadConfig,
) -> Result<Estimate<T>> {
    let mut heap = BinaryHeap::new();
    let mut total = T::zero();
    let mut total_err = 0.0;
    for w in breaks.windows(2) {
        if w[1] == w[0] {
            continue;
        }
        let (v, e) = gk15(&mut f, w[0], w[1]);
        total = total + v;
        total_err += e;
        heap.push(Panel { a: w[0], b: w[1], value: v, err: e });
    }
    let mut splits = 0;
    loop {
        let tol = cfg.abs_tol.max(cfg.rel_tol * total.norm());
        if total_err <= tol || heap.is_empty() {
            return Ok(Estimate { value: total, error_bound: total_err });
        }
        if splits >= cfg.max_subdivisions {
            return Err(Error::Quadrature { error: total_err, tol });
        }
        let p = heap.pop().expect("non-empty heap");
        let m = 0.5 * (p.a + p.b);
        if m <= p.a || m >= p.b {
            // interval cannot be split further in floating point
            return Ok(Estimate { value: total, error_bound: total_err });
        }
        let (v1, e1) = gk15(&mut f, p.a, m);
        let (v2, e2) = gk15(&mut f, m, p.b);
        total = total - p.value + v1 + v2;
        total_err += e1 + e2 - p.err;
        heap.push(Panel { a: p.a, b: m, value: v1, err: e1 });
        heap.push(Panel { a: m, b: p.b, value: v2, err: e2 });
        splits += 1;
        if splits % 64 == 0 {
            // refresh the running error to shed accumulated rounding
            total_err = heap.iter().map(|p| p.err).sum();
            total = heap.iter().fold(T::zero(), |acc, p| acc + p.value);
        }
    }
}
