//! Adaptive Gauss–Kronrod (7/15) quadrature and Gauss–Legendre rules.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::scalar::{CompensatedSum, Real};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub abs_tol: f64,
    /// Maximum bisection depth below each initial panel.
    pub max_level: u32,
    pub max_panels: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self { abs_tol: 1e-10, max_level: 20, max_panels: 20_000 }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult<R> {
    pub value: R,
    pub err: R,
    pub evals: usize,
    pub panels: usize,
}

struct Panel<R> {
    a: R,
    b: R,
    value: R,
    err: f64,
    level: u32,
}

impl<R> PartialEq for Panel<R> {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl<R> Eq for Panel<R> {}
impl<R> PartialOrd for Panel<R> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl<R> Ord for Panel<R> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

fn gk15<R: Real, F: FnMut(R) -> R>(f: &mut F, a: R, b: R) -> (R, R) {
    let half = (b - a) / R::lit(2.0);
    let c = a + half;
    let fc = f(c);
    let mut rk = fc * R::lit(WGK[7]);
    let mut rg = fc * R::lit(WG[3]);
    for j in 0..7 {
        let dx = half * R::lit(XGK[j]);
        let s = f(c - dx) + f(c + dx);
        rk += s * R::lit(WGK[j]);
        if j % 2 == 1 {
            rg += s * R::lit(WG[j / 2]);
        }
    }
    let value = rk * half;
    let err = ((rk - rg) * half).abs();
    (value, err)
}

/// Integrate `f` over the union of the panels delimited by `breaks`
/// (sorted, at least two entries).
pub fn gauss_kronrod<R: Real, F: FnMut(R) -> R>(
    mut f: F,
    breaks: &[R],
    opts: QuadOptions,
) -> QuadResult<R> {
    assert!(breaks.len() >= 2, "need at least one panel");
    let mut heap = BinaryHeap::new();
    let mut evals = 0usize;
    for w in breaks.windows(2) {
        if w[1] <= w[0] {
            continue;
        }
        let (value, err) = gk15(&mut f, w[0], w[1]);
        evals += 15;
        heap.push(Panel { a: w[0], b: w[1], value, err: err.to_f64().unwrap_or(f64::MAX), level: 0 });
    }
    let total_err = |h: &BinaryHeap<Panel<R>>| h.iter().map(|p| p.err).sum::<f64>();
    let mut err_sum = total_err(&heap);
    let mut frozen: Vec<Panel<R>> = Vec::new();
    while err_sum > opts.abs_tol && heap.len() + frozen.len() < opts.max_panels {
        let Some(worst) = heap.pop() else { break };
        if worst.level >= opts.max_level {
            frozen.push(worst);
            continue;
        }
        let m = worst.a + (worst.b - worst.a) / R::lit(2.0);
        let (v1, e1) = gk15(&mut f, worst.a, m);
        let (v2, e2) = gk15(&mut f, m, worst.b);
        evals += 30;
        let (e1, e2) = (e1.to_f64().unwrap_or(f64::MAX), e2.to_f64().unwrap_or(f64::MAX));
        err_sum += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: m, value: v1, err: e1, level: worst.level + 1 });
        heap.push(Panel { a: m, b: worst.b, value: v2, err: e2, level: worst.level + 1 });
    }
    let mut panels: Vec<Panel<R>> = heap.into_vec();
    panels.extend(frozen);
    panels.sort_by(|x, y| x.a.partial_cmp(&y.a).unwrap_or(Ordering::Equal));
    let value = panels.iter().map(|p| p.value).collect::<CompensatedSum<R>>().value();
    let err: f64 = panels.iter().map(|p| p.err).sum();
    QuadResult { value, err: R::lit(err), evals, panels: panels.len() }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [−1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { z } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (z * pn - pm) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_exact() {
        let r = gauss_kronrod(|x: f64| x.powi(6) - 3.0 * x, &[0.0, 2.0], QuadOptions::default());
        assert!((r.value - (128.0 / 7.0 - 6.0)).abs() < 1e-13);
    }

    #[test]
    fn log_singularity() {
        let opts = QuadOptions { abs_tol: 1e-12, max_level: 60, ..Default::default() };
        let r = gauss_kronrod(|x: f64| if x > 0.0 { x.ln() } else { 0.0 }, &[0.0, 1.0], opts);
        assert!((r.value + 1.0).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn f32_works() {
        let r = gauss_kronrod(|x: f32| x.sin(), &[0.0, std::f32::consts::PI], QuadOptions::default());
        assert!((r.value - 2.0).abs() < 1e-5);
    }

    #[test]
    fn legendre_rule() {
        for n in [1, 2, 5, 12] {
            let (x, w) = gauss_legendre(n);
            let s: f64 = w.iter().sum();
            assert!((s - 2.0).abs() < 1e-13);
            let deg = 2 * n - 2;
            let m: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
            assert!((m - 2.0 / (deg as f64 + 1.0)).abs() < 1e-12);
        }
    }
}
