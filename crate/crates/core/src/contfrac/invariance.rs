//! Invariance of the Gauss measure dt/(1+t) under the Gauss map, checked by
//! summing the integrals over the branches 1/(k+1) < t < 1/k.

use serde::Serialize;

use crate::numeric::li2_neg;
use crate::scalar::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TestFunction {
    /// f(t) = t
    Identity,
    /// f(t) = log(1/t)
    LogInverse,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceCheck {
    pub function: TestFunction,
    pub branches: usize,
    /// ∫₀¹ f(α(t)) dt/(1+t), branch sum plus tail midpoint.
    pub lhs: f64,
    /// ∫₀¹ f(t) dt/(1+t)
    pub rhs: f64,
    /// Half-width of the tail enclosure.
    pub tail_bound: f64,
}

impl InvarianceCheck {
    pub fn residual(&self) -> f64 {
        self.lhs - self.rhs
    }
}

/// 1 − c·log(1 + 1/c) = ∫₀¹ u/(c+u) du.
fn id_moment(c: f64) -> f64 {
    if c < 50.0 {
        return 1.0 - c * (1.0 / c).ln_1p();
    }
    // Σ_{j≥1} (−1)^{j+1} c^{−j}/(j+1)
    let y = 1.0 / c;
    let mut pow = y;
    let mut s = 0.0;
    for j in 1..12 {
        s += pow / (j as f64 + 1.0);
        pow *= -y;
    }
    s
}

/// ∫₀¹ f(u) du/((k+u)(k+u+1)): the contribution of branch k.
pub fn branch_integral(f: TestFunction, k: u64) -> f64 {
    let k = k as f64;
    match f {
        TestFunction::Identity => id_moment(k) - id_moment(k + 1.0),
        // ∫₀¹ log(1/u)/(c+u) du = −Li₂(−1/c)
        TestFunction::LogInverse => -li2_neg(1.0 / k) + li2_neg(1.0 / (k + 1.0)),
    }
}

pub fn gauss_invariance(f: TestFunction, branches: usize) -> InvarianceCheck {
    let mut s = CompensatedSum::new();
    for k in 1..=branches as u64 {
        s.add(branch_integral(f, k));
    }
    // Tail Σ_{k>N} ∫f/((k+u)(k+u+1)) = ∫₀¹ f(u)/(N+1+u) du, which lies
    // between ∫f/(N+2) and ∫f/(N+1).
    let mass = match f {
        TestFunction::Identity => 0.5,
        TestFunction::LogInverse => 1.0,
    };
    let n = branches as f64;
    let (lo, hi) = (mass / (n + 2.0), mass / (n + 1.0));
    s.add(0.5 * (lo + hi));
    let rhs = match f {
        TestFunction::Identity => 1.0 - std::f64::consts::LN_2,
        TestFunction::LogInverse => std::f64::consts::PI.powi(2) / 12.0,
    };
    InvarianceCheck { function: f, branches, lhs: s.value(), rhs, tail_bound: 0.5 * (hi - lo) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{gauss_kronrod, QuadOptions};

    #[test]
    fn branches_match_quadrature() {
        let opts = QuadOptions { abs_tol: 1e-14, max_level: 40, ..Default::default() };
        for k in [1u64, 2, 7, 100] {
            let kf = k as f64;
            let id = gauss_kronrod(|u: f64| u / ((kf + u) * (kf + u + 1.0)), &[0.0, 1.0], opts).value;
            assert!((branch_integral(TestFunction::Identity, k) - id).abs() < 1e-14);
            let lg = gauss_kronrod(
                |u: f64| if u > 0.0 { -u.ln() / ((kf + u) * (kf + u + 1.0)) } else { 0.0 },
                &[0.0, 1.0],
                opts,
            )
            .value;
            assert!((branch_integral(TestFunction::LogInverse, k) - lg).abs() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn invariance_holds() {
        for f in [TestFunction::Identity, TestFunction::LogInverse] {
            let c = gauss_invariance(f, 100_000);
            assert!(c.residual().abs() < 1e-6, "{f:?}: {}", c.residual());
        }
    }
}
