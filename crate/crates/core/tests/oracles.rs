//! Values checked against closed forms and brute-force computations that
//! share no code with the library routines.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use wiltonlab_core::autocorr::{a_direct, a_one, a_via_series, f_aux};
use wiltonlab_core::bernoulli::{landau_inner, phi2, phi2_via_integral};
use wiltonlab_core::contfrac::{gauss_invariance, CfExpansion, TestFunction};
use wiltonlab_core::divisor::{divisor_summatory, tau_sieve};
use wiltonlab_core::numeric::digamma;
use wiltonlab_core::special::{brjuno, hurwitz_zeta3, phi1_rational, wilton, wilton_rational};
use wiltonlab_core::Rational;

const EULER: f64 = 0.577_215_664_901_532_9;
const ZETA2: f64 = PI * PI / 6.0;
const ZETA3: f64 = 1.202_056_903_159_594_3;
const GOLDEN: f64 = 1.618_033_988_749_895;

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// ψ'(x) by recurrence up to x ≥ 20 and the asymptotic series.
fn trigamma(mut x: f64) -> f64 {
    let mut s = 0.0;
    while x < 20.0 {
        s += 1.0 / (x * x);
        x += 1.0;
    }
    let z = 1.0 / x;
    let z2 = z * z;
    s + z + z2 / 2.0 + z2 * z / 6.0 - z2 * z2 * z / 30.0 + z2 * z2 * z2 * z / 42.0
}

fn b2(t: f64) -> f64 {
    let f = t - t.floor();
    f * f - f + 1.0 / 6.0
}

/// φ₂(p/q) = q⁻² Σ_{j=1}^{q} B₂(jp/q) ψ'(j/q).
fn phi2_oracle(p: u64, q: u64) -> f64 {
    (1..=q).map(|j| b2((j * p % q) as f64 / q as f64) * trigamma(j as f64 / q as f64)).sum::<f64>() / (q * q) as f64
}

#[test]
fn phi2_at_rationals() {
    for (p, q) in [(0, 1), (1, 2), (1, 3), (2, 5), (3, 7), (5, 12)] {
        let x = p as f64 / q as f64;
        let want = phi2_oracle(p, q);
        let a = phi2(x, 1e-8).unwrap();
        let b = phi2_via_integral(x, 1e-8).unwrap();
        assert!((a.value - want).abs() <= a.tail_bound + 1e-12, "phi2({p}/{q})");
        assert!((b.value - want).abs() <= b.tail_bound + 1e-12, "phi2_via_integral({p}/{q})");
    }
    assert!((phi2_oracle(0, 1) - ZETA2 / 6.0).abs() < 1e-12);
    assert!((phi2_oracle(1, 2) + ZETA2 / 48.0).abs() < 1e-12);
}

#[test]
fn phi1_at_small_rationals() {
    assert!(phi1_rational(&rat(1, 2)).abs() < 1e-15);
    let third = -PI / (18.0 * 3f64.sqrt());
    assert!((phi1_rational(&rat(1, 3)) - third).abs() < 1e-13);
    assert!((phi1_rational(&rat(2, 3)) + third).abs() < 1e-13);
}

#[test]
fn landau_against_riemann_sums() {
    let b1 = |t: f64| {
        let f = t - t.floor();
        if f == 0.0 {
            0.0
        } else {
            f - 0.5
        }
    };
    let n_pts = 1_000_000;
    for (m, n) in [(1, 1), (2, 3), (4, 6), (5, 10), (7, 3)] {
        let h = 1.0 / n_pts as f64;
        let s: f64 = (0..n_pts).map(|i| (i as f64 + 0.5) * h).map(|t| b1(m as f64 * t) * b1(n as f64 * t)).sum::<f64>() * h;
        let exact = landau_inner(m, n).unwrap().to_f64().unwrap();
        assert!((s - exact).abs() < 1e-5, "({m},{n}): {s} vs {exact}");
    }
}

#[test]
fn wilton_and_brjuno_at_the_golden_ratio() {
    let cf = CfExpansion::golden();
    let g = 1.0 / GOLDEN;
    let w = wilton::<f64>(&cf, 60);
    let b = brjuno::<f64>(&cf, 60);
    assert!((w.partial - GOLDEN.ln() / (1.0 + g)).abs() < 1e-12);
    assert!((b.partial - GOLDEN.ln() / (1.0 - g)).abs() < 1e-10);
}

#[test]
fn wilton_at_unit_fractions() {
    for k in 2..40 {
        let w = wilton_rational(&rat(1, k)).unwrap();
        assert!((w - (k as f64).ln()).abs() < 1e-14);
    }
    // 2/5 = [0; 2, 2]: γ₀ = log(5/2), γ₁ = (2/5) log 2.
    let w = wilton_rational(&rat(2, 5)).unwrap();
    assert!((w - (2.5f64.ln() - 0.4 * LN_2)).abs() < 1e-14);
}

#[test]
fn a_one_from_direct_and_series() {
    let closed = (2.0 * PI).ln() - EULER;
    assert!((a_one() - closed).abs() < 1e-15);
    let d = a_direct(1.0, 1e5).unwrap();
    assert!((d.value - closed).abs() < 1e-4, "direct {}", d.value);
    let s = a_via_series(1.0, 100_000).unwrap();
    assert!((s.value - closed).abs() <= s.err_estimate.max(1e-6));
}

#[test]
fn f_at_special_points() {
    assert!(f_aux(1.0).unwrap().abs() < 1e-10);
    assert!((f_aux(0.5).unwrap() - 0.5 * LN_2).abs() < 1e-8);
}

#[test]
fn gauss_invariance_targets() {
    let id = gauss_invariance(TestFunction::Identity, 2000);
    assert!((id.rhs - (1.0 - LN_2)).abs() < 1e-14);
    assert!(id.residual().abs() <= id.tail_bound + 1e-12);
    let lg = gauss_invariance(TestFunction::LogInverse, 2000);
    assert!((lg.rhs - PI * PI / 12.0).abs() < 1e-12);
    assert!(lg.residual().abs() <= lg.tail_bound + 1e-12);
}

#[test]
fn digamma_and_hurwitz() {
    assert!((digamma(1.0) + EULER).abs() < 1e-14);
    assert!((digamma(0.5) + EULER + 2.0 * LN_2).abs() < 1e-14);
    assert!((hurwitz_zeta3(1.0) - ZETA3).abs() < 1e-14);
    assert!((hurwitz_zeta3(0.5) - 7.0 * ZETA3).abs() < 1e-13);
}

#[test]
fn tau_against_trial_division() {
    let t = tau_sieve(5000).unwrap();
    let mut total = 0u64;
    for n in 1..=5000u64 {
        let naive = (1..=n).filter(|d| n % d == 0).count() as u32;
        assert_eq!(t.tau(n), naive, "tau({n})");
        total += naive as u64;
        assert_eq!(divisor_summatory(n), total);
    }
}
