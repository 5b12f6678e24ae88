use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{loglog_slope, Case, SuiteConfig};
use crate::autocorr::{
    a_direct, a_one, a_small_lambda, a_small_lambda_bound, a_value, a_via_phi2, a_via_series, f_aux, f_aux_tol,
    mod_continuity_a_grid, AValue,
};
use crate::bernoulli::{
    bernoulli1, bernoulli2, landau_inner, mod_continuity_phi2, phi1_partial, phi1_partial_phase, phi2, phi2_partial,
    phi2_via_integral, sylvester_grid, sylvester_residual,
};
use crate::contfrac::{
    alpha_enclosure_at, cell_endpoints, convergents, expand_rational, gauss_invariance as invariance, gauss_map,
    gauss_map_exact, orbit, parse_cf_spec, CfExpansion, Rational, TestFunction,
};
use crate::divisor::{
    a_via_delta, canonical_grid, delta_envelope, dirichlet_remainder, divisor_summatory, psi1_partial,
    psi1_partial_f64, tau_sieve, walfisz_ratio, wilton_afe_residual, wilton_afe_residual_f64, TauTable,
};
use crate::error::Result;
use crate::frozen;
use crate::numeric::Phase;
use crate::scalar::{rational_to_f64, EULER_GAMMA};
use crate::special::{
    brjuno, criterion, delta, delta_rational, functional_residuals, g_at, g_value, general_equation_residual,
    phi1_rational, upsilon, upsilon_between, upsilon_direct, wilton, wilton_f64, wilton_rational,
};
use crate::Real;

/// The 20 periodic quotient streams (periods of length ≤ 4).
pub const PERIODIC_STREAMS: [&[u64]; 20] = [
    &[1],
    &[2],
    &[3],
    &[4],
    &[5],
    &[1, 2],
    &[1, 3],
    &[2, 3],
    &[1, 4],
    &[2, 5],
    &[1, 1, 2],
    &[1, 2, 3],
    &[3, 1, 2],
    &[2, 2, 1],
    &[1, 5, 2],
    &[1, 1, 1, 2],
    &[1, 2, 1, 3],
    &[2, 1, 1, 4],
    &[3, 3, 1, 1],
    &[4, 1, 2, 1],
];

/// Quadratic irrationals used by the AFE and φ₁/ψ₁ sweeps.
pub const AFE_POINTS: [&str; 5] = ["golden", "sqrt2m1", "periodic:1,2", "periodic:3", "periodic:1,1,2"];

/// Reflection points λ; each is paired with 1/λ.
pub const REFLECTION_POINTS: [f64; 5] = [1.0 / 3.0, 0.5, 0.9, 1.7, 3.0];

const EPS: f64 = f64::EPSILON;

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn periodic(period: &[u64]) -> CfExpansion {
    CfExpansion::periodic(vec![], period.to_vec()).expect("valid period")
}

fn attempt(id: &str, inputs: &str, f: impl FnOnce() -> Result<Case>) -> Case {
    f().unwrap_or_else(|e| Case::error(id, inputs, &e))
}

fn fib(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    a
}

fn zeta2() -> f64 {
    f64::zeta2()
}

fn quotients_u64(cf: &CfExpansion) -> Vec<u64> {
    cf.head(cf.depth().unwrap_or(0)).iter().map(|a| a.to_u64().unwrap_or(u64::MAX)).collect()
}

// ---------------------------------------------------------------- cf-identities

pub(super) fn cf_identities() -> Vec<Case> {
    let mut out = Vec::new();

    for (p, q, want) in [(1, 2, vec![2u64]), (2, 7, vec![3, 2]), (3, 5, vec![1, 1, 2]), (0, 1, vec![])] {
        let inputs = format!("{p}/{q}");
        out.push(attempt("expand/example", &inputs, || {
            let cf = expand_rational(&rat(p, q))?;
            let got = quotients_u64(&cf);
            let ok = got == want && cf.depth() == Some(want.len());
            Ok(Case::exact("expand/example", &inputs, ok, got.len() as f64, want.len() as f64))
        }));
    }
    out.push(Case::exact("expand/rejects-one", "1/1", expand_rational(&rat(1, 1)).is_err(), 0.0, 0.0));

    out.push(attempt("gauss-map/example", "0.25", || Ok(Case::close("gauss-map/example", "0.25", gauss_map(0.25)?, 0.0, 0.0))));
    let x = (5f64.sqrt() - 1.0) / 2.0;
    out.push(attempt("gauss-map/golden-fixed", "golden (double)", || {
        Ok(Case::close("gauss-map/golden-fixed", "golden (double)", gauss_map(x)?, x, 4.0 * EPS))
    }));
    out.push(attempt("gauss-map/exact", "2/7", || {
        let g = gauss_map_exact(&rat(2, 7))?;
        Ok(Case::exact("gauss-map/exact", "2/7", g == rat(1, 2), rational_to_f64(&g), 0.5))
    }));
    out.push(Case::exact("gauss-map/rejects-zero", "0", gauss_map(0.0f64).is_err(), 0.0, 0.0));

    let c = convergents(&CfExpansion::golden(), 5);
    let q: Vec<i64> = c.q.iter().map(|v| v.to_i64().unwrap_or(-1)).collect();
    out.push(Case::exact("convergents/golden", "golden, K=5", q == [1, 1, 2, 3, 5], q[4] as f64, 5.0));
    out.push(attempt("convergents/two-sevenths", "2/7, K=10", || {
        let c = convergents(&expand_rational(&rat(2, 7))?, 10);
        let pq: Vec<(i64, i64)> =
            c.p.iter().zip(&c.q).map(|(p, q)| (p.to_i64().unwrap_or(-1), q.to_i64().unwrap_or(-1))).collect();
        Ok(Case::exact("convergents/two-sevenths", "2/7, K=10", pq == [(0, 1), (1, 3), (2, 7)], pq.len() as f64, 3.0))
    }));

    out.extend(exhaust_rationals(200));
    for period in PERIODIC_STREAMS {
        out.extend(stream_identities(&periodic(period), 40));
    }
    out.extend(golden_closed_forms(40));
    out.extend(refinement_monotone());
    out.extend(cells());
    out
}

/// Round trip, canonical last quotient, α_K = 0 and the determinant identity
/// for every p/q in [0, 1) with q ≤ `max_den`.
fn exhaust_rationals(max_den: i64) -> Vec<Case> {
    let (mut count, mut roundtrip, mut last, mut alpha, mut det) = (0u64, 0u64, 0u64, 0u64, 0u64);
    for q in 1..=max_den {
        for p in 0..q {
            if p.gcd(&q) != 1 {
                continue;
            }
            count += 1;
            let r = rat(p, q);
            let Ok(cf) = expand_rational(&r) else {
                roundtrip += 1;
                continue;
            };
            if cf.rational_value().as_ref() != Some(&r) {
                roundtrip += 1;
            }
            let k = cf.depth().unwrap_or(0);
            if k >= 1 && cf.quotient(k).map_or(true, |a| a < 2u32.into()) {
                last += 1;
            }
            let o = orbit::<f64>(&cf, k);
            let a = o.alpha(k);
            if !(a.lo == 0.0 && a.hi == 0.0) {
                alpha += 1;
            }
            let c = convergents(&cf, k + 1);
            for j in 1..c.len() {
                let d = &c.p[j] * &c.q[j - 1] - &c.p[j - 1] * &c.q[j];
                let want = if j % 2 == 1 { BigInt::one() } else { -BigInt::one() };
                if d != want {
                    det += 1;
                }
            }
        }
    }
    let inputs = format!("all {count} reduced p/q in [0,1) with q <= {max_den}");
    vec![
        Case::exact("rationals/roundtrip", &inputs, roundtrip == 0, roundtrip as f64, 0.0),
        Case::exact("rationals/last-quotient", &inputs, last == 0, last as f64, 0.0),
        Case::exact("rationals/alpha-depth-zero", &inputs, alpha == 0, alpha as f64, 0.0),
        Case::exact("rationals/determinant", &inputs, det == 0, det as f64, 0.0),
    ]
}

/// Convergent and orbit identities along one quotient stream, k ≤ K.
fn stream_identities(cf: &CfExpansion, k_max: usize) -> Vec<Case> {
    let label = cf.label().to_string();
    let inputs = format!("{label}, k <= {k_max}");
    let c = convergents(cf, k_max + 2);
    let o = orbit::<f64>(cf, k_max);
    let mut out = Vec::new();

    let (mut det, mut rec, mut fibo, mut sum3) = (0u64, 0u64, 0u64, 0u64);
    let mut qsum = BigInt::zero();
    for k in 0..=k_max {
        qsum += &c.q[k];
        if &qsum > &(&c.q[k] * 3) {
            sum3 += 1;
        }
        if c.q[k] < fib(k + 1) {
            fibo += 1;
        }
        if k >= 1 {
            let d = &c.p[k] * &c.q[k - 1] - &c.p[k - 1] * &c.q[k];
            if d != if k % 2 == 1 { BigInt::one() } else { -BigInt::one() } {
                det += 1;
            }
            let a = BigInt::from(cf.quotient(k).expect("stream"));
            if c.q[k] != &a * &c.q[k - 1] + c.q_at(k as isize - 2) || c.p[k] != &a * &c.p[k - 1] + c.p_at(k as isize - 2) {
                rec += 1;
            }
        }
    }
    out.push(Case::exact("stream/determinant", &inputs, det == 0, det as f64, 0.0));
    out.push(Case::exact("stream/recurrence", &inputs, rec == 0, rec as f64, 0.0));
    out.push(Case::exact("stream/fibonacci-growth", &inputs, fibo == 0, fibo as f64, 0.0));
    out.push(Case::exact("stream/sum-of-denominators", &inputs, sum3 == 0, sum3 as f64, 0.0));

    let qf: Vec<f64> = c.q.iter().map(|q| q.to_f64().unwrap_or(f64::INFINITY)).collect();
    let excess = |value: f64, lo: f64, hi: f64| ((lo - value) / lo).max((value - hi) / hi).max(0.0);

    // 1/(q_{k+1}+q_k) ≤ β_k ≤ 1/q_{k+1}
    let mut worst = 0.0f64;
    for k in 0..=k_max {
        let b = o.beta(k);
        let rel = b.width() / b.mid();
        worst = worst.max(excess(b.mid(), 1.0 / (qf[k + 1] + qf[k]), 1.0 / qf[k + 1]) - rel);
    }
    out.push(Case::upper("stream/beta-bounds", &inputs, worst, 8.0 * EPS));

    // β_{i+j} ≤ 1/(q_{i+1} F_{j+1})
    let mut worst = 0.0f64;
    for i in 0..=k_max {
        for j in 0..=(k_max - i) {
            let f = fib(j + 1).to_f64().unwrap_or(f64::INFINITY);
            let b = o.beta(i + j);
            worst = worst.max((b.lo - 1.0 / (qf[i + 1] * f)).max(0.0) * qf[i + 1] * f);
        }
    }
    out.push(Case::upper("stream/beta-fibonacci", &inputs, worst, 8.0 * EPS));

    // γ_k − log(q_{k+1})/q_k ∈ [−log(2q_k)/q_k, log 2/q_k], scaled by q_k.
    let mut worst = 0.0f64;
    for k in 0..=k_max {
        let g = o.gamma(k).expect("stream");
        let l = c.q[k + 1].to_f64().unwrap_or(f64::INFINITY).ln();
        let lo = (g.lo * qf[k] - l + (2.0 * qf[k]).ln()).min(0.0);
        let hi = (g.hi * qf[k] - l - 2f64.ln()).max(0.0);
        // Entire enclosure must lie inside the sandwich.
        worst = worst.max(-lo).max(hi);
    }
    out.push(Case::upper("stream/gamma-sandwich", &inputs, worst, 1e-12));

    // β_k = α₀⋯α_k
    let mut worst = 0.0f64;
    let mut prod = o.alpha(0);
    for k in 0..=k_max {
        if k > 0 {
            prod = prod.mul_pos(o.alpha(k));
        }
        let b = o.beta(k);
        let gap = (b.mid() - prod.mid()).abs() - 0.5 * (b.width() + prod.width());
        worst = worst.max(gap / b.mid());
    }
    out.push(Case::upper("stream/beta-product", &inputs, worst, 8.0 * EPS));

    // α_k = −(p_k − xq_k)/(p_{k−1} − xq_{k−1}) and β_k = |q_k x − p_k| at an
    // exact 400-bit convergent of x.
    let x = cf.convergent_with_bits(400);
    let (mut wa, mut wb) = (0.0f64, 0.0f64);
    for k in 0..=k_max {
        let e = |j: usize| Rational::from(c.p[j].clone()) - &x * Rational::from(c.q[j].clone());
        let beta = rational_to_f64(&e(k).abs());
        let b = o.beta(k);
        wb = wb.max(((b.mid() - beta).abs() - 0.5 * b.width()) / beta);
        if k >= 1 {
            let alpha = rational_to_f64(&(-(e(k) / e(k - 1))));
            let a = o.alpha(k);
            wa = wa.max(((a.mid() - alpha).abs() - 0.5 * a.width()) / alpha);
        }
    }
    out.push(Case::upper("stream/alpha-from-convergents", &inputs, wa, 8.0 * EPS));
    out.push(Case::upper("stream/beta-from-convergents", &inputs, wb, 8.0 * EPS));
    out
}

/// α_k = x and β_k = x^{k+1} at the golden ratio.
fn golden_closed_forms(k_max: usize) -> Vec<Case> {
    let x = (5f64.sqrt() - 1.0) / 2.0;
    let o = orbit::<f64>(&CfExpansion::golden(), k_max);
    let (mut wa, mut wb) = (0.0f64, 0.0f64);
    for k in 0..=k_max {
        let a = o.alpha(k);
        wa = wa.max((a.mid() - x).abs() - 0.5 * a.width() - 4.0 * EPS * x);
        let b = o.beta(k);
        let xb = x.powi(k as i32 + 1);
        wb = wb.max(((b.mid() - xb).abs() - 0.5 * b.width()) / xb - 4.0 * (k as f64 + 2.0) * EPS);
    }
    let inputs = format!("golden, k <= {k_max}");
    vec![
        Case::upper("golden/alpha-closed-form", &inputs, wa, 0.0),
        Case::upper("golden/beta-closed-form", &inputs, wb, 0.0),
    ]
}

/// α_k enclosure widths do not grow as the tail length m increases.
fn refinement_monotone() -> Vec<Case> {
    let mut out = Vec::new();
    for cf in [CfExpansion::golden(), CfExpansion::sqrt2m1(), periodic(&[1, 5, 2])] {
        let mut violations = 0u64;
        for k in [0usize, 5, 20] {
            let mut prev = f64::INFINITY;
            for m in 1..=30 {
                let (iv, _) = alpha_enclosure_at::<f64>(&cf, k, m);
                if iv.width() > prev {
                    violations += 1;
                }
                prev = iv.width();
            }
        }
        let inputs = format!("{}, k in {{0,5,20}}, m = 1..30", cf.label());
        out.push(Case::exact("stream/refinement-monotone", &inputs, violations == 0, violations as f64, 0.0));
    }
    out
}

fn cells() -> Vec<Case> {
    let mut out = Vec::new();
    for (b, lo, hi) in [(vec![2u64], (1, 2), (1, 3)), (vec![1, 1], (1, 2), (2, 3)), (vec![3, 2], (2, 7), (3, 10))] {
        let inputs = format!("{b:?}");
        out.push(attempt("cell/example", &inputs, || {
            let c = cell_endpoints(&b)?;
            let ok = c.endpoints == (rat(lo.0, lo.1), rat(hi.0, hi.1));
            Ok(Case::exact("cell/example", &inputs, ok, rational_to_f64(&c.endpoints.0), lo.0 as f64 / lo.1 as f64))
        }));
    }
    // Endpoints increase iff k is even, over all b ∈ {1,2,3}^k, k ≤ 4.
    let mut violations = 0u64;
    let mut total = 0u64;
    for k in 1..=4u32 {
        for code in 0..3u64.pow(k) {
            let b: Vec<u64> = (0..k).map(|i| code / 3u64.pow(i) % 3 + 1).collect();
            let Ok(c) = cell_endpoints(&b) else {
                violations += 1;
                continue;
            };
            total += 1;
            if (c.endpoints.0 < c.endpoints.1) != (k % 2 == 0) {
                violations += 1;
            }
        }
    }
    out.push(Case::exact(
        "cell/orientation",
        format!("{total} cells, quotients in {{1,2,3}}, k <= 4"),
        violations == 0,
        violations as f64,
        0.0,
    ));
    out
}

// ------------------------------------------------------------ gauss-invariance

pub(super) fn gauss_invariance() -> Vec<Case> {
    let mut out = Vec::new();
    for (f, name) in [(TestFunction::Identity, "t"), (TestFunction::LogInverse, "log(1/t)")] {
        let chk = invariance(f, 100_000);
        let inputs = format!("f(t) = {name}, 100000 branches");
        out.push(Case::close("invariance/residual", &inputs, chk.lhs, chk.rhs, 1e-6));
        out.push(Case::upper("invariance/tail-bound", &inputs, chk.tail_bound, 1e-6));
    }
    out
}

// ---------------------------------------------------------------------- landau

pub(super) fn landau() -> Vec<Case> {
    let mut out = Vec::with_capacity(900);
    for m in 1..=30u64 {
        for n in 1..=30u64 {
            let inputs = format!("m={m}, n={n}");
            out.push(attempt("landau", &inputs, || {
                let got = landau_inner(m, n)?;
                let g = m.gcd(&n);
                let want = Rational::new(BigInt::from(g * g), BigInt::from(12 * m * n));
                Ok(Case::exact("landau", &inputs, got == want, rational_to_f64(&got), rational_to_f64(&want)))
            }));
        }
    }
    out
}

// ------------------------------------------------------------------ wilton-feq

pub(super) fn wilton_feq() -> Vec<Case> {
    let mut out = Vec::new();
    let xg = (5f64.sqrt() - 1.0) / 2.0;
    let xs = 2f64.sqrt() - 1.0;

    let golden = CfExpansion::golden();
    let sqrt2 = CfExpansion::sqrt2m1();
    out.push(Case::close("closed-form/wilton-golden", "golden, K=60", wilton::<f64>(&golden, 60).partial, -xg * xg.ln(), 1e-9));
    out.push(Case::close("closed-form/brjuno-golden", "golden, K=60", brjuno::<f64>(&golden, 60).partial, -xg.ln() / (1.0 - xg), 1e-9));
    out.push(Case::close("closed-form/wilton-sqrt2m1", "sqrt2m1, K=60", wilton::<f64>(&sqrt2, 60).partial, -xs.ln() / (1.0 + xs), 1e-9));
    out.push(Case::close("closed-form/brjuno-sqrt2m1", "sqrt2m1, K=60", brjuno::<f64>(&sqrt2, 60).partial, -xs.ln() / (1.0 - xs), 1e-9));

    for k in 2..=50i64 {
        let inputs = format!("1/{k}");
        out.push(attempt("wilton-inverse", &inputs, || {
            let w = wilton_rational(&rat(1, k))?;
            let want = (k as f64).ln();
            Ok(Case::exact("wilton-inverse", &inputs, w == want, w, want))
        }));
    }
    for x in [0.0, 1.0] {
        let inputs = format!("{x}");
        out.push(attempt("wilton-endpoint", &inputs, || Ok(Case::exact("wilton-endpoint", &inputs, wilton_f64(x)? == 0.0, wilton_f64(x)?, 0.0))));
    }

    // |W_K| ≤ Φ_K at every depth.
    let mut inputs_set: Vec<CfExpansion> = PERIODIC_STREAMS.iter().map(|p| periodic(p)).collect();
    for (p, q) in [(2, 7), (3, 5), (13, 31), (89, 144)] {
        inputs_set.push(expand_rational(&rat(p, q)).expect("rational in [0,1)"));
    }
    for cf in &inputs_set {
        let mut worst = f64::NEG_INFINITY;
        for k in [1usize, 2, 3, 5, 10, 20, 40, 60] {
            let w = wilton::<f64>(cf, k).partial;
            let phi = brjuno::<f64>(cf, k).partial;
            worst = worst.max(w.abs() - phi * (1.0 + 16.0 * EPS));
        }
        out.push(Case::upper("wilton-brjuno", format!("{}, K in 1..60", cf.label()), worst, 0.0));
    }

    // W, G and general equations at depth 50.
    for period in PERIODIC_STREAMS {
        let cf = periodic(period);
        let inputs = format!("{}, K=50", cf.label());
        match functional_residuals(&cf, 50) {
            Ok(rep) => {
                for (r, id) in rep.residuals.iter().zip(["feq/W", "feq/G", "feq/general"]) {
                    out.push(Case::close(id, &inputs, r.lhs, r.rhs, r.bound));
                }
            }
            Err(e) => out.push(Case::error("feq", &inputs, &e)),
        }
    }
    for (p, q, split) in [(2, 7, 1usize), (13, 31, 2), (89, 144, 5)] {
        let inputs = format!("{p}/{q}, split {split}");
        out.push(attempt("feq/general-rational", &inputs, || {
            let r = general_equation_residual(&expand_rational(&rat(p, q))?, split, 60)?;
            Ok(Case::close("feq/general-rational", &inputs, r.lhs, r.rhs, r.bound.max(4.0 * EPS)))
        }));
    }

    // Convergence proxies.
    out.push(attempt("criterion/golden-converges", "golden, K=60", || {
        let tr = criterion(&golden, 60)?;
        Ok(Case::upper("criterion/golden-converges", "golden, K=60", tr.cauchy_gap, 1e-6))
    }));
    out.push(Case::exact(
        "criterion/golden-wilton-converged",
        "golden, K=60",
        wilton::<f64>(&golden, 60).converged,
        1.0,
        1.0,
    ));
    let dexp = CfExpansion::doubly_exponential();
    out.push(attempt("criterion/doubly-exponential-diverges", "a_{k+1} = 2^{q_k}, K=4", || {
        let tr = criterion(&dexp, 4)?;
        Ok(Case::upper("criterion/doubly-exponential-diverges", "a_{k+1} = 2^{q_k}, K=4", 1e-6, tr.cauchy_gap))
    }));
    // γ₃ ≥ (log q₄ − log 2q₃)/q₃ from the γ sandwich: a single Wilton term
    // already exceeds the threshold.
    let c = convergents(&dexp, 5);
    let (q3, q4) = (c.q[3].to_f64().unwrap_or(f64::INFINITY), c.q[4].to_f64().unwrap_or(f64::INFINITY));
    let gamma3_lo = (q4.ln() - (2.0 * q3).ln()) / q3;
    out.push(Case::upper("criterion/doubly-exponential-wilton-term", "a_{k+1} = 2^{q_k}, lower bound on gamma_3", 1e-6, gamma3_lo));

    // G and δ.
    let a1 = a_one();
    out.push(attempt("G/zero", "x=0", || Ok(Case::close("G/zero", "x=0", g_at(0.0, 1e-10)?, a1 / 2.0, 1e-9))));
    let near_one = 1.0 - 2f64.powi(-30);
    out.push(attempt("G/near-one", "x=1-2^-30", || Ok(Case::close("G/near-one", "x=1-2^-30", g_at(near_one, 1e-10)?, -a1 / 2.0, 1e-6))));
    out.push(attempt("G/golden", "golden", || {
        let g = g_value(&golden, 1e-10)?;
        let f = f_aux_tol(xg, 1e-11)?;
        Ok(Case::close("G/golden", "golden, G = F/(1+x)", g.value, f / (1.0 + xg), g.tail_bound + 2e-10))
    }));
    let eps = 2f64.powi(-20);
    for (p, q, side) in [(1i64, 2i64, 1.0f64), (2, 7, -1.0)] {
        let inputs = format!("r={p}/{q}, eps=2^-20");
        out.push(attempt("G/jump", &inputs, || {
            let r = p as f64 / q as f64;
            let at = g_value(&expand_rational(&rat(p, q))?, 1e-10)?.value;
            let off = g_at(r + side * eps, 1e-10)?;
            let want = side * a1 / q as f64;
            Ok(Case::close("G/jump", &inputs, off - at, want, 1e-4))
        }));
    }
    out.push(Case::exact("delta/stream", "golden", delta(&golden) == 0.0, delta(&golden), 0.0));
    for (p, q, want) in [(1, 2, a1 / 4.0), (2, 7, -a1 / 14.0), (0, 1, -a1 / 2.0)] {
        let inputs = format!("{p}/{q}");
        out.push(attempt("delta/rational", &inputs, || Ok(Case::close("delta/rational", &inputs, delta_rational(&rat(p, q))?, want, 4.0 * EPS))));
    }
    out
}

// -------------------------------------------------------------- phi1-sylvester

pub(super) fn phi1_sylvester() -> Vec<Case> {
    let mut out = Vec::new();
    let b1 = |p: i64, q: i64| bernoulli1(&rat(p, q));
    let b2 = |p: i64, q: i64| bernoulli2(&rat(p, q));
    for (name, got, want) in [
        ("B1(0)", b1(0, 1), rat(0, 1)),
        ("B1(1/2)", b1(1, 2), rat(0, 1)),
        ("B1(1/4)", b1(1, 4), rat(-1, 4)),
        ("B2(0)", b2(0, 1), rat(1, 6)),
        ("B2(1/2)", b2(1, 2), rat(-1, 12)),
        ("B2(1)", b2(1, 1), rat(1, 6)),
    ] {
        out.push(Case::exact("bernoulli/example", name, got == want, rational_to_f64(&got), rational_to_f64(&want)));
    }
    let mut violations = 0u64;
    for i in 1..97i64 {
        for k in -2..=2i64 {
            let t = rat(i + 97 * k, 97);
            let one = Rational::one();
            if bernoulli1(&(-&t)) != -bernoulli1(&t)
                || bernoulli1(&(&t + &one)) != bernoulli1(&t)
                || bernoulli2(&(&t + &one)) != bernoulli2(&t)
                || bernoulli2(&(-&t)) != bernoulli2(&t)
            {
                violations += 1;
            }
        }
    }
    out.push(Case::exact("bernoulli/odd-even-periodic", "t = i/97 + k, 0 < i < 97, |k| <= 2", violations == 0, violations as f64, 0.0));

    out.push(Case::exact("phi1/example", "x=1/2, v=1000", phi1_partial(0.5f64, 1000.0) == 0.0, phi1_partial(0.5f64, 1000.0), 0.0));
    out.push(Case::close("phi1/example", "x=0.3, v=1", phi1_partial(0.3f64, 1.0), 0.3 - 0.5, 2.0 * EPS));
    out.push(Case::close("phi1/example", "x=1/3, v=2", phi1_partial_phase(&Phase::from_rational(&rat(1, 3)), 2.0), -1.0 / 12.0, 2.0 * EPS));

    for v in [1e2, 1e3, 1e4] {
        let inputs = format!("x=1, v={v}");
        out.push(attempt("sylvester-at-one", &inputs, || Ok(Case::close("sylvester-at-one", &inputs, sylvester_residual(1.0, v)?, 0.0, EPS))));
    }
    out.push(attempt("sylvester/example", "x=0.3, v=100", || {
        let e = sylvester_residual(0.3, 100.0)?;
        Ok(Case::upper("sylvester/example", "x=0.3, v=100", e.abs(), frozen::C_SYLVESTER / 30.0))
    }));

    let xs = sylvester_grid();
    let vs = [1e2, 1e3, 1e4];
    let mut grid_max = [0.0f64; 3];
    for (iv, &v) in vs.iter().enumerate() {
        for &x in &xs {
            let inputs = format!("x={x:.17}, v={v}");
            out.push(attempt("sylvester-grid", &inputs, || {
                let e = sylvester_residual(x, v)?;
                grid_max[iv] = grid_max[iv].max(e.abs());
                Ok(Case::upper("sylvester-grid", &inputs, e.abs() * x * v, frozen::C_SYLVESTER))
            }));
        }
    }
    out.push(Case::upper("sylvester-trend", "slope of max_x |eps| in v over 1e2..1e4", loglog_slope(&vs, &grid_max), -0.5));
    out
}

// ------------------------------------------------------------ phi2-consistency

pub(super) fn phi2_consistency() -> Vec<Case> {
    let mut out = Vec::new();
    let shift = (2f64.sqrt() - 1.0) / 1024.0;
    for i in 0..100 {
        let x = i as f64 / 100.0 + shift;
        let inputs = format!("x={x:.17}, tol=1e-6");
        out.push(attempt("grid", &inputs, || {
            let a = phi2(x, 1e-6)?;
            let b = phi2_via_integral(x, 1e-6)?;
            Ok(Case::close("grid", &inputs, a.value, b.value, a.tail_bound + b.tail_bound + 1e-12))
        }));
    }
    let z = zeta2();
    for (x, want, name) in [(0.0, z / 6.0, "x=0"), (0.5, -z / 48.0, "x=1/2")] {
        out.push(attempt("phi2-special", name, || Ok(Case::close("phi2-special", name, phi2(x, 2e-9)?.value, want, 1e-8))));
        out.push(attempt("phi2-integral-special", name, || {
            let v = phi2_via_integral(x, 3e-9)?;
            Ok(Case::close("phi2-integral-special", name, v.value, want, 1e-8))
        }));
    }
    out.push(attempt("phi2-integral-special", "x=1", || {
        Ok(Case::close("phi2-integral-special", "x=1", phi2_via_integral(1.0, 3e-9)?.value, z / 6.0, 1e-8))
    }));
    out.push(attempt("phi2-periodic", "x=0.3 vs 1.3", || {
        Ok(Case::close("phi2-periodic", "x=0.3 vs 1.3", phi2(0.3, 1e-6)?.value, phi2(1.3, 1e-6)?.value, 1e-14))
    }));

    // Expansion at 1/2: the |h| log|h| coefficient is ½.
    let n = 20_000_000;
    let base = phi2_partial(0.5, n);
    let lin = (2.0 * 2f64.ln() - 1.0 + a_one()) / 2.0;
    for h in [1e-5, -1e-5] {
        let inputs = format!("r=1/2, h={h:e}, N={n}");
        let d = phi2_partial(0.5 + h, n) - base;
        let ratio = (d - lin * h.abs()) / (h.abs() * h.abs().ln());
        out.push(Case::band("rational-expansion", &inputs, ratio, 0.425, 0.575));
    }

    // Υ through the G-integral identity.
    out.push(attempt("upsilon-zero", "x=0", || Ok(Case::close("upsilon-zero", "x=0", upsilon(0.0, 1e-6)?.value, 0.0, 0.0))));
    for x in [1e-2, 1e-3] {
        let inputs = format!("x={x:e}, tol=0.02x^2");
        out.push(attempt("upsilon-small", &inputs, || {
            let u = upsilon(x, 0.02 * x * x)?;
            let main = x * (1.0 / x).ln() + x;
            Ok(Case::close("upsilon-small", &inputs, u.value, main, 5.0 * x * x - u.err_estimate))
        }));
    }
    let x = 1e-3;
    out.push(attempt("upsilon-near-one", "x=1e-3, tol=1e-7", || {
        let u = upsilon_between(1.0 - x, 1.0, 1e-7)?;
        let main = -(x * (1.0 / x).ln() + x);
        let bound = 5.0 * x * x * (2.0 / x).ln() - u.err_estimate;
        Ok(Case::close("upsilon-near-one", "x=1e-3, tol=1e-7", u.value, main, bound))
    }));
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    for x in [0.2, inv_phi, 0.9] {
        let inputs = format!("x={x:.17}");
        out.push(attempt("upsilon-routes", &inputs, || {
            let a = upsilon(x, 1e-3)?;
            let b = upsilon_direct(x, 1e-4)?;
            Ok(Case::close("upsilon-routes", &inputs, a.value, b.value, 1e-3))
        }));
    }
    out
}

// -------------------------------------------------------------------- A-routes

fn agree(id: &str, inputs: &str, a: &AValue, b: &AValue) -> Case {
    Case::close(id, inputs, a.value, b.value, a.err_estimate + b.err_estimate)
}

/// 50 points log-spaced on [0.05, 20], nudged off exact rationals.
pub fn lambda_grid() -> Vec<f64> {
    let shift = 1.0 + (2f64.sqrt() - 1.0) / 1024.0;
    (0..50).map(|i| 0.05 * 400f64.powf(i as f64 / 49.0) * shift).collect()
}

pub(super) fn a_routes() -> Vec<Case> {
    let mut out = Vec::new();
    let a1 = (2.0 * std::f64::consts::PI).ln() - EULER_GAMMA;
    out.push(attempt("a-one/direct", "lambda=1, T=1e5", || Ok(Case::close("a-one/direct", "lambda=1, T=1e5", a_direct(1.0, 1e5)?.value, a1, 1e-4))));
    out.push(attempt("a-one/phi2", "lambda=1, U=20, tol=1e-5", || {
        let v = a_via_phi2(1.0, 20.0, 1e-5)?;
        Ok(Case::close("a-one/phi2", "lambda=1, U=20, tol=1e-5", v.value, a1, v.err_estimate))
    }));
    out.push(attempt("a-one/series", "lambda=1, N=1e5", || {
        let v = a_via_series(1.0, 100_000)?;
        Ok(Case::close("a-one/series", "lambda=1, N=1e5", v.value, a1, v.err_estimate))
    }));
    out.push(attempt("a-one/delta", "lambda=1, T=1e4", || {
        let v = a_via_delta(1.0, 1e4)?;
        Ok(Case::close("a-one/delta", "lambda=1, T=1e4", v.value, a1, v.err_estimate))
    }));
    out.push(attempt("a-one/series-coarse", "lambda=1, N=1e4", || {
        Ok(Case::close("a-one/series-coarse", "lambda=1, N=1e4", a_via_series(1.0, 10_000)?.value, a1, 1e-3))
    }));
    out.push(attempt("two-route/phi2", "lambda=1/2", || {
        Ok(agree("two-route/phi2", "lambda=1/2", &a_via_phi2(0.5, 20.0, 1e-4)?, &a_direct(0.5, 1e5)?))
    }));
    out.push(attempt("two-route/series", "lambda=0.7", || {
        Ok(agree("two-route/series", "lambda=0.7", &a_via_series(0.7, 100_000)?, &a_direct(0.7, 1e5)?))
    }));
    // |A(λ) − ½log λ − (1+A(1))/2| ≤ ζ(2)/(6λ), since |φ₂| ≤ ζ(2)/6.
    let lam = 20.0;
    out.push(attempt("large-lambda", "lambda=20, U=200, tol=1e-3", || {
        let v = a_via_phi2(lam, 10.0 * lam, 1e-3)?;
        let main = 0.5 * lam.ln() + 0.5 * (1.0 + a1);
        Ok(Case::close("large-lambda", "lambda=20, U=200, tol=1e-3", v.value, main, zeta2() / (6.0 * lam) + v.err_estimate))
    }));
    out.push(attempt("a-zero", "lambda=0", || Ok(Case::exact("a-zero", "lambda=0", a_value(0.0, 1e-9)? == 0.0, a_value(0.0, 1e-9)?, 0.0))));

    for lam in [1e-2, 1e-3] {
        let inputs = format!("lambda={lam:e}, T=1e3/lambda");
        out.push(attempt("small-lambda/two-term", &inputs, || {
            let d = a_direct(lam, 1e3 / lam)?;
            Ok(Case::close("small-lambda/two-term", &inputs, d.value, a_small_lambda(lam), a_small_lambda_bound(lam) + d.err_estimate))
        }));
    }
    let lam = 1e-4;
    out.push(attempt("small-lambda/leading", "lambda=1e-4", || {
        let ratio = a_value(lam, 1e-9)? / (0.5 * lam * (1.0 / lam).ln());
        Ok(Case::band("small-lambda/leading", "lambda=1e-4", ratio, 0.7, 1.3))
    }));

    for lam in lambda_grid() {
        let inputs = format!("lambda={lam:.17}");
        let direct = a_direct(lam, 2e4 * lam.max(1.0 / lam));
        let via_phi2 = a_via_phi2(lam, 10.0 * lam.max(1.0), 1e-3);
        let series = a_via_series(lam, 100_000);
        for (id, other) in [("three-route/direct-phi2", via_phi2), ("three-route/direct-series", series)] {
            out.push(match (&direct, &other) {
                (Ok(d), Ok(o)) => agree(id, &inputs, d, o),
                (Err(e), _) | (_, Err(e)) => Case::error(id, &inputs, e),
            });
        }
    }
    for (lam, t) in [(0.5, 1e5), (20.0, 1e4)] {
        let inputs = format!("lambda={lam}, T={t:e}");
        out.push(attempt("delta-route", &inputs, || {
            Ok(agree("delta-route", &inputs, &a_via_delta(lam, t)?, &a_direct(lam, 1e5 * lam.max(1.0 / lam))?))
        }));
    }

    out.push(attempt("F/one", "x=1", || Ok(Case::exact("F/one", "x=1", f_aux(1.0)? == 0.0, f_aux(1.0)?, 0.0))));
    out.push(attempt("F/zero", "x=0", || Ok(Case::close("F/zero", "x=0", f_aux(0.0)?, a_one() / 2.0, 1e-12))));
    out.push(attempt("F/half", "x=1/2", || Ok(Case::close("F/half", "x=1/2", f_aux(0.5)?, 0.5 * 2f64.ln(), 1e-8))));
    out.push(attempt("F/half-two-routes", "x=1/2", || {
        let f = |a: AValue| 0.75 * a_one() - a.value + 0.25 * 2f64.ln();
        let d = a_direct(0.5, 1e5)?;
        let p = a_via_phi2(0.5, 20.0, 1e-4)?;
        Ok(Case::close("F/half-two-routes", "x=1/2, direct vs phi2", f(d), f(p), d.err_estimate + p.err_estimate))
    }));
    out.push(attempt("F/continuity", "1000-point grid, h=1e-3, tol=1e-6", || {
        let h = 1e-3;
        let mut worst = 0.0f64;
        let mut prev = f_aux_tol(0.0, 1e-6)?;
        for i in 1..=1000 {
            let cur = f_aux_tol(i as f64 * h, 1e-6)?;
            worst = worst.max((cur - prev).abs());
            prev = cur;
        }
        Ok(Case::upper("F/continuity", "1000-point grid, h=1e-3, tol=1e-6", worst, 0.1))
    }));
    out
}

// ---------------------------------------------------------------- A-reflection

pub(super) fn a_reflection() -> Vec<Case> {
    let mut out = Vec::new();
    for lam in REFLECTION_POINTS {
        let routes: [(&str, Box<dyn Fn(f64) -> Result<AValue>>); 3] = [
            ("direct", Box::new(|l: f64| a_direct(l, 1e5))),
            ("phi2", Box::new(|l: f64| a_via_phi2(l, 20.0 * l.max(1.0), 1e-4))),
            ("series", Box::new(|l: f64| a_via_series(l, 1_000_000))),
        ];
        for (name, route) in routes.iter() {
            let inputs = format!("lambda={lam:.17}, method={name}");
            out.push(attempt("reflection", &inputs, || {
                let a = route(lam)?;
                let b = route(1.0 / lam)?;
                Ok(Case::close("reflection", &inputs, a.value, lam * b.value, a.err_estimate + lam * b.err_estimate))
            }));
        }
    }
    out
}

// -------------------------------------------------------------------- afe-psi1

/// v-values of the AFE and φ₁/ψ₁ sweeps for a given vmax.
pub fn afe_vs(vmax: f64) -> Vec<f64> {
    let mut vs: Vec<f64> = [1e3, 1e4, 1e5].into_iter().filter(|&v| v <= vmax).collect();
    if vmax > 1e5 {
        vs.push(vmax);
    }
    vs
}

pub(super) fn afe_psi1(cfg: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let sieve = cfg.vmax.max(1e6) as u64;
    let tab = match tau_sieve(sieve) {
        Ok(t) => t,
        Err(e) => return vec![Case::error("sieve", format!("V={sieve}"), &e)],
    };

    for (n, want) in [(1u64, 1u32), (6, 4), (12, 6), (720_720, 240)] {
        out.push(Case::exact("tau/example", format!("n={n}"), tab.tau(n) == want, tab.tau(n) as f64, want as f64));
    }
    let mut bad = 0u64;
    for m in 1..=60u64 {
        for n in 1..=60u64 {
            if m.gcd(&n) == 1 && tab.tau(m * n) != tab.tau(m) * tab.tau(n) {
                bad += 1;
            }
        }
    }
    out.push(Case::exact("tau/multiplicative", "coprime m,n <= 60", bad == 0, bad as f64, 0.0));
    let bad = (1..=10_000u64).filter(|&n| divisor_summatory(n) != tab.prefix_sum(n)).count();
    out.push(Case::exact("tau/hyperbola", "n <= 1e4", bad == 0, bad as f64, 0.0));
    let floor_sum: u64 = (1..=sieve).map(|d| sieve / d).sum();
    out.push(Case::exact("tau/floor-sum", format!("V={sieve}"), floor_sum == tab.prefix_sum(sieve), tab.prefix_sum(sieve) as f64, floor_sum as f64));

    out.push(attempt("dirichlet/one", "x=1", || Ok(Case::close("dirichlet/one", "x=1", dirichlet_remainder(1.0)?, 2.0 - 2.0 * EULER_GAMMA, 4.0 * EPS))));
    out.push(Case::exact("dirichlet/jump-at-two", "x=2", divisor_summatory(2) - divisor_summatory(1) == 2, 2.0, 2.0));
    out.push(attempt("dirichlet/envelope", "t <= 1e6", || {
        Ok(Case::upper("dirichlet/envelope", "t <= 1e6", delta_envelope(1_000_000, &tab)?, frozen::DELTA_ENVELOPE_C))
    }));

    out.push(attempt("psi1/example", "x=1/2, v=1000", || {
        Ok(Case::close("psi1/example", "x=1/2, v=1000", psi1_partial(&Phase::from_rational(&rat(1, 2)), 1000.0, &tab)?, 0.0, 1e-13))
    }));
    out.push(attempt("psi1/example", "x=0.3, v=1", || {
        let want = -(2.0 * std::f64::consts::PI * 0.3).sin() / std::f64::consts::PI;
        Ok(Case::close("psi1/example", "x=0.3, v=1", psi1_partial_f64(0.3, 1.0, &tab)?, want, 4.0 * EPS))
    }));

    let vs = afe_vs(cfg.vmax);
    let grid = canonical_grid(64);
    for &v in &vs {
        let inputs = format!("64-point canonical grid, v={v:e}");
        out.push(attempt("walfisz", &inputs, || Ok(Case::upper("walfisz", &inputs, walfisz_ratio(&grid, v, &tab)?, frozen::C_WALFISZ))));
        let inputs = format!("x=1, v={v:e}");
        out.push(attempt("afe-at-one", &inputs, || Ok(Case::close("afe-at-one", &inputs, wilton_afe_residual_f64(1.0, v, &tab)?, 0.0, 0.0))));
    }

    for spec in AFE_POINTS {
        let cf = parse_cf_spec(spec).expect("known spec");
        let x = rational_to_f64(&cf.convergent_with_bits(128));
        out.extend(afe_at(spec, &cf, x, &vs, &tab));
        let ph = Phase::from_rational(&cf.convergent_with_bits(128));
        let mut gaps = Vec::new();
        for &v in &vs {
            match psi1_partial(&ph, v, &tab) {
                Ok(p) => gaps.push((phi1_partial_phase(&ph, v) - p).abs()),
                Err(e) => out.push(Case::error("phi1-psi1", spec, &e)),
            }
        }
        if gaps.len() == vs.len() && vs.len() >= 2 {
            out.push(Case::upper("phi1-psi1-trend", format!("{spec}, slope over v"), loglog_slope(&vs, &gaps), 0.0));
        }
    }
    out
}

fn afe_at(spec: &str, cf: &CfExpansion, x: f64, vs: &[f64], tab: &TauTable) -> Vec<Case> {
    let mut out = Vec::new();
    let mut ys = Vec::new();
    let mut rs = Vec::new();
    for &v in vs {
        let inputs = format!("{spec}, v={v:e}");
        match wilton_afe_residual(cf, v, tab) {
            Ok(r) => {
                out.push(Case::upper("afe-ratio", &inputs, crate::divisor::afe_ratio(r, x, v), frozen::C_AFE));
                ys.push(x * x * v);
                rs.push(r);
            }
            Err(e) => out.push(Case::error("afe-ratio", &inputs, &e)),
        }
    }
    if ys.len() == vs.len() && ys.len() >= 2 {
        out.push(Case::upper("afe-slope", format!("{spec}, slope in x^2 v"), loglog_slope(&ys, &rs), -0.4));
    }
    out
}

// ---------------------------------------------------------------------- moduli

pub const MODULI_H: [f64; 3] = [1e-3, 1e-4, 1e-5];

pub(super) fn moduli() -> Vec<Case> {
    let mut out = Vec::new();
    let mut phi = Vec::new();
    let mut a = Vec::new();
    for h in MODULI_H {
        let l = h * (1.0 / h).ln();
        let inputs = format!("h={h:e}, 256 points, N=2e6");
        match mod_continuity_phi2(h, 256, 2_000_000) {
            Ok(w) => {
                phi.push(w / l);
                out.push(Case::band("modulus-phi2", &inputs, w / l, 0.5, 1.5));
            }
            Err(e) => out.push(Case::error("modulus-phi2", &inputs, &e)),
        }
        let inputs = format!("h={h:e}, 2000 points on (0,2], tol=1e-8");
        match mod_continuity_a_grid(h, 2000, 1e-8) {
            Ok(w) => {
                a.push(w / (0.5 * l));
                out.push(Case::band("modulus-A", &inputs, w / (0.5 * l), 0.5, 1.5));
            }
            Err(e) => out.push(Case::error("modulus-A", &inputs, &e)),
        }
    }
    for (id, r) in [("modulus-phi2-trend", &phi), ("modulus-A-trend", &a)] {
        if r.len() == 3 {
            out.push(Case::upper(id, "|ratio-1| at h=1e-5 vs h=1e-3", (r[2] - 1.0).abs(), (r[0] - 1.0).abs()));
        }
    }
    out
}

// ------------------------------------------------------------- theorem2-sample

pub(super) fn theorem2_sample() -> Vec<Case> {
    let mut out = Vec::new();
    let v = 1e6;
    let golden = CfExpansion::golden();
    let ph = Phase::from_rational(&golden.convergent_with_bits(128));
    let phi1 = phi1_partial_phase(&ph, v);
    out.push(attempt("golden/phi1-vs-theorem", "golden, v=1e6", || {
        let w = wilton::<f64>(&golden, 60).partial;
        let g = g_value(&golden, 1e-9)?.value;
        Ok(Case::close("golden/phi1-vs-theorem", "golden, v=1e6", phi1, -0.5 * w + g, 0.05))
    }));
    out.push(attempt("golden/phi1-vs-psi1", "golden, v=1e6", || {
        let tab = tau_sieve(v as u64)?;
        Ok(Case::close("golden/phi1-vs-psi1", "golden, v=1e6", phi1, psi1_partial(&ph, v, &tab)?, 0.02))
    }));

    let g_tol = 1e-9;
    for (p, q) in [(1i64, 2i64), (2, 7), (3, 5), (5, 13), (13, 31)] {
        let r = rat(p, q);
        let inputs = format!("r={p}/{q}, G tol={g_tol:e}");
        out.push(attempt("rational/limit", &inputs, || {
            let cf = expand_rational(&r)?;
            let g = g_value(&cf, g_tol)?;
            let rhs = -0.5 * wilton_rational(&r)? + g.value + delta_rational(&r)?;
            Ok(Case::close("rational/limit", &inputs, phi1_rational(&r), rhs, g_tol + g.tail_bound + 1e-12))
        }));
        let inputs = format!("r={p}/{q}, v=1e6");
        let partial = phi1_partial_phase(&Phase::from_rational(&r), v);
        out.push(Case::close("rational/partial", &inputs, partial, phi1_rational(&r), q as f64 / v));
    }
    out
}
