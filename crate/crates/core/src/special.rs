//! The Wilton function W, the Brjuno function Φ, the convergence criterion
//! series, G, δ, Υ = ∫W, and residuals of their functional equations.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::autocorr::{a_one, f_aux_tol};
use crate::bernoulli::{phi2, SeriesValue};
use crate::contfrac::{convergents, orbit, CfExpansion, Rational};
use crate::error::{domain, Result};
use crate::numeric::{gauss_kronrod, QuadOptions};
use crate::scalar::{f64_to_rational, ln_bigint, CompensatedSum, Interval, Real};

/// Partial sum of the Wilton or Brjuno series.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WiltonEval<R = f64> {
    pub partial: R,
    /// Number of terms summed.
    pub depth: usize,
    /// Σ (log q_{k+1} + log 2)/q_k over the next few indices (0 for rationals).
    pub tail_estimate: R,
    /// Accumulated width of the γ_k enclosures.
    pub enclosure_width: R,
    pub converged: bool,
}

/// Threshold on the tail estimate for the `converged` flag.
pub const CONVERGED_TAIL: f64 = 1e-8;

/// Indices past the requested depth used for the tail estimate.
const TAIL_LOOKAHEAD: usize = 8;

fn tail_estimate(cf: &CfExpansion, from: usize) -> f64 {
    if cf.is_terminating() {
        return 0.0;
    }
    let c = convergents(cf, from + TAIL_LOOKAHEAD + 2);
    (from..from + TAIL_LOOKAHEAD)
        .map(|k| (ln_bigint(&c.q[k + 1]) + std::f64::consts::LN_2) / c.q[k].to_f64().unwrap_or(f64::INFINITY))
        .sum()
}

fn series_eval<R: Real>(cf: &CfExpansion, depth: usize, alternating: bool) -> WiltonEval<R> {
    let o = orbit::<R>(cf, depth);
    let n = match o.depth {
        Some(k) => k.min(depth),
        None => depth,
    };
    let mut s = CompensatedSum::new();
    let mut width = R::zero();
    for k in 0..n {
        let g = o.gamma(k).expect("γ_k defined below the depth");
        let sign = if alternating && k % 2 == 1 { -R::one() } else { R::one() };
        s.add(sign * o.gamma_center(k).unwrap_or_else(|| g.mid()));
        width += g.width();
    }
    let tail = R::lit(tail_estimate(cf, n));
    WiltonEval {
        partial: s.value(),
        depth: n,
        tail_estimate: tail,
        enclosure_width: width,
        converged: o.depth.is_some() || tail.to_f64().unwrap_or(f64::INFINITY) < CONVERGED_TAIL,
    }
}

/// W(x) = Σ_{k<K} (−1)^k γ_k(x); for a rational the sum stops at its depth.
pub fn wilton<R: Real>(cf: &CfExpansion, depth: usize) -> WiltonEval<R> {
    series_eval(cf, depth, true)
}

/// Φ(x) = Σ_{k<K} γ_k(x).
pub fn brjuno<R: Real>(cf: &CfExpansion, depth: usize) -> WiltonEval<R> {
    series_eval(cf, depth, false)
}

/// W at a rational, reduced mod 1, with W(1) = W(0) = 0.
pub fn wilton_rational(r: &Rational) -> Result<f64> {
    let f = r - r.floor();
    let cf = CfExpansion::from_rational(&f)?;
    Ok(wilton::<f64>(&cf, usize::MAX - 1).partial)
}

/// Euclid remainders r₀ = q, r₁ = p, … of a double x = p/q in (0, 1) whose
/// denominator fits in 126 bits; the last entry is 0.
fn dyadic_remainders(x: f64) -> Option<Vec<u128>> {
    if !(x > 0.0 && x < 1.0) {
        return None;
    }
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let (mant, e) = if exp == 0 { (bits & ((1 << 52) - 1), -1074) } else { ((bits & ((1 << 52) - 1)) | (1 << 52), exp - 1075) };
    let tz = mant.trailing_zeros() as i64;
    let (p, shift) = (mant >> tz, -(e + tz));
    if !(0..=126).contains(&shift) {
        return None;
    }
    let mut r = vec![1u128 << shift, p as u128];
    while let Some(&last) = r.last() {
        if last == 0 {
            break;
        }
        let n = r.len();
        r.push(r[n - 2] % last);
    }
    Some(r)
}

/// W at the exact value of a double in [0, 1], with W(0) = W(1) = 0.
pub fn wilton_f64(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain("wilton", format!("x = {x} outside [0,1]")));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    if let Some(r) = dyadic_remainders(x) {
        let r0 = r[0] as f64;
        let mut s = CompensatedSum::new();
        for k in 0..r.len() - 2 {
            let (a, b) = (r[k] as f64, r[k + 1] as f64);
            let g = a / r0 * (a / b).ln();
            s.add(if k % 2 == 1 { -g } else { g });
        }
        return Ok(s.value());
    }
    wilton_rational(&f64_to_rational(x).expect("finite"))
}

/// Terms (−1)^k log(q_{k+1})/q_k of the convergence criterion series.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionTrace {
    pub terms: Vec<f64>,
    pub partial_sums: Vec<f64>,
    /// max − min of the last (up to ten) partial sums.
    pub cauchy_gap: f64,
}

pub fn criterion(cf: &CfExpansion, depth: usize) -> Result<CriterionTrace> {
    if depth == 0 {
        return Err(domain("criterion", "K must be at least 1"));
    }
    let c = convergents(cf, depth + 1);
    let n = c.len().saturating_sub(1).min(depth);
    let mut terms = Vec::with_capacity(n);
    let mut partial_sums = Vec::with_capacity(n);
    let mut s = CompensatedSum::new();
    for k in 0..n {
        let qk = c.q[k].to_f64().unwrap_or(f64::INFINITY);
        let t = ln_bigint(&c.q[k + 1]) / qk;
        let t = if k % 2 == 1 { -t } else { t };
        terms.push(t);
        s.add(t);
        partial_sums.push(s.value());
    }
    let last = &partial_sums[partial_sums.len().saturating_sub(10)..];
    let gap = if last.is_empty() {
        0.0
    } else {
        last.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - last.iter().cloned().fold(f64::INFINITY, f64::min)
    };
    Ok(CriterionTrace { terms, partial_sums, cauchy_gap: gap })
}

/// Frozen ‖F‖∞ used in the truncation bound for G.
pub fn f_sup_norm() -> f64 {
    crate::frozen::F_SUP_NORM
}

/// Σ_{j>J} 1/F_{j+1}.
fn fib_tail(j: usize) -> f64 {
    let (mut a, mut b) = (1.0f64, 1.0f64); // F_1, F_2
    for _ in 0..j {
        let c = a + b;
        a = b;
        b = c;
    }
    // b = F_{J+2}; the reciprocals decay at least geometrically with ratio 1/φ.
    let mut s = 0.0;
    let (mut x, mut y) = (a, b);
    for _ in 0..200 {
        s += 1.0 / y;
        let z = x + y;
        x = y;
        y = z;
        if 1.0 / y < 1e-18 * s {
            break;
        }
    }
    s
}

/// G(x) = Σ_j (−1)^j β_{j−1}(x) F(α_j(x)); inclusive j ≤ K for a rational.
pub fn g_value(cf: &CfExpansion, tol: f64) -> Result<SeriesValue> {
    if !(tol > 0.0) {
        return Err(domain("G", "tol must be positive"));
    }
    let f_sup = f_sup_norm();
    let (last, tail) = match cf.depth() {
        Some(k) => (k, 0.0),
        None => {
            let mut j = 1;
            while f_sup * fib_tail(j) > tol / 2.0 {
                j += 1;
            }
            (j, f_sup * fib_tail(j))
        }
    };
    let o = orbit::<f64>(cf, last);
    let n_terms = (last + 1) as f64;
    let mut s = CompensatedSum::new();
    for j in 0..=last {
        let b = o.beta_prev(j).mid();
        if b == 0.0 {
            break;
        }
        let a = o.alpha(j).mid().clamp(0.0, 1.0);
        let f = f_aux_tol(a, tol / (2.0 * n_terms * b))?;
        s.add(if j % 2 == 1 { -b * f } else { b * f });
    }
    Ok(SeriesValue { value: s.value(), tail_bound: tail, terms_used: (last + 1) as u64 })
}

/// G at the exact value of a double in [0, 1], with G(1) = F(1) = 0.
pub fn g_at(x: f64, tol: f64) -> Result<f64> {
    if x == 1.0 {
        return Ok(0.0);
    }
    if let Some(r) = dyadic_remainders(x) {
        // α_j = r_{j+1}/r_j and β_{j−1} = r_j/r_0 for j ≤ K, the depth.
        let r0 = r[0] as f64;
        let last = r.len() - 2;
        let n_terms = (last + 1) as f64;
        let mut s = CompensatedSum::new();
        for j in 0..=last {
            let b = r[j] as f64 / r0;
            let a = (r[j + 1] as f64 / r[j] as f64).clamp(0.0, 1.0);
            let f = f_aux_tol(a, tol / (2.0 * n_terms * b))?;
            s.add(if j % 2 == 1 { -b * f } else { b * f });
        }
        return Ok(s.value());
    }
    let r = f64_to_rational(x).ok_or_else(|| domain("G", "non-finite input"))?;
    Ok(g_value(&CfExpansion::from_rational(&r)?, tol)?.value)
}

/// δ(r) = (−1)^{K+1} A(1)/(2q) for a rational of depth K; 0 for streams.
pub fn delta(cf: &CfExpansion) -> f64 {
    match cf.rational_value() {
        None => 0.0,
        Some(r) => {
            let k = cf.depth().expect("terminating");
            let q = r.denom().to_f64().unwrap_or(f64::INFINITY);
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sign * a_one() / (2.0 * q)
        }
    }
}

/// δ at an exact rational.
pub fn delta_rational(r: &Rational) -> Result<f64> {
    Ok(delta(&CfExpansion::from_rational(r)?))
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct UpsilonValue {
    pub value: f64,
    pub err_estimate: f64,
    /// Number of G evaluations used by the quadrature.
    pub g_evals: usize,
}

/// Hurwitz ζ(3, a) = Σ_{n≥0} (n+a)⁻³ for a > 0.
pub fn hurwitz_zeta3(a: f64) -> f64 {
    let mut a = a;
    let mut s = 0.0;
    while a < 20.0 {
        s += 1.0 / (a * a * a);
        a += 1.0;
    }
    let r = 1.0 / (a * a);
    s + r * (0.5 + 0.5 / a + r * (0.25 - r * (1.0 / 12.0 - r * (1.0 / 12.0 - r * (0.15 - r * 5.0 / 12.0)))))
}

/// ∫₀^y G(u)(1+cu)⁻³du for c ∈ {0, 1}, using G(t) = F(t) − tG(α(t)) on each
/// Gauss branch. With n₀ = ⌊1/y⌋ and u_y = {1/y}, the branch part is
/// ∫₀¹ G(s)ω(s)ds, ω(s) = ζ(3, n₀+1+c+s) + [s ≥ u_y](n₀+c+s)⁻³.
/// Returns (value, error estimate, evaluations).
fn weighted_integral_g(y: &Rational, c: f64, tol: f64) -> Result<(f64, f64, usize)> {
    let yf = crate::scalar::rational_to_f64(y);
    let inv = y.recip();
    let n0r = inv.floor();
    let uy = crate::scalar::rational_to_f64(&(&inv - &n0r));
    let n0 = crate::scalar::rational_to_f64(&n0r);
    let mut failure = None;

    let f_tol = tol / (8.0 * yf);
    let opts = QuadOptions { abs_tol: tol / 8.0, max_level: 40, max_panels: 2000 };
    let fq = gauss_kronrod(
        |t: f64| match f_aux_tol(t, f_tol) {
            Ok(v) => v / (1.0 + c * t).powi(3),
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        },
        &[0.0, yf],
        opts,
    );

    // ∫ω = ∫₀^y t(1+ct)⁻³dt ≤ y²/2.
    let w_int = 0.5 * yf * yf;
    let g_tol = (tol / (8.0 * w_int)).min(1e-2);
    let opts = QuadOptions { abs_tol: 0.75 * tol, max_level: 40, max_panels: 2000 };
    let breaks: Vec<f64> = if uy > 0.0 && uy < 1.0 { vec![0.0, uy, 1.0] } else { vec![0.0, 1.0] };
    let gq = gauss_kronrod(
        |u: f64| {
            let mut w = hurwitz_zeta3(n0 + 1.0 + c + u);
            if u >= uy {
                w += 1.0 / (n0 + c + u).powi(3);
            }
            match g_at(u, g_tol) {
                Ok(v) => v * w,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            }
        },
        &breaks,
        opts,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let err = fq.err + yf * f_tol + gq.err + w_int * g_tol;
    Ok((fq.value - gq.value, err, fq.evals + gq.evals))
}

fn exact(x: f64, op: &'static str) -> Result<Rational> {
    f64_to_rational(x).ok_or_else(|| domain(op, "non-finite input"))
}

/// Υ(x) = ∫₀^x W, computed as ζ(2)/6 − φ₂(x) + 2∫₀^x G.
pub fn upsilon(x: f64, tol: f64) -> Result<UpsilonValue> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain("upsilon", format!("x = {x} outside [0,1]")));
    }
    if !(tol > 0.0) {
        return Err(domain("upsilon", "tol must be positive"));
    }
    if x == 0.0 {
        return Ok(UpsilonValue { value: 0.0, err_estimate: 0.0, g_evals: 0 });
    }
    let p2 = phi2(x, tol / 8.0)?;
    let (ig, ig_err, evals) = weighted_integral_g(&exact(x, "upsilon")?, 0.0, 0.4 * tol)?;
    let value = f64::zeta2() / 6.0 - p2.value + 2.0 * ig;
    Ok(UpsilonValue { value, err_estimate: p2.tail_bound + 2.0 * ig_err, g_evals: evals })
}

/// Υ(b) − Υ(a) = φ₂(a) − φ₂(b) + 2∫_a^b G. For b = 1 and a ≥ 1/2 the
/// G-integral is folded through the first Gauss branch; otherwise G is
/// integrated directly, which suits short intervals.
pub fn upsilon_between(a: f64, b: f64, tol: f64) -> Result<UpsilonValue> {
    if !(0.0 <= a && a <= b && b <= 1.0) {
        return Err(domain("upsilon_between", format!("need 0 ≤ a ≤ b ≤ 1, got [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(domain("upsilon_between", "tol must be positive"));
    }
    let pa = phi2(a, tol / 8.0)?;
    let pb = phi2(b, tol / 8.0)?;
    if b == 1.0 && a >= 0.5 && a < 1.0 {
        // ∫_a^1 G = ∫_a^1 F − ∫₀^{1/a−1} G(u)(1+u)⁻³du.
        let y = exact(a, "upsilon_between")?.recip() - Rational::from_integer(1.into());
        let (ig, ig_err, evals) = weighted_integral_g(&y, 1.0, 0.2 * tol)?;
        let mut failure = None;
        let f_tol = tol / (16.0 * (1.0 - a));
        let opts = QuadOptions { abs_tol: tol / 16.0, max_level: 40, max_panels: 2000 };
        let fq = gauss_kronrod(
            |t: f64| match f_aux_tol(t, f_tol) {
                Ok(v) => v,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            },
            &[a, 1.0],
            opts,
        );
        if let Some(e) = failure {
            return Err(e);
        }
        return Ok(UpsilonValue {
            value: pa.value - pb.value + 2.0 * (fq.value - ig),
            err_estimate: pa.tail_bound + pb.tail_bound + 2.0 * (fq.err + (1.0 - a) * f_tol + ig_err),
            g_evals: evals,
        });
    }
    let width = (b - a).max(f64::MIN_POSITIVE);
    let g_tol = (tol / (8.0 * width)).min(1e-2);
    let mut failure = None;
    let opts = QuadOptions { abs_tol: tol / 8.0, max_level: 40, max_panels: 4000 };
    let q = gauss_kronrod(
        |t: f64| match g_at(t, g_tol) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        },
        &[a, b],
        opts,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(UpsilonValue {
        value: pa.value - pb.value + 2.0 * q.value,
        err_estimate: pa.tail_bound + pb.tail_bound + 2.0 * (q.err + width * g_tol),
        g_evals: q.evals,
    })
}

/// Υ(x) by direct adaptive quadrature of W at dyadic nodes.
pub fn upsilon_direct(x: f64, tol: f64) -> Result<UpsilonValue> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain("upsilon", format!("x = {x} outside [0,1]")));
    }
    let opts = QuadOptions { abs_tol: tol, max_level: 40, max_panels: 20_000 };
    let q = gauss_kronrod(|t: f64| wilton_f64(t).unwrap_or(0.0), &[0.0, x], opts);
    Ok(UpsilonValue { value: q.value, err_estimate: q.err, g_evals: q.evals })
}

/// Two sides of one functional equation.
#[derive(Debug, Clone, Serialize)]
pub struct Residual {
    pub equation: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub bound: f64,
    pub pass: bool,
}

impl Residual {
    fn new(equation: &'static str, lhs: f64, rhs: f64, bound: f64) -> Self {
        let residual = lhs - rhs;
        Self { equation, lhs, rhs, residual, bound, pass: residual.abs() <= bound }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FunctionalReport {
    pub input: String,
    pub depth: usize,
    pub residuals: Vec<Residual>,
}

impl FunctionalReport {
    pub fn all_pass(&self) -> bool {
        self.residuals.iter().all(|r| r.pass)
    }
}

/// Slack for floating-point rounding in the residual bounds.
const ROUNDING_SLACK: f64 = 1e-13;

/// Tolerance used for G inside the residual checks.
pub const FEQ_G_TOL: f64 = 1e-8;

/// Residuals of
/// W(x) = log(1/x) − xW(α(x)),
/// G(x) = F(x) − xG(α(x)),
/// W(x) = Σ_{k<K}(−1)^kγ_k(x) + (−1)^K β_{K−1}(x) W(α_K(x)),
/// with every series summed to depth K.
pub fn functional_residuals(cf: &CfExpansion, depth: usize) -> Result<FunctionalReport> {
    if depth == 0 {
        return Err(domain("functional_residuals", "K must be at least 1"));
    }
    let o = orbit::<f64>(cf, depth);
    let x_iv: Interval<f64> = o.alpha(0);
    let x = x_iv.mid();
    if x == 0.0 {
        return Err(domain("functional_residuals", "x = 0 has no Gauss image"));
    }
    let shifted = cf.shift(1);
    let w_bound = |e: &WiltonEval| e.tail_estimate + e.enclosure_width;

    let mut residuals = Vec::new();

    let wx = wilton::<f64>(cf, depth);
    let wa = wilton::<f64>(&shifted, depth);
    let rhs = -x.ln() - x * wa.partial;
    let bound = w_bound(&wx) + x * w_bound(&wa) + x_iv.width() / x + ROUNDING_SLACK;
    residuals.push(Residual::new("W(x) = log(1/x) - x W(alpha(x))", wx.partial, rhs, bound));

    let gx = g_value(cf, FEQ_G_TOL)?;
    let ga = g_value(&shifted, FEQ_G_TOL)?;
    let f = f_aux_tol(x, FEQ_G_TOL / 4.0)?;
    let rhs = f - x * ga.value;
    let bound = gx.tail_bound + x * ga.tail_bound + 2.0 * FEQ_G_TOL + ROUNDING_SLACK;
    residuals.push(Residual::new("G(x) = F(x) - x G(alpha(x))", gx.value, rhs, bound));

    let k = match o.depth {
        Some(d) => depth.min(d),
        None => depth,
    };
    let mut head = CompensatedSum::new();
    let mut head_width = 0.0;
    for j in 0..k {
        let g = o.gamma(j).expect("γ defined below the depth");
        head.add(if j % 2 == 1 { -g.mid() } else { g.mid() });
        head_width += g.width();
    }
    let tail_cf = cf.shift(k);
    let wk = wilton::<f64>(&tail_cf, depth);
    let bk = o.beta_prev(k);
    let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
    let rhs = head.value() + sign * bk.mid() * wk.partial;
    let bound = w_bound(&wx) + head_width + bk.mid() * w_bound(&wk) + bk.width() * wk.partial.abs() + ROUNDING_SLACK;
    residuals.push(Residual::new("W(x) = sum_{k<K} (-1)^k gamma_k + (-1)^K beta_{K-1} W(alpha_K)", wx.partial, rhs, bound));

    Ok(FunctionalReport { input: cf.label().to_string(), depth, residuals })
}

/// Residual of the general equation with an explicit split index.
pub fn general_equation_residual(cf: &CfExpansion, split: usize, depth: usize) -> Result<Residual> {
    let o = orbit::<f64>(cf, split.max(depth));
    let k = match o.depth {
        Some(d) => split.min(d),
        None => split,
    };
    let wx = wilton::<f64>(cf, depth);
    let mut head = CompensatedSum::new();
    for j in 0..k {
        let g = o.gamma(j).ok_or_else(|| domain("general_equation_residual", "split past the depth"))?;
        head.add(if j % 2 == 1 { -g.mid() } else { g.mid() });
    }
    let wk = wilton::<f64>(&cf.shift(k), depth);
    let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
    let rhs = head.value() + sign * o.beta_prev(k).mid() * wk.partial;
    let bound = wx.tail_estimate + wk.tail_estimate + 1e-14;
    Ok(Residual::new("W general equation", wx.partial, rhs, bound))
}

/// φ₁ at a rational p/q in closed form: −(1/q) Σ_{j<q} B₁(jp/q) ψ(j/q).
pub fn phi1_rational(r: &Rational) -> f64 {
    use crate::bernoulli::bernoulli1;
    use crate::numeric::digamma;
    let f = r - r.floor();
    let q = f.denom().to_u64().expect("denominator fits in u64");
    let p = f.numer().to_u64().expect("numerator fits in u64");
    let mut s = CompensatedSum::new();
    for j in 1..q {
        let b = bernoulli1(&Rational::new(BigInt::from(j * p), BigInt::from(q)));
        let bf = crate::scalar::rational_to_f64(&b);
        s.add(bf * digamma(j as f64 / q as f64));
    }
    -s.value() / q as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn wilton_examples() {
        for k in 2..=50i64 {
            let w = wilton_rational(&rat(1, k)).unwrap();
            assert_eq!(w, (k as f64).ln());
        }
        assert_eq!(wilton_rational(&rat(0, 1)).unwrap(), 0.0);
        assert_eq!(wilton_rational(&rat(1, 1)).unwrap(), 0.0);
        let x = (5f64.sqrt() - 1.0) / 2.0;
        let w = wilton::<f64>(&CfExpansion::golden(), 60);
        assert!((w.partial - x * (1.0 / x).ln()).abs() < 1e-12);
        assert!(w.converged);
        let b = brjuno::<f64>(&CfExpansion::golden(), 60);
        assert!((b.partial - (1.0 / x).ln() / (1.0 - x)).abs() < 1e-12);
        let y = 2f64.sqrt() - 1.0;
        let b = brjuno::<f64>(&CfExpansion::sqrt2m1(), 60);
        assert!((b.partial - (1.0 / y).ln() / (1.0 - y)).abs() < 1e-12);
    }

    #[test]
    fn delta_examples() {
        let a1 = a_one();
        assert_eq!(delta(&CfExpansion::golden()), 0.0);
        assert!((delta_rational(&rat(1, 2)).unwrap() - a1 / 4.0).abs() < 1e-16);
        assert!((delta_rational(&rat(2, 7)).unwrap() + a1 / 14.0).abs() < 1e-16);
        assert!((delta_rational(&rat(0, 1)).unwrap() + a1 / 2.0).abs() < 1e-16);
    }

    #[test]
    fn criterion_traces() {
        let t = criterion(&CfExpansion::golden(), 60).unwrap();
        assert!(t.cauchy_gap < 1e-6);
        let t = criterion(&CfExpansion::doubly_exponential(), 4).unwrap();
        assert_eq!(t.terms.len(), 4);
        assert!(t.cauchy_gap > 0.5);
        let t = criterion(&CfExpansion::from_rational(&rat(3, 5)).unwrap(), 10).unwrap();
        assert_eq!(t.terms.len(), 3);
    }

    #[test]
    fn phi1_rational_closed_form() {
        assert!(phi1_rational(&rat(1, 2)).abs() < 1e-15);
        let v = crate::bernoulli::phi1_partial_phase(&crate::numeric::Phase::from_rational(&rat(2, 7)), 1e6);
        assert!((phi1_rational(&rat(2, 7)) - v).abs() < 1e-5);
    }

    #[test]
    fn dyadic_paths_match_general() {
        for x in [0.375, 0.1, 0.6180339887498949, 1e-7, 0.999] {
            let cf = CfExpansion::from_rational(&f64_to_rational(x).unwrap()).unwrap();
            let w = wilton::<f64>(&cf, usize::MAX - 1).partial;
            assert!((wilton_f64(x).unwrap() - w).abs() < 1e-13 * w.abs().max(1.0), "x = {x}");
            let g = g_value(&cf, 1e-9).unwrap().value;
            assert!((g_at(x, 1e-9).unwrap() - g).abs() < 1e-8, "x = {x}");
        }
        assert_eq!(wilton_f64(0.25).unwrap(), 4f64.ln());
    }

    #[test]
    fn g_at_zero() {
        let g = g_value(&CfExpansion::from_rational(&rat(0, 1)).unwrap(), 1e-9).unwrap();
        assert!((g.value - a_one() / 2.0).abs() < 1e-15);
    }
}
