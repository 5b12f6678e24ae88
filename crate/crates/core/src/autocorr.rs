//! The autocorrelation A(λ) = ∫₀^∞ {t}{λt} dt/t² by independent routes, its
//! modulus of continuity, and the auxiliary function
//! F(x) = ((x+1)/2)A(1) − A(x) − (x/2)log x.

use serde::{Deserialize, Serialize};

use crate::bernoulli::phi2_partial;
use crate::error::{domain, resource, Result};
use crate::numeric::{gauss_kronrod, ln1p_series_i1, ln1p_series_i2, QuadOptions};
use crate::scalar::{CompensatedSum, Real, EULER_GAMMA};

/// Piece budget for the direct route.
pub const MAX_PIECES: f64 = 1e8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AMethod {
    Direct,
    #[serde(rename = "phi2")]
    ViaPhi2,
    #[serde(rename = "series")]
    ViaSeries,
    #[serde(rename = "delta")]
    ViaDelta,
}

impl AMethod {
    pub fn name(self) -> &'static str {
        match self {
            AMethod::Direct => "direct",
            AMethod::ViaPhi2 => "phi2",
            AMethod::ViaSeries => "series",
            AMethod::ViaDelta => "delta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AValue {
    pub value: f64,
    pub method: AMethod,
    pub err_estimate: f64,
}

/// A(1) = log(2π) − γ.
pub fn a_one() -> f64 {
    f64::a_one()
}

/// Exact integral of {t}{λt}/t² over the piece [a, a+h] on which
/// ⌊t⌋ = m and ⌊λt⌋ = n. Every term is nonnegative.
#[inline]
fn piece(lam: f64, a: f64, h: f64, m: f64, n: f64) -> f64 {
    if a == 0.0 {
        return lam * h;
    }
    let ua = a - m;
    let wa = (lam * a - n).max(0.0);
    let r = h / a;
    let c0 = ua * wa;
    let c1 = ua * lam + wa;
    let i0 = h / (a * (a + h));
    let i1 = ln1p_series_i1(r);
    let i2 = a * ln1p_series_i2(r);
    c0 * i0 + c1 * i1 + lam * i2
}

/// ∫₀^{T_i} {t}{λt}/t² dt at each of the increasing cut-offs.
pub fn partial_integrals(lam: f64, cutoffs: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(cutoffs.len());
    let mut s = CompensatedSum::new();
    let (mut m, mut n) = (0u64, 0u64);
    let mut a = 0.0f64;
    let mut ci = 0;
    while ci < cutoffs.len() {
        let t_end = cutoffs[ci];
        let next_int = (m + 1) as f64;
        let next_lam = (n + 1) as f64 / lam;
        let b = next_int.min(next_lam).min(t_end);
        if b > a {
            s.add(piece(lam, a, b - a, m as f64, n as f64));
        }
        if next_int <= b {
            m += 1;
        }
        if next_lam <= b {
            n += 1;
        }
        if b >= t_end {
            out.push(s.value());
            ci += 1;
        }
        a = b;
    }
    out
}

/// Number of pieces on [0, T].
fn piece_count(lam: f64, t: f64) -> f64 {
    t * (1.0 + lam)
}

/// Direct route: exact piecewise integration on [0, 2T] and Richardson
/// extrapolation A ≈ 2S(2T) − S(T).
pub fn a_direct(lam: f64, t: f64) -> Result<AValue> {
    if !(lam > 0.0) || !lam.is_finite() {
        return Err(domain("A_direct", format!("λ = {lam} must be positive")));
    }
    let t_min = 10.0 * 1f64.max(1.0 / lam);
    if t < t_min {
        return Err(domain("A_direct", format!("T = {t} below 10·max(1,1/λ) = {t_min}")));
    }
    if piece_count(lam, 2.0 * t) > MAX_PIECES {
        return Err(resource("A_direct", format!("T = {t} needs more than {MAX_PIECES:e} pieces")));
    }
    let s = partial_integrals(lam, &[t, 2.0 * t]);
    Ok(AValue { value: 2.0 * s[1] - s[0], method: AMethod::Direct, err_estimate: (s[1] - s[0]).abs() })
}

/// Two-term small-λ expansion (λ/2)log(1/λ) + (1+A(1))λ/2, within
/// (ζ(2)/6)λ² of A(λ).
pub fn a_small_lambda(lam: f64) -> f64 {
    0.5 * lam * (1.0 / lam).ln() + 0.5 * (1.0 + a_one()) * lam
}

/// Bound on |A(λ) − a_small_lambda(λ)|.
pub fn a_small_lambda_bound(lam: f64) -> f64 {
    f64::zeta2() / 6.0 * lam * lam
}

/// Three-term small-λ expansion, adding (λ²/2)φ₂(1/λ); within
/// (ζ(2)/3)λ³ of A(λ). The φ₂ sum is truncated so that it moves the result
/// by at most `tol`/2.
pub fn a_small_lambda3(lam: f64, tol: f64) -> f64 {
    let mu = 1.0 / lam;
    let n = (lam * lam / (6.0 * tol)).ceil().clamp(64.0, 1e8) as u64;
    a_small_lambda(lam) + 0.5 * lam * lam * phi2_partial(mu - mu.floor(), n)
}

/// Bound on |A(λ) − a_small_lambda3(λ)|.
pub fn a_small_lambda3_bound(lam: f64) -> f64 {
    f64::zeta2() / 3.0 * lam * lam * lam
}

/// Cut-off multiplier used by [`a_value`] for a target accuracy.
pub fn direct_multiplier(tol: f64) -> f64 {
    (crate::frozen::A_DIRECT_RICHARDSON_C / tol).sqrt().clamp(64.0, 1e5).ceil()
}

/// A(λ) to about `tol` using the cheapest reliable route: the closed form
/// at 0 and 1, a small-λ expansion when its bound is below `tol`, and the
/// extrapolated direct integral otherwise.
pub fn a_value(lam: f64, tol: f64) -> Result<f64> {
    if !(lam >= 0.0) || !lam.is_finite() {
        return Err(domain("A", format!("λ = {lam} must be nonnegative")));
    }
    if lam == 0.0 {
        return Ok(0.0);
    }
    if lam == 1.0 {
        return Ok(a_one());
    }
    if a_small_lambda_bound(lam) <= tol {
        return Ok(a_small_lambda(lam));
    }
    if a_small_lambda3_bound(lam) <= tol / 2.0 {
        return Ok(a_small_lambda3(lam, tol));
    }
    let k = direct_multiplier(tol);
    let t = k * 1f64.max(1.0 / lam);
    let s = partial_integrals(lam, &[t, 2.0 * t]);
    Ok(2.0 * s[1] - s[0])
}

/// Route through φ₂:
/// A(λ) = ½log λ + (1+A(1))/2 + φ₂(λ)/(2λ) − λ∫_λ^∞ φ₂(t)t⁻³dt,
/// with the integral taken on [λ, U] and the remainder bounded by
/// λ(ζ(2)/6)/(2U²).
pub fn a_via_phi2(lam: f64, u: f64, tol: f64) -> Result<AValue> {
    if !(lam > 0.0) || !lam.is_finite() {
        return Err(domain("A_via_phi2", format!("λ = {lam} must be positive")));
    }
    if u < 10.0 * lam {
        return Err(domain("A_via_phi2", format!("U = {u} below 10λ")));
    }
    if !(tol > 0.0) {
        return Err(domain("A_via_phi2", "tol must be positive"));
    }
    // Truncating φ₂ at N terms moves the result by at most 1/(6Nλ).
    let n_terms = (1.0 / (2.0 * lam * tol)).ceil().clamp(64.0, 1e7) as u64;
    let trunc = 1.0 / (6.0 * n_terms as f64 * lam);
    let phi2 = |t: f64| phi2_partial(t, n_terms);
    let mut breaks = vec![lam];
    let mut k = lam.floor() + 1.0;
    while k < u {
        breaks.push(k);
        k += 1.0;
    }
    breaks.push(u);
    if (breaks.len() as f64) * 15.0 * n_terms as f64 > 4e10 {
        return Err(resource("A_via_phi2", "integration grid too large"));
    }
    let opts = QuadOptions { abs_tol: tol / (4.0 * lam), max_level: 20, max_panels: 200_000 };
    let q = gauss_kronrod(|t: f64| phi2(t) / (t * t * t), &breaks, opts);
    let tail = lam * f64::zeta2() / 6.0 / (2.0 * u * u);
    let value = 0.5 * lam.ln() + 0.5 * (1.0 + a_one()) + phi2(lam) / (2.0 * lam) - lam * q.value;
    Ok(AValue { value, method: AMethod::ViaPhi2, err_estimate: lam * q.err + tail + trunc })
}

/// J(s) = ∫_s^∞ B₁(u)/u² du for s > 0.
pub fn b1_tail_integral(s: f64) -> f64 {
    debug_assert!(s > 0.0);
    let m = s.ceil().max(1.0);
    let k = m - 1.0;
    // Partial piece [s, M] inside [k, k+1): antiderivative log u + (k+½)/u.
    let partial = if m > s {
        let d = m - s;
        (d / s).ln_1p() - (k + 0.5) * d / (m * s)
    } else {
        0.0
    };
    partial + b1_tail_integer(m)
}

/// J(M) = H_M − 1/(2M) − γ − log M for integer M ≥ 1.
fn b1_tail_integer(m: f64) -> f64 {
    if m <= 40.0 {
        let h: f64 = (1..=m as u64).map(|j| 1.0 / j as f64).sum();
        return h - 0.5 / m - EULER_GAMMA - m.ln();
    }
    let y = 1.0 / (m * m);
    y * (-1.0 / 12.0 + y * (1.0 / 120.0 - y * (1.0 / 252.0 - y / 240.0)))
}

/// Route through φ₁: A(λ) = ½log λ + (A(1)+1)/2 − λΣ_{n≤N} J(nλ).
pub fn a_via_series(lam: f64, n_terms: u64) -> Result<AValue> {
    if !(lam > 0.0) || !lam.is_finite() {
        return Err(domain("A_via_series", format!("λ = {lam} must be positive")));
    }
    if n_terms == 0 {
        return Err(domain("A_via_series", "N must be positive"));
    }
    let mut s = CompensatedSum::new();
    for n in 1..=n_terms {
        s.add(b1_tail_integral(n as f64 * lam));
    }
    let value = 0.5 * lam.ln() + 0.5 * (a_one() + 1.0) - lam * s.value();
    let err = crate::frozen::A_SERIES_C * (1.0 + 1.0 / lam) / n_terms as f64;
    Ok(AValue { value, method: AMethod::ViaSeries, err_estimate: err })
}

/// Default accuracy for F.
pub const F_DEFAULT_TOL: f64 = 1e-9;

/// F(x) = ((x+1)/2)A(1) − A(x) − (x/2)log x on [0, 1].
pub fn f_aux(x: f64) -> Result<f64> {
    f_aux_tol(x, F_DEFAULT_TOL)
}

pub fn f_aux_tol(x: f64, tol: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain("F", format!("x = {x} outside [0,1]")));
    }
    if x == 1.0 {
        return Ok(0.0);
    }
    let a1 = a_one();
    if x == 0.0 {
        return Ok(a1 / 2.0);
    }
    Ok(0.5 * (x + 1.0) * a1 - a_value(x, tol)? - 0.5 * x * x.ln())
}

/// Empirical sup of |A(x+h) − A(x)| over the 2000-point grid x = i/1000,
/// i = 1..2000, of (0, 2].
pub fn mod_continuity_a(h: f64) -> Result<f64> {
    mod_continuity_a_grid(h, 2000, 1e-9)
}

pub fn mod_continuity_a_grid(h: f64, points: usize, tol: f64) -> Result<f64> {
    if !(h > 0.0 && h <= 1.0) {
        return Err(domain("mod_continuity_A", format!("h = {h} outside (0,1]")));
    }
    let mut best = 0.0f64;
    for i in 1..=points {
        let x = 2.0 * i as f64 / points as f64;
        let d = (a_value(x + h, tol)? - a_value(x, tol)?).abs();
        best = best.max(d);
    }
    // The grid starts at 2/points; the increment from 0 is covered separately.
    best = best.max(a_value(h, tol)?);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_one_direct() {
        let v = a_direct(1.0, 1e5).unwrap();
        assert!((v.value - a_one()).abs() < 1e-8, "{v:?}");
    }

    #[test]
    fn tail_integral_closed_form() {
        // J(1) = 1/2 − γ; J agrees with direct quadrature on a few pieces.
        assert!((b1_tail_integral(1.0) - (0.5 - EULER_GAMMA)).abs() < 1e-15);
        let s = 2.3;
        let direct = (2.3f64 / 3.0).ln().abs() - 2.5 * (1.0 / 2.3 - 1.0 / 3.0) + b1_tail_integral(3.0);
        assert!((b1_tail_integral(s) - direct).abs() < 1e-15);
        for m in [39.0, 41.0, 100.0] {
            let h: f64 = (1..=m as u64).map(|j| 1.0 / j as f64).sum();
            let exact = h - 0.5 / m - EULER_GAMMA - f64::ln(m);
            assert!((b1_tail_integer(m) - exact).abs() < 1e-13);
        }
    }

    #[test]
    fn f_endpoints() {
        assert_eq!(f_aux(1.0).unwrap(), 0.0);
        assert!((f_aux(0.0).unwrap() - 0.630_330_700_753_906).abs() < 1e-14);
        assert!(f_aux(1.5).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(a_direct(0.0, 1e3).is_err());
        assert!(a_direct(1.0, 5.0).is_err());
        assert!(a_direct(1e-6, 1e12).is_err());
        assert!(a_via_phi2(1.0, 5.0, 1e-6).is_err());
    }
}
