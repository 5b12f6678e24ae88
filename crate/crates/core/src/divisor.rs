//! Divisor-function side: the τ sieve, the Dirichlet remainder Δ, partial
//! sums of ψ₁, Wilton's approximate functional equation and A through the
//! Δ-integral.

use num_integer::Roots;

use crate::autocorr::{f_aux_tol, AMethod, AValue};
use crate::contfrac::CfExpansion;
use crate::error::{domain, resource, Result};
use crate::numeric::{gauss_kronrod, gauss_legendre, Phase, QuadOptions};
use crate::scalar::{f64_to_rational, CompensatedSum, EULER_GAMMA};

/// Largest sieve limit accepted by [`tau_sieve`].
pub const TAU_SIEVE_CAP: u64 = 100_000_000;

/// Largest upper limit T accepted by [`a_via_delta`].
pub const A_DELTA_MAX_T: f64 = 1e7;

/// Bits of the convergent used to represent α(x) in the second AFE sum.
const AFE_PHASE_BITS: u64 = 128;

/// F tolerance inside the AFE residual.
const AFE_F_TOL: f64 = 1e-10;

/// τ(n) for 1 ≤ n ≤ V.
#[derive(Debug, Clone)]
pub struct TauTable {
    limit: u64,
    tau: Vec<u16>,
}

impl TauTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// τ(n); panics outside 1..=V.
    pub fn tau(&self, n: u64) -> u32 {
        assert!(n >= 1 && n <= self.limit, "τ({n}) outside the table");
        self.tau[n as usize] as u32
    }

    /// Σ_{n≤x} τ(n) from the table.
    pub fn prefix_sum(&self, x: u64) -> u64 {
        self.tau[1..=x.min(self.limit) as usize].iter().map(|&t| t as u64).sum()
    }
}

/// Divisor-marking sieve, O(V log V).
pub fn tau_sieve(v: u64) -> Result<TauTable> {
    if v == 0 {
        return Err(domain("tau_sieve", "V must be at least 1"));
    }
    if v > TAU_SIEVE_CAP {
        return Err(resource("tau_sieve", format!("V = {v} exceeds the cap {TAU_SIEVE_CAP}")));
    }
    let n = v as usize;
    let mut tau = vec![0u16; n + 1];
    for d in 1..=n {
        for m in (d..=n).step_by(d) {
            tau[m] += 1;
        }
    }
    Ok(TauTable { limit: v, tau })
}

/// Σ_{n≤N} τ(n) = 2Σ_{d≤√N}⌊N/d⌋ − ⌊√N⌋².
pub fn divisor_summatory(n: u64) -> u64 {
    let s = n.sqrt();
    let mut acc = 0u64;
    for d in 1..=s {
        acc += n / d;
    }
    2 * acc - s * s
}

/// Δ(x) = Σ_{n≤x} τ(n) − x(log x + 2γ − 1).
pub fn dirichlet_remainder(x: f64) -> Result<f64> {
    if !(x >= 1.0) || !x.is_finite() {
        return Err(domain("dirichlet_remainder", format!("x = {x} must be at least 1")));
    }
    let d = divisor_summatory(x.floor() as u64) as f64;
    Ok(d - x * (x.ln() + 2.0 * EULER_GAMMA - 1.0))
}

fn check_range(tab: &TauTable, v: f64, op: &'static str) -> Result<u64> {
    if !(v >= 0.0) {
        return Err(domain(op, format!("v = {v} must be nonnegative")));
    }
    let n = v.floor() as u64;
    if n > tab.limit {
        return Err(domain(op, format!("v = {v} exceeds the table limit {}", tab.limit)));
    }
    Ok(n)
}

/// Σ_{n≤N} τ(n) sin(2πnx)/n.
fn tau_sine_sum(x: &Phase, n_max: u64, tab: &TauTable) -> f64 {
    let mut s = CompensatedSum::new();
    for n in 1..=n_max {
        let t = tab.tau[n as usize] as f64;
        s.add(t * x.sin_mul(n) / n as f64);
    }
    s.value()
}

/// ψ₁ partial sum −(1/π)Σ_{n≤v} τ(n) sin(2πnx)/n.
pub fn psi1_partial(x: &Phase, v: f64, tab: &TauTable) -> Result<f64> {
    let n = check_range(tab, v, "psi1_partial")?;
    Ok(-tau_sine_sum(x, n, tab) / std::f64::consts::PI)
}

/// [`psi1_partial`] at the exact value of a double.
pub fn psi1_partial_f64(x: f64, v: f64, tab: &TauTable) -> Result<f64> {
    psi1_partial(&Phase::from_f64(x), v, tab)
}

/// Phase of α(x) = {1/x} for a point given by its quotient stream, from a
/// convergent of at least 128 bits.
fn alpha_phase(cf: &CfExpansion) -> Phase {
    let tail = cf.shift(1);
    match tail.rational_value() {
        Some(r) => Phase::from_rational(&r),
        None => Phase::from_rational(&tail.convergent_with_bits(AFE_PHASE_BITS)),
    }
}

fn x_phase(cf: &CfExpansion) -> Phase {
    match cf.rational_value() {
        Some(r) => Phase::from_rational(&r),
        None => Phase::from_rational(&cf.convergent_with_bits(AFE_PHASE_BITS)),
    }
}

/// LHS − RHS of Wilton's approximate functional equation,
/// (1/π)Σ_{n≤v} τ(n) sin(2πnx)/n + (x/π)Σ_{n≤x²v} τ(n) sin(2πnα(x))/n
/// + ½log x + F(x).
pub fn wilton_afe_residual(cf: &CfExpansion, v: f64, tab: &TauTable) -> Result<f64> {
    let xp = x_phase(cf);
    let x = xp.value();
    if !(x > 0.0) {
        return Err(domain("wilton_afe_residual", "x must be positive"));
    }
    afe_residual_at(&xp, &alpha_phase(cf), x, v, tab)
}

/// [`wilton_afe_residual`] at the exact value of a double in (0, 1].
pub fn wilton_afe_residual_f64(x: f64, v: f64, tab: &TauTable) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(domain("wilton_afe_residual", format!("x = {x} outside (0,1]")));
    }
    if x == 1.0 {
        check_afe_domain(x, v, tab)?;
        return Ok(0.0);
    }
    let cf = CfExpansion::from_rational(&f64_to_rational(x).expect("finite"))?;
    wilton_afe_residual(&cf, v, tab)
}

fn check_afe_domain(x: f64, v: f64, tab: &TauTable) -> Result<u64> {
    if !(x * x * v >= 2.0) {
        return Err(domain("wilton_afe_residual", format!("x²v = {} below 2", x * x * v)));
    }
    check_range(tab, v, "wilton_afe_residual")?;
    check_range(tab, x * x * v, "wilton_afe_residual")
}

fn afe_residual_at(xp: &Phase, ap: &Phase, x: f64, v: f64, tab: &TauTable) -> Result<f64> {
    let n2 = check_afe_domain(x, v, tab)?;
    let n1 = check_range(tab, v, "wilton_afe_residual")?;
    let pi = std::f64::consts::PI;
    let mut s = CompensatedSum::new();
    s.add(tau_sine_sum(xp, n1, tab) / pi);
    s.add(x * tau_sine_sum(ap, n2, tab) / pi);
    s.add(0.5 * x.ln());
    s.add(f_aux_tol(x, AFE_F_TOL)?);
    Ok(s.value())
}

/// |residual|·(x²v)^{1/2}/log²(x²v), the ratio bounded by the AFE constant.
pub fn afe_ratio(residual: f64, x: f64, v: f64) -> f64 {
    let y = x * x * v;
    residual.abs() * y.sqrt() / y.ln().powi(2)
}

/// max over `xs` of |Σ_{n≤v} τ(n) sin(2πnx)/n| / log v.
pub fn walfisz_ratio(xs: &[f64], v: f64, tab: &TauTable) -> Result<f64> {
    let n = check_range(tab, v, "walfisz_ratio")?;
    if n < 2 {
        return Err(domain("walfisz_ratio", "v must be at least 2"));
    }
    let mut best = 0.0f64;
    for &x in xs {
        best = best.max(tau_sine_sum(&Phase::from_f64(x), n, tab).abs());
    }
    Ok(best / v.ln())
}

/// Canonical x-grid for the uniform bounds: i/N shifted by (√2−1)/1024.
pub fn canonical_grid(n: usize) -> Vec<f64> {
    let shift = (2f64.sqrt() - 1.0) / 1024.0;
    (0..n).map(|i| i as f64 / n as f64 + shift).collect()
}

/// A(x) = ∫₀^∞ Δ(t) sin(2πtx)/(πt²) dt on [0, T], with the tail bounded by
/// (3C_Δ/(2π))T^{−2/3} from |Δ(t)| ≤ C_Δ t^{1/3}.
pub fn a_via_delta(x: f64, t_max: f64) -> Result<AValue> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("A_via_delta", format!("x = {x} must be positive")));
    }
    if !(t_max >= 10.0) {
        return Err(domain("A_via_delta", format!("T = {t_max} below 10")));
    }
    if t_max > A_DELTA_MAX_T {
        return Err(resource("A_via_delta", format!("T = {t_max} exceeds {A_DELTA_MAX_T:e}")));
    }
    let pi = std::f64::consts::PI;
    let tau2 = 2.0 * pi;
    let c = 2.0 * EULER_GAMMA - 1.0;

    // [0, 1]: Δ(t) = −t(log t + 2γ − 1); the integrand has a log singularity.
    let opts = QuadOptions { abs_tol: 1e-13, max_level: 50, max_panels: 2000 };
    let head = gauss_kronrod(|t: f64| -(t.ln() + c) * (tau2 * t * x).sin() / (pi * t), &[0.0, 1.0], opts);

    // [n, n+1]: Δ(t) = D(n) − t(log t + 2γ − 1), split into sub-panels of
    // at most a quarter period.
    let (gx, gw) = gauss_legendre(10);
    let sub = (4.0 * x).ceil().max(1.0) as usize;
    let n_max = t_max.floor() as u64;
    let mut s = CompensatedSum::new();
    s.add(head.value);
    let tab = tau_sieve(n_max.max(1))?;
    let mut d = 0u64;
    for n in 1..n_max {
        d += tab.tau(n) as u64;
        let df = d as f64;
        let h = 1.0 / sub as f64;
        for j in 0..sub {
            let a = n as f64 + j as f64 * h;
            let mid = a + 0.5 * h;
            let mut acc = 0.0;
            for (&node, &w) in gx.iter().zip(&gw) {
                let t = mid + 0.5 * h * node;
                let delta = df - t * (t.ln() + c);
                acc += w * delta * (tau2 * t * x).sin() / (pi * t * t);
            }
            s.add(0.5 * h * acc);
        }
    }
    let tail = 1.5 * crate::frozen::DELTA_ENVELOPE_C / pi * t_max.powf(-2.0 / 3.0);
    Ok(AValue { value: s.value(), method: AMethod::ViaDelta, err_estimate: tail + head.err })
}

/// max over integers 2 ≤ n ≤ N of |Δ(n)|/n^{1/3} and of the left limits
/// |Δ(n⁻)|/n^{1/3}.
pub fn delta_envelope(n_max: u64, tab: &TauTable) -> Result<f64> {
    check_range(tab, n_max as f64, "delta_envelope")?;
    let c = 2.0 * EULER_GAMMA - 1.0;
    let mut d = 0u64;
    let mut best = 0.0f64;
    for n in 1..=n_max {
        let nf = n as f64;
        let main = nf * (nf.ln() + c);
        let left = d as f64 - main;
        d += tab.tau(n) as u64;
        let right = d as f64 - main;
        best = best.max(left.abs().max(right.abs()) / nf.cbrt());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_examples() {
        let t = tau_sieve(100).unwrap();
        assert_eq!(t.tau(1), 1);
        assert_eq!(t.tau(6), 4);
        assert_eq!(t.tau(12), 6);
        assert_eq!(t.tau(97), 2);
        assert!(tau_sieve(0).is_err());
        assert!(tau_sieve(TAU_SIEVE_CAP + 1).is_err());
    }

    #[test]
    fn hyperbola_matches_table() {
        let t = tau_sieve(10_000).unwrap();
        let mut acc = 0u64;
        for n in 1..=10_000u64 {
            acc += t.tau(n) as u64;
            assert_eq!(divisor_summatory(n), acc, "n = {n}");
        }
    }

    #[test]
    fn remainder_examples() {
        let d1 = dirichlet_remainder(1.0).unwrap();
        assert!((d1 - (2.0 - 2.0 * EULER_GAMMA)).abs() < 1e-15);
        let below = dirichlet_remainder(2.0 - 1e-12).unwrap();
        let at = dirichlet_remainder(2.0).unwrap();
        assert!((at - below - 2.0).abs() < 1e-9);
        assert!(dirichlet_remainder(1e6).unwrap().abs() / 1e6f64.powf(0.4) <= 10.0);
        assert!(dirichlet_remainder(0.5).is_err());
    }

    #[test]
    fn psi1_examples() {
        let t = tau_sieve(1000).unwrap();
        assert_eq!(psi1_partial_f64(0.5, 1000.0, &t).unwrap(), 0.0);
        let x = 0.3;
        let v = psi1_partial_f64(x, 1.0, &t).unwrap();
        assert!((v + (2.0 * std::f64::consts::PI * x).sin() / std::f64::consts::PI).abs() < 1e-15);
        assert!(psi1_partial_f64(x, 1001.0, &t).is_err());
    }

    #[test]
    fn afe_at_one() {
        let t = tau_sieve(1000).unwrap();
        assert_eq!(wilton_afe_residual_f64(1.0, 1000.0, &t).unwrap(), 0.0);
        assert!(wilton_afe_residual_f64(0.01, 1000.0, &t).is_err());
    }
}
