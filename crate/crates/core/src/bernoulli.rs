//! Bernoulli functions B₁, B₂, the series φ₁ and φ₂, Landau's inner product
//! and the residual of Sylvester's approximate functional equation.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::contfrac::Rational;
use crate::error::{domain, Error, Result};
use crate::numeric::Phase;
use crate::scalar::{f64_to_rational, CompensatedSum, Fractional, Real};

/// Largest number of terms used for φ₂.
pub const PHI2_MAX_TERMS: u64 = 100_000_000;

/// Partial sum with a bound on the neglected tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue<R = f64> {
    pub value: R,
    pub tail_bound: R,
    pub terms_used: u64,
}

/// B₁(t) = {t} − ½ + [t ∈ ℤ]/2.
pub fn bernoulli1<T: Fractional>(t: &T) -> T {
    let f = t.frac();
    if f.is_zero() {
        T::zero()
    } else {
        f - T::half()
    }
}

/// B₂(t) = {t}² − {t} + 1/6.
pub fn bernoulli2<T: Fractional>(t: &T) -> T {
    let f = t.frac();
    f.clone() * f.clone() - f + T::one() / T::from_int(6)
}

/// Σ_{n≤v} B₁(nx)/n in ascending order of n.
pub fn phi1_partial<R: Real + Fractional>(x: R, v: f64) -> R {
    let n_max = v.floor().max(0.0) as u64;
    let x = x.frac();
    let mut s = CompensatedSum::new();
    for n in 1..=n_max {
        let nr = R::lit(n as f64);
        s.add(bernoulli1(&(nr * x)) / nr);
    }
    s.value()
}

/// Σ_{n≤v} B₁(nx)/n with the products n·x reduced exactly (or in
/// double-double precision for long phases).
pub fn phi1_partial_phase(x: &Phase, v: f64) -> f64 {
    let n_max = v.floor().max(0.0) as u64;
    let mut s = CompensatedSum::new();
    for n in 1..=n_max {
        s.add(x.b1_mul(n) / n as f64);
    }
    s.value()
}

fn phi2_terms(tol: f64, op: &'static str) -> Result<u64> {
    if !(tol > 0.0) {
        return Err(domain(op, "tol must be positive"));
    }
    let n = (1.0 / (6.0 * tol)).ceil();
    if n > PHI2_MAX_TERMS as f64 {
        return Err(Error::Tolerance { op, requested: tol, achievable: 1.0 / (6.0 * PHI2_MAX_TERMS as f64) });
    }
    Ok((n as u64).max(1))
}

/// Σ_{n≤N} B₂(nx)/n².
pub fn phi2_partial<R: Real + Fractional>(x: R, n_max: u64) -> R {
    let x = x.frac();
    let mut s = CompensatedSum::new();
    for n in 1..=n_max {
        let nr = R::lit(n as f64);
        s.add(bernoulli2(&(nr * x)) / (nr * nr));
    }
    s.value()
}

/// φ₂(x) = Σ B₂(nx)/n² to within `tol`, with N = ⌈1/(6·tol)⌉.
pub fn phi2<R: Real + Fractional>(x: R, tol: f64) -> Result<SeriesValue<R>> {
    let n = phi2_terms(tol, "phi2")?;
    Ok(SeriesValue { value: phi2_partial(x, n), tail_bound: R::lit(1.0 / (6.0 * n as f64)), terms_used: n })
}

/// Σ_{n≤N} B₂(nx)/n² with the products reduced through a phase.
pub fn phi2_partial_phase(x: &Phase, n_max: u64) -> f64 {
    let mut s = CompensatedSum::new();
    for n in 1..=n_max {
        let (f, _) = x.frac_mul(n);
        let nf = n as f64;
        s.add((f * f - f + 1.0 / 6.0) / (nf * nf));
    }
    s.value()
}

/// φ₂ from the integral form 2∫₀^x φ₁ + ζ(2)/6, each ∫₀^x B₁(nu)du being
/// (B₂(nx) − B₂(0))/(2n).
pub fn phi2_via_integral<R: Real + Fractional>(x: R, tol: f64) -> Result<SeriesValue<R>> {
    if x < R::zero() || x > R::one() {
        return Err(domain("phi2_via_integral", format!("x = {x} outside [0,1]")));
    }
    // |B₂ − 1/6| ≤ 1/4 gives a tail ≤ 1/(4N).
    let n_max = phi2_terms(tol / 1.5, "phi2_via_integral")?;
    let sixth = R::one() / R::lit(6.0);
    let mut s = CompensatedSum::new();
    for n in 1..=n_max {
        let nr = R::lit(n as f64);
        s.add((bernoulli2(&(nr * x)) - sixth) / (nr * nr));
    }
    Ok(SeriesValue {
        value: s.value() + R::zeta2() / R::lit(6.0),
        tail_bound: R::lit(1.0 / (4.0 * n_max as f64)),
        terms_used: n_max,
    })
}

/// ∫₀¹ B₁(mt)B₁(nt) dt by exact piecewise integration over the breakpoints
/// k/m and k/n. With `T = Rational` the result is exact.
pub fn b1_product_integral<T: Fractional>(m: u64, n: u64) -> T {
    let mut breaks: Vec<T> = (0..=m)
        .map(|k| T::from_int(k as i64) / T::from_int(m as i64))
        .chain((0..=n).map(|k| T::from_int(k as i64) / T::from_int(n as i64)))
        .collect();
    breaks.sort_by(|a, b| a.partial_cmp(b).expect("ordered"));
    breaks.dedup();
    let (mt, nt) = (T::from_int(m as i64), T::from_int(n as i64));
    let two = T::from_int(2);
    let three = T::from_int(3);
    let mut total = T::zero();
    for w in breaks.windows(2) {
        let (a, b) = (w[0].clone(), w[1].clone());
        let mid = (a.clone() + b.clone()) / two.clone();
        // On the open piece B₁(mt) = mt − c₁ and B₁(nt) = nt − c₂.
        let c1 = (mt.clone() * mid.clone()).floor_part() + T::half();
        let c2 = (nt.clone() * mid).floor_part() + T::half();
        let (a2, b2) = (a.clone() * a.clone(), b.clone() * b.clone());
        let (a3, b3) = (a2.clone() * a.clone(), b2.clone() * b.clone());
        let quad = mt.clone() * nt.clone() * (b3 - a3) / three.clone();
        let lin = (mt.clone() * c2.clone() + nt.clone() * c1.clone()) * (b2 - a2) / two.clone();
        let cst = c1 * c2 * (b - a);
        total = total + quad - lin + cst;
    }
    total
}

/// Landau's identity ∫₀¹ B₁(mt)B₁(nt) dt = gcd(m,n)²/(12mn), verified by
/// exact piecewise integration.
pub fn landau_inner(m: u64, n: u64) -> Result<Rational> {
    if m == 0 || n == 0 {
        return Err(domain("landau_inner", "m and n must be positive"));
    }
    let exact: Rational = b1_product_integral(m, n);
    let g = m.gcd(&n);
    let closed = Rational::new(BigInt::from(g * g), BigInt::from(12 * m * n));
    if exact != closed {
        return Err(Error::Invariant(format!("landau({m},{n}): piecewise {exact} != closed form {closed}")));
    }
    Ok(exact)
}

/// ε(x, v) = Σ_{m≤v} B₁(mx)/m + x·Σ_{n≤xv} B₁(nα(x))/n − F(x) + ½log(1/x).
///
/// `x` is taken as the exact value of the double.
pub fn sylvester_residual(x: f64, v: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(domain("sylvester_residual", format!("x = {x} outside (0,1]")));
    }
    if x * v < 1.0 {
        return Err(domain("sylvester_residual", "x·v must be at least 1"));
    }
    let xr = f64_to_rational(x).expect("finite");
    let inv = xr.recip();
    let alpha = &inv - inv.floor();
    let s1 = phi1_partial_phase(&Phase::from_f64(x), v);
    let s2 = phi1_partial_phase(&Phase::from_rational(&alpha), x * v);
    let f = crate::autocorr::f_aux(x)?;
    let mut s = CompensatedSum::new();
    s.add(s1);
    s.add(x * s2);
    s.add(-f);
    s.add(-0.5 * x.ln());
    Ok(s.value())
}

/// Empirical sup of |φ₂(x+h) − φ₂(x)| over x = i/points, i = 0..points,
/// each φ₂ truncated after N terms (so the sup is within 1/(2N) of the grid
/// sup of the true φ₂).
pub fn mod_continuity_phi2(h: f64, points: usize, n_terms: u64) -> Result<f64> {
    if !(h > 0.0 && h <= 1.0) {
        return Err(domain("mod_continuity_phi2", format!("h = {h} outside (0,1]")));
    }
    if points == 0 || n_terms == 0 {
        return Err(domain("mod_continuity_phi2", "need at least one point and one term"));
    }
    let mut best = 0.0f64;
    for i in 0..points {
        let x = i as f64 / points as f64;
        best = best.max((phi2_partial(x + h, n_terms) - phi2_partial(x, n_terms)).abs());
    }
    Ok(best)
}

/// x-grid of the Sylvester calibration: i/37 + (√2−1)/1024, i = 1..36.
pub fn sylvester_grid() -> Vec<f64> {
    let shift = (2f64.sqrt() - 1.0) / 1024.0;
    (1..=36).map(|i| i as f64 / 37.0 + shift).collect()
}

/// max over the grid and the given v of |ε(x, v)|·x·v.
pub fn sylvester_max_ratio(xs: &[f64], vs: &[f64]) -> Result<f64> {
    let mut best = 0.0f64;
    for &v in vs {
        for &x in xs {
            best = best.max(sylvester_residual(x, v)?.abs() * x * v);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli1(&0.0f64), 0.0);
        assert_eq!(bernoulli1(&0.5f64), 0.0);
        assert_eq!(bernoulli1(&0.25f64), -0.25);
        assert_eq!(bernoulli2(&rat(0, 1)), rat(1, 6));
        assert_eq!(bernoulli2(&rat(1, 2)), rat(-1, 12));
        assert_eq!(bernoulli2(&rat(1, 1)), rat(1, 6));
        assert_eq!(bernoulli1(&rat(-1, 3)), rat(1, 6));
    }

    #[test]
    fn phi1_examples() {
        assert_eq!(phi1_partial(0.5f64, 1000.0), 0.0);
        assert_eq!(phi1_partial(0.3f64, 1.0), bernoulli1(&0.3f64));
        assert!((phi1_partial(1.0f64 / 3.0, 2.0) + 1.0 / 12.0).abs() < 1e-15);
        let third = Phase::from_rational(&rat(1, 3));
        assert!((phi1_partial_phase(&third, 2.0) + 1.0 / 12.0).abs() < 1e-16);
    }

    #[test]
    fn phi2_examples() {
        let z = f64::zeta2();
        let v = phi2(0.0f64, 1e-6).unwrap();
        assert!((v.value - z / 6.0).abs() <= v.tail_bound);
        let v = phi2(0.5f64, 1e-6).unwrap();
        assert!((v.value + z / 48.0).abs() <= v.tail_bound);
        let a = phi2(0.3f64, 1e-4).unwrap().value;
        let b = phi2(1.3f64, 1e-4).unwrap().value;
        assert!((a - b).abs() < 1e-12);
        assert!(phi2(0.1f64, 1e-12).is_err());
        let w = phi2_via_integral(1.0f64, 1e-6).unwrap();
        assert!((w.value - z / 6.0).abs() < 1e-15);
    }

    #[test]
    fn landau_examples() {
        assert_eq!(landau_inner(1, 1).unwrap(), rat(1, 12));
        assert_eq!(landau_inner(1, 2).unwrap(), rat(1, 24));
        assert_eq!(landau_inner(6, 4).unwrap(), rat(1, 72));
        let approx: f64 = b1_product_integral(6, 4);
        assert!((approx - 1.0 / 72.0).abs() < 1e-15);
    }

    #[test]
    fn sylvester_at_one() {
        for v in [1.0, 10.0, 1000.0] {
            assert_eq!(sylvester_residual(1.0, v).unwrap(), 0.0);
        }
        assert!(sylvester_residual(0.0, 10.0).is_err());
    }
}
