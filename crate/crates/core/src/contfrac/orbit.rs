use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::expansion::{convergents, CfExpansion, Convergents};
use crate::scalar::{enclose_rational, ln_bigint, rational_to_f64, Interval, Real};

/// Hard cap on the tail length used for an α_k enclosure.
pub const MAX_TAIL_TERMS: usize = 64;

#[derive(Debug, Clone, Serialize)]
pub struct OrbitEntry<R> {
    pub k: usize,
    pub alpha: Interval<R>,
    pub beta: Interval<R>,
    /// `None` where α_k = 0 (the last index of a rational).
    pub gamma: Option<Interval<R>>,
    /// Point value of γ_k: the rounded closed form for a rational, the
    /// enclosure midpoint for a stream.
    #[serde(skip)]
    pub gamma_center: Option<R>,
}

/// Enclosures of α_k, β_k, γ_k along the Gauss orbit, plus convergents.
#[derive(Debug, Clone)]
pub struct GaussOrbit<R> {
    pub entries: Vec<OrbitEntry<R>>,
    pub convergents: Convergents,
    /// Depth of a rational input.
    pub depth: Option<usize>,
    /// The request went past the depth of a rational input.
    pub truncated: bool,
}

impl<R: Real> GaussOrbit<R> {
    pub fn alpha(&self, k: usize) -> Interval<R> {
        self.entries[k].alpha
    }

    pub fn beta(&self, k: usize) -> Interval<R> {
        self.entries[k].beta
    }

    /// β_{k−1}, with β_{−1} = 1.
    pub fn beta_prev(&self, k: usize) -> Interval<R> {
        if k == 0 {
            Interval::point(R::one())
        } else {
            self.entries[k - 1].beta
        }
    }

    pub fn gamma(&self, k: usize) -> Option<Interval<R>> {
        self.entries[k].gamma
    }

    pub fn gamma_center(&self, k: usize) -> Option<R> {
        self.entries[k].gamma_center
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Enclosure of the tail value `[0; a_{k+1}, a_{k+2}, …] = α_k` from the
/// convergents of orders `m` and `m+1` of the tail. Returns the enclosure and
/// whether it is exact (the expansion ended inside the window).
pub fn alpha_enclosure_at<R: Real>(cf: &CfExpansion, k: usize, m: usize) -> (Interval<R>, bool) {
    let tail = cf.shift(k);
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    let mut prev: Option<BigRational> = None;
    for j in 1..=m + 1 {
        let Some(a) = tail.quotient(j) else {
            let exact = BigRational::new(p1, q1);
            return (enclose_rational(&exact), true);
        };
        let a = BigInt::from(a);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if j == m {
            prev = Some(BigRational::new(p1.clone(), q1.clone()));
        }
    }
    let last = BigRational::new(p1, q1);
    let prev = prev.unwrap_or_else(BigRational::zero);
    (enclose_rational::<R>(&prev).hull(enclose_rational(&last)), false)
}

/// Tail enclosure with `m` grown until the relative width is below the
/// working precision or `MAX_TAIL_TERMS` is reached.
fn alpha_enclosure<R: Real>(cf: &CfExpansion, k: usize) -> Interval<R> {
    let tail = cf.shift(k);
    let target = BigInt::from((16.0 / R::epsilon().to_f64().expect("finite")) as u64);
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    let mut prev: Option<BigRational> = None;
    for j in 1..=MAX_TAIL_TERMS + 1 {
        let Some(a) = tail.quotient(j) else {
            return enclose_rational(&BigRational::new(p1, q1));
        };
        let a = BigInt::from(a);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        // |c_j − c_{j+1}| / c_j = 1/(P_j Q_{j+1}).
        let done = j >= 2 && &p1 * &q2 >= target;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if done || j == MAX_TAIL_TERMS + 1 {
            let prev = prev.unwrap_or_else(BigRational::zero);
            let last = BigRational::new(p1, q1);
            return enclose_rational::<R>(&prev).hull(enclose_rational(&last));
        }
        prev = Some(BigRational::new(p1.clone(), q1.clone()));
    }
    unreachable!()
}

fn to_real<R: Real>(n: &BigInt) -> Interval<R> {
    let v = n.to_f64().unwrap_or(f64::INFINITY);
    Interval::point(R::lit(v)).widened(2)
}

/// log(a + t) for t in [0, 1).
fn ln_shifted<R: Real>(a: &BigUint, t: Interval<R>) -> Interval<R> {
    match a.to_u64().filter(|&v| v < 1 << 52) {
        Some(a) => {
            let a = R::lit(a as f64);
            Interval { lo: (a + t.lo).ln(), hi: (a + t.hi).ln() }.widened(2)
        }
        None => {
            let base = R::lit(ln_bigint(&BigInt::from(a.clone())));
            let af = R::lit(a.to_f64().unwrap_or(f64::INFINITY));
            Interval { lo: base + (t.lo / af).ln_1p(), hi: base + (t.hi / af).ln_1p() }.widened(4)
        }
    }
}

/// Gauss orbit of `cf` for indices 0..=K (fewer for a rational of depth < K).
pub fn orbit<R: Real>(cf: &CfExpansion, k_max: usize) -> GaussOrbit<R> {
    match cf.depth() {
        Some(depth) => rational_orbit(cf, depth, k_max),
        None => stream_orbit(cf, k_max),
    }
}

fn stream_orbit<R: Real>(cf: &CfExpansion, k_max: usize) -> GaussOrbit<R> {
    let conv = convergents(cf, k_max + 2);
    let alphas: Vec<Interval<R>> = (0..=k_max + 1).map(|k| alpha_enclosure(cf, k)).collect();
    let mut entries = Vec::with_capacity(k_max + 1);
    let mut beta_prev = Interval::point(R::one());
    for k in 0..=k_max {
        let qk1 = to_real::<R>(&conv.q[k + 1]);
        let qk = to_real::<R>(&conv.q[k]);
        let beta = qk1.add(alphas[k + 1].mul_pos(qk)).recip_pos();
        let a = cf.quotient(k + 1).expect("stream");
        let gamma = beta_prev.mul_pos(ln_shifted(&a, alphas[k + 1]));
        entries.push(OrbitEntry { k, alpha: alphas[k], beta, gamma: Some(gamma), gamma_center: Some(gamma.mid()) });
        beta_prev = beta;
    }
    GaussOrbit { entries, convergents: conv, depth: None, truncated: false }
}

fn rational_orbit<R: Real>(cf: &CfExpansion, depth: usize, k_max: usize) -> GaussOrbit<R> {
    let value = cf.rational_value().expect("terminating");
    let last = k_max.min(depth);
    let conv = convergents(cf, last + 1);
    // Euclid remainders: r₀ = q, r₁ = p, α_k = r_{k+1}/r_k, β_k = r_{k+1}/r₀.
    let mut rems = vec![value.denom().clone(), value.numer().clone()];
    while rems.len() < last + 2 {
        let n = rems.len();
        let r = if rems[n - 1].is_zero() { BigInt::zero() } else { rems[n - 2].mod_floor(&rems[n - 1]) };
        rems.push(r);
    }
    let r0 = rems[0].clone();
    let mut entries = Vec::with_capacity(last + 1);
    for k in 0..=last {
        let alpha = enclose_rational(&BigRational::new(rems[k + 1].clone(), rems[k].clone()));
        let beta = enclose_rational(&BigRational::new(rems[k + 1].clone(), r0.clone()));
        let mut center = None;
        let gamma = if rems[k + 1].is_zero() {
            None
        } else {
            let bp = enclose_rational::<R>(&BigRational::new(rems[k].clone(), r0.clone()));
            let ratio = BigRational::new(rems[k].clone(), rems[k + 1].clone());
            let ln = if ratio.to_integer().bits() < 1000 {
                rational_to_f64(&ratio).ln()
            } else {
                ln_bigint(&ratio.to_integer())
            };
            let lg = Interval::point(R::lit(ln)).widened(8);
            let b = R::lit(rational_to_f64(&BigRational::new(rems[k].clone(), r0.clone())));
            center = Some(b * R::lit(ln));
            Some(bp.mul_pos(lg))
        };
        entries.push(OrbitEntry { k, alpha, beta, gamma, gamma_center: center });
    }
    GaussOrbit { entries, convergents: conv, depth: Some(depth), truncated: k_max > depth }
}

/// {1/x} for x in (0, 1].
pub fn gauss_map<R: Real>(x: R) -> crate::Result<R> {
    if !(x > R::zero()) {
        return Err(crate::error::domain("gauss_map", format!("x = {x} must be positive")));
    }
    let y = R::one() / x;
    Ok(y - y.floor())
}

/// Exact Gauss map on rationals in (0, 1].
pub fn gauss_map_exact(x: &BigRational) -> crate::Result<BigRational> {
    if *x <= BigRational::zero() {
        return Err(crate::error::domain("gauss_map", format!("x = {x} must be positive")));
    }
    let y = x.recip();
    Ok(&y - y.floor())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::expand_rational;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn golden_closed_forms() {
        let x = (5f64.sqrt() - 1.0) / 2.0;
        let o = orbit::<f64>(&CfExpansion::golden(), 40);
        for k in 0..=40 {
            let e = &o.entries[k];
            assert!(e.alpha.widened(2).contains(x), "k={k} {:?}", e.alpha);
            let b = x.powi(k as i32 + 1);
            assert!((e.beta.mid() - b).abs() <= 64.0 * f64::EPSILON * b, "k={k}");
            let g = x.powi(k as i32) * (1.0 / x).ln();
            assert!((e.gamma.unwrap().mid() - g).abs() <= 64.0 * f64::EPSILON * g);
        }
    }

    #[test]
    fn two_sevenths() {
        let o = orbit::<f64>(&expand_rational(&rat(2, 7)).unwrap(), 10);
        assert!(o.truncated);
        assert_eq!(o.len(), 3);
        assert!(o.alpha(0).contains(2.0 / 7.0));
        assert!(o.alpha(1).contains(0.5));
        assert_eq!(o.alpha(2), Interval::point(0.0));
        assert!(o.gamma(2).is_none());
    }

    #[test]
    fn gauss_map_examples() {
        assert_eq!(gauss_map(0.25f64).unwrap(), 0.0);
        assert!(gauss_map(0.0f64).is_err());
        assert_eq!(gauss_map_exact(&rat(2, 7)).unwrap(), rat(1, 2));
        // (√5−1)/2 is fixed: x² + x = 1 means 1/x − 1 = x.
        let x = (5f64.sqrt() - 1.0) / 2.0;
        assert!((gauss_map(x).unwrap() - x).abs() < 1e-15);
    }

    #[test]
    fn enclosure_refinement_shrinks() {
        let cf = CfExpansion::sqrt2m1();
        let mut last = f64::INFINITY;
        for m in 1..20 {
            let (iv, _) = alpha_enclosure_at::<f64>(&cf, 3, m);
            assert!(iv.contains(2f64.sqrt() - 1.0) || iv.widened(4).contains(2f64.sqrt() - 1.0));
            assert!(iv.width() <= last);
            last = iv.width();
        }
    }

    #[test]
    fn f32_orbit() {
        let o = orbit::<f32>(&CfExpansion::golden(), 20);
        let x = (5f32.sqrt() - 1.0) / 2.0;
        assert!((o.alpha(20).mid() - x).abs() < 1e-6);
    }
}
