use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

/// Exact fraction used by the oracles.
pub type Rational = BigRational;

/// Generator of partial quotients: index `k ≥ 1` to `a_k ≥ 1`.
pub type QuotientFn = Arc<dyn Fn(usize) -> BigUint + Send + Sync>;

#[derive(Clone)]
enum Source {
    Terminating(Arc<Vec<BigUint>>),
    Periodic { pre: Arc<Vec<BigUint>>, period: Arc<Vec<BigUint>> },
    Generated(QuotientFn),
}

/// Continued fraction `[0; a₁, a₂, …]` of a number in [0, 1).
///
/// Terminating expansions are kept in canonical form (last quotient ≥ 2).
/// Irrationals are quotient streams, periodic or generated.
#[derive(Clone)]
pub struct CfExpansion {
    src: Source,
    offset: usize,
    label: String,
}

impl fmt::Debug for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.head(8).iter().map(|a| a.to_string()).collect();
        let more = if self.depth().map_or(true, |d| d > 8) { ", …" } else { "" };
        write!(f, "CfExpansion({}: [0; {}{}])", self.label, head.join(", "), more)
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

impl CfExpansion {
    /// Expansion of a rational in [0, 1) by Euclid's algorithm.
    pub fn from_rational(r: &Rational) -> Result<Self> {
        if r.is_negative() || *r >= Rational::one() {
            return Err(domain("expand_rational", format!("{r} is not in [0,1)")));
        }
        let (mut a, mut b) = (r.denom().clone(), r.numer().clone());
        let mut qs = Vec::new();
        while !b.is_zero() {
            let (q, rem) = a.div_rem(&b);
            qs.push(q.to_biguint().expect("positive quotient"));
            a = b;
            b = rem;
        }
        let label = r.to_string();
        Ok(Self { src: Source::Terminating(Arc::new(qs)), offset: 0, label })
    }

    /// Terminating expansion from explicit quotients, canonicalised so that
    /// the last quotient is at least 2.
    pub fn from_quotients(mut qs: Vec<BigUint>) -> Result<Self> {
        if qs.iter().any(|a| a.is_zero()) {
            return Err(domain("expand", "partial quotients must be ≥ 1"));
        }
        if qs.len() >= 2 && qs.last().is_some_and(|a| a.is_one()) {
            qs.pop();
            *qs.last_mut().expect("nonempty") += 1u32;
        }
        if qs.len() == 1 && qs[0].is_one() {
            return Err(domain("expand", "[0; 1] equals 1, outside [0,1)"));
        }
        let label = format!("{}", Self::value_of(&qs));
        Ok(Self { src: Source::Terminating(Arc::new(qs)), offset: 0, label })
    }

    /// Eventually periodic stream `[0; pre…, period, period, …]`.
    pub fn periodic(pre: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() || period.iter().chain(&pre).any(|&a| a == 0) {
            return Err(domain("periodic", "period must be nonempty with quotients ≥ 1"));
        }
        let label = format!(
            "periodic:{}{}",
            if pre.is_empty() { String::new() } else { format!("{};", join(&pre)) },
            join(&period)
        );
        Ok(Self {
            src: Source::Periodic {
                pre: Arc::new(pre.into_iter().map(big).collect()),
                period: Arc::new(period.into_iter().map(big).collect()),
            },
            offset: 0,
            label,
        })
    }

    /// (√5 − 1)/2 = [0; 1, 1, 1, …].
    pub fn golden() -> Self {
        let mut cf = Self::periodic(vec![], vec![1]).expect("valid");
        cf.label = "golden".into();
        cf
    }

    /// √2 − 1 = [0; 2, 2, 2, …].
    pub fn sqrt2m1() -> Self {
        let mut cf = Self::periodic(vec![], vec![2]).expect("valid");
        cf.label = "sqrt2m1".into();
        cf
    }

    /// Stream given by a generator `k ↦ a_k` (k ≥ 1, values ≥ 1).
    pub fn generated(label: impl Into<String>, f: QuotientFn) -> Self {
        Self { src: Source::Generated(f), offset: 0, label: label.into() }
    }

    /// The stream a₁ = 1, a_{k+1} = 2^{q_k}, for which log(q_{k+1})/q_k stays
    /// near log 2, so the Wilton criterion series does not converge.
    ///
    /// Only the first four quotients are of manageable size; a₅ already has
    /// 838 860 803 bits.
    pub fn doubly_exponential() -> Self {
        let f: QuotientFn = Arc::new(|k: usize| {
            let (mut q0, mut q1) = (BigUint::one(), BigUint::one());
            let mut a = BigUint::one();
            for _ in 2..=k {
                let shift = q1.to_usize().filter(|&s| s < 1 << 26).expect("quotient too large to materialise");
                a = BigUint::one() << shift;
                let q2 = &a * &q1 + &q0;
                q0 = q1;
                q1 = q2;
            }
            a
        });
        Self::generated("doubly-exponential", f)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `a_k` for k ≥ 1, `None` past the end of a terminating expansion.
    pub fn quotient(&self, k: usize) -> Option<BigUint> {
        assert!(k >= 1, "quotients are indexed from 1");
        let i = k + self.offset;
        match &self.src {
            Source::Terminating(v) => v.get(i - 1).cloned(),
            Source::Periodic { pre, period } => {
                if i <= pre.len() {
                    Some(pre[i - 1].clone())
                } else {
                    Some(period[(i - pre.len() - 1) % period.len()].clone())
                }
            }
            Source::Generated(f) => Some(f(i)),
        }
    }

    /// Up to `n` leading quotients.
    pub fn head(&self, n: usize) -> Vec<BigUint> {
        (1..=n).map_while(|k| self.quotient(k)).collect()
    }

    /// Depth K of a rational (number of quotients); `None` for streams.
    pub fn depth(&self) -> Option<usize> {
        match &self.src {
            Source::Terminating(v) => Some(v.len().saturating_sub(self.offset)),
            _ => None,
        }
    }

    pub fn is_terminating(&self) -> bool {
        matches!(self.src, Source::Terminating(_))
    }

    /// Expansion of α_n(x): drop the first `n` quotients.
    pub fn shift(&self, n: usize) -> Self {
        let mut s = self.clone();
        s.offset += n;
        if let Some(d) = self.depth() {
            s.offset = self.offset + n.min(d);
        }
        s.label = if n == 0 { self.label.clone() } else { format!("α^{n}({})", self.label) };
        s
    }

    /// Exact value of a terminating expansion.
    pub fn rational_value(&self) -> Option<Rational> {
        let d = self.depth()?;
        Some(Self::value_of(&self.head(d)))
    }

    fn value_of(qs: &[BigUint]) -> Rational {
        let (mut p0, mut q0, mut p1, mut q1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
        for a in qs {
            let a = BigInt::from(a.clone());
            let p2 = &a * &p1 + &p0;
            let q2 = &a * &q1 + &q0;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
        }
        Rational::new(p1, q1)
    }

    /// First convergent whose denominator has at least `min_den_bits` bits
    /// (the value itself for a rational that ends earlier).
    pub fn convergent_with_bits(&self, min_den_bits: u64) -> Rational {
        let (mut p0, mut q0, mut p1, mut q1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
        let mut k = 1;
        while q1.bits() < min_den_bits {
            let Some(a) = self.quotient(k) else { break };
            let a = BigInt::from(a);
            let p2 = &a * &p1 + &p0;
            let q2 = &a * &q1 + &q0;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            k += 1;
        }
        Rational::new(p1, q1)
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

/// Convergents p_k/q_k for k = 0, 1, … (p₀ = 0, q₀ = 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Convergents {
    pub p: Vec<BigInt>,
    pub q: Vec<BigInt>,
    /// Fewer entries than requested: the expansion terminated first.
    pub truncated: bool,
}

impl Convergents {
    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    /// `p_k` including the seed `p_{−1} = 1`.
    pub fn p_at(&self, k: isize) -> BigInt {
        if k < 0 {
            BigInt::one()
        } else {
            self.p[k as usize].clone()
        }
    }

    /// `q_k` including the seed `q_{−1} = 0`.
    pub fn q_at(&self, k: isize) -> BigInt {
        if k < 0 {
            BigInt::zero()
        } else {
            self.q[k as usize].clone()
        }
    }
}

/// The first `count` convergents (p₀/q₀ onward).
pub fn convergents(cf: &CfExpansion, count: usize) -> Convergents {
    let mut p = Vec::with_capacity(count);
    let mut q = Vec::with_capacity(count);
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    let mut truncated = false;
    for k in 0..count {
        if k > 0 {
            let Some(a) = cf.quotient(k) else {
                truncated = true;
                break;
            };
            let a = BigInt::from(a);
            let p2 = &a * &p1 + &p0;
            let q2 = &a * &q1 + &q0;
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
        }
        p.push(p1.clone());
        q.push(q1.clone());
    }
    Convergents { p, q, truncated }
}

/// Canonical expansion of a rational in [0, 1).
pub fn expand_rational(r: &Rational) -> Result<CfExpansion> {
    CfExpansion::from_rational(r)
}

/// Cell of all numbers whose first quotients are `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub quotients: Vec<u64>,
    /// `(p_k/q_k, (p_k + p_{k−1})/(q_k + q_{k−1}))`
    pub endpoints: (Rational, Rational),
}

impl Cell {
    /// Endpoints sorted ascending.
    pub fn interval(&self) -> (Rational, Rational) {
        let (a, b) = self.endpoints.clone();
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let (lo, hi) = self.interval();
        lo < *x && *x < hi
    }
}

pub fn cell_endpoints(b: &[u64]) -> Result<Cell> {
    if b.contains(&0) {
        return Err(domain("cell_endpoints", "quotients must be ≥ 1"));
    }
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for &a in b {
        let a = BigInt::from(a);
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    let e1 = Rational::new(p1.clone(), q1.clone());
    let e2 = Rational::new(&p1 + &p0, &q1 + &q0);
    Ok(Cell { quotients: b.to_vec(), endpoints: (e1, e2) })
}

/// Parse `p/q`, `golden`, `sqrt2m1`, `periodic:a1,a2,…` or
/// `periodic:pre1,pre2;a1,a2,…`.
pub fn parse_cf_spec(s: &str) -> Result<CfExpansion> {
    let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
    let t = s.trim();
    match t {
        "golden" => return Ok(CfExpansion::golden()),
        "sqrt2m1" => return Ok(CfExpansion::sqrt2m1()),
        "0" => return CfExpansion::from_rational(&Rational::zero()),
        _ => {}
    }
    if let Some(rest) = t.strip_prefix("periodic:") {
        let nums = |part: &str| -> Result<Vec<u64>> {
            part.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| x.trim().parse::<u64>().map_err(|_| bad("quotients must be positive integers")))
                .collect()
        };
        let (pre, per) = match rest.split_once(';') {
            Some((a, b)) => (nums(a)?, nums(b)?),
            None => (vec![], nums(rest)?),
        };
        return CfExpansion::periodic(pre, per);
    }
    if let Some((a, b)) = t.split_once('/') {
        let p: BigInt = a.trim().parse().map_err(|_| bad("bad numerator"))?;
        let q: BigInt = b.trim().parse().map_err(|_| bad("bad denominator"))?;
        if q.is_zero() {
            return Err(bad("zero denominator"));
        }
        return CfExpansion::from_rational(&Rational::new(p, q));
    }
    Err(bad("expected p/q, golden, sqrt2m1 or periodic:a1,a2,..."))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn qs(cf: &CfExpansion) -> Vec<u64> {
        cf.head(100).iter().map(|a| a.to_u64().unwrap()).collect()
    }

    #[test]
    fn expansions_by_hand() {
        assert_eq!(qs(&expand_rational(&rat(1, 2)).unwrap()), vec![2]);
        assert_eq!(qs(&expand_rational(&rat(2, 7)).unwrap()), vec![3, 2]);
        assert_eq!(qs(&expand_rational(&rat(3, 5)).unwrap()), vec![1, 1, 2]);
        assert_eq!(expand_rational(&rat(0, 1)).unwrap().depth(), Some(0));
        assert!(expand_rational(&rat(1, 1)).is_err());
        assert!(expand_rational(&rat(-1, 3)).is_err());
    }

    #[test]
    fn canonical_form() {
        let cf = CfExpansion::from_quotients(vec![big(3), big(1), big(1)]).unwrap();
        assert_eq!(qs(&cf), vec![3, 2]);
        assert_eq!(cf.rational_value().unwrap(), rat(2, 7));
    }

    #[test]
    fn convergents_examples() {
        let c = convergents(&CfExpansion::golden(), 5);
        let q: Vec<i64> = c.q.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(q, vec![1, 1, 2, 3, 5]);
        let c = convergents(&expand_rational(&rat(2, 7)).unwrap(), 10);
        assert!(c.truncated);
        let pq: Vec<(i64, i64)> =
            c.p.iter().zip(&c.q).map(|(p, q)| (p.to_i64().unwrap(), q.to_i64().unwrap())).collect();
        assert_eq!(pq, vec![(0, 1), (1, 3), (2, 7)]);
        assert_eq!(&c.p[2] * &c.q[1] - &c.p[1] * &c.q[2], BigInt::from(-1));
    }

    #[test]
    fn cells() {
        let c = cell_endpoints(&[2]).unwrap();
        assert_eq!(c.endpoints, (rat(1, 2), rat(1, 3)));
        let c = cell_endpoints(&[1, 1]).unwrap();
        assert_eq!(c.endpoints, (rat(1, 2), rat(2, 3)));
        let c = cell_endpoints(&[3, 2]).unwrap();
        assert_eq!(c.endpoints, (rat(2, 7), rat(3, 10)));
        let c = cell_endpoints(&[]).unwrap();
        assert_eq!(c.interval(), (rat(0, 1), rat(1, 1)));
    }

    #[test]
    fn shifting_and_parsing() {
        let cf = parse_cf_spec("periodic:1;2,3").unwrap();
        assert_eq!(qs(&CfExpansion::shift(&cf, 1)).len(), 100);
        assert_eq!(cf.shift(1).head(4), vec![big(2), big(3), big(2), big(3)]);
        let r = parse_cf_spec("3/5").unwrap();
        assert_eq!(r.shift(1).head(5), vec![big(1), big(2)]);
        assert_eq!(r.shift(7).depth(), Some(0));
        assert!(parse_cf_spec("pi").is_err());
    }

    #[test]
    fn doubly_exponential_head() {
        let cf = CfExpansion::doubly_exponential();
        assert_eq!(cf.head(3), vec![big(1), big(2), big(8)]);
        assert_eq!(cf.quotient(4).unwrap(), BigUint::one() << 25usize);
    }
}
