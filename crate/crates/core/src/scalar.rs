//! Scalar abstractions: the floating kernel trait, exact fractional types,
//! interval enclosures and compensated summation.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

/// Floating scalar used by the numeric kernels (`f32` or `f64`).
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("representable literal")
    }

    fn euler_gamma() -> Self {
        Self::lit(EULER_GAMMA)
    }

    /// ζ(2) = π²/6.
    fn zeta2() -> Self {
        let pi = Self::PI();
        pi * pi / Self::lit(6.0)
    }

    /// A(1) = log(2π) − γ.
    fn a_one() -> Self {
        Self::TAU().ln() - Self::euler_gamma()
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Types on which the fractional part is defined exactly or approximately.
///
/// Implemented for the two float widths and for [`BigRational`], which makes
/// the Bernoulli functions and the piecewise Landau integrals exact.
pub trait Fractional: Clone + PartialOrd + Debug + num_traits::Num {
    fn floor_part(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn frac(&self) -> Self {
        self.clone() - self.floor_part()
    }

    fn is_integral(&self) -> bool {
        self.frac().is_zero()
    }

    fn half() -> Self {
        Self::one() / Self::from_int(2)
    }
}

impl Fractional for f32 {
    fn floor_part(&self) -> Self {
        self.floor()
    }
    fn from_int(n: i64) -> Self {
        n as f32
    }
}

impl Fractional for f64 {
    fn floor_part(&self) -> Self {
        self.floor()
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
}

impl Fractional for BigRational {
    fn floor_part(&self) -> Self {
        self.floor()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval<R> {
    pub lo: R,
    pub hi: R,
}

impl<R: Real> Interval<R> {
    pub fn new(lo: R, hi: R) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        Self { lo, hi }
    }

    pub fn point(x: R) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn mid(&self) -> R {
        if self.lo == self.hi {
            self.lo
        } else {
            self.lo + (self.hi - self.lo) / R::lit(2.0)
        }
    }

    pub fn width(&self) -> R {
        self.hi - self.lo
    }

    pub fn contains(&self, x: R) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Widen both ends by `ulps` units of the working precision.
    pub fn widened(self, ulps: u32) -> Self {
        let k = R::lit(ulps as f64) * R::epsilon();
        let pad = |v: R| v.abs() * k + R::min_positive_value();
        Self { lo: self.lo - pad(self.lo), hi: self.hi + pad(self.hi) }
    }

    pub fn hull(self, other: Self) -> Self {
        Self { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn add(self, o: Self) -> Self {
        Self { lo: self.lo + o.lo, hi: self.hi + o.hi }.widened(1)
    }

    pub fn mul_pos(self, o: Self) -> Self {
        debug_assert!(self.lo >= R::zero() && o.lo >= R::zero());
        Self { lo: self.lo * o.lo, hi: self.hi * o.hi }.widened(1)
    }

    pub fn recip_pos(self) -> Self {
        debug_assert!(self.lo > R::zero());
        Self { lo: R::one() / self.hi, hi: R::one() / self.lo }.widened(1)
    }

    pub fn ln_pos(self) -> Self {
        Self { lo: self.lo.ln(), hi: self.hi.ln() }.widened(2)
    }

    pub fn scale(self, s: R) -> Self {
        if s >= R::zero() {
            Self { lo: self.lo * s, hi: self.hi * s }.widened(1)
        } else {
            Self { lo: self.hi * s, hi: self.lo * s }.widened(1)
        }
    }
}

/// Neumaier's compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum<R> {
    sum: R,
    comp: R,
}

impl<R: Real> CompensatedSum<R> {
    pub fn new() -> Self {
        Self { sum: R::zero(), comp: R::zero() }
    }

    #[inline]
    pub fn add(&mut self, x: R) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> R {
        self.sum + self.comp
    }
}

impl<R: Real> FromIterator<R> for CompensatedSum<R> {
    fn from_iter<I: IntoIterator<Item = R>>(iter: I) -> Self {
        let mut s = Self::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Sum with compensation.
pub fn csum<R: Real, I: IntoIterator<Item = R>>(iter: I) -> R {
    iter.into_iter().collect::<CompensatedSum<R>>().value()
}

/// `num/den` rounded to the nearest `f64` (within one ulp).
pub fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let neg = num.is_negative() != den.is_negative();
    let (n, d) = (num.abs(), den.abs());
    let shift = d.bits() as i64 - n.bits() as i64 + 64;
    let q = if shift >= 0 { (n << shift as usize) / &d } else { n / (d << (-shift) as usize) };
    let qf = q.to_f64().unwrap_or(f64::INFINITY);
    let v = scale2(qf, -shift);
    if neg {
        -v
    } else {
        v
    }
}

fn scale2(x: f64, e: i64) -> f64 {
    let mut v = x;
    let mut e = e;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
    }
    v * 2f64.powi(e as i32)
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    ratio_to_f64(r.numer(), r.denom())
}

/// Natural log of a positive big integer.
pub fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        n.to_f64().expect("finite").ln()
    } else {
        let shift = bits - 64;
        let top = (n >> shift as usize).to_f64().expect("finite");
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Outward-rounded enclosure of an exact rational in `R`.
pub fn enclose_rational<R: Real>(r: &BigRational) -> Interval<R> {
    if r.is_zero() {
        return Interval::point(R::zero());
    }
    let v = R::lit(rational_to_f64(r));
    Interval::point(v).widened(2)
}

/// Exact rational value of a finite float.
pub fn f64_to_rational(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// `gcd` on machine integers.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_one_value() {
        assert!((f64::a_one() - 1.260_661_401_507_812).abs() < 1e-14);
        assert!((f32::a_one() - 1.260_661_4).abs() < 1e-6);
    }

    #[test]
    fn compensated_beats_naive() {
        let mut naive = 0.0f64;
        let mut c = CompensatedSum::new();
        for _ in 0..10 {
            for x in [1e16, 1.0, -1e16] {
                naive += x;
                c.add(x);
            }
        }
        assert_eq!(c.value(), 10.0);
        assert_ne!(naive, 10.0);
    }

    #[test]
    fn ratio_conversion() {
        let n = BigInt::from(1u64) << 3000usize;
        let d = (BigInt::from(3u64) << 3000usize) + 1;
        assert!((ratio_to_f64(&n, &d) - 1.0 / 3.0).abs() < 1e-16);
        assert_eq!(ratio_to_f64(&BigInt::from(-7), &BigInt::from(2)), -3.5);
    }

    #[test]
    fn ln_of_huge() {
        let n = BigInt::from(1u64) << 5000usize;
        assert!((ln_bigint(&n) - 5000.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn rational_frac() {
        let r = BigRational::new(BigInt::from(-7), BigInt::from(3));
        assert_eq!(r.frac(), BigRational::new(BigInt::from(2), BigInt::from(3)));
        assert!(Fractional::is_integral(&3.0f64));
    }
}
