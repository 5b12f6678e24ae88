//! Phases `x mod 1` that can be multiplied by large integers without losing
//! the fractional part.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::scalar::rational_to_f64;

/// A point of ℝ/ℤ: either an exact fraction with machine-sized parts, or a
/// double-double value `hi + lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Phase {
    Exact { p: u64, q: u64 },
    Double { hi: f64, lo: f64 },
}

impl Phase {
    /// Exact phase of a finite float.
    pub fn from_f64(x: f64) -> Self {
        let f = x - x.floor();
        let f = if f >= 1.0 { 0.0 } else { f };
        Phase::Double { hi: f, lo: 0.0 }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let f = r - r.floor();
        if let (Some(p), Some(q)) = (f.numer().to_u64(), f.denom().to_u64()) {
            return Phase::Exact { p, q };
        }
        let hi = rational_to_f64(&f);
        let rem = &f - BigRational::from_float(hi).expect("finite");
        let lo = rational_to_f64(&rem);
        Self::normalized(hi, lo)
    }

    fn normalized(hi: f64, lo: f64) -> Self {
        let s = hi + lo;
        let e = lo - (s - hi);
        let (mut hi, lo) = (s, e);
        if hi < 0.0 {
            hi += 1.0;
        } else if hi >= 1.0 {
            hi -= 1.0;
        }
        Phase::Double { hi, lo }
    }

    /// Best double approximation of the phase.
    pub fn value(&self) -> f64 {
        match *self {
            Phase::Exact { p, q } => p as f64 / q as f64,
            Phase::Double { hi, lo } => hi + lo,
        }
    }

    /// `{n·x}` in [0, 1), and whether `n·x` is an integer.
    #[inline]
    pub fn frac_mul(&self, n: u64) -> (f64, bool) {
        match *self {
            Phase::Exact { p, q } => {
                let r = ((n as u128 * p as u128) % q as u128) as u64;
                (r as f64 / q as f64, r == 0)
            }
            Phase::Double { hi, lo } => {
                let nf = n as f64;
                let prod = nf * hi;
                let err = nf.mul_add(hi, -prod);
                let ip = prod.floor();
                let mut f = (prod - ip) + (err + nf * lo);
                if f >= 1.0 {
                    f -= 1.0;
                } else if f < 0.0 {
                    f += 1.0;
                }
                if f >= 1.0 {
                    f = 0.0;
                }
                (f, f == 0.0)
            }
        }
    }

    /// B₁(n·x).
    #[inline]
    pub fn b1_mul(&self, n: u64) -> f64 {
        let (f, int) = self.frac_mul(n);
        if int {
            0.0
        } else {
            f - 0.5
        }
    }

    /// sin(2π n x), with the phase reduced before scaling.
    #[inline]
    pub fn sin_mul(&self, n: u64) -> f64 {
        let (f, int) = self.frac_mul(n);
        if int {
            return 0.0;
        }
        let g = if f > 0.5 { f - 1.0 } else { f };
        if g == 0.5 || g == -0.5 {
            return 0.0;
        }
        (std::f64::consts::TAU * g).sin()
    }
}

/// Phase of `num/den` given as big integers (den > 0).
pub fn phase_of_ratio(num: &BigInt, den: &BigInt) -> Phase {
    assert!(den.is_positive() && !den.is_zero());
    Phase::from_rational(&BigRational::new(num.clone(), den.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_integer_detection() {
        let ph = Phase::from_rational(&BigRational::new(BigInt::from(3), BigInt::from(10)));
        assert_eq!(ph.b1_mul(10), 0.0);
        assert_eq!(ph.b1_mul(20), 0.0);
        assert!((ph.b1_mul(1) + 0.2).abs() < 1e-16);
        let half = Phase::from_f64(0.5);
        assert_eq!(half.b1_mul(6), 0.0);
        assert_eq!(half.sin_mul(3), 0.0);
    }

    #[test]
    fn double_double_keeps_digits() {
        // x = 1/3 with a large multiplier: naive f64 would drift.
        let third = BigRational::new((BigInt::from(1) << 80usize) + 7, (BigInt::from(3) << 80usize) + 1);
        let ph = Phase::from_rational(&third);
        let n = (1u64 << 50) + 12345;
        let exact = BigRational::from_integer(BigInt::from(n)) * &third;
        let f = exact.clone() - exact.floor();
        let want = rational_to_f64(&f);
        let (got, _) = ph.frac_mul(n);
        assert!((got - want).abs() < 1e-14, "{got} vs {want}");
    }
}
