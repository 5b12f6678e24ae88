//! Continued fractions, the Wilton and Brjuno functions, Bernoulli series,
//! the divisor series ψ₁ and the autocorrelation A(λ) of the fractional part,
//! each evaluated with explicit truncation bounds, plus a harness that checks
//! the identities relating them.
//!
//! The exact layers (expansions, Landau integrals, Bernoulli functions on
//! rationals) work on [`Rational`]. The floating kernels are generic over
//! [`Real`] (`f32`/`f64`); the heavier analytic routines are `f64`.

pub mod autocorr;
pub mod bernoulli;
pub mod contfrac;
pub mod divisor;
pub mod error;
pub mod frozen;
pub mod harness;
pub mod numeric;
pub mod scalar;
pub mod special;

pub use contfrac::{CfExpansion, Rational};
pub use error::{Error, Result};
pub use scalar::{Fractional, Interval, Real};

/// Gauss orbit in double precision.
pub type Orbit = contfrac::GaussOrbit<f64>;
/// Enclosure in double precision.
pub type Enclosure = Interval<f64>;
/// Gauss orbit in single precision.
pub type Orbit32 = contfrac::GaussOrbit<f32>;
