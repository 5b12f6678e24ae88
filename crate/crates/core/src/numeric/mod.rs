//! Numerical building blocks shared by the function modules.

pub mod funcs;
pub mod phase;
pub mod quad;

pub use funcs::{digamma, li2_neg, ln1p_series_i1, ln1p_series_i2};
pub use phase::Phase;
pub use quad::{gauss_kronrod, gauss_legendre, QuadOptions, QuadResult};
