//! Constants fixed once by `wiltonlab calibrate` and never recomputed by the
//! checks. Each value carries a safety margin over the measured maximum,
//! recorded next to it.

/// C with |A − A_richardson(T)| ≤ C/K² for T = K·max(1, 1/λ).
/// Measured max 0.166 (λ ≈ 2.50, K = 64) over the 50-point grid on
/// [0.05, 20] plus λ ∈ {1/3, 1/2, 2/3, 1, 3/2, 2, 3}, K ∈ {64, 256}.
pub const A_DIRECT_RICHARDSON_C: f64 = 0.35;

/// c in err(A_via_series) = c·(1 + 1/λ)/N. Measured max 0.0417 (at λ = 1)
/// over the 50-point grid on [0.05, 20] plus rational λ with small
/// denominators, N = 1000.
pub const A_SERIES_C: f64 = 0.1;

/// ‖F‖∞ on [0, 1], from a 10⁴-point scan (max 0.63033 at x = 0) inflated
/// by 10%.
pub const F_SUP_NORM: f64 = 0.7;

/// C_Δ with |Δ(t)| ≤ C_Δ t^{1/3}. Measured max over t ≤ 10⁶: 1.931.
pub const DELTA_ENVELOPE_C: f64 = 4.0;

/// C with max |ε(x,v)|·x·v ≤ C over the Sylvester grid.
/// Measured max 0.339 for v ∈ {10², 10³, 10⁴}.
pub const C_SYLVESTER: f64 = 10.0;

/// C with max_x |Σ_{n≤v} τ(n) sin(2πnx)/n| ≤ C log v on the canonical grid.
/// Measured max 1.759 for v ∈ {10³, 10⁴, 10⁵}.
pub const C_WALFISZ: f64 = 3.6;

/// C with |AFE residual| ≤ C (x²v)^{−1/2} log²(x²v).
/// Measured max 5.11e−3 over five quadratic irrationals, v ∈ {10³, 10⁴, 10⁵}.
pub const C_AFE: f64 = 0.011;
