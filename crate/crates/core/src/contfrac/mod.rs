//! Exact continued fractions: expansions, convergents, Gauss-map orbits with
//! enclosures, cells and rational depth.

mod expansion;
mod invariance;
mod orbit;

pub use expansion::{
    cell_endpoints, convergents, expand_rational, parse_cf_spec, Cell, CfExpansion, Convergents, QuotientFn,
    Rational,
};
pub use invariance::{branch_integral, gauss_invariance, InvarianceCheck, TestFunction};
pub use orbit::{alpha_enclosure_at, gauss_map, gauss_map_exact, orbit, GaussOrbit, OrbitEntry, MAX_TAIL_TERMS};
