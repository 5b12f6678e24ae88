//! Check suites, report serialization, calibration of the frozen constants
//! and value tables.

mod calibrate;
mod suites;
mod table;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frozen;

pub use calibrate::{calibrate, calibrate_all, Calibration, CALIBRATIONS};
pub use table::{table, table_csv, TableFn, TableRow};

/// Version tag written into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

/// Suite names accepted by [`run_suite`], in canonical order.
pub const SUITES: [&str; 11] = [
    "cf-identities",
    "gauss-invariance",
    "landau",
    "wilton-feq",
    "phi1-sylvester",
    "phi2-consistency",
    "A-routes",
    "A-reflection",
    "afe-psi1",
    "moduli",
    "theorem2-sample",
];

/// One checked relation: `pass` iff `|residual| ≤ bound`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub inputs: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub bound: f64,
    pub pass: bool,
}

/// JSON has no NaN or infinities; a non-finite value becomes ±f64::MAX,
/// which fails any finite bound.
fn finite(x: f64) -> f64 {
    if x.is_nan() {
        f64::MAX
    } else {
        x.clamp(-f64::MAX, f64::MAX)
    }
}

impl Case {
    fn build(id: &str, inputs: String, lhs: f64, rhs: f64, residual: f64, bound: f64) -> Self {
        let (lhs, rhs, residual, bound) = (finite(lhs), finite(rhs), finite(residual), finite(bound));
        Case { id: id.to_string(), inputs, lhs, rhs, residual, bound, pass: residual.abs() <= bound }
    }

    /// |lhs − rhs| ≤ bound.
    pub fn close(id: &str, inputs: impl Into<String>, lhs: f64, rhs: f64, bound: f64) -> Self {
        Self::build(id, inputs.into(), lhs, rhs, lhs - rhs, bound)
    }

    /// value ≤ limit, recorded with residual max(0, value − limit) and bound 0.
    pub fn upper(id: &str, inputs: impl Into<String>, value: f64, limit: f64) -> Self {
        let excess = if value.is_nan() { f64::MAX } else { (value - limit).max(0.0) };
        Self::build(id, inputs.into(), value, limit, excess, 0.0)
    }

    /// lo ≤ value ≤ hi, recorded against the band's midpoint.
    pub fn band(id: &str, inputs: impl Into<String>, value: f64, lo: f64, hi: f64) -> Self {
        let mid = 0.5 * (lo + hi);
        Self::build(id, inputs.into(), value, mid, value - mid, 0.5 * (hi - lo))
    }

    /// Exact equality decided outside floating point (rationals, integers);
    /// lhs/rhs are informational.
    pub fn exact(id: &str, inputs: impl Into<String>, equal: bool, lhs: f64, rhs: f64) -> Self {
        let residual = if equal {
            0.0
        } else if lhs != rhs {
            lhs - rhs
        } else {
            1.0
        };
        Self::build(id, inputs.into(), lhs, rhs, residual, 0.0)
    }

    /// A case whose computation itself failed.
    pub fn error(id: &str, inputs: impl Into<String>, err: &Error) -> Self {
        Self::build(id, format!("{}; error: {err}", inputs.into()), 0.0, 0.0, 1.0, 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: u32,
    pub suite: String,
    pub cases: Vec<Case>,
    pub frozen_constants: BTreeMap<String, f64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { input: "report".into(), reason: e.to_string() })
    }

    /// RFC 4180 with CRLF records, one row per case, floats at 17
    /// significant digits.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
        let num = |x: f64| format!("{x:.16e}");
        w.write_record(["suite", "id", "inputs", "lhs", "rhs", "residual", "bound", "pass"]).expect("in-memory write");
        for c in &self.cases {
            w.write_record([
                self.suite.clone(),
                c.id.clone(),
                c.inputs.clone(),
                num(c.lhs),
                num(c.rhs),
                num(c.residual),
                num(c.bound),
                c.pass.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// The frozen constants, by name.
pub fn frozen_constants() -> BTreeMap<String, f64> {
    [
        ("A_DIRECT_RICHARDSON_C", frozen::A_DIRECT_RICHARDSON_C),
        ("A_SERIES_C", frozen::A_SERIES_C),
        ("C_AFE", frozen::C_AFE),
        ("C_SYLVESTER", frozen::C_SYLVESTER),
        ("C_WALFISZ", frozen::C_WALFISZ),
        ("DELTA_ENVELOPE_C", frozen::DELTA_ENVELOPE_C),
        ("F_SUP_NORM", frozen::F_SUP_NORM),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Largest v in the φ₁/ψ₁ and AFE sweeps.
    pub vmax: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { vmax: 1e5 }
    }
}

/// Run one named suite. Cases run sequentially in a fixed order, so equal
/// configurations give identical reports.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<CheckReport> {
    let cases = match name {
        "cf-identities" => suites::cf_identities(),
        "gauss-invariance" => suites::gauss_invariance(),
        "landau" => suites::landau(),
        "wilton-feq" => suites::wilton_feq(),
        "phi1-sylvester" => suites::phi1_sylvester(),
        "phi2-consistency" => suites::phi2_consistency(),
        "A-routes" => suites::a_routes(),
        "A-reflection" => suites::a_reflection(),
        "afe-psi1" => suites::afe_psi1(cfg),
        "moduli" => suites::moduli(),
        "theorem2-sample" => suites::theorem2_sample(),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    Ok(CheckReport {
        schema: SCHEMA_VERSION,
        suite: name.to_string(),
        cases,
        frozen_constants: frozen_constants(),
    })
}

/// Least-squares slope of log|y| against log x.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.abs().ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_constructors() {
        assert!(Case::close("a", "", 1.0, 1.0 + 1e-12, 1e-11).pass);
        assert!(!Case::close("a", "", 1.0, 1.1, 1e-3).pass);
        assert!(Case::upper("b", "", 0.3, 0.5).pass);
        assert!(!Case::upper("b", "", 0.7, 0.5).pass);
        assert!(!Case::upper("b", "", f64::NAN, 0.5).pass);
        assert!(Case::band("c", "", 0.5, 0.425, 0.575).pass);
        assert!(!Case::band("c", "", 0.6, 0.425, 0.575).pass);
        assert!(Case::exact("d", "", true, 1.0, 1.0).pass);
        assert!(!Case::exact("d", "", false, 1.0, 1.0).pass);
        let e = Case::close("e", "", f64::NAN, 0.0, 1.0);
        assert!(!e.pass && e.lhs.is_finite());
    }

    #[test]
    fn pass_iff_within_bound() {
        for c in [Case::close("a", "", 2.0, 1.0, 1.0), Case::band("b", "", 1.0, 0.0, 2.0)] {
            assert_eq!(c.pass, c.residual.abs() <= c.bound);
        }
    }

    #[test]
    fn slope_of_power_law() {
        let xs = [1e3, 1e4, 1e5];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powf(-0.5)).collect();
        assert!((loglog_slope(&xs, &ys) + 0.5).abs() < 1e-12);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", &SuiteConfig::default()), Err(Error::UnknownSuite(_))));
    }
}
