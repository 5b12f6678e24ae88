use serde::Serialize;

use super::suites::{lambda_grid, AFE_POINTS};
use crate::autocorr::{a_direct, a_via_series, f_aux_tol};
use crate::bernoulli::{sylvester_grid, sylvester_max_ratio};
use crate::contfrac::parse_cf_spec;
use crate::divisor::{afe_ratio, canonical_grid, delta_envelope, tau_sieve, walfisz_ratio, wilton_afe_residual};
use crate::error::{Error, Result};
use crate::frozen;
use crate::scalar::rational_to_f64;

/// Calibrations accepted by [`calibrate`].
pub const CALIBRATIONS: [&str; 7] =
    ["sylvester", "walfisz", "afe-psi1", "delta-envelope", "a-series", "a-richardson", "f-sup"];

/// Measured maximum of one "≪" ratio and the constant it suggests.
#[derive(Debug, Clone, Serialize)]
pub struct Calibration {
    pub name: String,
    pub constant: &'static str,
    pub grid: String,
    pub measured_max: f64,
    pub margin: f64,
    /// `margin × measured_max`
    pub proposed: f64,
    /// Value currently compiled into [`crate::frozen`].
    pub frozen: f64,
}

fn make(name: &str, constant: &'static str, grid: &str, measured: f64, margin: f64, frozen: f64) -> Calibration {
    Calibration {
        name: name.to_string(),
        constant,
        grid: grid.to_string(),
        measured_max: measured,
        margin,
        proposed: margin * measured,
        frozen,
    }
}

pub fn calibrate(name: &str) -> Result<Calibration> {
    match name {
        "sylvester" => {
            let m = sylvester_max_ratio(&sylvester_grid(), &[1e2, 1e3, 1e4])?;
            Ok(make(name, "C_SYLVESTER", "i/37 + (sqrt2-1)/1024, v in {1e2,1e3,1e4}", m, 2.0, frozen::C_SYLVESTER))
        }
        "walfisz" => {
            let tab = tau_sieve(100_000)?;
            let grid = canonical_grid(64);
            let mut m = 0.0f64;
            for v in [1e3, 1e4, 1e5] {
                m = m.max(walfisz_ratio(&grid, v, &tab)?);
            }
            Ok(make(name, "C_WALFISZ", "64-point canonical grid, v in {1e3,1e4,1e5}", m, 2.0, frozen::C_WALFISZ))
        }
        "afe-psi1" => {
            let tab = tau_sieve(100_000)?;
            let mut m = 0.0f64;
            for spec in AFE_POINTS {
                let cf = parse_cf_spec(spec)?;
                let x = rational_to_f64(&cf.convergent_with_bits(128));
                for v in [1e3, 1e4, 1e5] {
                    m = m.max(afe_ratio(wilton_afe_residual(&cf, v, &tab)?, x, v));
                }
            }
            Ok(make(name, "C_AFE", "five quadratic irrationals, v in {1e3,1e4,1e5}", m, 2.0, frozen::C_AFE))
        }
        "delta-envelope" => {
            let tab = tau_sieve(1_000_000)?;
            let m = delta_envelope(1_000_000, &tab)?;
            Ok(make(name, "DELTA_ENVELOPE_C", "integers t <= 1e6, both one-sided limits", m, 2.0, frozen::DELTA_ENVELOPE_C))
        }
        "a-series" => {
            let n = 1000u64;
            let mut m = 0.0f64;
            for lam in calibration_lambdas() {
                let reference = a_direct(lam, 1e4 * lam.max(1.0 / lam))?.value;
                let s = a_via_series(lam, n)?.value;
                m = m.max((s - reference).abs() * n as f64 / (1.0 + 1.0 / lam));
            }
            Ok(make(name, "A_SERIES_C", "50-point lambda grid on [0.05,20] plus small rationals, N=1000", m, 2.0, frozen::A_SERIES_C))
        }
        "a-richardson" => {
            let mut m = 0.0f64;
            for lam in calibration_lambdas() {
                let scale = (1.0 / lam).max(1.0);
                let reference = a_direct(lam, 16384.0 * scale)?.value;
                for k in [64.0, 256.0] {
                    let coarse = a_direct(lam, k * scale)?.value;
                    m = m.max((coarse - reference).abs() * k * k);
                }
            }
            let grid = "50-point lambda grid on [0.05,20] plus small rationals, K in {64,256}";
            Ok(make(name, "A_DIRECT_RICHARDSON_C", grid, m, 2.0, frozen::A_DIRECT_RICHARDSON_C))
        }
        "f-sup" => {
            let mut m = 0.0f64;
            for i in 0..=10_000 {
                m = m.max(f_aux_tol(i as f64 / 10_000.0, 1e-6)?.abs());
            }
            Ok(make(name, "F_SUP_NORM", "x = i/1e4, i = 0..1e4", m, 1.1, frozen::F_SUP_NORM))
        }
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

fn calibration_lambdas() -> Vec<f64> {
    let mut l = lambda_grid();
    l.extend([1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0, 1.5, 2.0, 3.0]);
    l
}

pub fn calibrate_all() -> Result<Vec<Calibration>> {
    CALIBRATIONS.iter().map(|n| calibrate(n)).collect()
}
