use serde::Serialize;

use crate::autocorr::{a_value, f_aux_tol};
use crate::bernoulli::phi2;
use crate::error::{domain, Error, Result};
use crate::special::{g_at, upsilon, wilton_f64};

/// Functions that `table` can tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFn {
    A,
    F,
    Phi2,
    Wilton,
    G,
    Upsilon,
}

impl std::str::FromStr for TableFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => TableFn::A,
            "F" => TableFn::F,
            "phi2" => TableFn::Phi2,
            "wilton" | "W" => TableFn::Wilton,
            "G" => TableFn::G,
            "upsilon" => TableFn::Upsilon,
            _ => return Err(Error::Parse { input: s.into(), reason: "expected A, F, phi2, wilton, G or upsilon".into() }),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub x: f64,
    pub value: f64,
    pub err: f64,
    pub method: &'static str,
}

/// Values on from, from+step, …, ≤ to. Doubles are taken as exact
/// rationals where the function is discontinuous (W, G).
pub fn table(f: TableFn, from: f64, to: f64, step: f64, tol: f64) -> Result<Vec<TableRow>> {
    if !(step > 0.0) || !(to >= from) {
        return Err(domain("table", "need step > 0 and to >= from"));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    if n > 1_000_000 {
        return Err(crate::error::resource("table", "more than 1e6 rows"));
    }
    (0..=n)
        .map(|i| {
            let x = from + i as f64 * step;
            Ok(match f {
                TableFn::A => TableRow { x, value: a_value(x, tol)?, err: tol, method: "auto" },
                TableFn::F => TableRow { x, value: f_aux_tol(x, tol)?, err: tol, method: "auto" },
                TableFn::Phi2 => {
                    let s = phi2(x, tol)?;
                    TableRow { x, value: s.value, err: s.tail_bound, method: "series" }
                }
                TableFn::Wilton => TableRow { x, value: wilton_f64(x)?, err: 0.0, method: "rational" },
                TableFn::G => TableRow { x, value: g_at(x, tol)?, err: tol, method: "rational" },
                TableFn::Upsilon => {
                    let u = upsilon(x, tol)?;
                    TableRow { x, value: u.value, err: u.err_estimate, method: "g-integral" }
                }
            })
        })
        .collect()
}

/// RFC 4180 rendering, 17 significant digits.
pub fn table_csv(rows: &[TableRow], x_name: &str) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    w.write_record([x_name, "value", "err", "method"]).expect("in-memory write");
    for r in rows {
        w.write_record([format!("{:.16e}", r.x), format!("{:.16e}", r.value), format!("{:.16e}", r.err), r.method.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}
