//! `wiltonlab`: command-line front end.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wiltonlab_core::autocorr::{self, AValue};
use wiltonlab_core::bernoulli;
use wiltonlab_core::contfrac::{convergents, orbit, parse_cf_spec, CfExpansion, Rational};
use wiltonlab_core::divisor;
use wiltonlab_core::frozen;
use wiltonlab_core::harness::{self, SuiteConfig, TableFn};
use wiltonlab_core::numeric::Phase;
use wiltonlab_core::scalar::{f64_to_rational, rational_to_f64};
use wiltonlab_core::special;
use wiltonlab_core::{Error, Interval, Result};

#[derive(Parser)]
#[command(name = "wiltonlab", version, about = "Wilton, Brjuno and Bernoulli-series functions with explicit error bounds")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Continued fraction expansions and Gauss orbits.
    Cf {
        #[command(subcommand)]
        cmd: CfCmd,
    },
    /// Evaluate one function and print JSON.
    Eval(EvalArgs),
    /// Exact oracles.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Tabulate a function on a grid.
    Table(TableArgs),
    /// Run a check suite.
    Check(CheckArgs),
    /// Re-measure the frozen constants.
    Calibrate(CalibrateArgs),
}

#[derive(Subcommand)]
enum CfCmd {
    /// Quotients of a rational p/q in [0, 1).
    Expand { r: String },
    /// Quotients, convergents and the orbit enclosures to depth K.
    Orbit {
        spec: String,
        #[arg(long, default_value_t = 10)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// ∫₀¹B₁(mt)B₁(nt)dt against gcd(m,n)²/(12mn) for m, n ≤ max.
    Landau {
        #[arg(long, default_value_t = 30)]
        max: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Func {
    #[value(name = "A")]
    A,
    #[value(name = "F")]
    F,
    Phi1,
    Phi2,
    Wilton,
    Brjuno,
    #[value(name = "G")]
    G,
    Delta,
    Upsilon,
    Criterion,
    Psi1,
    #[value(name = "delta-div")]
    DeltaDiv,
}

#[derive(Clone, Copy, ValueEnum)]
enum AMethodArg {
    Direct,
    Phi2,
    Series,
    Delta,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    func: Func,
    /// A number, `p/q`, `golden`, `sqrt2m1` or `periodic:a1,a2,...`.
    #[arg(long)]
    x: String,
    #[arg(long)]
    v: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long, value_enum)]
    method: Option<AMethodArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long = "fn")]
    func: String,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long)]
    step: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    out: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Suite name; every suite when omitted.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    out: Format,
    #[arg(long, default_value_t = 1e5)]
    vmax: f64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct CalibrateArgs {
    #[arg(long)]
    all: bool,
    name: Option<String>,
    #[arg(long)]
    output: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, output: Option<&str>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse { input: path.into(), reason: e.to_string() }),
        None => {
            let mut out = std::io::stdout().lock();
            let nl = if text.ends_with('\n') { "" } else { "\n" };
            // A closed pipe (`| head`) is not an error.
            let _ = write!(out, "{text}{nl}").and_then(|_| out.flush());
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json")
}

/// Returns whether every check passed (always true for plain evaluation).
fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Cf { cmd } => cf(cmd).map(|_| true),
        Cmd::Eval(a) => eval(a).map(|_| true),
        Cmd::Oracle { cmd: OracleCmd::Landau { max } } => landau(max),
        Cmd::Table(a) => {
            let f: TableFn = a.func.parse()?;
            let rows = harness::table(f, a.from, a.to, a.step, a.tol)?;
            let x_name = if f == TableFn::A { "lambda" } else { "x" };
            let text = match a.out {
                Format::Csv => harness::table_csv(&rows, x_name),
                Format::Json => pretty(&serde_json::to_value(&rows).expect("json")),
            };
            emit(&text, None)?;
            Ok(true)
        }
        Cmd::Check(a) => check(a),
        Cmd::Calibrate(a) => {
            let cals = match (a.all, a.name) {
                (true, _) | (false, None) => harness::calibrate_all()?,
                (false, Some(n)) => vec![harness::calibrate(&n)?],
            };
            emit(&pretty(&serde_json::to_value(&cals).expect("json")), a.output.as_deref())?;
            Ok(true)
        }
    }
}

fn check(a: CheckArgs) -> Result<bool> {
    let cfg = SuiteConfig { vmax: a.vmax };
    let names: Vec<String> = match a.suite {
        Some(s) => vec![s],
        None => harness::SUITES.iter().map(|s| s.to_string()).collect(),
    };
    let mut ok = true;
    let mut texts = Vec::new();
    for name in &names {
        let rep = harness::run_suite(name, &cfg)?;
        ok &= rep.passed();
        for c in rep.failures() {
            eprintln!("FAIL {name} {} [{}] residual={:e} bound={:e}", c.id, c.inputs, c.residual, c.bound);
        }
        eprintln!("{name}: {} cases, {}", rep.cases.len(), if rep.passed() { "PASS" } else { "FAIL" });
        texts.push(match a.out {
            Format::Json => rep.to_json(),
            Format::Csv => rep.to_csv(),
        });
    }
    emit(&texts.join("\n"), a.output.as_deref())?;
    Ok(ok)
}

fn landau(max: u64) -> Result<bool> {
    let mut ok = true;
    let mut lines = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            let got = bernoulli::landau_inner(m, n)?;
            let g = num_integer::gcd(m, n);
            let want = Rational::new((g * g).into(), (12 * m * n).into());
            let pass = got == want;
            ok &= pass;
            lines.push(format!("m={m} n={n} integral={got} expected={want} {}", if pass { "PASS" } else { "FAIL" }));
        }
    }
    lines.push((if ok { "PASS" } else { "FAIL" }).to_string());
    emit(&lines.join("\n"), None)?;
    Ok(ok)
}

fn interval(iv: &Interval<f64>) -> Value {
    json!([iv.lo, iv.hi])
}

/// Integers that fit in i64 as JSON numbers, larger ones as strings.
fn int(s: String) -> Value {
    match s.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(s),
    }
}

fn cf(cmd: CfCmd) -> Result<()> {
    let (cf, depth) = match cmd {
        CfCmd::Expand { r } => {
            let cf = parse_cf_spec(&r)?;
            if !cf.is_terminating() {
                return Err(Error::Parse { input: r, reason: "expected p/q".into() });
            }
            let qs: Vec<Value> = cf.head(cf.depth().unwrap_or(0)).iter().map(|a| int(a.to_string())).collect();
            return emit(&pretty(&json!({ "quotients": qs, "depth": cf.depth() })), None);
        }
        CfCmd::Orbit { spec, depth } => (parse_cf_spec(&spec)?, depth),
    };
    let k = cf.depth().map_or(depth, |d| d.min(depth));
    let qs: Vec<Value> = cf.head(k).iter().map(|a| int(a.to_string())).collect();
    let c = convergents(&cf, k + 1);
    let conv: Vec<Value> =
        c.p.iter().zip(&c.q).map(|(p, q)| json!({ "p": int(p.to_string()), "q": int(q.to_string()) })).collect();
    let o = orbit::<f64>(&cf, k);
    let entries: Vec<Value> = o
        .entries
        .iter()
        .map(|e| {
            json!({
                "k": e.k,
                "alpha": interval(&e.alpha),
                "beta": interval(&e.beta),
                "gamma": e.gamma.as_ref().map(interval),
            })
        })
        .collect();
    emit(&pretty(&json!({ "quotients": qs, "depth": cf.depth(), "convergents": conv, "orbit": entries })), None)
}

/// A plain number, or an expansion spec.
enum Point {
    Real(f64),
    Cf(CfExpansion),
}

fn point(s: &str) -> Result<Point> {
    if let Ok(x) = s.trim().parse::<f64>() {
        return Ok(Point::Real(x));
    }
    parse_cf_spec(s).map(Point::Cf)
}

fn expansion(s: &str) -> Result<CfExpansion> {
    match point(s)? {
        Point::Cf(cf) => Ok(cf),
        Point::Real(x) => {
            let r = f64_to_rational(x).ok_or_else(|| Error::Parse { input: s.into(), reason: "not finite".into() })?;
            CfExpansion::from_rational(&r)
        }
    }
}

fn phase(s: &str) -> Result<Phase> {
    Ok(match point(s)? {
        Point::Real(x) => Phase::from_f64(x),
        Point::Cf(cf) => match cf.rational_value() {
            Some(r) => Phase::from_rational(&r),
            None => Phase::from_rational(&cf.convergent_with_bits(128)),
        },
    })
}

fn real(s: &str) -> Result<f64> {
    Ok(match point(s)? {
        Point::Real(x) => x,
        Point::Cf(cf) => match cf.rational_value() {
            Some(r) => rational_to_f64(&r),
            None => rational_to_f64(&cf.convergent_with_bits(128)),
        },
    })
}

fn need<T>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse { input: name.into(), reason: format!("--{name} is required for this function") })
}

fn a_route(lam: f64, method: AMethodArg, tol: f64) -> Result<AValue> {
    match method {
        AMethodArg::Direct => {
            // |S(2T) − S(T)| ≈ κ/(2T) with κ ≤ ½; stay under the piece cap.
            let cap = 0.49 * autocorr::MAX_PIECES / (1.0 + lam);
            let t = (0.25 / tol).max(autocorr::direct_multiplier(tol)) * lam.recip().max(1.0);
            autocorr::a_direct(lam, t.min(cap).max(10.0 * lam.recip().max(1.0)))
        }
        AMethodArg::Phi2 => autocorr::a_via_phi2(lam, 20.0 * lam.max(1.0), tol),
        AMethodArg::Series => {
            let n = (frozen::A_SERIES_C * (1.0 + 1.0 / lam) / tol).ceil().clamp(1.0, 1e8);
            autocorr::a_via_series(lam, n as u64)
        }
        AMethodArg::Delta => {
            let c = 1.5 * frozen::DELTA_ENVELOPE_C / std::f64::consts::PI;
            let t = (c / tol).powf(1.5).clamp(10.0, divisor::A_DELTA_MAX_T);
            divisor::a_via_delta(lam, t)
        }
    }
}

fn eval(a: EvalArgs) -> Result<()> {
    let x = a.x.as_str();
    let out = match a.func {
        Func::A => {
            let lam = real(x)?;
            let tol = a.tol.unwrap_or(1e-6);
            match a.method {
                Some(m) => serde_json::to_value(a_route(lam, m, tol)?).map(|v| json!({ "fn": "A", "lambda": lam, "result": v })).expect("json"),
                None => json!({ "fn": "A", "lambda": lam, "value": autocorr::a_value(lam, tol)?, "tol": tol }),
            }
        }
        Func::F => {
            let t = real(x)?;
            let tol = a.tol.unwrap_or(autocorr::F_DEFAULT_TOL);
            json!({ "fn": "F", "x": t, "value": autocorr::f_aux_tol(t, tol)?, "tol": tol })
        }
        Func::Phi1 => {
            let v = need(a.v, "v")?;
            json!({ "fn": "phi1", "x": x, "v": v, "value": bernoulli::phi1_partial_phase(&phase(x)?, v) })
        }
        Func::Phi2 => {
            let tol = a.tol.unwrap_or(1e-6);
            let s = bernoulli::phi2(real(x)?, tol)?;
            json!({ "fn": "phi2", "x": x, "value": s.value, "tail_bound": s.tail_bound, "terms_used": s.terms_used })
        }
        Func::Wilton | Func::Brjuno => {
            let cf = expansion(x)?;
            let depth = a.depth.unwrap_or(60);
            let e = if matches!(a.func, Func::Wilton) { special::wilton::<f64>(&cf, depth) } else { special::brjuno::<f64>(&cf, depth) };
            let name = if matches!(a.func, Func::Wilton) { "wilton" } else { "brjuno" };
            json!({ "fn": name, "x": x, "result": serde_json::to_value(e).expect("json") })
        }
        Func::G => {
            let s = special::g_value(&expansion(x)?, a.tol.unwrap_or(1e-8))?;
            json!({ "fn": "G", "x": x, "value": s.value, "tail_bound": s.tail_bound, "terms_used": s.terms_used })
        }
        Func::Delta => json!({ "fn": "delta", "x": x, "value": special::delta(&expansion(x)?) }),
        Func::Upsilon => {
            let u = special::upsilon(real(x)?, a.tol.unwrap_or(1e-6))?;
            json!({ "fn": "upsilon", "x": x, "value": u.value, "err_estimate": u.err_estimate })
        }
        Func::Criterion => {
            let tr = special::criterion(&expansion(x)?, a.depth.unwrap_or(20))?;
            json!({ "fn": "criterion", "x": x, "trace": serde_json::to_value(tr).expect("json") })
        }
        Func::Psi1 => {
            let v = need(a.v, "v")?;
            let tab = divisor::tau_sieve(v.floor().max(1.0) as u64)?;
            json!({ "fn": "psi1", "x": x, "v": v, "value": divisor::psi1_partial(&phase(x)?, v, &tab)? })
        }
        Func::DeltaDiv => {
            let t = real(x)?;
            json!({ "fn": "delta-div", "x": t, "value": divisor::dirichlet_remainder(t)? })
        }
    };
    emit(&pretty(&out), None)
}
