//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach stdout.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use wiltonlab_core::autocorr::a_direct;
use wiltonlab_core::harness::{run_suite, Case, CheckReport, SuiteConfig};

struct Criterion {
    number: u32,
    title: &'static str,
    suite: &'static str,
    /// Case-id prefixes making up the criterion; empty means every case.
    ids: &'static [&'static str],
    /// Minimum number of selected cases.
    min_cases: usize,
    /// Wall-clock limit on the whole suite run.
    time_limit: Option<Duration>,
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "A(1) direct route, T = 1e5, within 1e-4", suite: "A-routes", ids: &["a-one/direct"], min_cases: 1, time_limit: None },
    Criterion { number: 2, title: "reflection A(λ) = λA(1/λ), three routes", suite: "A-reflection", ids: &[], min_cases: 15, time_limit: None },
    Criterion { number: 3, title: "Landau integrals, m, n ≤ 30, exact", suite: "landau", ids: &[], min_cases: 900, time_limit: None },
    Criterion {
        number: 4,
        title: "Wilton/Brjuno closed forms at the golden ratio, W(1/k) = log k",
        suite: "wilton-feq",
        ids: &["closed-form/wilton-golden", "closed-form/brjuno-golden", "wilton-inverse"],
        min_cases: 51,
        time_limit: None,
    },
    Criterion { number: 5, title: "functional equations, 20 periodic streams at depth 50", suite: "wilton-feq", ids: &["feq/W", "feq/G", "feq/general"], min_cases: 60, time_limit: None },
    Criterion { number: 6, title: "Sylvester AFE ratio ≤ C_SYLVESTER, ε(1, v) = 0", suite: "phi1-sylvester", ids: &["sylvester-grid", "sylvester-at-one"], min_cases: 100, time_limit: None },
    Criterion {
        number: 7,
        title: "ψ₁ AFE slope ≤ −0.4, sieve V = 1e6, ≤ 60 s",
        suite: "afe-psi1",
        ids: &["afe-slope"],
        min_cases: 5,
        time_limit: Some(Duration::from_secs(60)),
    },
    Criterion { number: 8, title: "φ₂ two routes on 100 points, φ₂(0), φ₂(1/2)", suite: "phi2-consistency", ids: &["grid", "phi2-special", "phi2-integral-special"], min_cases: 104, time_limit: None },
    Criterion { number: 9, title: "rational-point expansion at 1/2, ratio within 15% of 1/2", suite: "phi2-consistency", ids: &["rational-expansion"], min_cases: 2, time_limit: None },
    Criterion { number: 10, title: "moduli of continuity of φ₂ and A", suite: "moduli", ids: &[], min_cases: 8, time_limit: None },
    Criterion { number: 11, title: "Υ small-x law within 5x²", suite: "phi2-consistency", ids: &["upsilon-small"], min_cases: 2, time_limit: None },
    Criterion { number: 12, title: "φ₁ limit identity at the golden ratio and rationals", suite: "theorem2-sample", ids: &[], min_cases: 12, time_limit: None },
    Criterion { number: 13, title: "Gauss-measure invariance within 1e-6", suite: "gauss-invariance", ids: &["invariance/residual"], min_cases: 2, time_limit: None },
];

fn selected<'a>(report: &'a CheckReport, ids: &[&str]) -> Vec<&'a Case> {
    report
        .cases
        .iter()
        .filter(|c| ids.is_empty() || ids.iter().any(|p| c.id == *p || c.id.starts_with(&format!("{p}/"))))
        .collect()
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut reports: BTreeMap<&str, (CheckReport, Duration)> = BTreeMap::new();
    let mut all_pass = true;

    for cr in CRITERIA {
        if !reports.contains_key(cr.suite) {
            let t0 = Instant::now();
            let report = run_suite(cr.suite, &cfg).expect("known suite");
            reports.insert(cr.suite, (report, t0.elapsed()));
        }
        let (report, elapsed) = &reports[cr.suite];
        let cases = selected(report, cr.ids);
        let failed: Vec<&&Case> = cases.iter().filter(|c| !c.pass).collect();
        let mut notes = vec![format!("{} cases", cases.len()), format!("{} failed", failed.len())];
        let mut ok = failed.is_empty() && cases.len() >= cr.min_cases;
        if cases.len() < cr.min_cases {
            notes.push(format!("expected at least {}", cr.min_cases));
        }
        if let Some(limit) = cr.time_limit {
            ok &= *elapsed <= limit;
            notes.push(format!("suite {:.1} s of {} s", elapsed.as_secs_f64(), limit.as_secs()));
        }
        if cr.number == 1 {
            let t0 = Instant::now();
            let r = a_direct(1.0, 1e5);
            let dt = t0.elapsed();
            ok &= r.is_ok() && dt <= Duration::from_secs(10);
            notes.push(format!("A_direct(1, 1e5) {:.2} s of 10 s", dt.as_secs_f64()));
        }
        all_pass &= ok;
        println!("criterion {:>2} {}  {} [{}]", cr.number, if ok { "PASS" } else { "FAIL" }, cr.title, notes.join(", "));
        for c in failed.iter().take(5) {
            println!("    {} ({}): residual {:e}, bound {:e}", c.id, c.inputs, c.residual, c.bound);
        }
    }

    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
