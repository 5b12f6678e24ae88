use wiltonlab_core::harness::{run_suite, table, table_csv, CheckReport, SuiteConfig, TableFn, SCHEMA_VERSION, SUITES};

#[test]
fn json_roundtrip() {
    let r = run_suite("cf-identities", &SuiteConfig::default()).unwrap();
    assert_eq!(r.schema, SCHEMA_VERSION);
    assert!(r.passed());
    let back = CheckReport::from_json(&r.to_json()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn reports_are_deterministic() {
    let cfg = SuiteConfig::default();
    let a = run_suite("landau", &cfg).unwrap().to_csv();
    let b = run_suite("landau", &cfg).unwrap().to_csv();
    assert_eq!(a, b);
}

#[test]
fn csv_layout() {
    let r = run_suite("gauss-invariance", &SuiteConfig::default()).unwrap();
    let csv = r.to_csv();
    let lines: Vec<&str> = csv.split("\r\n").filter(|l| !l.is_empty()).collect();
    assert_eq!(lines[0], "suite,id,inputs,lhs,rhs,residual,bound,pass");
    assert_eq!(lines.len(), r.cases.len() + 1);
    assert!(!csv.replace("\r\n", "").contains('\n'));
    let mut rd = csv::Reader::from_reader(csv.as_bytes());
    for rec in rd.records() {
        let rec = rec.unwrap();
        assert_eq!(rec.len(), 8);
        assert_eq!(&rec[0], "gauss-invariance");
        for i in 3..7 {
            rec[i].parse::<f64>().unwrap();
        }
    }
}

#[test]
fn frozen_constants_recorded() {
    let r = run_suite("gauss-invariance", &SuiteConfig::default()).unwrap();
    for k in ["A_DIRECT_RICHARDSON_C", "A_SERIES_C", "C_AFE", "C_SYLVESTER", "C_WALFISZ", "DELTA_ENVELOPE_C", "F_SUP_NORM"] {
        assert!(r.frozen_constants[k] > 0.0, "{k}");
    }
    assert_eq!(SUITES.len(), 11);
}

#[test]
fn table_rows() {
    let rows = table(TableFn::Wilton, 0.1, 0.5, 0.1, 1e-9).unwrap();
    assert_eq!(rows.len(), 5);
    let csv = table_csv(&rows, "x");
    assert_eq!(csv.split("\r\n").filter(|l| !l.is_empty()).count(), 6);
}
