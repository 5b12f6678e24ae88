use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wiltonlab")).args(args).output().expect("spawn wiltonlab")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn cf_expand() {
    let out = run(&["cf", "expand", "2/7"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["depth"], 2);
    assert_eq!(v["quotients"], serde_json::json!([3, 2]));
}

#[test]
fn eval_wilton_at_half() {
    let out = run(&["eval", "--fn", "wilton", "--x", "0.5"]);
    assert!(out.status.success());
    let w = json(&out)["result"]["partial"].as_f64().unwrap();
    assert!((w - std::f64::consts::LN_2).abs() < 1e-15);
}

#[test]
fn eval_a_one() {
    let out = run(&["eval", "--fn", "A", "--x", "1", "--method", "direct", "--tol", "1e-6"]);
    assert!(out.status.success());
    let a = json(&out)["result"]["value"].as_f64().unwrap();
    assert!((a - 1.260_661_401_5).abs() < 1e-5);
}

#[test]
fn oracle_landau() {
    let out = run(&["oracle", "landau", "--max", "6"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).lines().last() == Some("PASS"));
}

#[test]
fn check_suite_json_and_csv() {
    let out = run(&["check", "--suite", "gauss-invariance"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["suite"], "gauss-invariance");
    let out = run(&["check", "--suite", "gauss-invariance", "--out", "csv"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("suite,id,inputs,lhs,rhs,residual,bound,pass\r\n"));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(run(&["check", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["cf", "expand", "3/2x"]).status.code(), Some(2));
}
