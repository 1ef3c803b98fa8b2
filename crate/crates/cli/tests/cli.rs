use std::process::{Command, Output};

use serde_json::Value;

fn nilcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilcone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = nilcone(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

#[test]
fn irrep_one() {
    let (code, v) = json(&["irrep", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["casimir"], "3/2");
    assert_eq!(v["rho_h"], serde_json::json!([["-1/1", "0/1"], ["0/1", "1/1"]]));
    assert_eq!(v["rho_x"], serde_json::json!([["0/1", "0/1"], ["1/1", "0/1"]]));
    assert_eq!(v["rho_y"], serde_json::json!([["0/1", "1/1"], ["0/1", "0/1"]]));
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn irrep_zero_is_zero_matrices() {
    let (code, v) = json(&["irrep", "--n", "0"]);
    assert_eq!(code, 0);
    for key in ["rho_h", "rho_x", "rho_y"] {
        assert_eq!(v[key], serde_json::json!([["0/1"]]));
    }
    assert_eq!(v["casimir"], "0/1");
}

#[test]
fn kernel_odd_dimension() {
    let o = nilcone(&["kernel", "--n", "3", "--max-order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("dimension 2"));
    assert!(out.lines().last().unwrap().starts_with("PASS"));
}

#[test]
fn solve_even_has_only_zero() {
    let (code, v) = json(&["solve", "--n", "2", "--poly", "t^3+t"]);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"], 0);
    assert_eq!(v["polynomial"], "t^3 + t");
}

#[test]
fn solve_odd_nilpotent() {
    let (code, v) = json(&["solve", "--n", "5", "--poly", "t^4", "--max-order", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["dimension"], 3);
}

#[test]
fn obstruction_cancels() {
    let (code, v) = json(&["numcheck", "--n", "1", "--kind", "obstruction", "--grid", "128"]);
    assert_eq!(code, 0);
    assert!(v["residual"]["relative"].as_f64().unwrap() < 1e-12);
}

#[test]
fn coarse_invariance_check_fails_with_code_two() {
    let o = nilcone(&["numcheck", "--n", "2", "--kind", "invariance", "--grid", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).lines().last().unwrap().starts_with("FAIL"));
}

#[test]
fn pairing_consistency() {
    let (code, v) = json(&["numcheck", "--n", "0", "--kind", "pairing", "--grid", "256"]);
    assert_eq!(code, 0);
    assert!(v["consistency"]["relative_gap"].as_f64().unwrap() < 1e-6);
}

#[test]
fn classify_flags() {
    let (code, v) = json(&["classify", "--n", "4", "--origin", "--nplus", "--nminus", "--poly", "t^2+1"]);
    assert_eq!(code, 0);
    assert_eq!(v["answer"]["realizable"], true);
    assert_eq!(v["answer"]["half_cone_plus_generators"], "countably_infinite");
    assert_eq!(v["square_finite_supported"]["only_zero"], true);
    let (_, w) = json(&["classify", "--n", "4", "--origin", "--no-origin"]);
    assert_eq!(w["answer"]["query"]["contains_origin"], false);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(nilcone(&["kernel"]).status.code(), Some(1));
    assert_eq!(nilcone(&["solve", "--n", "2", "--poly", "3*t^2"]).status.code(), Some(1));
    assert_eq!(nilcone(&["numcheck", "--n", "3", "--kind", "invariance"]).status.code(), Some(1));
    assert_eq!(nilcone(&["numcheck", "--n", "2", "--kind", "pairing"]).status.code(), Some(1));
    assert_eq!(nilcone(&["bogus"]).status.code(), Some(1));
    assert_eq!(nilcone(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        vec!["irrep", "--n", "4"],
        vec!["orbit", "--n", "6", "--max-order", "4"],
        vec!["classify", "--n", "2", "--nplus", "--poly", "t^2-3/2*t+1"],
        vec!["numcheck", "--n", "2", "--kind", "invariance", "--grid", "32"],
    ] {
        let mut all = args.clone();
        all.extend(["--format", "json"]);
        let a = nilcone(&all).stdout;
        let b = nilcone(&all).stdout;
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn json_keys_are_sorted() {
    let o = nilcone(&["supp0-dims", "--n", "2", "--max-degree", "4", "--format", "json"]);
    let text = stdout(&o);
    let keys: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \"") )
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert!(keys.len() > 4);
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["dims"], serde_json::json!([0, 1, 0, 1, 0]));
}
