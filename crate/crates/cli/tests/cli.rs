use std::process::{Command, Output};

use serde_json::Value;
use xlorentz::{ComplexScalar, ExactMatrix};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xlorentz")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn int(n: i64) -> ComplexScalar {
    ComplexScalar::from_integer(n)
}

#[test]
fn count_three_halves() {
    let v = json(&["count", "--lambda", "3/2"]);
    for key in ["formula", "multiplet_sum", "binomial"] {
        assert_eq!(v[key], 20);
    }
    assert_eq!(v["consistent"], true);
}

#[test]
fn verify_spin_half_exits_zero() {
    let out = run(&["verify", "--lambda", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().filter(|c| c["severity"] == "hard").all(|c| c["status"] == "pass"));
    let sign = checks.iter().find(|c| c["name"] == "group_metric.Gamma.sign").unwrap();
    assert_eq!(sign["severity"], "soft");
}

#[test]
fn spin_one_matrices_round_trip() {
    let v = json(&["matrices", "--lambda", "1", "--format", "json"]);
    assert_eq!(v["dimension"], 10);
    let matrices = v["matrices"].as_array().unwrap();
    assert_eq!(matrices.len(), 14);
    let gamma0 = matrices.iter().find(|m| m["generator"] == "Gamma0").unwrap();
    let parsed: ExactMatrix = serde_json::from_value(gamma0["entries"].clone()).unwrap();
    let diag = [0, 1, 1, 1, 0, 0, 0, -1, -1, -1].map(int).to_vec();
    assert_eq!(parsed, ExactMatrix::diagonal(diag));
    let metric: ExactMatrix = serde_json::from_value(v["metric"].clone()).unwrap();
    assert!(metric.is_diagonal());
}

#[test]
fn include_delta_adds_six() {
    let v = json(&["matrices", "--lambda", "1/2", "--include-delta"]);
    let names: Vec<&str> = v["matrices"].as_array().unwrap().iter().map(|m| m["generator"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 20);
    assert!(names.contains(&"DeltaZ+") && names.contains(&"DeltaMinus-"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["states", "--lambda", "3/2"][..],
        &["matrices", "--lambda", "1", "--decimal", "--format", "text"][..],
        &["dispersion", "--lambda", "1", "--p", "2,0.5,-0.3,0.1", "--p-prime", "1,-0.4,0.7,0.2"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("metric.json");
    let out = run(&["metric", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let eta: ExactMatrix = serde_json::from_value(v["metric"].clone()).unwrap();
    assert_eq!(eta.get(0, 0), &int(-6));
    assert_eq!(eta.get(3, 3), &int(6));
}

#[test]
fn decimal_states() {
    let v = json(&["states", "--lambda", "1", "--decimal"]);
    let coeffs: Vec<String> = v["states"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|s| s["polynomial"].as_array().unwrap().iter().map(|t| t["coeff"].as_str().unwrap().to_string()))
        .collect();
    assert!(coeffs.iter().any(|c| c == "1.4142135623731"), "{coeffs:?}");
}

#[test]
fn dispersion_checks_pass() {
    let v = json(&[
        "dispersion", "--lambda", "1", "--p", "2,0.5,-0.3,0.1", "--p-prime", "1,-0.4,0.7,0.2", "--rotation",
        "x,1.5707963267948966", "--boost", "z,1",
    ]);
    let checks = v["report"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert_eq!(v["spectrum"]["eigenvalues"].as_array().unwrap().len(), 10);
}

#[test]
fn tolerance_override_can_fail_a_check() {
    let out = run(&["dispersion", "--lambda", "1/2", "--boost", "x,1", "--tol-covariance", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors() {
    for args in [
        &["states", "--lambda", "1/3"][..],
        &["states", "--lambda", "-1"][..],
        &["count"][..],
        &["dispersion", "--lambda", "1", "--p", "1,2"][..],
        &["dispersion", "--lambda", "1", "--boost", "w,1"][..],
    ] {
        let out = run(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["matrices", "--lambda", "2", "--lambda-cap", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap 1"));
}
