//! End-to-end runs of the `qesrep` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn qesrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qesrep")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn gl3_closure() {
    let out = qesrep(&["verify", "gl", "--M", "2", "--m", "3", "--gamma", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["relations_total"], 81);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn spl21_two_variable_dimension() {
    let out = qesrep(&["dims", "spl21-2var", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("11"));
    let out = qesrep(&["verify", "spl21-2var", "--m", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn deformed_limit_reports_reducibility() {
    let out = qesrep(&["verify", "qspl21", "--rep", "4", "--n", "2", "--lambda", "q^-3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(json(&out).get("reducibility").is_some());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "nosuch"][..],
        &["verify", "gl", "--bogus"],
        &["verify", "qspl21", "--n", "0"],
        &["verify", "qspl21", "--rep", "3"],
        &["verify", "spl21-1var", "--t", "1/0"],
        &["verify", "spl21-1var", "--m", "1", "--t", "-2"],
    ] {
        assert_eq!(qesrep(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failures_exit_1() {
    let out = qesrep(&["verify", "rmod", "--small"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!json(&out)["failures"].as_array().unwrap().is_empty());
}

#[test]
fn writes_to_out_file() {
    let path = std::env::temp_dir().join(format!("qesrep-cli-{}.json", std::process::id()));
    let out = qesrep(&["realize", "sl2", "--small", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(v["generators"].as_object().is_some_and(|g| !g.is_empty()));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "gl-product", "--small"];
    assert_eq!(qesrep(&args).stdout, qesrep(&args).stdout);
}

#[test]
fn casimir_and_span() {
    assert_eq!(qesrep(&["casimir", "sl2", "--small"]).status.code(), Some(0));
    let out = qesrep(&["span", "spl21-1var", "--small"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("64"));
}
