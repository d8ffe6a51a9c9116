use std::process::{Command, Output};

use serde_json::Value;

fn kschub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kschub")).args(args).env_remove("KSCHUB_CACHE").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let out = kschub(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn coeff_all_routes_agree() {
    let v = json(&["coeff", "--lambda", "1", "--mu", "1", "--nu", "2,1"]);
    let records = v.as_array().unwrap();
    let routes: Vec<&str> = records.iter().map(|r| r["route"].as_str().unwrap()).collect();
    assert_eq!(routes, ["BUCH_COUNT", "G_PRODUCT", "G_DUAL"]);
    assert!(records.iter().all(|r| r["value"] == -1));
}

#[test]
fn coeff_single_route_ascii() {
    let out = kschub(&["coeff", "--lambda", "2,1", "--mu", "1", "--nu", "3,1", "--route", "dual"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains('1'));
}

#[test]
fn eval_json_terms() {
    let v = json(&["eval", "h[2] | expand g"]);
    assert_eq!(v["basis"], "g");
    assert_eq!(v["terms"][0]["index"], serde_json::json!([2]));
    assert_eq!(v["terms"][0]["coeff"], 1);

    let v = json(&["eval", "G[1]*G[1]", "--degree", "3"]);
    assert_eq!(v["degree_bound"], 3);
    assert_eq!(v["basis"], "m");
}

#[test]
fn parse_errors_exit_2_with_caret() {
    let out = kschub(&["eval", "s[2,1/1]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("skew"), "{err}");
    assert!(err.contains("       ^"), "{err}");

    let out = kschub(&["eval", "G[2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_partitions_exit_2() {
    let out = kschub(&["coeff", "--lambda", "2,3", "--mu", "1", "--nu", "3,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("weakly decreasing"));
    assert_eq!(kschub(&["coeff", "--lambda", "x", "--mu", "1", "--nu", "2"]).status.code(), Some(2));
}

#[test]
fn unknown_subcommand_exits_2() {
    assert_eq!(kschub(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn invalid_filling_exits_2() {
    let out = kschub(&["enumerate", "--class", "ssyt", "--input", "2 1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invalid filling"));
}

#[test]
fn enumerate_counts() {
    let v = json(&["enumerate", "--class", "ssyt", "--shape", "2,1", "--max-entry", "2"]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["fillings"].as_array().unwrap().len(), 2);
    let v = json(&["enumerate", "--class", "ssyt", "--shape", "2,1", "--max-entry", "3"]);
    assert_eq!(v["count"], 8);
}

#[test]
fn enumerate_input_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("svt.json");
    let fills = json(&["enumerate", "--class", "svt", "--shape", "2,1", "--max-entry", "3"])["fillings"].clone();
    std::fs::write(&path, fills.to_string()).unwrap();
    let v = json(&["enumerate", "--class", "svt", "--input", path.to_str().unwrap()]);
    assert_eq!(v["fillings"], fills);
}

#[test]
fn tau_trace_reports_toggle() {
    let v = json(&["trace", "--map", "tau", "--lambda", "2,1", "--input", "5,7 7"]);
    assert_eq!(v["toggle"]["letter"], 7);
    assert_eq!(v["toggle"]["added"], true);
    assert_eq!(v["output"]["top"]["rows"][0][0], serde_json::json!([5, 6, 7]));
}

#[test]
fn phi_trace_ascii() {
    let out = kschub(&["trace", "--map", "phi", "--input", "1 1 1,2,3,4 / 2 2,3 / 4"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(String::from_utf8_lossy(&out.stdout).contains("S4: terminal\n4 4\n3 3\n2 2 2\n1 1 1"));
}

#[test]
fn verify_routes_passes() {
    let out = kschub(&["verify", "--suite", "routes", "--max-size", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn cache_through_env_var() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("coeffs.ndjson");
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_kschub")).args(args).env("KSCHUB_CACHE", &path).output().unwrap()
    };
    assert!(run(&["coeff", "--lambda", "1", "--mu", "1", "--nu", "2"]).status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 3);
    for line in text.lines() {
        let rec: Value = serde_json::from_str(line).unwrap();
        assert_eq!(rec["value"], 1);
    }

    let out = run(&["--output", "json", "cache", "show"]);
    let shown: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(shown.as_array().unwrap().len(), 3);

    assert!(run(&["cache", "clear"]).status.success());
    let out = run(&["--output", "json", "cache", "show"]);
    let shown: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(shown.as_array().unwrap().is_empty());
}
