use serde_json::Value;

use kschub_web::{dilation, expand, inflate};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn expand_reports_text_and_terms() {
    let v = parse(expand("h[1,1] | expand g", 0));
    assert_eq!(v["text"], "-g[1] + g[2] + g[1,1]");
    assert_eq!(v["degree_bound"], 6);
    assert_eq!(v["expansion"]["basis"], "g");
}

#[test]
fn expand_error_has_position() {
    let v = parse(expand("s[2,1/1]", 0));
    assert_eq!(v["position"], 5);
    assert!(v["error"].as_str().unwrap().contains("skew"));
}

#[test]
fn inflate_both_kinds() {
    let v = parse(inflate("1 5 6 / 4,7,8 9", "", "svt"));
    assert_eq!(v["inflated_weight"], serde_json::json!([3, 3, 3, 3, 2, 2, 2, 2, 1]));
    let v = parse(inflate("1 2 / 1", "3,1", "tabloid"));
    assert_eq!(v["inflated_weight"], serde_json::json!([5, 2]));
    assert!(parse(inflate("1", "", "rpp"))["error"].is_string());
    assert!(parse(inflate("1", "1,2", "svt"))["error"].is_string());
    assert!(parse(inflate("2 1", "", "svt"))["error"].is_string());
}

#[test]
fn dilation_chain() {
    let v = parse(dilation("1 1 1,2,3,4 / 2 2,3 / 4"));
    let rows: Vec<u64> = v["steps"].as_array().unwrap().iter().map(|s| s["row"].as_u64().unwrap()).collect();
    assert_eq!(rows, [2, 1, 1, 1]);
    assert_eq!(v["terminal"], "4 4\n3 3\n2 2 2\n1 1 1\n");
    assert!(parse(dilation("2 1"))["error"].is_string());
}
