//! Integration tests for the command-line front end: exit codes, JSON round
//! trips and byte-for-byte deterministic output.

use std::process::{Command, Output};

use cyclohecke::combinatorics::MPartition;
use cyclohecke::repn::{build_representation, representation_from_json, Params, Vacuum};
use cyclohecke::scalar::RatFn;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclohecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn rep_json_round_trips() {
    let out = run(&["rep", "--m", "2", "--shape", "[[2],[1]]", "--symbolic", "--format", "json"]);
    assert!(out.status.success(), "rep failed: {:?}", out);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let parsed = representation_from_json(&value).expect("round trip");
    let shape: MPartition = "[[2],[1]]".parse().expect("shape literal");
    let built = build_representation::<RatFn>(&shape, &Params::symbolic(2), Vacuum::Q);
    assert_eq!(parsed, built);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["rep", "--m", "2", "--shape", "[[1,1],[2]]", "--symbolic", "--format", "json"][..],
        &["gram", "--m", "2", "--shape", "[[1,1],[2]]", "--format", "json"][..],
        &["bratteli", "--m", "2", "--max-n", "3", "--dot"][..],
        &["tableaux", "--m", "2", "--shape", "[[2,1],[1]]"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert!(first.status.success(), "{:?} failed", args);
        assert_eq!(first.stdout, second.stdout, "{:?} is not deterministic", args);
        assert_eq!(first.stderr, second.stderr);
    }
}

#[test]
fn bad_shape_is_a_usage_error_with_position() {
    let out = run(&["rep", "--m", "2", "--shape", "[[2],1]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr.clone()).expect("utf-8 stderr");
    assert!(err.contains("byte"), "missing position in: {}", err);
}

#[test]
fn component_count_mismatch_is_a_usage_error() {
    let out = run(&["rep", "--m", "2", "--shape", "[[2]]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["rep", "--m", "2", "--shape", "[[2],[1]]", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_generic_point_is_rejected() {
    // v2/v1 = 4 = q^2 at q = 2: not generic.
    let out = run(&["spec-check", "--q", "2", "--v", "1,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn generic_point_is_accepted() {
    let out = run(&["spec-check", "--q", "2", "--v", "1,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "dimensions", "--m", "2", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS"), "no PASS lines in: {}", text);
    assert!(!text.contains("FAIL"));
}

#[test]
fn tensor_decompose_reports_multiplicity() {
    let out = run(&[
        "tensor", "--m", "1", "--shape", "[[2,1]]", "--shape", "[[2,1]]", "--decompose",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[[2,1]] x2"), "unexpected output: {}", stdout(&out));
}
