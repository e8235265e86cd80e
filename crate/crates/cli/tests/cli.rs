use std::process::Command;

use cdiff::Field;
use cdiff_cli::{default_n_max, parse_element, run, Cli};
use clap::Parser;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cdiff"));
    cmd.env_remove("CDIFF_POLY_DB");
    cmd
}

fn run_args(args: &[&str]) -> (String, i32) {
    let cli = Cli::try_parse_from(std::iter::once("cdiff").chain(args.iter().copied())).unwrap();
    let out = run(&cli).unwrap();
    (out.output, out.status)
}

#[test]
fn element_literals() {
    let f = Field::new(3, 1, None).unwrap();
    assert_eq!(parse_element("-1", &f).unwrap().code(), 2);
    assert_eq!(parse_element("0", &f).unwrap().code(), 0);
    assert_eq!(parse_element("g^0", &f).unwrap().code(), 1);
    assert!(parse_element("3", &f).is_err());
    assert!(parse_element("g^x", &f).is_err());
    assert!(parse_element("two", &f).is_err());

    let f = Field::new(3, 5, None).unwrap();
    let g = f.generator();
    assert_eq!(parse_element("g^1", &f).unwrap(), g);
    assert_eq!(parse_element("g^242", &f).unwrap().code(), 1);
    assert_eq!(parse_element("g^3", &f).unwrap(), f.mul(g, f.mul(g, g)));
}

#[test]
fn default_budget() {
    assert_eq!(default_n_max(3), 13);
    assert_eq!(default_n_max(2), 20);
    assert_eq!(default_n_max(7), 7);
}

#[test]
fn reducible_modulus_exits_with_two() {
    let out = bin().args(["field-info", "--p", "3", "--n", "2", "--modulus", "2,0,1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("reducible"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["verify", "--family", "F9"],
        vec!["uniformity", "--p", "3", "--n", "5"],
        vec!["uniformity", "--p", "3", "--n", "5", "--d", "13", "--c", "999"],
        vec!["field-info", "--p", "4", "--n", "2"],
        vec!["field-info", "--p", "3", "--n", "30"],
        vec!["field-info", "--p", "3", "--n", "2", "--format", "xml"],
        vec!["scan", "--p", "3", "--n", "3", "--c", "1"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn uniformity_json() {
    let (out, status) = run_args(&["uniformity", "--p", "3", "--n", "5", "--d", "13", "--c", "-1", "--format", "json"]);
    assert_eq!(status, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["value"].as_u64().unwrap() <= 2);
    assert_eq!(v["gcd"], 1);
    assert_eq!(v["method"], "power-fast-path");
}

#[test]
fn classical_uniformity_uses_brute_force() {
    let (out, _) = run_args(&["uniformity", "--p", "3", "--n", "5", "--d", "182", "--c", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["method"], "full-brute-force");
}

#[test]
fn spectrum_counts_sum_to_q() {
    let (out, _) = run_args(&["spectrum", "--p", "3", "--n", "5", "--d", "13", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let total: u64 = v["counts"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum();
    assert_eq!(total, 243);
}

#[test]
fn scan_lists_pcn_exponent() {
    let (out, status) = run_args(&["scan", "--p", "3", "--n", "3", "--threshold", "1", "--format", "csv"]);
    assert_eq!(status, 0);
    assert!(out.lines().any(|l| l == "5,1"));
}

#[test]
fn verify_f1_range_passes() {
    let out = bin()
        .args(["verify", "--family", "F1", "--p", "3", "--n-max", "9", "--c", "-1", "--no-timing"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn failing_claim_exits_with_one() {
    // x^13 is not APN over GF(3^5).
    let out = bin().args(["verify", "--family", "F1", "--n", "5", "--apn"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn single_k_instantiation() {
    let (out, status) = run_args(&["verify", "--family", "T11[k=1]", "--n", "5", "--no-timing", "--format", "csv"]);
    assert_eq!(status, 0);
    assert_eq!(out.lines().nth(1).unwrap(), "T11[k=1],3,5,243,4,2,0;2,2;2,exact,2,pass,");
}

#[test]
fn explicit_degree_reports_not_applicable() {
    let (out, status) = run_args(&["verify", "--family", "F5", "--n", "5", "--format", "json"]);
    assert_eq!(status, 0);
    assert!(out.contains(r#""verdict":"not-applicable""#));
}

#[test]
fn reports_are_identical_across_worker_counts() {
    let args = |w: &'static str| -> Vec<&'static str> {
        vec!["verify", "--p", "3", "--n-max", "7", "--c-limit", "6", "--no-timing", "--format", "json", "--workers", w]
    };
    let (one, s1) = run_args(&args("1"));
    let (four, s4) = run_args(&args("4"));
    assert_eq!(one, four);
    assert_eq!(s1, s4);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = bin()
        .args(["verify", "--family", "F6", "--n-max", "7", "--no-timing", "--format", "csv", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches("claim,p,n").count(), 1);
    assert_eq!(text.lines().count(), 1 + 4);
}

#[test]
fn database_override_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("db.txt");
    // x^2 + x + 2 instead of the bundled x^2 + 2x + 2.
    std::fs::write(&db, "# test\n3 2 2 1 1\n").unwrap();
    let out = bin()
        .env("CDIFF_POLY_DB", &db)
        .args(["field-info", "--p", "3", "--n", "2", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["modulus"], serde_json::json!([2, 1, 1]));

    let out = bin()
        .env("CDIFF_POLY_DB", &db)
        .args(["field-info", "--p", "3", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .env("CDIFF_POLY_DB", dir.path().join("missing.txt"))
        .args(["field-info", "--p", "3", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
