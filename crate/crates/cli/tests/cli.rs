use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclecount")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn coefficients(v: &Value) -> Vec<String> {
    v["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect()
}

#[test]
fn poly_examples() {
    let v = json(&["poly", "--family", "path:5", "--r", "2", "--format", "json"]);
    assert_eq!(coefficients(&v), ["0", "0", "0", "1", "3", "1"]);
    assert_eq!(v["total"], "5");

    let v = json(&["poly", "--family", "complete:4", "--format", "json", "--oracle"]);
    assert_eq!(coefficients(&v), ["0", "6", "11", "6", "1"]);
    assert_eq!(v["source"], "oracle");

    let table = stdout(&run(&["poly", "--family", "star:4", "--r", "1"]));
    assert!(table.contains("x^4 + 3x^3"), "{table}");
}

#[test]
fn moments_are_exact() {
    let v = json(&["moments", "--family", "complete:4", "--format", "json"]);
    assert_eq!(v["moments"]["mean"]["exact"], "25/12");
    let v = json(&["poly", "--family", "star:5", "--r", "1", "--moments", "--format", "json"]);
    assert_eq!(v["moments"]["mean"]["exact"], "21/5");
    assert_eq!(v["moments"]["variance"]["exact"], "4/25");
}

#[test]
fn file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w4.json");
    std::fs::write(&path, r#"{"n":5,"edges":[[1,2],[1,3],[1,4],[1,5],[2,3],[3,4],[4,5],[2,5]],"r":1}"#).unwrap();
    let p = path.to_str().unwrap();
    let engine = json(&["poly", "--file", p, "--format", "json"]);
    let oracle = json(&["poly", "--file", p, "--oracle", "--format", "json"]);
    assert_eq!(coefficients(&engine), ["0", "8", "18", "18", "8", "1"]);
    assert_eq!(coefficients(&engine), coefficients(&oracle));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let dup = dir.path().join("dup.json");
    std::fs::write(&dup, r#"{"n":2,"edges":[[1,2],[2,1]]}"#).unwrap();
    let missing = dir.path().join("missing.json");

    assert_eq!(run(&["poly", "--family", "cycle:2"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "--family", "path:4", "--r", "9"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "--family", "path:40"]).status.code(), Some(3));
    assert_eq!(run(&["poly", "--family", "path:13", "--oracle"]).status.code(), Some(3));
    assert_eq!(run(&["poly", "--file", dup.to_str().unwrap()]).status.code(), Some(4));
    assert_eq!(run(&["poly", "--file", missing.to_str().unwrap()]).status.code(), Some(1));
    let err = run(&["poly", "--family", "cycle:2"]);
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));
}

#[test]
fn max_n_override() {
    assert_eq!(run(&["poly", "--family", "path:12", "--max-n", "10"]).status.code(), Some(3));
    assert!(run(&["poly", "--family", "path:12", "--max-n", "12"]).status.success());
}

#[test]
fn verify_covers_the_registry_and_is_deterministic() {
    let listing = json(&["verify", "--list", "--format", "json"]);
    assert_eq!(listing.as_array().unwrap().len(), 101);

    let a = run(&["verify", "--format", "json"]);
    let b = run(&["verify", "--format", "json", "--threads", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["claims"].as_array().unwrap().len(), 101);
    assert_eq!(
        (report["confirmed"].as_u64(), report["partial"].as_u64(), report["refuted"].as_u64()),
        (Some(45), Some(2), Some(54))
    );

    let table = stdout(&run(&["verify", "--claim", "path-total-fibonacci"]));
    assert!(table.contains("path-total-fibonacci-shifted"));
    assert!(table.contains("witness n=2 r=1"), "{table}");
}

#[test]
fn verify_expectations() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    let bad = dir.path().join("bad.json");
    std::fs::write(&good, r#"{"path-total": "CONFIRMED", "coalescence-identity": "refuted"}"#).unwrap();
    std::fs::write(&bad, r#"{"coalescence-identity": "CONFIRMED"}"#).unwrap();

    let ok = run(&["verify", "--claim", "path-total", "--claim", "coalescence", "--expect", good.to_str().unwrap()]);
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stderr));
    let fail = run(&["verify", "--claim", "coalescence", "--expect", bad.to_str().unwrap()]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&fail.stderr).contains("coalescence-identity: expected CONFIRMED, got REFUTED"));
    assert_eq!(run(&["verify", "--claim", "no-such-claim"]).status.code(), Some(2));
}

#[test]
fn scans() {
    let v = json(&["scan", "--family", "path", "--n", "100:400", "--format", "json"]);
    let slope = v["mean_slope"].as_f64().unwrap();
    assert!((slope - 0.7236067977).abs() < 1e-3, "{slope}");
    assert_eq!(v["points"].as_array().unwrap().len(), 2);

    let c = json(&["scan", "--conjectures", "--format", "json"]);
    assert_eq!(c["weak_monotonicity_violations"], 0);
    assert!(c["not_unimodal"].as_array().unwrap().iter().any(|n| n == "cycle:5"));
    assert_eq!(run(&["scan", "--family", "wheel"]).status.code(), Some(2));
}

#[test]
fn bench_reports_a_stable_fingerprint() {
    let a = stdout(&run(&["bench", "--family", "complete:8", "--repeat", "2"]));
    let b = stdout(&run(&["bench", "--family", "complete:8"]));
    let first = |s: &str| s.lines().next().unwrap().to_string();
    assert_eq!(first(&a), first(&b));
    assert!(first(&a).contains("fingerprint"));
    assert_eq!(a.lines().count(), 3);
}
