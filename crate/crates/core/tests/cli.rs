//! The `superdegen` binary end to end.

use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_superdegen"));
    c.env_remove("SUPERDEGEN_CATALOG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(rel: &str) -> String {
    format!("{}/data/{rel}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn verify_catalog_passes() {
    let o = run(&["verify-catalog"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn stab_rows() {
    let o = run(&["tables", "--kind", "stab"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row = |label: &str| {
        text.lines()
            .find(|l| l.starts_with(label))
            .map(|l| l[label.len()..].split_whitespace().collect::<Vec<_>>())
            .unwrap()
    };
    assert_eq!(row("(9|.)"), ["9", "5", "5", "9"]);
    assert_eq!(row("(18;λ|.)"), ["4", "3", "2"]);
    assert_eq!(row("(1|.)"), ["0", "0", "0"]);
}

#[test]
fn orbit_rows() {
    let o = run(&["tables", "--kind", "orbit"]);
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("(9|.)")).unwrap();
    assert_eq!(
        line[5..].split_whitespace().collect::<Vec<_>>(),
        ["3", "7", "7", "3"]
    );
}

#[test]
fn check_reports_the_failing_obstruction() {
    let o = run(&["check"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let fails: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails.len(), 1, "{fails:?}");
    assert!(fails[0].contains("o2-12"));
}

#[test]
fn check_other_dimension() {
    let o = run(&[
        "--catalog",
        &data("n2/catalog.json"),
        "check",
        &data("n2/nonhomogeneous.json"),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS  n2-01"));
}

#[test]
fn catalog_from_env() {
    let o = bin()
        .env("SUPERDEGEN_CATALOG", data("n2/catalog.json"))
        .args(["check", &data("n2/nonhomogeneous.json")])
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn bad_catalog_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("empty.json");
    std::fs::write(&p, "").unwrap();
    let o = run(&["--catalog", p.to_str().unwrap(), "verify-catalog"]);
    assert_eq!(o.status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    let o = run(&["--catalog", missing.to_str().unwrap(), "tables", "--kind", "stab"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn fingerprint_rejects_excluded_parameter() {
    for v in ["0", "1", "-1"] {
        let o = run(&["fingerprint", "(18;λ|1)", "--lambda", v]);
        assert_eq!(o.status.code(), Some(1), "lambda {v}");
    }
    assert!(run(&["fingerprint", "(18;l|1)", "--lambda", "2"])
        .status
        .success());
    assert_eq!(run(&["fingerprint", "(99|0)"]).status.code(), Some(1));
}

#[test]
fn json_report() {
    let o = run(&["--json", "generic", "--component", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "generic");
    assert_eq!(v["counts"]["pass"], 8);
    assert_eq!(v["counts"]["undetermined"], 2);
}

#[test]
fn diagram_is_deterministic() {
    let a = run(&["diagram", "--component", "2", "--format", "dot"]);
    let b = run(&["diagram", "--component", "2", "--format", "dot"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("digraph"));
}

#[test]
fn diagram_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("c3.json");
    let o = run(&[
        "diagram",
        "--component",
        "3",
        "--format",
        "json",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert!(v.is_object());
}

#[test]
fn empty_component() {
    assert_eq!(run(&["diagram", "--component", "9"]).status.code(), Some(1));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["tables"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}
