//! End-to-end tests of the synalg binary: command surface, file formats,
//! determinism, and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn synalg(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_synalg"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn synalg_env(args: &[&str], dir: &Path, key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_synalg"))
        .args(args)
        .env(key, value)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const PARITY_JSON: &str = r#"{
  "variety": "set",
  "alphabet": ["a", "b"],
  "states": ["even", "odd"],
  "initial": "even",
  "delta": {"a": {"even": "odd", "odd": "even"}, "b": {"even": "even", "odd": "odd"}},
  "output": {"even": "1", "odd": "0"}
}"#;

#[test]
fn synmon_from_regex() {
    let dir = tempfile::tempdir().unwrap();
    let out = synalg(&["synmon", "--regex", "(ab)*", "--alphabet", "ab"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("elements (6)"));
    assert!(text.contains("laws: ok"));
}

#[test]
fn synmon_from_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("parity.json");
    std::fs::write(&input, PARITY_JSON).unwrap();
    let run1 = synalg(&["synmon", "-i", "parity.json", "--out", "json"], dir.path());
    let run2 = synalg(&["synmon", "-i", "parity.json", "--out", "json"], dir.path());
    assert!(run1.status.success());
    assert_eq!(stdout(&run1), stdout(&run2), "output must be byte-identical");
    let value: serde_json::Value = serde_json::from_str(&stdout(&run1)).unwrap();
    assert_eq!(value["elements"].as_array().unwrap().len(), 2);
}

#[test]
fn minimize_writes_canonical_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = synalg(
        &["minimize", "--regex", "(a|b)(a|b)", "--alphabet", "ab", "-o", "min.json", "--report", "rep.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let min = std::fs::read_to_string(dir.path().join("min.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&min).unwrap();
    assert_eq!(parsed["variety"], "set");
    assert_eq!(parsed["states"].as_array().unwrap().len(), 4);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("rep.json")).unwrap())
            .unwrap();
    assert_eq!(report["minimal_size"], 4);
}

#[test]
fn lift_then_synmon_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("parity.json");
    std::fs::write(&input, PARITY_JSON).unwrap();
    let out = synalg(
        &["lift", "-i", "parity.json", "--to", "jsl", "-o", "lifted.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let out = synalg(&["synmon", "-i", "lifted.json"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("laws: ok"));
}

#[test]
fn lift_from_regex_to_vect() {
    let dir = tempfile::tempdir().unwrap();
    let out = synalg(
        &["lift", "--regex", "(aa)*", "--alphabet", "a", "--to", "vect", "-p", "3", "-o", "v.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let out = synalg(&["synmon", "-i", "v.json", "--out", "json"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["variety"], "vect");
    assert_eq!(value["laws"]["ok"], serde_json::json!(true));
}

#[test]
fn oracle_prints_classes() {
    let dir = tempfile::tempdir().unwrap();
    let out = synalg(
        &["oracle", "--regex", "(ab)*", "--alphabet", "ab", "--maxlen", "4"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("6 classes"));
}

#[test]
fn dualize_reports_isomorphism() {
    let dir = tempfile::tempdir().unwrap();
    let out = synalg(
        &["dualize", "--regex", "(ab)*", "--alphabet", "ab", "--atoms-dir", "atoms"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("atoms: 6"));
    assert!(text.contains("syntactic monoid isomorphic to dual monoid: yes"));
    assert!(dir.path().join("atoms/atom0.json").exists());
}

#[test]
fn check_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "check",
        "--seed",
        "42",
        "--instances",
        "2",
        "--max-base-states",
        "3",
        "--varieties",
        "set,jsl",
        "--checks",
        "tran-eq-oracle,recognition",
    ];
    let run1 = synalg(&args, dir.path());
    let run2 = synalg(&args, dir.path());
    assert!(run1.status.success(), "{}", stderr(&run1));
    assert_eq!(stdout(&run1), stdout(&run2));
}

#[test]
fn validation_failure_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = PARITY_JSON.replace("\"variety\": \"set\",", "\"variety\": \"set\", \"extra\": 1,");
    std::fs::write(dir.path().join("bad.json"), bad).unwrap();
    let out = synalg(&["synmon", "-i", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/extra"));
}

#[test]
fn size_guard_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("parity.json");
    std::fs::write(&input, PARITY_JSON).unwrap();
    let out = synalg_env(
        &["lift", "-i", "parity.json", "--to", "jsl", "-o", "x.json"],
        dir.path(),
        "SYNALG_SIZE_GUARD",
        "3",
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_error_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let out = synalg(&["synmon", "--nonsense"], dir.path());
    assert_eq!(out.status.code(), Some(4));
    // missing input is a usage-level config error too
    let out = synalg(&["synmon"], dir.path());
    assert_eq!(out.status.code(), Some(4));
    // zero instances is a config error
    let out = synalg(&["check", "--instances", "0"], dir.path());
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn regex_parse_error_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let out = synalg(&["synmon", "--regex", "a|", "--alphabet", "ab"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("byte 2"));
}
