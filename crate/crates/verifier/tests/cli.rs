//! End-to-end behavior of the `courant-verify` binary.

use std::path::Path;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_courant-verify")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn lists_every_suite() {
    let out = verify(&["--list-suites"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for id in ["cartan", "tau-jacobi", "roundtrip", "quadratic-model"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id} missing");
    }
}

#[test]
fn passing_run_exits_zero_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let out = verify(&["--suite", "cartan", "--samples", "5", "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["passed"], true);
    assert_eq!(report["config"]["samples"], 5);
    assert_eq!(report["suites"][0]["id"], "cartan");
    assert_eq!(report["suites"][0]["properties"][0]["samples"], 5);
}

#[test]
fn config_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.cfg", "family = twisted\npotential = x dy\n");
    let out = verify(&["--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2, column 13"), "{err}");
}

#[test]
fn unknown_and_inapplicable_suites_exit_two() {
    assert_eq!(verify(&["--suite", "nonsense"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "q.cfg", "family = quadratic\n");
    assert_eq!(verify(&["--config", &cfg, "--suite", "connection"]).status.code(), Some(2));
}

#[test]
fn flags_override_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.cfg", "seed = 1\nsamples = 9\nsuites = cartan\n");
    let json = dir.path().join("r.json");
    let out = verify(&[
        "--config",
        &cfg,
        "--seed",
        "2",
        "--samples",
        "3",
        "--suite",
        "oddpath",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(report["config"]["seed"], 2);
    assert_eq!(report["config"]["samples"], 3);
    assert_eq!(report["suites"].as_array().unwrap().len(), 1);
    assert_eq!(report["suites"][0]["id"], "oddpath");
}

#[test]
fn shipped_configs_pass() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let out = verify(&["--config", path.to_str().unwrap(), "--samples", "5"]);
        assert_eq!(out.status.code(), Some(0), "{}: {}", path.display(), String::from_utf8_lossy(&out.stderr));
        seen += 1;
    }
    assert!(seen >= 5);
}
