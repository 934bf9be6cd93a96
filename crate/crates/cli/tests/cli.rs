use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn mosaic(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mosaic"))
        .args(args)
        .arg("--cache-dir")
        .arg(cache)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn documented_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = mosaic(dir.path(), &["homology-mosaic", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["ranks"], serde_json::json!([1, 4, 0]));
    let out = mosaic(dir.path(), &["inv-dims", "--operad", "as", "--n", "5"]);
    assert_eq!(json(&out), serde_json::json!({"dim": 60}));
    let out = mosaic(dir.path(), &["poincare", "--n", "5"]);
    assert_eq!(json(&out), serde_json::json!({"coeffs": [1, 10, 9]}));
}

#[test]
fn cache_hit_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = mosaic(dir.path(), &["koszul-check", "--n", "4"]);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = mosaic(dir.path(), &["koszul-check", "--n", "4"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn cached_payload_is_served() {
    let dir = tempfile::tempdir().unwrap();
    mosaic(dir.path(), &["poincare", "--n", "6"]);
    let file = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let mut record: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    record["payload"] = serde_json::json!({"coeffs": "from cache"});
    std::fs::write(&file, record.to_string()).unwrap();
    let out = mosaic(dir.path(), &["poincare", "--n", "6"]);
    assert_eq!(json(&out)["coeffs"], "from cache");
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["no-such-command"][..], &["poincare"], &["homology-icg", "--n", "4", "--d", "3"]] {
        let out = mosaic(dir.path(), args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"]["kind"], "usage");
    }
}

#[test]
fn checks_report_passed() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["homology-icg", "--n", "4"][..],
        &["mc-leading"],
        &["cacti-verify", "--n", "5", "--word", "1-3,2-4"],
        &["xi-rank", "--n", "4", "--max-degree", "2"],
    ] {
        let out = mosaic(dir.path(), args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn verification_failure_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    mosaic(dir.path(), &["xi-rank", "--n", "3", "--max-degree", "1"]);
    let file = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let mut record: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    record["passed"] = Value::Bool(false);
    std::fs::write(&file, record.to_string()).unwrap();
    let out = mosaic(dir.path(), &["xi-rank", "--n", "3", "--max-degree", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
