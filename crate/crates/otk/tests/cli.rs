//! End-to-end tests of the `otk` binary: exit codes, golden output, and
//! byte-identical JSON across runs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn otk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_otk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("otk-cli-{name}-{}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_builtin_passes() {
    let out = otk(&["validate", "--input", "tp1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("full rank:   true"));
    assert!(text.contains("simple:      true"));
}

#[test]
fn validate_rejects_coloop_with_exit_3() {
    // a vector in no circuit is a co-loop; the configuration is rejected
    let path = write_temp(
        "coloop.json",
        r#"{"rank": 2, "vectors": [[1, 0], [0, 1]], "theta": [0, 0]}"#,
    );
    let out = otk(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 3);
    let _ = std::fs::remove_file(path);
}

#[test]
fn malformed_json_exits_2() {
    let path = write_temp("garbage.json", "{not json");
    let out = otk(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let _ = std::fs::remove_file(path);
}

#[test]
fn missing_file_exits_2() {
    let out = otk(&["validate", "--input", "/nonexistent/config.json"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn unknown_skip_exits_2() {
    let out = otk(&["verify-all", "--input", "tp1", "--skip", "nonsense"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_all_rejects_invalid_input_with_exit_3() {
    // non-unimodular configuration: the theorem-checking pipeline refuses it
    let path = write_temp(
        "nonuni.json",
        r#"{"rank": 2, "vectors": [[1, 0], [0, 1], [1, 1], [1, -1]], "theta": [0, 0, 1, 1]}"#,
    );
    let out = otk(&["verify-all", "--input", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 3);
    let _ = std::fs::remove_file(path);
}

#[test]
fn circuits_golden_square() {
    let out = otk(&["circuits", "--input", "square", "--json", "-"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["circuits"], serde_json::json!([[1, 2, 3], [1, 3, 4], [2, 4]]));
    assert_eq!(v["broken_circuits"], serde_json::json!([[1, 2], [1, 3], [2]]));
    assert_eq!(v["independence_f"], serde_json::json!([1, 4, 5]));
    assert_eq!(v["independence_h"], serde_json::json!([1, 2, 2]));
    assert_eq!(v["broken_circuit_f"], serde_json::json!([1, 3, 2]));
    assert_eq!(v["broken_circuit_h"], serde_json::json!([1, 1]));
}

#[test]
fn hilbert_golden_triangle() {
    let out = otk(&["hilbert", "--input", "triangle", "--json", "-"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["OT"], "(1 + t)/(1-t)^2");
    assert_eq!(v["OTh"], "(1 + t)/(1-t)^3");
    assert_eq!(v["SRind"], "(1 + t + t^2)/(1-t)^2");
    assert_eq!(v["SRbc"], "(1 + t)/(1-t)^2");
    assert_eq!(v["H"], "(1 + t + t^2)/(1-t)^3");
}

#[test]
fn psi_report_golden_tp1() {
    let out = otk(&["psi-report", "--input", "tp1", "--max-degree", "4", "--json", "-"]);
    assert_eq!(exit_code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let kernels: Vec<u64> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["dim_kernel"].as_u64().unwrap())
        .collect();
    assert_eq!(kernels, vec![0, 1, 2, 3, 4]);
}

#[test]
fn verify_all_passes_on_builtins() {
    for name in ["tp1", "triangle", "square"] {
        let out = otk(&["verify-all", "--input", name]);
        assert_eq!(exit_code(&out), 0, "verify-all {name} failed:\n{}", stdout(&out));
        assert!(!stdout(&out).contains("FAIL"));
    }
}

#[test]
fn verify_all_json_is_deterministic() {
    let run = || otk(&["verify-all", "--input", "square", "--json", "-"]);
    let a = run();
    let b = run();
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    // and the JSON parses with every check passing
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["status"], "pass", "check {} not passing", c["name"]);
    }
}

#[test]
fn json_file_output() {
    let path = std::env::temp_dir().join(format!("otk-cli-out-{}.json", std::process::id()));
    let out = otk(&["hilbert", "--input", "tp1", "--json", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v.get("OT").is_some());
    let _ = std::fs::remove_file(path);
}

#[test]
fn tp1_subcommand_prints_pass() {
    let out = otk(&["tp1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).trim_end().ends_with("PASS"));
}
