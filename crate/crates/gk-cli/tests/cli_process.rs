//! End-to-end tests of the `gk` binary: exit codes, suite output and
//! the JSON/text export formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gk"))
        .args(args)
        .output()
        .expect("failed to launch gk")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn workspace_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

#[test]
fn passing_check_exits_zero() {
    let out = gk(&["check", "e1*e2 + e2*e1 == 0", "--sig", "3,0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn failing_check_exits_one() {
    let out = gk(&["check", "e1*e1 == 0", "--sig", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    assert!(stdout(&out).contains("residual 1e0"));
}

#[test]
fn malformed_input_exits_two_with_position() {
    let out = gk(&["check", "e1 ^^ e2 == 0", "--sig", "2,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("position 5"), "{}", stderr(&out));
}

#[test]
fn missing_separator_exits_two() {
    let out = gk(&["check", "e1*e1", "--sig", "2,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn blades_backend_requires_a_signature() {
    let out = gk(&["check", "e1*e1 == 1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--sig"));
}

#[test]
fn unknown_flag_exits_two() {
    let out = gk(&["check", "e1 == e1", "--sig", "2,0", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_flag_is_honored() {
    // residual is exactly 0.25
    let out = gk(&["check", "e1*e1 == 0.75", "--sig", "1,0", "--tol", "0.5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let out = gk(&["check", "e1*e1 == 0.75", "--sig", "1,0", "--tol", "0.1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn matrix_backend_checks_operators() {
    let out = gk(&[
        "check",
        "{d1, theta1} == 1",
        "--backend",
        "matrix",
        "--modes",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn matrix_backend_honors_an_explicit_signature() {
    // with p = 0 the first generator squares to -1
    let out = gk(&[
        "check",
        "e1*e1 == -1",
        "--backend",
        "matrix",
        "--modes",
        "1",
        "--sig",
        "0,2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    // and the signature size must match 2N
    let out = gk(&[
        "check",
        "e1*e1 == 1",
        "--backend",
        "matrix",
        "--modes",
        "1",
        "--sig",
        "3,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn modes_flag_is_matrix_only() {
    let out = gk(&["check", "e1*e1 == 1", "--sig", "2,0", "--modes", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("matrix backend"));
}

#[test]
fn suite_reports_per_line_and_summary() {
    let dir = std::env::temp_dir().join("gk-suite-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mixed.txt");
    std::fs::write(&path, "e1*e1 == 1\n# comment only\ne2*e2 == 1\ne1*e2 == 0\n").unwrap();
    let out = gk(&["suite", path.to_str().unwrap(), "--sig", "2,0"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("ok   e1*e1 == 1"));
    assert!(text.contains("FAIL e1*e2 == 0"));
    assert!(text.trim_end().ends_with("PASSED 2/3"));
}

#[test]
fn suite_with_bad_line_exits_two() {
    let dir = std::env::temp_dir().join("gk-suite-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.txt");
    std::fs::write(&path, "e1*e1 == 1\ne1 &* e2 == 0\n").unwrap();
    let out = gk(&["suite", path.to_str().unwrap(), "--sig", "2,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn shipped_identity_suite_passes() {
    let suite = workspace_path("checks/identities.txt");
    let out = gk(&[
        "suite",
        suite.to_str().unwrap(),
        "--backend",
        "matrix",
        "--modes",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASSED 29/29"));
}

#[test]
fn fermion_export_schema() {
    let dir = std::env::temp_dir().join("gk-rep-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fermion2.json");
    let out = gk(&[
        "rep",
        "fermion",
        "--modes",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    let obj = json.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["del1", "del2", "theta1", "theta2"]);
    for key in keys {
        let m = &obj[key];
        assert_eq!(m["rows"], 4);
        assert_eq!(m["cols"], 4);
        assert_eq!(m["entries"].as_array().unwrap().len(), 16);
    }
    // theta2 = ω ⊗ θ̂: entry (2,1) one-based is +1, (4,3) is -1
    let entries = obj["theta2"]["entries"].as_array().unwrap();
    assert_eq!(entries[4][0].as_f64().unwrap(), 1.0);
    assert_eq!(entries[14][0].as_f64().unwrap(), -1.0);
    // seventeen significant digits on every float
    assert!(text.contains("1.0000000000000000e0"));
}

#[test]
fn clifford_export_schema() {
    let dir = std::env::temp_dir().join("gk-rep-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("clifford2.json");
    let out = gk(&[
        "rep",
        "clifford",
        "--modes",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let obj = json.as_object().unwrap();
    assert_eq!(obj.len(), 4);
    for key in ["e1", "e2", "e3", "e4"] {
        assert_eq!(obj[key]["rows"], 4);
    }
}

#[test]
fn qcalc_table_format() {
    let out = gk(&["qcalc", "table", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "0 (0.00000000000e0, 0.00000000000e0)");
    assert_eq!(lines[2], "2 (1.00000000000e0, 1.00000000000e0)");
}

#[test]
fn qcalc_table_rejects_bad_order() {
    let out = gk(&["qcalc", "table", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spin_rotor_emits_rotor_and_rotation() {
    let out = gk(&[
        "spin", "rotor", "--plane", "1,2", "--angle", "1.0", "--sig", "3,0",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["plane"], serde_json::json!([1, 2]));
    let rotor = json["rotor"].as_object().unwrap();
    let half = 0.5f64;
    assert!((rotor["1"][0].as_f64().unwrap() - half.cos()).abs() < 1e-15);
    assert!((rotor["e1^e2"][0].as_f64().unwrap() - half.sin()).abs() < 1e-15);
    let rotation = json["rotation"]["entries"].as_array().unwrap();
    assert_eq!(rotation.len(), 9);
    // column 1 is (cos 1, -sin 1, 0)
    assert!((rotation[0][0].as_f64().unwrap() - 1.0f64.cos()).abs() < 1e-12);
    assert!((rotation[3][0].as_f64().unwrap() + 1.0f64.sin()).abs() < 1e-12);
}

#[test]
fn spin_rotor_rejects_non_euclidean_planes() {
    let out = gk(&[
        "spin", "rotor", "--plane", "1,2", "--angle", "1.0", "--sig", "1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
