use std::fs;
use std::process::{Command, Output};

fn scforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scforge")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn uncoupled_table() {
    let o = scforge(&["uncoupled", "--gamma", "3", "--kappa", "7", "--z", "13", "--l", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("F_SC (final powers): 32370"));
}

#[test]
fn alist_header() {
    let o = scforge(&[
        "uncoupled",
        "--gamma",
        "3",
        "--kappa",
        "7",
        "--z",
        "13",
        "--m",
        "1",
        "--l",
        "10",
        "--format",
        "alist",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("910 429\n"));
}

#[test]
fn artifacts_and_export_agree() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = scforge(&[
        "cpo",
        "--gamma",
        "3",
        "--kappa",
        "5",
        "--z",
        "7",
        "--m",
        "1",
        "--l",
        "4",
        "--cutting-vector",
        "1,2,4",
        "--budget",
        "300",
        "--seed",
        "9",
        "--out-dir",
        out,
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report = dir.path().join("report.json");
    let e = scforge(&["export", report.to_str().unwrap(), "--format", "alist"]);
    assert!(e.status.success());
    assert_eq!(stdout(&e), fs::read_to_string(dir.path().join("H.alist")).unwrap());
    let j = scforge(&["export", report.to_str().unwrap(), "--format", "report-json"]);
    assert_eq!(stdout(&j), fs::read_to_string(&report).unwrap());
    let again = tempfile::tempdir().unwrap();
    scforge(&[
        "cpo",
        "--gamma",
        "3",
        "--kappa",
        "5",
        "--z",
        "7",
        "--m",
        "1",
        "--l",
        "4",
        "--cutting-vector",
        "1,2,4",
        "--budget",
        "300",
        "--seed",
        "9",
        "--out-dir",
        again.path().to_str().unwrap(),
    ]);
    assert_eq!(fs::read(&report).unwrap(), fs::read(again.path().join("report.json")).unwrap());
}

#[test]
fn census_mode_lists_patterns() {
    let o = scforge(&[
        "census",
        "--gamma",
        "3",
        "--kappa",
        "7",
        "--z",
        "13",
        "--m",
        "1",
        "--l",
        "10",
        "--format",
        "report-json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["patterns"].as_array().unwrap().len(), 9);
}

#[test]
fn config_errors_exit_2() {
    assert_eq!(scforge(&["oo", "--gamma", "3"]).status.code(), Some(2));
    assert_eq!(scforge(&["oo", "--gamma", "2", "--kappa", "7", "--z", "13", "--l", "10"]).status.code(), Some(2));
    assert_eq!(scforge(&["cpo", "--gamma", "3", "--kappa", "7", "--z", "13", "--l", "10"]).status.code(), Some(2));
}

#[test]
fn guard_violation_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    fs::write(
        &cfg,
        r#"{"schema":1,"params":{"gamma":3,"kappa":7,"z":13,"m":1,"L":10},"mode":"oo","oo":{"strategy":"exhaustive","guard":10}}"#,
    )
    .unwrap();
    let o = scforge(&["oo", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("local search"));
}

#[test]
fn io_errors_exit_4() {
    assert_eq!(scforge(&["oo", "--config", "/nonexistent/config.json"]).status.code(), Some(4));
    assert_eq!(scforge(&["export", "/nonexistent/report.json"]).status.code(), Some(4));
}
