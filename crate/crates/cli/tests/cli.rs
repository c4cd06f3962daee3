//! The `azumaya` binary end to end: exit codes, report files, determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_azumaya"))
}

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const M2: &str = "\
seed = 3
[ring]
spec = prime 3
[etale]
s = -1
[algebra]
form = split
degree = 2
involution = hermitian(identity)
[tasks]
azumaya-verify
h90-all
np-bruteforce
";

#[test]
fn three_tasks_pass_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "m2.cfg", M2);
    let out = run(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("CHECK azumaya-verify PASS"));
    assert!(lines[1].starts_with("CHECK h90-all PASS"));
    assert!(lines[1].contains("unitary=96") && lines[1].contains("verified=96"));
    assert!(lines[2].starts_with("CHECK np-bruteforce PASS"));
}

#[test]
fn non_unitary_algebra_gives_error_record_and_exit_one() {
    let out = run(&["run", "--config", configs().join("not_unitary.cfg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "CHECK np-bruteforce ERROR");
}

#[test]
fn config_errors_exit_two_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "bad.cfg", &M2.replace("prime 3", "zmod 4"));
    let out = run(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3: semantic error"), "{err}");

    let cfg = write(&dir, "unknown.cfg", &M2.replace("degree = 2", "degree = 2\ntolerance = 1e-9"));
    let out = run(&["--strict", "run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("syntax error"));
    let out = run(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["run", "--config", dir.path().join("missing.cfg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_file_has_one_record_per_task() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(&dir, "m2.cfg", M2);
    let report = dir.path().join("out.jsonl");
    let out = run(&["run", "--config", cfg.to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&report).unwrap();
    let records: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 3);
    for r in &records {
        let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 6);
        assert_eq!(r["status"], "PASS");
    }
    assert_eq!(records[1]["metrics"]["unitary"], 96);
}

#[test]
fn same_seed_same_bytes_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = configs().join("m2_gaussian3.cfg");
    let mut reports = Vec::new();
    for (i, jobs) in ["1", "1", "4"].iter().enumerate() {
        let report = dir.path().join(format!("r{i}.jsonl"));
        let out = run(&[
            "--jobs",
            jobs,
            "--seed",
            "99",
            "run",
            "--config",
            cfg.to_str().unwrap(),
            "--report",
            report.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        reports.push((stdout(&out), std::fs::read(&report).unwrap()));
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[0], reports[2]);
}

#[test]
fn single_task_subcommands() {
    let cfg = configs().join("m2_gaussian3.cfg");
    let cfg = cfg.to_str().unwrap();
    let out = run(&["h90", "--config", cfg, "--param", "matrix=0,1,-1,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("CHECK h90 PASS"));
    let out = run(&["np-witness", "--config", cfg, "--param", "matrix=1,1,0,1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["verify-azumaya", "--config", configs().join("dual_numbers.cfg").to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "CHECK azumaya-verify PASS azumaya=0 matrix_size=4");
    let out = run(&["axioms", "--config", configs().join("axioms_f5.cfg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 5);
}

#[test]
fn shipped_configs_behave_as_documented() {
    for (name, code) in [
        ("m2_gaussian3.cfg", 0),
        ("m2_f3_orthogonal.cfg", 0),
        ("quaternions_f5.cfg", 0),
        ("dual_numbers.cfg", 0),
        ("axioms_f5.cfg", 0),
        ("not_unitary.cfg", 1),
        ("m3_f3_symplectic_rejected.cfg", 2),
    ] {
        let out = run(&["run", "--config", configs().join(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(code), "{name}");
    }
}
