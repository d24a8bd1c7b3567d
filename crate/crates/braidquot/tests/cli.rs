//! End-to-end checks of the command-line surface: outputs, exit codes, and
//! byte-level determinism of the exported reports.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_braidquot"));
    c.env("BRAIDQUOT_DB", db_path());
    c
}

fn db_path() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data/smallgroups_1_63.txt"))
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("braidquot-cli-{}-{name}", std::process::id()));
    p
}

#[test]
fn search_count_prints_the_number() {
    let out = bin()
        .args(["search", "--group", "32,49", "--genus", "2", "--mode", "count", "--jobs", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2211840");
}

#[test]
fn search_count_zero_on_s4() {
    let out = bin()
        .args(["search", "--group", "24,12", "--genus", "2", "--mode", "count"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0");
}

#[test]
fn construct_then_verify_roundtrip() {
    let path = tmp("t2.ddks");
    let out = bin()
        .args([
            "construct",
            "--theorem",
            "2",
            "--genus",
            "2",
            "--prime",
            "3",
            "--variant",
            "H",
            "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("strong"));
    let out = bin().args(["verify", "--in"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("valid, strong"), "got: {text}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn invariants_output() {
    let out = bin()
        .args([
            "invariants", "--genus", "2", "--n", "2", "--order", "32", "--m1", "1", "--m2", "1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("g1 = 41, g2 = 41"));
    assert!(text.contains("sigma = 16"));
    assert!(text.contains("b1 = 2, b2 = 2"));
}

#[test]
fn scan_report_is_byte_identical_across_jobs() {
    let a = tmp("scan-a.txt");
    let b = tmp("scan-b.txt");
    for (path, jobs) in [(&a, "1"), (&b, "7")] {
        let out = bin()
            .args(["scan", "--orders", "28..34", "--genus", "2", "--jobs", jobs, "--count", "--out"])
            .arg(path)
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);
    // rerun at the same jobs value: still identical
    let out = bin()
        .args(["scan", "--orders", "28..34", "--genus", "2", "--jobs", "1", "--count", "--out"])
        .arg(&a)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read(&a).unwrap(), bytes_b);
    std::fs::remove_file(&a).ok();
    std::fs::remove_file(&b).ok();
}

#[test]
fn missing_database_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_braidquot"))
        .env_remove("BRAIDQUOT_DB")
        .args(["search", "--group", "32,49", "--genus", "2", "--mode", "count"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_group_is_a_data_error() {
    let out = bin()
        .args(["search", "--group", "64,1", "--genus", "2", "--mode", "count"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flags_are_usage_errors() {
    let out = bin().args(["search", "--group", "32,49"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin()
        .args(["scan", "--orders", "31..7", "--genus", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn slope_table_output() {
    let out = bin().args(["slope-table", "--primes", "5..13"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("2 + 12/35"));
    assert!(text.contains("strictly decreasing from 7: true"));
}

#[test]
fn exceeded_aut_cap_is_exit_code_3() {
    // enumerate one structure, then ask for orbits with an absurd cap
    let path = tmp("one.ddks");
    let out = bin()
        .args([
            "search", "--group", "32,49", "--genus", "2", "--mode", "exists", "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = bin()
        .args(["orbits", "--group", "32,49", "--aut-cap", "16", "--in"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_rejects_corrupted_structure() {
    let path = tmp("bad.ddks");
    std::fs::write(&path, "ddks 1\ns group=32/49 b=2 n=2 tuple=1,1,1,1,1,1,1,1,1\n").unwrap();
    let out = bin().args(["verify", "--in"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "verification failure is a data error");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("INVALID"), "got: {text}");
    std::fs::remove_file(&path).ok();
}
