use std::path::Path;
use std::process::{Command, Output};

use hecke_fh::combinatorics::Partition;
use hecke_fh::fh_constants::a_table_from_json;
use hecke_fh::hecke::{geck_rouquier, HeckeElement};

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-fh"))
        .args(args)
        .env("HECKE_FH_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gamma_basis_at_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["basis", "gamma", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "Γ_(3) = T_231 + T_312 + (1 - q^-1)·T_321\nΓ_(2,1) = T_132 + T_213 + q^-1·T_321\nΓ_(1,1,1) = T_123\n"
    );
}

#[test]
fn norm_basis_at_one() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["basis", "norms", "--n", "1"]);
    assert_eq!(stdout(&o), "N_(1) = T_1\n");
}

#[test]
fn generic_norm_display() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["basis", "generic-norms", "--n", "3", "--c", "2"]);
    assert_eq!(
        stdout(&o),
        "M_(2),3 = T[12|3] + 2·T[123] + (1 - q^-1)·T[132] + (1 - q^-1)·T[213] + (q^-1 - q^-2)·T[321]\n"
    );
}

#[test]
fn basis_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["--format", "json", "basis", "gamma", "--n", "4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for item in v["basis"].as_array().unwrap() {
        let lam: Partition = serde_json::from_value(item["label"].clone()).unwrap();
        let x: HeckeElement = serde_json::from_value(item["element"].clone()).unwrap();
        assert_eq!(x, geck_rouquier(&lam).unwrap());
    }
}

#[test]
fn a_table_json_and_warm_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--format", "json", "constants", "a", "--lambda", "1", "--mu", "1"];
    let cold = run(dir.path(), &args);
    assert!(cold.status.success());
    assert!(dir.path().join("a_1_1.json").exists());
    let warm = run(dir.path(), &args);
    assert_eq!(cold.stdout, warm.stdout);
    let v: serde_json::Value = serde_json::from_slice(&warm.stdout).unwrap();
    let table = a_table_from_json(v["table"].clone()).unwrap();
    assert_eq!(table.entries.len(), 4);
    for key in ["lambda", "mu", "entries", "nodes", "verified_at"] {
        assert!(v["table"].get(key).is_some(), "missing {key}");
    }
    let o = run(dir.path(), &["cache", "list"]);
    assert_eq!(stdout(&o), "a_1_1.json\n");
    let o = run(dir.path(), &["cache", "clear"]);
    assert_eq!(stdout(&o), "removed 1 files\n");
}

#[test]
fn cache_dir_flag_overrides_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let o = run(
        env_dir.path(),
        &["--cache-dir", flag_dir.path().to_str().unwrap(), "constants", "g", "--lambda", "", "--mu", "2"],
    );
    assert!(o.status.success());
    assert!(stdout(&o).contains("(2): 1"));
    assert!(flag_dir.path().join("g_e_2.json").exists());
    assert!(!env_dir.path().join("g_e_2.json").exists());
}

#[test]
fn verify_extra_reports_matches() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["constants", "a", "--lambda", "2", "--mu", "1", "--verify-extra", "2", "--jobs", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.matches(": match").count(), 2, "{out}");
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    for (suite, n) in [("relations", "4"), ("all", "3"), ("theorem1", "6")] {
        let o = run(dir.path(), &["--format", "json", "verify", "--suite", suite, "--max-n", n]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["pass"], true, "{suite}: {v}");
        assert!(o.status.success());
    }
}

#[test]
fn composed_product() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["mult", "composed", "--x", "12|435|687", "--y", "321|54|867"]);
    assert!(stdout(&o).starts_with("semigroup: 42153|768\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["basis", "gamma", "--n", "9"]).status.code(), Some(3));
    assert_eq!(run(dir.path(), &["basis", "gamma"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["constants", "a", "--lambda", "x", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["mult", "hecke", "--x", "213"]).status.code(), Some(2));
}
