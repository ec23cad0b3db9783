//! End-to-end CLI behavior: subcommands, exit codes, file formats, and
//! JSON report shape.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn vcx() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vcx"))
}

fn write_fixture(dir: &Path, name: &str) -> PathBuf {
    let family = vcx::constructions::fixture_family(name).unwrap();
    let path = dir.join(format!("{name}.fam"));
    vcx::fam::write_family_path(&path, &family).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn vcdim_prints_integers() {
    let dir = tempfile::tempdir().unwrap();
    let f8 = write_fixture(dir.path(), "f8_45");
    let out = vcx().args(["vcdim"]).arg(&f8).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3");

    let single = dir.path().join("single.fam");
    std::fs::write(&single, "n=5 k=3\n1 2 3\n").unwrap();
    let out = vcx().args(["vcdim"]).arg(&single).output().unwrap();
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn verify_pass_fail_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f6 = write_fixture(dir.path(), "f6_13");
    let out = vcx().args(["verify", "--d", "2"]).arg(&f6).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("extremal"));

    // the full ([6] choose 3) family fails with a shattered counterexample
    let full = dir.path().join("full63.fam");
    let mut text = String::from("n=6 k=3\n");
    for s in vcx::all_ksets(6, 3) {
        let e: Vec<String> = s.elements().map(|x| x.to_string()).collect();
        text.push_str(&e.join(" "));
        text.push('\n');
    }
    std::fs::write(&full, text).unwrap();
    let out = vcx()
        .args(["--json", "verify", "--d", "2"])
        .arg(&full)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["vc_at_most_d"], false);
    assert!(report["shattered_counterexample"].is_array());

    let f8 = write_fixture(dir.path(), "f8_45");
    let out = vcx().args(["verify", "--d", "3"]).arg(&f8).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_2_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.fam");
    std::fs::write(&bad, "n=5 k=3\n1 2 3\n1 2\n").unwrap();
    let out = vcx().args(["vcdim"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let missing = dir.path().join("does-not-exist.fam");
    let out = vcx().args(["vcdim"]).arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    let out = vcx().args(["search-max"]).output().unwrap(); // missing --n
    assert_eq!(out.status.code(), Some(1));
    let out = vcx().args(["no-such-command"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_max_writes_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("m6.fam");
    let out = vcx()
        .args(["--json", "search-max", "--n", "6", "-o"])
        .arg(&cert)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["optimum"], 13);
    assert!(report["timing"]["elapsed_ms"].is_u64());
    let family = vcx::fam::read_family_path(&cert).unwrap();
    assert_eq!(family.len(), 13);
    assert!(vcx::uniform_vc_at_most(&family, 2).unwrap());
}

#[test]
fn decide_reports_existence() {
    let out = vcx()
        .args(["--json", "decide", "--target", "14", "--n", "6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["exists"], false);

    let out = vcx()
        .args(["--json", "decide", "--target", "13", "--n", "6"])
        .output()
        .unwrap();
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["exists"], true);
    assert_eq!(report["certificate"].as_array().unwrap().len(), 13);
}

#[test]
fn timeout_exits_4() {
    // a 0-second budget cannot finish n = 7
    let out = vcx()
        .args(["search-max", "--n", "7", "--time-limit", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    // the env var provides the default budget
    let out = vcx()
        .env("VCX_TIME_LIMIT", "0")
        .args(["search-max", "--n", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn generate_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let star = dir.path().join("star.fam");
    let out = vcx()
        .args(["generate", "--name", "star", "--n", "8", "--k", "3", "--center", "1", "-o"])
        .arg(&star)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let family = vcx::fam::read_family_path(&star).unwrap();
    assert_eq!(family.len(), 21); // binom(7,2)

    let json_path = dir.path().join("f7.json");
    let out = vcx()
        .args(["generate", "--name", "f7_16", "-o"])
        .arg(&json_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let family = vcx::fam::read_family_path(&json_path).unwrap();
    assert_eq!(family, vcx::constructions::fixture_family("f7_16").unwrap());

    let out = vcx().args(["generate", "--name", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bounds_table_output() {
    let out = vcx()
        .args(["--json", "bounds", "--d", "2", "--n-min", "6", "--n-max", "12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0]["ak"], 11);
    assert_eq!(rows[0]["known_max"], 13);
    assert_eq!(rows[1]["known_max"], 16);
    assert_eq!(rows[6]["known_max"], 56); // binom(11,2) + 1
}

#[test]
fn witnesses_and_analyze_reports() {
    let dir = tempfile::tempdir().unwrap();
    let f6 = write_fixture(dir.path(), "f6_13");
    let out = vcx().args(["--json", "witnesses"]).arg(&f6).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["summary"]["b"], 3);
    assert_eq!(report["summary"]["l"], 3);
    assert_eq!(report["summary"]["c"], 7);
    assert_eq!(report["summary"]["identity_holds"], true);

    let out = vcx().args(["--json", "analyze"]).arg(&f6).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["tau"]["tau"], 3);
    assert!(report["linear_triangle"].is_array());

    // witnesses on a family with a shattered member -> exit 3
    let full = dir.path().join("full.fam");
    let mut text = String::from("n=6 k=3\n");
    for s in vcx::all_ksets(6, 3) {
        let e: Vec<String> = s.elements().map(|x| x.to_string()).collect();
        text.push_str(&e.join(" "));
        text.push('\n');
    }
    std::fs::write(&full, text).unwrap();
    let out = vcx().args(["witnesses"]).arg(&full).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_is_stable_modulo_timing() {
    let dir = tempfile::tempdir().unwrap();
    let f6 = write_fixture(dir.path(), "f6_13");
    let mut reports = Vec::new();
    for _ in 0..2 {
        let out = vcx().args(["--json", "analyze"]).arg(&f6).output().unwrap();
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        v.as_object_mut().unwrap().remove("timing");
        reports.push(v);
    }
    assert_eq!(reports[0], reports[1]);
}
