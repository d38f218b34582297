// SPDX-License-Identifier: Apache-2.0 OR MIT

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delannoy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_prints_exact_values() {
    for (args, expected) in [
        (["-n", "2", "-r", "0", "-x", "2"], "13"),
        (["-n", "3", "-r", "1", "-x", "-1/2"], "0"),
        (["-n", "0", "-r", "9/2", "-x", "100"], "1"),
        (["-n", "2", "-r", "1/2", "-x", "3"], "51/2"),
    ] {
        let o = run(&[&["eval"][..], &args[..]].concat());
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), expected);
    }
}

#[test]
fn poly_prints_canonical_text() {
    assert_eq!(stdout(&run(&["poly", "-n", "0"])).trim(), "1");
    assert_eq!(stdout(&run(&["poly", "-n", "1"])).trim(), "2*x + 1");
    assert_eq!(stdout(&run(&["poly", "-n", "2", "--route", "series"])).trim(), "2*x^2 + 2*x + r + 1");
    let o = run(&["poly", "-n", "2", "--route", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_reproduces_delannoy_array() {
    let o = run(&["table", "--n-max", "4", "-r", "0", "-x", "0,1,2,3,4"]);
    assert!(o.status.success());
    let expected = "n,0,1,2,3,4\n0,1,1,1,1,1\n1,1,3,5,7,9\n2,1,5,13,25,41\n3,1,7,25,63,129\n4,1,9,41,129,321\n";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn table_json_keeps_rationals_exact() {
    let o = run(&["table", "--n-max", "1", "-r", "1/3", "-x", "-1/4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["r"], "1/3");
    assert_eq!(v["rows"][1]["values"][0], "1/2");
}

#[test]
fn delannoy_command() {
    assert_eq!(stdout(&run(&["delannoy", "-n", "2", "-m", "2"])).trim(), "13");
}

#[test]
fn bad_rational_is_a_usage_error() {
    let o = run(&["eval", "-n", "1", "-r", "0.5", "-x", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).trim().lines().count(), 1);
}

#[test]
fn verify_emits_one_json_record_per_family() {
    let o = run(&["verify", "--only", "square,meixner", "--depth", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["id"], "square");
    assert_eq!(lines[0]["mode"], "cleared_denominator");
    assert_eq!(lines[0]["passed"], true);
    assert!(lines[0].get("counterexample").is_none());
    assert_eq!(lines[1]["interpolation"]["degree_bound"], 3);
}

#[test]
fn verify_output_is_stable() {
    let args = ["verify", "--only", "jacobi,special-values", "--depth", "4", "--jobs", "2"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn verify_failure_exits_one_with_counterexample() {
    let o = run(&["verify", "--only", "recurrences", "--depth", "3", "--inject-fault", "recurrences:2"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["counterexample"]["case"], "n=2");
}

#[test]
fn unknown_ids_are_rejected_before_running() {
    for args in [
        &["verify", "--only", "square,bogus"][..],
        &["verify", "--set", "bogus=3"][..],
        &["verify", "--inject-fault", "bogus:1"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2));
        assert!(stdout(&o).is_empty());
        assert!(stderr(&o).contains("bogus"));
    }
}

#[test]
fn scan_reads_grid_files() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# boundary points\nn_max=5\nr=0 x=0\nr=1/2 x=-1/4\n").unwrap();
    let o = run(&["scan", "--grid", f.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["claim"], "turan-sign");
    assert_eq!(v["points"], 2);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["zero_hits"][0], serde_json::json!({"n": 1, "r": "0", "x": "0"}));
}

#[test]
fn scan_rejects_malformed_grid() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "n_max=5\nr=0 x=0.25\n").unwrap();
    let o = run(&["scan", "--grid", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
    let o = run(&["scan", "--grid", "/nonexistent/grid.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_defaults_pass_all_claims() {
    let o = run(&["scan", "--claim", "all", "--n-max", "12", "--format", "text"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let summary: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(summary.len(), 3);
    assert!(summary.iter().all(|l| l.starts_with("PASS")));
}
