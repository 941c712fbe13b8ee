//! End-to-end tests of the `urnwalk` binary: flag handling, output formats,
//! manifests, and reproducibility.

use std::path::Path;
use std::process::{Command, Output};

fn urnwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_urnwalk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = urnwalk(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn return_prob_csv_rows() {
    let text = stdout_of(&[
        "exact",
        "return-prob",
        "--scheme",
        "polya",
        "--white",
        "1",
        "--blue",
        "1",
        "--max-n",
        "3",
        "--format",
        "csv",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,term,partial_sum");
    assert_eq!(lines[1], "1,1/3,1/3");
    assert_eq!(lines[2], "2,1/5,8/15");
    assert_eq!(lines[3], "3,1/7,71/105");
}

#[test]
fn hitting_pmf_json_values() {
    let text = stdout_of(&[
        "exact", "hitting-pmf", "--scheme", "polya", "--max-n", "2", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["kind"], "hitting_mass");
    assert_eq!(doc["rows"][0]["term"], "1/3");
    assert_eq!(doc["rows"][1]["term"], "1/15");
}

#[test]
fn decimal_digits_flag() {
    let text = stdout_of(&[
        "exact",
        "return-prob",
        "--max-n",
        "1",
        "--decimal-digits",
        "6",
    ]);
    assert!(text.contains("3.333333e-1"), "{text}");
}

#[test]
fn eulerian_table() {
    let text = stdout_of(&["exact", "eulerian", "--max-n", "4", "--format", "csv"]);
    assert!(text.starts_with("n,k,value\n"));
    assert!(text.contains("4,1,11\n"));
    assert!(text.contains("4,2,11\n"));
}

#[test]
fn series_expected_hitting() {
    let text = stdout_of(&[
        "exact",
        "series",
        "--kind",
        "expected-hitting",
        "--scheme",
        "polya",
        "--max-n",
        "2",
    ]);
    assert!(text.contains("2,4/15,14/15"), "{text}");
}

#[test]
fn invalid_scheme_combination_rejected() {
    let out = urnwalk(&["exact", "return-prob", "--scheme", "polya", "-b", "0"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("at least one ball of each color"), "{err}");
}

#[test]
fn unknown_flag_rejected() {
    let out = urnwalk(&["exact", "return-prob", "--no-such-flag"]);
    assert!(!out.status.success());
}

#[test]
fn simulate_hitting_stats_json() {
    let text = stdout_of(&[
        "simulate", "hitting", "--scheme", "friedman", "-w", "1", "-b", "0", "--replicas",
        "10000", "--seed", "42", "--cap", "1000000", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in [
        "replicas", "hits", "censored", "mean", "variance", "median", "q90", "q99", "seed", "cap",
    ] {
        assert!(doc.get(key).is_some(), "missing field {key}");
    }
    let mean = doc["mean"].as_f64().unwrap();
    assert!((8.0..=12.0).contains(&mean), "mean {mean}");
    assert_eq!(doc["censored"], 0);
}

#[test]
fn simulate_requires_seed() {
    let out = urnwalk(&["simulate", "hitting", "--scheme", "friedman", "-b", "0"]);
    assert!(!out.status.success());
}

#[test]
fn workers_flag_does_not_change_output() {
    let base = [
        "simulate", "hitting", "--scheme", "friedman", "-w", "1", "-b", "0", "--replicas",
        "500", "--seed", "7", "--cap", "100000", "--format", "csv",
    ];
    let one = stdout_of(&[&base[..], &["--workers", "1"]].concat());
    let four = stdout_of(&[&base[..], &["--workers", "4"]].concat());
    assert_eq!(one, four);
    assert!(one.starts_with("replica,outcome,time\n"));
}

#[test]
fn occupancy_csv() {
    let text = stdout_of(&[
        "simulate", "occupancy", "--scheme", "friedman", "-w", "1", "-b", "0", "--replicas",
        "2000", "--horizon", "4", "--seed", "11", "--format", "csv",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "time,frequency");
    let f2: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!((f2 - 0.5).abs() < 0.05, "{f2}");
}

#[test]
fn diagnose_recurrence_classifications() {
    for (args, expected) in [
        (vec!["--scheme", "polya", "-d", "1"], "null recurrent"),
        (vec!["--scheme", "polya", "-d", "2"], "transient"),
        (vec!["--scheme", "friedman", "-b", "0", "-d", "3"], "transient"),
        (
            vec!["--scheme", "friedman", "-b", "0", "-d", "1"],
            "conjectured positive recurrent",
        ),
    ] {
        let mut full = vec!["diagnose", "recurrence", "--max-n", "500", "--format", "json"];
        full.extend(args);
        let text = stdout_of(&full);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(
            doc["classification"].as_str().unwrap().contains(expected),
            "{doc}"
        );
    }
}

#[test]
fn transform_rotate2d_figure_path() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("path.txt");
    std::fs::write(
        &input,
        "0 0\n1 1\n2 2\n1 3\n0 2\n-1 3\n-2 4\n-3 5\n-2 6\n",
    )
    .unwrap();
    let text = stdout_of(&["transform", "rotate2d", "--input", input.to_str().unwrap()]);
    assert_eq!(
        text,
        "0 0\n1 0\n2 0\n2 1\n1 1\n1 2\n1 3\n1 4\n2 4\n"
    );
}

#[test]
fn transform_rejects_bad_path_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    std::fs::write(&input, "0 0\n1 one\n").unwrap();
    let out = urnwalk(&["transform", "rotate2d", "--input", input.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn out_file_gets_manifest_and_reruns_identically() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("table.csv");
    let args = [
        "exact",
        "return-prob",
        "--max-n",
        "5",
        "--out",
        out_path.to_str().unwrap(),
    ];
    assert!(urnwalk(&args).status.success());
    let first = std::fs::read(&out_path).unwrap();
    let manifest_path = dir.path().join("table.csv.manifest.json");
    assert!(Path::new(&manifest_path).exists());
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&manifest_path).unwrap()).unwrap();
    assert_eq!(manifest["artifact"], "urnwalk");
    let cmd: Vec<String> = manifest["command"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    // re-running the manifest's command reproduces the data byte-for-byte
    let rerun = Command::new(env!("CARGO_BIN_EXE_urnwalk"))
        .args(&cmd[1..])
        .output()
        .unwrap();
    assert!(rerun.status.success());
    let second = std::fs::read(&out_path).unwrap();
    assert_eq!(first, second);
}
