//! End-to-end tests of the pairsym binary: exit codes, output wording and
//! file round trips.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pairsym"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pairsym-cli-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn construct_writes_verified_code() {
    let dir = tmpdir("construct");
    let path = dir.join("c10.json");
    let out = run(&[
        "construct",
        "--n",
        "10",
        "--d",
        "9",
        "--q",
        "4",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("size: 64"));
    assert!(text.contains("verified d: 9 (MDS)"));
    let code = pairsym::read_code(&path).unwrap();
    assert_eq!(code.size(), 64);
    assert_eq!(code.claimed_d(), Some(9));

    let check = run(&[
        "verify",
        path.to_str().unwrap(),
        "--expect-mds",
        "--expect-d",
        "9",
    ]);
    assert_eq!(check.status.code(), Some(0));
    assert!(stdout(&check).contains("MDS: yes"));
}

#[test]
fn construct_impossible_parameters_exit_3() {
    let out = run(&["construct", "--n", "8", "--d", "7", "--q", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("nonexistent: q(8,7)=3"));

    let out = run(&["construct", "--n", "9", "--d", "8", "--q", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("no construction covers"));
}

#[test]
fn construct_bad_arguments_exit_2() {
    let out = run(&["construct", "--n", "5", "--d", "6", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // Missing required arguments trip clap's usage error.
    let out = run(&["construct", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_forced_method() {
    let out = run(&[
        "construct",
        "--n",
        "8",
        "--d",
        "7",
        "--q",
        "6",
        "--method",
        "development",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("development"));
    assert!(stdout(&out).contains("size: 216"));
    // A method that cannot produce the requested distance is refused.
    let out = run(&[
        "construct",
        "--n",
        "8",
        "--d",
        "6",
        "--q",
        "6",
        "--method",
        "development",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_flags_tampered_file() {
    let dir = tmpdir("verify");
    let path = dir.join("tampered.json");
    let full = pairsym::construct(10, 9, 4).unwrap().code;
    let words: Vec<_> = full.words().iter().skip(1).cloned().collect();
    let smaller = pairsym::Code::new(full.alphabet().clone(), 10, words, Some(9)).unwrap();
    pairsym::write_code(&path, &smaller).unwrap();

    let out = run(&["verify", path.to_str().unwrap(), "--expect-mds"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MDS: no"));
    assert!(stdout(&out).contains("size: 63"));

    let out = run(&["verify", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_and_trail_round_trip() {
    let dir = tmpdir("graph");
    let path = dir.join("k5.json");
    let out = run(&[
        "graph",
        "--order",
        "5",
        "--size",
        "10",
        "--min-girth",
        "3",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("girth: 3"));

    let out = run(&["trail", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let stops: Vec<&str> = text.trim().split(' ').collect();
    assert_eq!(stops.len(), 11);
    assert_eq!(stops.first(), stops.last());
}

#[test]
fn graph_excluded_sizes_exit_3() {
    // One below the maximum for order 6 does not exist at girth 3.
    let out = run(&["graph", "--order", "6", "--size", "11", "--min-girth", "3"]);
    assert_eq!(out.status.code(), Some(3));
    // Oversized request is also refused with exit 3.
    let out = run(&["graph", "--order", "6", "--size", "14", "--min-girth", "3"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["graph", "--order", "8", "--size", "14", "--min-girth", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn search_reports_maximum_and_guard() {
    let out = run(&["search", "--n", "3", "--d", "3", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("maximum: 4"));

    let out = run(&["search", "--n", "7", "--d", "2", "--q", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dist_computes_both_metrics() {
    let out = run(&["dist", "0,1,1,0", "0,1,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("pair distance: 3"));
    assert!(text.contains("hamming distance: 2"));

    let out = run(&["dist", "0,1", "0,1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table2_verifies_catalog() {
    let out = bin().args(["table2"]).output().expect("binary runs");
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("constructed-verified").count(), 29);
    assert!(!text.contains("unsupported"));
    assert!(!text.contains("unverified"));
}
