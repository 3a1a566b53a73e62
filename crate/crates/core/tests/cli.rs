//! End-to-end checks of the antidim binary: record formats, exit codes and
//! byte-stable outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn antidim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antidim"))
        .args(args)
        .env("ANTIDIM_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("antidim-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn solve_optimal_record_and_exit_code() {
    let out = antidim(&["solve", "torus:5x5", "-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("graph,n,k,semantics,status,adim,witness,seconds")
    );
    let row = lines.next().expect("one record");
    assert!(row.starts_with("torus:5x5,25,2,exact,optimal,5,1;2;3;4;5,"));
}

#[test]
fn solve_infeasible_and_unknown_exit_codes() {
    let out = antidim(&["solve", "cyl:5x5", "-k", "3", "--bound", "22"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains(",infeasible,inf,,"));

    // below the proof cardinality the search can only say unknown
    let out = antidim(&["solve", "cyl:5x5", "-k", "3", "--bound", "20"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_of(&out).contains(",unknown,unknown,,"));
}

#[test]
fn solve_json_records() {
    let out = antidim(&["solve", "ham:4", "-k", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["adim"], 1);
    assert_eq!(v["witness"], "1");
    assert_eq!(v["n"], 16);
    assert_eq!(v["status"], "optimal");
}

#[test]
fn solve_atleast_semantics() {
    let out = antidim(&["solve", "torus:5x5", "-k", "3", "--semantics", "atleast"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("torus:5x5,25,3,atleast,optimal,1,1,"));
}

#[test]
fn sweep_reproduces_a_reference_row() {
    let out = antidim(&["sweep", "cyl:5x6", "--kmax", "4", "--bound", "30"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout_of(&out);
    let cells: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(5).unwrap())
        .collect();
    assert_eq!(cells, vec!["1", "1", "2", "inf"]);
}

#[test]
fn sweep_default_kmax_is_degree_capped() {
    let out = antidim(&["sweep", "cyl:2x3", "--bound", "6"]);
    let text = stdout_of(&out);
    // prism has maximum degree 3 and 6 vertices: three sweep rows
    assert_eq!(text.lines().count(), 1 + 3);
}

#[test]
fn lp_file_is_byte_stable_and_counted() {
    let path_a = tmp_path("a.lp");
    let path_b = tmp_path("b.lp");
    let out = antidim(&[
        "lp",
        "torus:3x4",
        "-k",
        "2",
        "--variant",
        "fa",
        "--out",
        path_a.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("vars=90 "));
    let out2 = antidim(&[
        "lp",
        "torus:3x4",
        "-k",
        "2",
        "--variant",
        "fa",
        "--out",
        path_b.to_str().unwrap(),
    ]);
    assert_eq!(out2.status.code(), Some(0));
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("\\ antidim FA k=2 n=12\n"));
    assert!(text.contains(" agg_1_2:"));
    assert!(!text.contains(" inc_"));
    let _ = std::fs::remove_file(path_a);
    let _ = std::fs::remove_file(path_b);
}

#[test]
fn lp_from_an_edge_list_file() {
    let graph_path = tmp_path("p5.txt");
    std::fs::write(&graph_path, "# five-vertex path\n5 4\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    let source = format!("path:{}", graph_path.display());
    let out = antidim(&["lp", &source, "-k", "2", "--variant", "fa"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("\\ antidim FA k=2 n=5\n"));
    assert!(String::from_utf8(out.stderr).unwrap().contains("vars=20 "));
    let _ = std::fs::remove_file(graph_path);
}

#[test]
fn closed_values_and_anonymity() {
    let out = antidim(&["closed", "torus:9x9", "-k", "2"]);
    assert_eq!(stdout_of(&out).trim(), "9");
    let out = antidim(&["closed", "cyl:5x5", "-k", "3"]);
    assert_eq!(stdout_of(&out).trim(), "inf");
    let out = antidim(&["closed", "ham:5", "--anonymity", "1"]);
    assert_eq!(stdout_of(&out).trim(), "k=8");
    let out = antidim(&["closed", "grid:4x4", "--anonymity", "1"]);
    assert_eq!(stdout_of(&out).trim(), "k=1");
}

#[test]
fn gen_writes_deterministic_files() {
    let path = tmp_path("tree.txt");
    let out = antidim(&[
        "gen",
        "t",
        "50",
        "6",
        "--seed",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(first.starts_with("# gen class=T n=50 delta=6 seed=1\n50 49\n"));
    assert_eq!(first.lines().count(), 2 + 49);
    let out2 = antidim(&[
        "gen",
        "t",
        "50",
        "6",
        "--seed",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out2.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);

    let dense = stdout_of(&antidim(&["gen", "d", "50", "45", "--seed", "1"]));
    assert!(dense.starts_with("# gen class=D n=50 delta=45 seed=1\n50 1180\n"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn generated_files_round_trip_through_solve() {
    let path = tmp_path("roundtrip.txt");
    antidim(&[
        "gen",
        "t",
        "12",
        "3",
        "--seed",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    let out = antidim(&["solve", path.to_str().unwrap(), "-k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out)
        .lines()
        .nth(1)
        .unwrap()
        .contains(",12,1,exact,optimal,1,"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn verify_reports_both_semantics() {
    let out = antidim(&["verify", "torus:5x5", "-k", "4", "--set", "1"]);
    assert_eq!(stdout_of(&out).trim(), "k_of=4 exact=true atleast=true");
    let out = antidim(&["verify", "torus:5x5", "-k", "3", "--set", "1"]);
    assert_eq!(stdout_of(&out).trim(), "k_of=4 exact=false atleast=true");
}

#[test]
fn usage_and_io_exit_codes() {
    // malformed family syntax
    assert_eq!(
        antidim(&["solve", "torus:9", "-k", "1"]).status.code(),
        Some(64)
    );
    // malformed vertex set
    assert_eq!(
        antidim(&["verify", "torus:5x5", "-k", "1", "--set", "1,,2"])
            .status
            .code(),
        Some(64)
    );
    // unknown flag
    assert_eq!(
        antidim(&["solve", "torus:5x5", "--nope"]).status.code(),
        Some(64)
    );
    // missing file
    assert_eq!(
        antidim(&["solve", "path:/nonexistent/graph.txt", "-k", "1"])
            .status
            .code(),
        Some(66)
    );
    // readable but disconnected input
    let path = tmp_path("disconnected.txt");
    std::fs::write(&path, "4 2\n1 2\n3 4\n").unwrap();
    let out = antidim(&["verify", path.to_str().unwrap(), "-k", "1", "--set", "1"]);
    assert_eq!(out.status.code(), Some(65));
    let _ = std::fs::remove_file(path);
}
