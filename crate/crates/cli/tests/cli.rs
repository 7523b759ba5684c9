//! End-to-end CLI checks, including the byte-identical reproducibility
//! contract: identical (command, inputs, seed) must give identical output.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn venergy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_venergy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_graph(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn parse_csv_cell(line: &str, column: usize) -> f64 {
    line.split(',').nth(column).unwrap().parse().unwrap()
}

#[test]
fn energy_on_p4() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_graph(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let out = venergy(&["energy", &file]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6, "header + 4 vertices + total");
    assert_eq!(lines[0], "vertex,spectral_energy,coulson_energy,abs_diff");
    let total = lines.last().unwrap();
    assert!(total.starts_with("total,"));
    let graph_energy = parse_csv_cell(total, 1);
    assert!((graph_energy - 2.0 * 5.0f64.sqrt()).abs() <= 1e-9);
    for line in &lines[1..5] {
        assert!(parse_csv_cell(line, 3) <= 1e-6, "cross-check too loose: {line}");
    }
}

#[test]
fn energy_on_k2() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_graph(dir.path(), "k2.txt", "2 1\n0 1\n");
    let out = venergy(&["energy", &file]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    for line in text.lines().skip(1).take(2) {
        assert!((parse_csv_cell(line, 1) - 1.0).abs() <= 1e-9);
        assert!((parse_csv_cell(line, 2) - 1.0).abs() <= 1e-6);
    }
}

#[test]
fn energy_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_graph(dir.path(), "bad.txt", "2 1\n0 0\n");
    let out = venergy(&["energy", &file]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty(), "no CSV on failure");
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));

    let out = venergy(&["energy", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn charpoly_lines() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write_graph(dir.path(), "k2.txt", "2 1\n0 1\n");
    let out = venergy(&["charpoly", &k2]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "-1 0 1\n1 1\n");

    let triangle = write_graph(dir.path(), "c3.txt", "3 3\n0 1\n1 2\n2 0\n");
    let out = venergy(&["charpoly", &triangle]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert_eq!(text.lines().nth(1), Some("not-bipartite"));

    let p4 = write_graph(dir.path(), "p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let out = venergy(&["charpoly", &p4]);
    assert_eq!(stdout_str(&out), "1 0 -3 0 1\n1 3 1\n");
}

#[test]
fn verify_is_byte_identical_and_passes() {
    let args = ["verify", "alternation", "--seed", "42", "--trials", "20"];
    let first = venergy(&args);
    let second = venergy(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "CSV must be byte-identical");
    assert_eq!(first.stderr, second.stderr);
    let summary = String::from_utf8_lossy(&first.stderr);
    assert!(summary.starts_with("SUITE alternation PASS checked="), "summary: {summary}");
    assert!(summary.contains("violations=0"));

    // A different seed still passes but reports different data.
    let other = venergy(&["verify", "alternation", "--seed", "7", "--trials", "20"]);
    assert!(other.status.success());
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = venergy(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("alternation") && err.contains("hnd"), "should list suites: {err}");
}

#[test]
fn verify_every_suite_passes_quickly() {
    for suite in [
        "alternation",
        "lemma31",
        "edge-deletion",
        "subadd-vertex",
        "subadd-energy",
        "edge-cut",
        "successive",
        "star-limit",
        "hnd",
        "series-bound",
        "balance",
        "adjacent-product",
        "identities",
        "moments",
    ] {
        let out = venergy(&["verify", suite, "--trials", "5"]);
        assert!(
            out.status.success(),
            "suite {suite} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn sweep_star_closed_forms_on_a_point() {
    let dir = tempfile::tempdir().unwrap();
    // A single vertex: the sweep produces bare stars.
    let k1 = write_graph(dir.path(), "k1.txt", "1 0\n");
    let out = venergy(&["sweep-star", &k1, "0", "--n-list", "1,2,3,4,5,6,7,8,9,10"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_str(&out);
    assert_eq!(text.lines().next().unwrap(), "n,vertex,role,energy,bound_low,bound_high,target,gap");
    for line in text.lines().skip(1) {
        let n: f64 = parse_csv_cell(line, 0);
        let energy = parse_csv_cell(line, 3);
        let role = line.split(',').nth(2).unwrap();
        match role {
            "center" => assert!((energy - n.sqrt()).abs() <= 1e-9, "{line}"),
            "leaf" => assert!((energy - 1.0 / n.sqrt()).abs() <= 1e-9, "{line}"),
            other => panic!("unexpected role {other} for a single-vertex tree"),
        }
    }
}

#[test]
fn sweep_star_brackets_on_an_edge() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write_graph(dir.path(), "k2.txt", "2 1\n0 1\n");
    let out = venergy(&["sweep-star", &k2, "0", "--n-list", "1,4,9,16"]);
    assert!(out.status.success());
    for line in stdout_str(&out).lines().skip(1) {
        let n: f64 = parse_csv_cell(line, 0);
        let energy = parse_csv_cell(line, 3);
        if line.split(',').nth(2).unwrap() == "center" {
            assert!(energy >= n.sqrt() - 1e-9 && energy <= (n + 1.0).sqrt() + 1e-9, "{line}");
        }
    }
}

#[test]
fn sweep_star_empty_list_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write_graph(dir.path(), "k2.txt", "2 1\n0 1\n");
    let out = venergy(&["sweep-star", &k2, "0"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "n,vertex,role,energy,bound_low,bound_high,target,gap\n");

    let c4 = write_graph(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let out = venergy(&["sweep-star", &c4, "0", "--n-list", "2"]);
    assert_eq!(out.status.code(), Some(2), "cycles are not trees");

    let out = venergy(&["sweep-star", &k2, "9", "--n-list", "2"]);
    assert_eq!(out.status.code(), Some(2), "vertex out of range");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write_graph(dir.path(), "k2.txt", "2 1\n0 1\n");
    let target = dir.path().join("out.csv");
    let out = venergy(&["charpoly", &k2, "--out", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(target).unwrap(), "-1 0 1\n1 1\n");
}

#[test]
fn usage_errors_exit_2() {
    let out = venergy(&["energy"]);
    assert_eq!(out.status.code(), Some(2));
    let out = venergy(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
