//! End-to-end checks of the command-line surface: file formats, output
//! shapes and exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gridclass"))
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gr_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let neg = write(dir.path(), "neg.txt", "1 0 -1\n1 -1 1\n");

    let out = run(&["gr", &neg]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("geom growth rate: 4.41421356237"));
    assert!(text.contains("graph used: G(M^x2)"));

    let out = run(&["gr", &neg, "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["t"], 3);
    assert_eq!(v["u"], 2);
    assert_eq!(v["negative_cycle"], true);
    assert_eq!(v["graph_used"], "G(M^x2)");
    assert_eq!(v["comparison"], "strict");
    let rate = v["geom_growth_rate"].as_f64().unwrap();
    assert!((rate - (3.0 + 2.0_f64.sqrt())).abs() < 1e-9);
    let bracket = v["lambda"]["bracket"].as_array().unwrap();
    assert_eq!(bracket.len(), 2);
    assert_eq!(v["matching_polynomial"][0], "0");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.txt", "0 0\n0 0\n");
    // domain error: all-zero matrix
    let out = run(&["gr", &zero]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonzero"));
    // missing file is a domain error too
    let out = run(&["gr", "/nonexistent/m.txt"]);
    assert_eq!(out.status.code(), Some(1));
    // usage error: unknown flag
    let out = run(&["gr", &zero, "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // nonpositive tolerance is rejected before any computation
    let dirpath = dir.path();
    let ok = write(dirpath, "ok.txt", "1\n");
    let out = run(&["gr", &ok, "--tolerance", "0"]);
    assert_eq!(out.status.code(), Some(1));
    // usage error: expand with no input
    let out = run(&["expand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parity_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let neg = write(dir.path(), "neg.txt", "1 0 -1\n1 -1 1\n");
    let out = run(&["parity", &neg]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["has_negative_cycle"], true);
    assert!(v["switching"].is_null());
    assert!(v["witness_cycle"].as_array().unwrap().len() >= 4);

    let pos = write(dir.path(), "pos.txt", "-1 0 -1\n1 -1 1\n");
    let out = run(&["parity", &pos]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["has_negative_cycle"], false);
    assert_eq!(v["switching"]["c1"], 1);
}

#[test]
fn enumerate_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let pos = write(dir.path(), "pos.txt", "-1 0 -1\n1 -1 1\n");
    let csv_path = dir.path().join("counts.csv");
    let out = run(&[
        "enumerate",
        &pos,
        "--max-n",
        "4",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let csv = fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "n,gridded_count,perm_count,gridded_root_estimate,perm_root_estimate"
    );
    assert!(lines[1].starts_with("1,5,1,"));
    assert!(lines[4].starts_with("4,341,24,"));
}

#[test]
fn cycle_table_lists_even_lengths() {
    let out = run(&["cycle-table", "--max-n", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3.41421356237")); // 2 + sqrt(2) at n = 4
    assert_eq!(text.lines().count(), 4); // header + n = 4, 6, 8
}

#[test]
fn subdivide_series_and_modes() {
    let dir = tempfile::tempdir().unwrap();
    let edges = write(
        dir.path(),
        "family.edges",
        "v1 v2\nv2 v3\nv3 v4\nv4 v1\nv1 a1\nv3 b1\n",
    );
    let out = run(&[
        "subdivide",
        "--graph",
        &edges,
        "--edge",
        "v2,v3",
        "--times",
        "3",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "increasing");
    assert_eq!(v["mode"], "bipartite");
    assert_eq!(v["lambda_squared_series"].as_array().unwrap().len(), 4);

    let out = run(&[
        "subdivide",
        "--graph",
        &edges,
        "--edge",
        "v2,v3",
        "--times",
        "2",
        "--raw",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["mode"], "raw");
    // one inserted vertex makes the 4-cycle odd: not a row-column graph
    assert_eq!(v["bipartite"][1], false);

    let out = run(&[
        "subdivide",
        "--graph",
        &edges,
        "--edge",
        "v2,v3",
        "--times",
        "2",
        "--raw",
        "--bipartite",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_agrees_on_matrix_and_graph_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let pos = write(dir.path(), "pos.txt", "-1 0 -1\n1 -1 1\n");
    let out = run(&["expand", &pos]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("agreement: ok"));
    assert!(text.contains("rho(forest): 2.00000000000"));

    let cyc = write(dir.path(), "c4.edges", "a b\nb c\nc d\nd a\n");
    let out = run(&["expand", "--graph", &cyc]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("forest: 7 vertices"));
    assert!(text.contains("agreement: ok"));
}

#[test]
fn negate_cell_sweep_shape() {
    let dir = tempfile::tempdir().unwrap();
    let pos = write(dir.path(), "pos.txt", "-1 0 -1\n1 -1 1\n");
    let out = run(&["negate-cell-sweep", &pos]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["negative_cycle_before"], false);
    let sweep = v["sweep"].as_array().unwrap();
    // the four cycle cells, not the pendant
    assert_eq!(sweep.len(), 4);
    for row in sweep {
        assert!(row["delta"].as_f64().unwrap() > 1e-9);
    }
}

#[test]
fn graph_file_errors_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.edges", "a\n");
    let out = run(&["expand", "--graph", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad edge"));
}
