use std::fs;
use std::process::{Command, Output};

use tcl_core::coloring::ColorMatrix;

fn tcl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tcl"))
        .args(args)
        .env_remove("TCL_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn color_c10_matches_fixture() {
    let o = tcl(&["color", "--family", "poc", "--n", "10", "--k", "2", "--method", "base"]);
    assert_eq!(o.status.code(), Some(0));
    let fixture = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/c10_2.csv")).unwrap();
    assert_eq!(
        ColorMatrix::from_csv(&stdout(&o)).unwrap(),
        ColorMatrix::from_csv(&fixture).unwrap()
    );
}

#[test]
fn color_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &["--family", "poc", "--n", "13", "--k", "3"],
        &["--family", "unitary", "--n", "15"],
        &["--family", "odd", "--m", "3"],
        &["--family", "mock", "--random", "9", "--seed", "4"],
        &["--family", "circulant", "--n", "8", "--distances", "1,3"],
    ];
    for (i, family) in cases.iter().enumerate() {
        let out = dir.path().join(format!("run{i}"));
        let mut args = vec!["color"];
        args.extend_from_slice(family);
        args.extend(["--out-dir", out.to_str().unwrap()]);
        let o = tcl(&args);
        assert_eq!(o.status.code(), Some(0), "{family:?}: {}", String::from_utf8_lossy(&o.stderr));
        for file in ["graph.json", "coloring.json", "matrix.csv", "result.json"] {
            assert!(out.join(file).exists());
        }
        let v = tcl(&[
            "verify",
            "--graph",
            out.join("graph.json").to_str().unwrap(),
            "--coloring",
            out.join("coloring.json").to_str().unwrap(),
        ]);
        assert_eq!(v.status.code(), Some(0), "{family:?}");
        assert!(stdout(&v).contains("\"is_valid\": true"));
    }
}

#[test]
fn verify_rejects_bad_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let coloring = dir.path().join("c.json");
    fs::write(&graph, r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
    fs::write(&coloring, r#"{"vertices":[1,1,3],"edges":[[0,1,3],[0,2,2],[1,2,2]]}"#).unwrap();
    let o = tcl(&["verify", "--graph", graph.to_str().unwrap(), "--coloring", coloring.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["color", "--family", "mock", "--random", "11"];
    assert_eq!(tcl(&args).stdout, tcl(&args).stdout);
    let a = tcl(&["build", "--family", "kneser", "--n", "5", "--k", "2"]);
    assert_eq!(a.stdout, tcl(&["build", "--family", "kneser", "--n", "5", "--k", "2"]).stdout);
    assert!(stdout(&a).contains("\"labels\""));
}

#[test]
fn sweep_writes_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let o = tcl(&["sweep", "--nmax", "9", "--jobs", "2", "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("n,k,delta,chi_total_lo,chi_total_hi,predicted,agrees,nodes\n"));
    assert!(text.contains("\n7,2,4,6,6,6,true,"));
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(csv.with_extension("json")).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), text.lines().count() - 1);
}

#[test]
fn oracle_and_budget_exit_codes() {
    let o = tcl(&["oracle", "--family", "poc", "--n", "7", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lower"], 6);
    assert_eq!(v["upper"], 6);
    let o = tcl(&["--budget", "1", "oracle", "--family", "poc", "--n", "9", "--k", "2"]);
    assert_eq!(o.status.code(), Some(5));
    let o = Command::new(env!("CARGO_BIN_EXE_tcl"))
        .args(["oracle", "--family", "poc", "--n", "9", "--k", "2"])
        .env("TCL_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn parse_and_precondition_exit_codes() {
    assert_eq!(tcl(&["color", "--family", "nonsense"]).status.code(), Some(2));
    assert_eq!(tcl(&["frobnicate"]).status.code(), Some(2));
    let o = tcl(&["color", "--family", "poc", "--n", "12", "--k", "2", "--method", "base"]);
    assert_eq!(o.status.code(), Some(3));
    let o = tcl(&["color", "--family", "poc", "--n", "14", "--k", "5", "--method", "augment"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(tcl(&["color", "--family", "odd", "--m", "3", "--method", "base"]).status.code(), Some(3));
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let run = dir.path().join("run");
    let o = tcl(&["color", "--family", "poc", "--n", "10", "--k", "2", "--out-dir", run.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let graph = run.join("graph.json");
    let dimacs = dir.path().join("g.col");
    let o = tcl(&["export", "--graph", graph.to_str().unwrap(), "--to", "dimacs", "--out", dimacs.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&dimacs).unwrap().starts_with("p edge 10 20\n"));
    let back = tcl(&["export", "--graph", dimacs.to_str().unwrap(), "--from", "dimacs", "--to", "json"]);
    let original = tcl(&["export", "--graph", graph.to_str().unwrap(), "--to", "json"]);
    assert_eq!(back.stdout, original.stdout);
    let m = tcl(&[
        "export",
        "--graph",
        graph.to_str().unwrap(),
        "--to",
        "matrix",
        "--coloring",
        run.join("coloring.json").to_str().unwrap(),
    ]);
    assert_eq!(stdout(&m), fs::read_to_string(run.join("matrix.csv")).unwrap());
}

#[test]
fn verbose_streams_json_lines() {
    let o = tcl(&["--verbose", "oracle", "--family", "poc", "--n", "8", "--k", "2"]);
    let stderr = String::from_utf8(o.stderr).unwrap();
    let line = stderr.lines().next().unwrap();
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    assert_eq!(v["event"], "oracle");
}
