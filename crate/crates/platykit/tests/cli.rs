//! The `platykit` binary end to end.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use platykit_core::constructions::{fixture, FixtureId};
use platykit_core::graph6;
use serde_json::Value;

const PETERSEN: &str = "IheA@GUAo";

/// Unlabeled forests on 12 vertices (OEIS A005195).
const FORESTS_ON_12: u64 = 1601;

fn platykit(args: &[&str], stdin: &str) -> Output {
    platykit_env(args, stdin, &[])
}

fn platykit_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_platykit"));
    cmd.args(args).env_remove("PLATYKIT_GUARD_OVERRIDE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn fixture_line(id: FixtureId) -> String {
    graph6::encode(&fixture(id).unwrap())
}

#[test]
fn construct_prints_graph6() {
    let o = platykit(&["construct", "gp", "5", "2"], "");
    assert_eq!(o.status.code(), Some(0));
    let g = graph6::decode(stdout(&o).trim()).unwrap();
    assert!(platykit_core::isomorphism::are_isomorphic(&g, &fixture(FixtureId::Petersen).unwrap()));

    let o = platykit(&["construct", "pp", "9", "2"], "");
    assert_eq!(graph6::decode(stdout(&o).trim()).unwrap().order(), 36);

    let o = platykit(&["construct", "fixture", "fig8a_poly21"], "");
    assert_eq!(stdout(&o).trim(), fixture_line(FixtureId::Fig8aPoly21));
}

#[test]
fn construct_rejects_unknown_families_and_parameters() {
    assert_eq!(platykit(&["construct", "bogus", "3"], "").status.code(), Some(2));
    assert_eq!(platykit(&["construct", "gp", "5"], "").status.code(), Some(2));
    assert_eq!(platykit(&["construct", "fixture", "nope"], "").status.code(), Some(2));
    assert_eq!(platykit(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn constructions_pipe_into_filter_and_canon() {
    let built = stdout(&platykit(&["construct", "gp", "5", "2"], ""));
    let o = platykit(&["filter", "--platypus", "--snark"], &built);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), built);
    let o = platykit(&["canon"], &built);
    assert_eq!(o.status.code(), Some(0));
    let canonical = stdout(&o);
    // canonical forms are fixed points
    assert_eq!(stdout(&platykit(&["canon"], &canonical)), canonical);
}

#[test]
fn girth_filter_keeps_petersen_only() {
    let input = format!("{PETERSEN}\n{}\n", fixture_line(FixtureId::Tietze));
    let o = platykit(&["filter", "--platypus", "--girth-min", "5"], &input);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), format!("{PETERSEN}\n"));
}

#[test]
fn polyhedral_filter_keeps_the_four_planar_fixtures() {
    let ids = [
        FixtureId::Petersen,
        FixtureId::Tietze,
        FixtureId::Fig7Left,
        FixtureId::Fig7Right,
        FixtureId::Fig8aPoly21,
        FixtureId::Fig8bPoly28,
        FixtureId::Fig9aPoly22,
        FixtureId::Fig9bPoly23,
    ];
    let input: String = ids.iter().map(|&id| fixture_line(id) + "\n").collect();
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("m.json");
    let o = platykit(
        &["filter", "--planar", "--connectivity", "3", "--platypus", "--manifest", manifest.to_str().unwrap()],
        &input,
    );
    assert_eq!(o.status.code(), Some(0));
    let expected: String = ids[4..].iter().map(|&id| fixture_line(id) + "\n").collect();
    assert_eq!(stdout(&o), expected);
    let m = json(&manifest);
    assert_eq!(m["summary"]["graphs"], 8);
    assert_eq!(m["summary"]["passed"], 4);
    assert_eq!(m["verdicts"].as_array().unwrap().len(), 8);
}

#[test]
fn empty_input_is_not_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("m.json");
    let o = platykit(&["filter", "--platypus", "--manifest", manifest.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
    let m = json(&manifest);
    assert_eq!(m["summary"]["graphs"], 0);
    assert_eq!(m["input"]["bytes"], 0);
}

#[test]
fn malformed_lines_exit_with_the_parse_code() {
    let input = format!("{PETERSEN}\nnot graph6 ~~\n{PETERSEN}\n");
    let o = platykit(&["filter", "--platypus"], &input);
    assert_eq!(o.status.code(), Some(3));
    // the good lines on both sides of the bad one are still processed
    assert_eq!(stdout(&o), format!("{PETERSEN}\n{PETERSEN}\n"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = platykit(&["filter", "--platypus", "--strict"], &input);
    assert_eq!(o.status.code(), Some(3));
    assert!(!stdout(&o).contains(&format!("{PETERSEN}\n{PETERSEN}")));
}

#[test]
fn missing_input_file_is_an_io_error() {
    assert_eq!(platykit(&["filter", "/nonexistent/graphs.g6"], "").status.code(), Some(1));
}

#[test]
fn isomorphic_accepts_strings_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.g6");
    std::fs::write(&file, stdout(&platykit(&["construct", "gp", "5", "2"], ""))).unwrap();
    let o = platykit(&["isomorphic", PETERSEN, file.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "true");
    let tietze = fixture_line(FixtureId::Tietze);
    assert_eq!(stdout(&platykit(&["isomorphic", PETERSEN, &tietze], "")).trim(), "false");
}

#[test]
fn check_and_audit_report_per_graph() {
    let input = format!("{PETERSEN}\n");
    let o = platykit(&["check"], &input);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).is_empty());
    let o = platykit(&["audit"], &input);
    assert_eq!(o.status.code(), Some(0));
}

fn census_in(dir: &Path, args: &[&str]) -> Output {
    let mut all = vec!["census"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", dir.to_str().unwrap()]);
    platykit(&all, "")
}

#[test]
fn census_writes_the_list_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let o = census_in(dir.path(), &["9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4");
    let list = std::fs::read_to_string(dir.path().join("platypuses_n9_g3.g6")).unwrap();
    assert_eq!(list.lines().count(), 4);
    let m = json(&dir.path().join("platypuses_n9_g3.json"));
    assert_eq!(m["count"], 4);
    assert_eq!(m["order"], 9);
    assert_eq!(m["guard_overridden"], false);

    let o = census_in(dir.path(), &["10", "--girth", "5"]);
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn census_rerun_from_the_manifest_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    census_in(dir.path(), &["10", "--girth-min", "4", "--jobs", "1"]);
    let m = json(&dir.path().join("platypuses_n10_g4.json"));
    let args: Vec<String> = m["command_line"].as_array().unwrap().iter().map(|a| a.as_str().unwrap().into()).collect();
    let again = tempfile::tempdir().unwrap();
    let mut rerun: Vec<&str> = args[1..].iter().map(String::as_str).collect();
    // point the rerun at a fresh directory
    let out = rerun.iter().position(|&a| a == "--out").unwrap();
    rerun[out + 1] = again.path().to_str().unwrap();
    let o = platykit(&rerun, "");
    assert_eq!(o.status.code(), Some(0));
    let m2 = json(&again.path().join("platypuses_n10_g4.json"));
    assert_eq!(m["graph6_sha256"], m2["graph6_sha256"]);
    assert_eq!(m["count"], m2["count"]);
}

#[test]
fn census_output_does_not_depend_on_jobs() {
    let one = tempfile::tempdir().unwrap();
    let three = tempfile::tempdir().unwrap();
    census_in(one.path(), &["9", "--jobs", "1"]);
    census_in(three.path(), &["9", "--jobs", "3"]);
    let read = |d: &Path| std::fs::read(d.join("platypuses_n9_g3.g6")).unwrap();
    assert_eq!(read(one.path()), read(three.path()));
}

#[test]
fn census_guard_and_override() {
    let dir = tempfile::tempdir().unwrap();
    let o = census_in(dir.path(), &["20"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("PLATYKIT_GUARD_OVERRIDE"));
    assert_eq!(census_in(dir.path(), &["12", "--all-graphs"]).status.code(), Some(4));
    assert_eq!(census_in(dir.path(), &["0"]).status.code(), Some(2));

    // all graphs on 12 vertices are out of reach, but with girth at least
    // 12 only the forests and the 12-cycle remain
    let out = dir.path().to_str().unwrap();
    let o = platykit_env(
        &["census", "12", "--all-graphs", "--girth", "12", "--out", out],
        "",
        &[("PLATYKIT_GUARD_OVERRIDE", "1")],
    );
    assert_eq!(o.status.code(), Some(0));
    let m = json(&dir.path().join("graphs_n12_g12.json"));
    assert_eq!(m["guard_overridden"], true);
    assert_eq!(m["count"], FORESTS_ON_12 + 1);
}
