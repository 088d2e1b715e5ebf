use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use ijcomp_core::io::{parse_digraph, parse_graph};
use ijcomp_core::{competition_graph, is_ij_digraph, DegreeBounds, Graph};
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ijcomp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ijcomp-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const CLAW: &str = "4 3\n0 1\n0 2\n0 3\n";
const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";

#[test]
fn recognize_member_with_witness() {
    let out = run(&["recognize", "--i", "3", "--j", "2"], K4);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["verdict"], "member");
    let witness = parse_digraph(&doc["witness"].to_string()).unwrap();
    assert!(is_ij_digraph(&witness, DegreeBounds::new(3, 2).unwrap()));
    assert_eq!(competition_graph(&witness), Graph::complete(4));
}

#[test]
fn recognize_non_member_names_the_obstruction() {
    let out = run(&["recognize", "--i", "2", "--j", "2"], CLAW);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    assert_eq!(doc["verdict"], "non-member");
    assert_eq!(doc["obstruction"], "NecessaryConditionFailed(K1,j+1-free)");
}

#[test]
fn containment_equal_for_indegree_one() {
    let out = run(&["containment", "--a", "1,7", "--b", "1,2"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["relation"], "Equal");
}

#[test]
fn containment_reports_the_double_clique() {
    let out = run(&["containment", "--a", "5,1", "--b", "3,2"], "");
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["relation"], "NotContained");
    let gadgets: Vec<&str> = doc["separations"].as_array().unwrap().iter().map(|s| s["gadget"].as_str().unwrap()).collect();
    assert!(gadgets.contains(&"double-clique"));
}

#[test]
fn malformed_input_reports_its_location() {
    let out = run(&["recognize", "--i", "2", "--j", "2"], "3 2\n0 1\n1 x\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("column"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["recognize", "--i", "2"], K4).status.code(), Some(2));
    assert_eq!(run(&["recognize", "--i", "0", "--j", "2"], K4).status.code(), Some(2));
    assert_eq!(run(&["containment", "--a", "2", "--b", "1,1"], "").status.code(), Some(2));
    assert_eq!(run(&["--format", "dot", "chordal"], C4).status.code(), Some(2));
}

#[test]
fn compete_round_trips_in_both_formats() {
    let arcs = "4 4\n0 3\n1 3\n2 3\n3 0\n";
    let expected = competition_graph(&parse_digraph(arcs).unwrap());
    for format in ["json", "dot"] {
        let out = run(&["--format", format, "compete"], arcs);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(parse_graph(&stdout(&out)).unwrap(), expected, "{format}");
    }
}

#[test]
fn recognize_dot_emits_the_witness() {
    let out = run(&["--format", "dot", "recognize", "--i", "3", "--j", "2"], K4);
    assert_eq!(out.status.code(), Some(0));
    let d = parse_digraph(&stdout(&out)).unwrap();
    assert_eq!(competition_graph(&d), Graph::complete(4));
}

#[test]
fn cover_with_and_without_sdr() {
    let out = run(&["cover", "--i", "2", "--j", "2"], C4);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cliques"].as_array().unwrap().len(), 4);

    let out = run(&["cover", "--i", "2", "--j", "2", "--sdr"], C4);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["representatives"].as_array().unwrap().len(), 4);

    let out = run(&["cover", "--i", "2", "--j", "2"], CLAW);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "none exists");
}

#[test]
fn chordal_reports_the_hole() {
    let out = run(&["chordal"], C4);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["hole"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(run(&["chordal"], K4).status.code(), Some(0));
}

#[test]
fn pattern_commands() {
    let fan_in = "4 3\n0 3\n1 3\n2 3\n";
    let out = run(&["triangle"], fan_in);
    assert_eq!((out.status.code(), json(&out)["induces_triangle"].as_bool()), (Some(0), Some(true)));
    let square = "8 8\n0 4\n1 4\n1 5\n2 5\n2 6\n3 6\n3 7\n0 7\n";
    let out = run(&["good-subdigraph"], square);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["arcs"].as_array().unwrap().len(), 8);
    assert_eq!(run(&["good-subdigraph"], fan_in).status.code(), Some(1));
}

#[test]
fn designs_from_the_command_line() {
    let out = run(&["sts", "--n", "7"], "");
    assert_eq!(out.status.code(), Some(0));
    let fano = stdout(&out);
    assert_eq!(json(&out)["blocks"].as_array().unwrap().len(), 7);

    let out = run(&["bibd-verify"], &fano);
    assert_eq!((out.status.code(), json(&out)["valid"].as_bool()), (Some(0), Some(true)));

    let out = run(&["bibd-digraph"], &fano);
    let d = parse_digraph(&stdout(&out)).unwrap();
    assert!(is_ij_digraph(&d, DegreeBounds::new(3, 3).unwrap()));

    let out = run(&["sts", "--n", "5"], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "none exists");

    let broken = r#"{"b":1,"v":4,"r":1,"k":2,"lambda":1,"blocks":[[0,1]]}"#;
    let out = run(&["bibd-verify"], broken);
    assert_eq!((out.status.code(), json(&out)["valid"].as_bool()), (Some(1), Some(false)));
}

#[test]
fn witness_from_files() {
    let path3 = "3 2\n0 1\n1 2\n";
    let cover = temp_file("cover.json", r#"{"cliques":[[0,1],[1,2]]}"#);
    let sdr = temp_file("sdr.json", r#"{"representatives":[2,0]}"#);
    let out = run(&["witness", "--cover", cover.to_str().unwrap(), "--sdr", sdr.to_str().unwrap()], path3);
    assert_eq!(out.status.code(), Some(0));
    let d = parse_digraph(&stdout(&out)).unwrap();
    assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 2), (1, 0), (1, 2), (2, 0)]);

    let k2 = temp_file("k2.json", r#"{"cliques":[[0,1]]}"#);
    let out = run(&["witness", "--cover", k2.to_str().unwrap()], "2 1\n0 1\n");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "no SDR");
    for p in [cover, sdr, k2] {
        std::fs::remove_file(p).ok();
    }
}

#[test]
fn export_dot_keeps_names() {
    let named = r#"{"n":3,"arcs":[[0,2],[1,2]],"names":["fox","owl","vole"]}"#;
    let out = run(&["export-dot"], named);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("fox") && text.contains("->"), "{text}");
    let out = run(&["export-dot"], K4);
    assert_eq!(parse_graph(&stdout(&out)).unwrap(), Graph::complete(4));
}

#[test]
fn input_from_a_file_argument() {
    let path = temp_file("k4.txt", K4);
    let out = run(&["recognize", "--i", "3", "--j", "1", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["obstruction"], "CompleteWithJ1");
    std::fs::remove_file(path).ok();
}
