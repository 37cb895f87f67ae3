//! End-to-end tests for the `bmg` binary: every subcommand runs against the
//! checked-in fixtures and the output (and exit code) is pinned.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Runs the binary with a scrubbed environment so an ambient BMG_WORKERS
/// cannot change what the tests observe.
fn bmg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmg"))
        .args(args)
        .env_remove("BMG_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is JSON")
}

fn assert_code(out: &Output, code: i32) {
    assert_eq!(out.status.code(), Some(code), "stderr: {}", stderr_of(out));
}

fn tmp_dir(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn check_passes_the_symmetric_pair() {
    let out = bmg(&["check", &fixture("symmetric_pair.txt")]);
    assert_code(&out, 0);
    let v = json_of(&out);
    assert_eq!(v["is_2cbmg"], true);
    assert_eq!(v["n1"], "pass");
    assert_eq!(v["n4"], "pass");
}

#[test]
fn check_flags_a_sink_and_exits_one() {
    let out = bmg(&["check", &fixture("single_edge.txt")]);
    assert_code(&out, 1);
    let v = json_of(&out);
    assert_eq!(v["is_2cbmg"], false);
    assert_eq!(v["is_almost_2cbmg"], true);
    assert_eq!(v["n4"]["sinks"], serde_json::json!([2]));

    let text = bmg(&["check", &fixture("single_edge.txt"), "--format", "text"]);
    assert_code(&text, 1);
    assert!(stdout_of(&text).contains("verdict: almost 2-cBMG: sink at 2"));
}

#[test]
fn quotient_merges_the_equivalent_pair() {
    let out = bmg(&["quotient", &fixture("ten_vertex_twins.txt"), "--format", "text"]);
    assert_code(&out, 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("<9|"));
    assert!(text.contains("{5,6}"));

    let v = json_of(&bmg(&["quotient", &fixture("ten_vertex_twins.txt")]));
    assert_eq!(v["graph"]["n"], 9);
    assert_eq!(v["representatives"].as_array().unwrap().len(), 9);
}

#[test]
fn orient_output_reparses_and_sorts_acyclically() {
    let out = bmg(&["orient", &fixture("square_cycle.txt"), "--format", "text"]);
    assert_code(&out, 0);
    let dir = tmp_dir("orient");
    std::fs::create_dir_all(&dir).unwrap();
    let oriented = dir.join("oriented.txt");
    std::fs::write(&oriented, stdout_of(&out)).unwrap();

    let sorted = bmg(&["toposort", oriented.to_str().unwrap()]);
    assert_code(&sorted, 0);
    assert_eq!(json_of(&sorted)["order"].as_array().unwrap().len(), 6);
}

#[test]
fn orient_with_a_seed_is_reproducible() {
    let a = bmg(&["orient", &fixture("square_cycle.txt"), "--seed", "7"]);
    let b = bmg(&["orient", &fixture("square_cycle.txt"), "--seed", "7"]);
    assert_code(&a, 0);
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn toposort_reports_the_symmetric_cycle() {
    let out = bmg(&["toposort", &fixture("square_cycle.txt")]);
    assert_code(&out, 1);
    assert_eq!(json_of(&out)["cycle"], serde_json::json!([3, 4]));
}

#[test]
fn sigma_finds_the_complete_bipartite_block() {
    let out = bmg(&["sigma", &fixture("square_cycle.txt")]);
    assert_code(&out, 0);
    let v = json_of(&out);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0]["side0"], serde_json::json!([3, 5]));
    assert_eq!(comps[0]["side1"], serde_json::json!([4, 6]));
    assert_eq!(comps[0]["complete_bipartite"], true);
}

#[test]
fn truncate_matches_the_worked_examples() {
    let twins = bmg(&["truncate", &fixture("truncation_twins.txt")]);
    assert_code(&twins, 0);
    let v = json_of(&twins);
    assert_eq!(v["removed"], serde_json::json!([5, 6, 7]));
    assert_eq!(v["remainder_text"], "<4|[1,3],[2,3],[3,4],[4,3]>");

    let dead = bmg(&["truncate", &fixture("truncation_dead_end.txt")]);
    assert_code(&dead, 0);
    let v = json_of(&dead);
    assert_eq!(v["removed"], serde_json::json!([5, 6, 7]));
    assert_eq!(v["remainder_text"], "<4|[1,2],[1,4],[3,4],[4,3]>");
}

#[test]
fn truncate_refuses_graphs_that_fail_the_axioms() {
    let out = bmg(&["truncate", &fixture("single_edge.txt")]);
    assert_code(&out, 1);
    assert!(stderr_of(&out).contains("not a 2-cBMG"));
}

#[test]
fn decompose_reports_the_dead_end_as_an_outcome() {
    let out = bmg(&["decompose", &fixture("truncation_dead_end.txt")]);
    assert_code(&out, 0);
    let v = json_of(&out);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 2);
    assert_eq!(v["outcome"]["failed"]["remainder_text"], "<2|[1,2]>");
}

#[test]
fn decompose_stops_when_twins_appear() {
    let out = bmg(&["decompose", &fixture("truncation_twins.txt"), "--format", "text"]);
    assert_code(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("vertices=[5, 6, 7]"));
    assert!(text.contains("1 and 2 are equivalent"));
}

#[test]
fn classify_prints_one_row_per_split() {
    let out = bmg(&["classify", "--n", "4", "--format", "text"]);
    assert_code(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "n=4 i=2: A=27 B=14 C=16 D=5 E=2");

    let one = bmg(&["classify", "--n", "5", "--i", "2"]);
    assert_code(&one, 0);
    let rows = json_of(&one);
    assert_eq!(rows[0]["e"], 4);
    assert_eq!(rows.as_array().unwrap().len(), 1);
}

#[test]
fn classify_rejects_a_split_outside_the_range() {
    let out = bmg(&["classify", "--n", "4", "--i", "4"]);
    assert_code(&out, 2);
}

#[test]
fn enumerate_lists_the_two_full_four_vertex_classes() {
    let out = bmg(&["enumerate", "--i", "2", "--j", "2", "--filters", "E", "--format", "text"]);
    assert_code(&out, 0);
    assert_eq!(
        stdout_of(&out),
        "<4|[1,3],[2,3],[2,4],[3,1],[4,1]> colors: 1 2 | 3 4\n\
         <4|[1,4],[2,3],[2,4],[3,1],[3,2],[4,1]> colors: 1 2 | 3 4\n"
    );

    let v = json_of(&bmg(&["enumerate", "--i", "2", "--j", "2", "--filters", "e"]));
    assert_eq!(v["count"], 2);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn enumerate_rejects_an_unknown_filter_letter() {
    let out = bmg(&["enumerate", "--i", "2", "--j", "2", "--filters", "Z"]);
    assert_code(&out, 2);
    assert!(stderr_of(&out).contains("use A-E"));
}

#[test]
fn extend_counts_connected_supergraph_classes() {
    let out = bmg(&["extend", "--base", &fixture("base_seven.txt")]);
    assert_code(&out, 0);
    assert_eq!(json_of(&out)["count"], 8);
}

#[test]
fn extend_can_drop_the_connectivity_filter() {
    let strict = bmg(&["extend", "--base", &fixture("base_eight.txt")]);
    assert_eq!(json_of(&strict)["count"], 12);

    let loose = bmg(&["extend", "--base", &fixture("base_eight.txt"), "--drop-connected"]);
    assert_eq!(json_of(&loose)["count"], 18);
}

#[test]
fn enumerate_refuses_splits_over_the_default_budget() {
    let out = bmg(&["enumerate", "--i", "3", "--j", "5", "--filters", "E"]);
    assert_code(&out, 1);
}

#[test]
fn construct_builds_every_spec_kind() {
    let cases: &[(&str, &str)] = &[
        (
            r#"{"elementary":[{"size":2},{"size":2},{"size":3}]}"#,
            "<7|[1,2],[2,1],[3,4],[4,3],[5,7],[6,7],[7,6]>\ncolors: 1 3 5 6 | 2 4 7",
        ),
        (
            r#"{"family":[[1,1],[2,1]]}"#,
            "<5|[1,2],[1,5],[2,1],[2,3],[2,4],[3,5],[4,5],[5,3],[5,4]>\ncolors: 1 3 4 | 2 5",
        ),
        (r#"{"parity":[2,3,4,7]}"#, "<4|[1,2],[1,4],[2,3],[3,4]>\ncolors: 1 3 | 2 4"),
        (
            r#"{"oddeven":{"evens":[0,2,4,6],"odds":[1,3]}}"#,
            "<4|[1,2],[1,4],[2,3]>\ncolors: 1 3 | 2 4",
        ),
        (
            r#"{"join":{"documents":["<2|[1,2],[2,1]>\ncolors: 1 | 2","<3|[1,3],[2,3],[3,2]>\ncolors: 1 2 | 3"]}}"#,
            "<5|[1,2],[2,1],[3,2],[3,5],[4,5],[5,4]>\ncolors: 1 3 4 | 2 5",
        ),
        (
            r#"{"bitournament":{"a":2,"b":2,"mask":0}}"#,
            "<4|[1,3],[1,4],[2,3],[2,4]>\ncolors: 1 2 | 3 4",
        ),
    ];
    for (spec, want) in cases {
        let out = bmg(&["construct", "--spec", spec, "--format", "text"]);
        assert_code(&out, 0);
        assert_eq!(stdout_of(&out).trim(), *want, "spec: {spec}");
    }
}

#[test]
fn construct_reads_a_spec_from_a_file() {
    let dir = tmp_dir("spec");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("family.json");
    std::fs::write(&path, r#"{"family":[[1,1],[2,1]]}"#).unwrap();
    let arg = format!("@{}", path.display());
    let out = bmg(&["construct", "--spec", &arg, "--format", "text"]);
    assert_code(&out, 0);
    assert!(stdout_of(&out).starts_with("<5|"));
}

#[test]
fn construct_separates_usage_from_domain_errors() {
    let unknown = bmg(&["construct", "--spec", r#"{"mystery":[]}"#]);
    assert_code(&unknown, 2);

    let bad_block = bmg(&["construct", "--spec", r#"{"elementary":[{"size":5}]}"#]);
    assert_code(&bad_block, 1);
    assert!(stderr_of(&bad_block).contains("2 or 3"));

    let not_minimal = bmg(&[
        "construct",
        "--spec",
        r#"{"join":{"documents":["<2|[1,2],[2,1]>\ncolors: 1 | 2"],"from":[1]}}"#,
    ]);
    assert_code(&not_minimal, 1);
}

#[test]
fn from_tree_builds_the_best_match_graph() {
    let out = bmg(&["from-tree", &fixture("tree.txt"), "--format", "text"]);
    assert_code(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "<4|[1,2],[2,1],[3,4],[4,3]>\ncolors: 1 4 | 2 3");

    let v = json_of(&bmg(&["from-tree", &fixture("tree.txt")]));
    assert_eq!(v["leaves"][0]["name"], "a");
    assert_eq!(v["graph"]["n"], 4);
}

#[test]
fn from_tree_grows_reproducible_random_trees() {
    let a = bmg(&["from-tree", "--leaves", "6", "--seed", "3"]);
    let b = bmg(&["from-tree", "--leaves", "6", "--seed", "3"]);
    assert_code(&a, 0);
    assert_eq!(stdout_of(&a), stdout_of(&b));

    let none = bmg(&["from-tree"]);
    assert_code(&none, 2);
}

#[test]
fn canon_reports_a_stable_certificate() {
    let out = bmg(&["canon", &fixture("square_cycle.txt")]);
    assert_code(&out, 0);
    let v = json_of(&out);
    assert_eq!(v["sides"], serde_json::json!([3, 3]));
    assert_eq!(v["bits"], 112603);

    let kept = bmg(&["canon", &fixture("base_eight.txt"), "--keep-sides"]);
    assert_eq!(json_of(&kept)["sides"], serde_json::json!([3, 5]));
}

#[test]
fn iso_accepts_relabelings_and_rejects_the_rest() {
    let canon = bmg(&["canon", &fixture("square_cycle.txt"), "--format", "text"]);
    let line = stdout_of(&canon);
    let rep = line.split_once(' ').unwrap().1.replace(" colors:", "\ncolors:");
    let dir = tmp_dir("iso");
    std::fs::create_dir_all(&dir).unwrap();
    let rep_path = dir.join("rep.txt");
    std::fs::write(&rep_path, rep).unwrap();

    let same = bmg(&["iso", &fixture("square_cycle.txt"), rep_path.to_str().unwrap()]);
    assert_code(&same, 0);
    assert_eq!(json_of(&same)["isomorphic"], true);

    let differ = bmg(&["iso", &fixture("symmetric_pair.txt"), &fixture("single_edge.txt")]);
    assert_code(&differ, 1);
    assert_eq!(json_of(&differ)["isomorphic"], false);
}

#[test]
fn export_dot_marks_symmetric_edges() {
    let out = bmg(&["export-dot", &fixture("symmetric_pair.txt")]);
    assert_code(&out, 0);
    let dot = stdout_of(&out);
    assert!(dot.contains("1 -> 2 [dir=both, style=bold]"));
    assert!(dot.contains("1 [shape=circle]"));
    assert!(dot.contains("2 [shape=box]"));
}

#[test]
fn output_directory_receives_a_named_file() {
    let dir = tmp_dir("outdir");
    let out = bmg(&["check", &fixture("symmetric_pair.txt"), "--out", dir.to_str().unwrap()]);
    assert_code(&out, 0);
    assert!(stdout_of(&out).is_empty());
    let body = std::fs::read_to_string(dir.join("check.json")).unwrap();
    assert!(body.contains("\"is_2cbmg\":true"));
}

#[test]
fn missing_files_are_usage_errors() {
    let out = bmg(&["check", "no-such-file.txt"]);
    assert_code(&out, 2);
    assert!(stderr_of(&out).contains("cannot read"));
}

#[test]
fn worker_count_never_changes_the_bytes() {
    let one = bmg(&["classify", "--n", "5", "--workers", "1"]);
    let four = bmg(&["classify", "--n", "5", "--workers", "4"]);
    assert_eq!(stdout_of(&one), stdout_of(&four));

    let env = Command::new(env!("CARGO_BIN_EXE_bmg"))
        .args(["classify", "--n", "5"])
        .env("BMG_WORKERS", "2")
        .output()
        .expect("binary runs");
    assert_eq!(stdout_of(&one), stdout_of(&env));
}
