//! End-to-end tests driving the compiled binary: documented example
//! invocations, exit codes, batch sources, and output determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn olg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_olg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn olg_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_olg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn verify_all_identities_on_the_complete_graph() {
    let out = olg(&["verify", "--identity", "all", "--in", "complete:4"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    for line in lines {
        assert!(line.ends_with(": equal"), "unexpected line {line:?}");
    }
}

#[test]
fn star_coloring_of_the_four_vertex_path() {
    let out = olg(&["starcolor", "--in", "path:4"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("star chromatic number 3"));
}

#[test]
fn factored_doubled_spectrum_of_petersen() {
    let out = olg(&["charpoly", "--matrix", "lstar", "--in", "petersen"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("(x-4)(x-2)^11x^5(x+1)^4(x+2)^5(x+3)^4"));
}

#[test]
fn json_output_is_deterministic_and_line_delimited() {
    let args = ["verify", "--identity", "all", "--in", "petersen", "--json"];
    let first = olg(&args);
    let second = olg(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(
        first.stdout, second.stdout,
        "repeat runs must be byte-identical"
    );
    for line in stdout_of(&first).lines() {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid JSON line");
        assert_eq!(value["verdict"], "equal");
    }
}

#[test]
fn irregular_input_exits_with_code_two() {
    let out = olg(&["verify", "--identity", "lstar", "--in", "path:4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not regular"));
}

#[test]
fn failed_search_exits_with_code_one() {
    let out = olg(&["starcolor", "--in", "complete:4", "--qmax", "2"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn covering_map_search_between_derived_graphs() {
    let out = olg(&[
        "hom",
        "--kind",
        "lbh",
        "--src",
        "lstar:complete:4",
        "--dst",
        "line:complete:4",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).starts_with("lbh: ["));

    let none = olg(&[
        "hom",
        "--kind",
        "lbh",
        "--src",
        "complete:4",
        "--dst",
        "complete_bipartite:3:3",
    ]);
    assert_eq!(exit_code(&none), 1);
}

#[test]
fn injective_map_check_accepts_the_alternating_path_map() {
    let out = olg(&[
        "hom",
        "--kind",
        "onih",
        "--src",
        "orient:path:4",
        "--dst",
        "dcomplete:2",
        "--map",
        "[0,1,0,1]",
    ]);
    assert_eq!(exit_code(&out), 0);

    let bad = olg(&[
        "hom",
        "--kind",
        "onih",
        "--src",
        "orient:path:4",
        "--dst",
        "dcomplete:2",
        "--map",
        "[0,1,1,0]",
    ]);
    assert_eq!(exit_code(&bad), 1);
}

#[test]
fn divisibility_report_exit_codes() {
    let pass = olg(&["stardiv", "--in", "lstar:complete:4", "--p", "2"]);
    assert_eq!(exit_code(&pass), 0);
    assert!(stdout_of(&pass).contains("division: exact, quotient 1"));

    let reject = olg(&["stardiv", "--in", "cycle:5", "--p", "2"]);
    assert_eq!(exit_code(&reject), 2);
    assert!(stdout_of(&reject).contains("not 4-regular"));
}

#[test]
fn arc_digraph_construction_matches_the_frozen_arc_list() {
    let out = olg(&["build", "--op", "olg", "--in", "Cj", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(value["vertices"], 8);
    assert_eq!(
        value["arcs"],
        serde_json::json!([
            [0, 2],
            [0, 3],
            [2, 5],
            [3, 7],
            [4, 1],
            [4, 3],
            [5, 6],
            [6, 1],
            [6, 2],
            [7, 4]
        ])
    );
}

#[test]
fn stdin_batch_reports_in_input_order() {
    let out = olg_with_stdin(&["starcolor", "--in", "-", "--json"], "C~\nDhc\n");
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["graph"], "C~");
    assert_eq!(lines[0]["q"], 4);
    assert_eq!(lines[1]["graph"], "Dhc");
    assert_eq!(lines[1]["q"], 4);
}

#[test]
fn explicit_orientation_matches_the_automatic_one() {
    let auto = olg(&["charpoly", "--matrix", "signed", "--in", "complete:4"]);
    let explicit = olg(&[
        "charpoly",
        "--matrix",
        "signed",
        "--in",
        "complete:4",
        "--orient",
        "0>1,0>2,0>3,1>2,1>3,2>3",
    ]);
    assert_eq!(exit_code(&auto), 0);
    assert_eq!(exit_code(&explicit), 0);
    assert_eq!(auto.stdout, explicit.stdout);

    let reversed = olg(&[
        "charpoly",
        "--matrix",
        "signed",
        "--in",
        "complete:4",
        "--orient",
        "1>0,2>0,3>0,2>1,3>1,3>2",
    ]);
    assert_eq!(exit_code(&reversed), 0);
    assert!(stdout_of(&reversed).contains("(x-2)^3(x+2)^3"));
}

#[test]
fn malformed_sources_exit_with_code_two() {
    for args in [
        vec!["charpoly", "--matrix", "lstar", "--in", "complete:zero"],
        vec!["charpoly", "--matrix", "nope", "--in", "complete:4"],
        vec!["build", "--op", "olg", "--in", "!!not-graph6!!"],
        vec![
            "hom",
            "--kind",
            "onih",
            "--src",
            "petersen",
            "--dst",
            "dcomplete:3",
        ],
    ] {
        let out = olg(&args);
        assert_eq!(exit_code(&out), 2, "args {args:?}");
        assert!(
            !out.stderr.is_empty(),
            "args {args:?} must explain on stderr"
        );
    }
}
