//! End-to-end checks of the binary: subcommand output, exit codes, and
//! report determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_cliquecheck");

const K4_MINUS_EDGE: &str = "p edge 4 5\ne 1 2\ne 2 3\ne 3 4\ne 1 3\ne 2 4\n";
const TRIANGLE: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";

fn write_graph(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn decide_claims_triangle_in_k4_minus_edge() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", K4_MINUS_EDGE);
    let out = run(&["decide", "--input", &input, "--k", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["claimed"], "yes");
    assert_eq!(v["final_t_size"], 3);
    assert_eq!(v["short_circuited"], false);
}

#[test]
fn decide_trace_emits_one_json_line_per_step() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", K4_MINUS_EDGE);
    let out = run(&["decide", "--input", &input, "--k", "3", "--trace"]);
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 2); // one step, then the outcome
    let step: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(step["kind"], "single");
    assert_eq!(step["removed"], serde_json::json!([1]));
    assert_eq!(step["charged"], 2);
}

#[test]
fn maximize_reports_scan() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", K4_MINUS_EDGE);
    let v = stdout_json(&run(&["maximize", "--input", &input]));
    assert_eq!(v["claimed_size"], 3);
    assert_eq!(v["per_k"][0]["k"], 4);
    assert_eq!(v["per_k"][0]["short_circuited"], true);
    assert_eq!(v["per_k"][1]["k"], 3);
    assert_eq!(v["per_k"][1]["claimed"], "yes");
}

#[test]
fn flow_with_and_without_interdiction() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", K4_MINUS_EDGE);
    let out = run(&["flow", "--input", &input]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "4");
    let out = run(&["flow", "--input", &input, "--interdict", "0,3"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");
}

#[test]
fn oracle_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", K4_MINUS_EDGE);
    let v = stdout_json(&run(&["oracle", "max-clique", "--input", &input]));
    assert_eq!(v["size"], 3);
    assert_eq!(v["vertices"], serde_json::json!([1, 2, 3]));

    let v = stdout_json(&run(&[
        "oracle",
        "interdiction",
        "--input",
        &input,
        "--budget",
        "2",
    ]));
    assert_eq!(v["min_flow"], 3);
    assert_eq!(v["budget_used"], 2);
}

#[test]
fn verify_record_fields() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", TRIANGLE);
    let v = stdout_json(&run(&["verify", "--input", &input, "--k", "3"]));
    assert_eq!(v["claimed"], "yes");
    assert_eq!(v["oracle"], "yes");
    assert_eq!(v["agree"], true);
    assert_eq!(v["n"], 3);
}

#[test]
fn audit_reports_flow_against_survivors() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", K4_MINUS_EDGE);
    let v = stdout_json(&run(&["audit", "--input", &input, "--k", "3"]));
    assert_eq!(v["removed"], serde_json::json!([1]));
    assert_eq!(v["charged_total"], 2);
    assert_eq!(v["true_arc_count"], 2);
    assert_eq!(v["actual_flow"], 3);
    assert_eq!(v["flow_equals_final_t"], true);
}

#[test]
fn reduce_dumps_layers_and_arcs() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", TRIANGLE);
    let v = stdout_json(&run(&["reduce", "--input", &input]));
    assert_eq!(v["layers"]["source"], 0);
    assert_eq!(v["layers"]["sink"], 7);
    assert_eq!(v["arcs"].as_array().unwrap().len(), 12);
}

#[test]
fn stdin_input() {
    let mut child = Command::new(BIN)
        .args(["decide", "--input", "-", "--k", "3"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(TRIANGLE.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["claimed"], "yes");
}

#[test]
fn hunt_exhaustive_json_and_csv() {
    let out = run(&["hunt", "--mode", "exhaustive", "--n", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["summary"]["total"], 16);
    assert_eq!(v["meta"]["mode"], "exhaustive");

    let out = run(&["hunt", "--mode", "exhaustive", "--n", "3", "--format", "csv"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 17);
    assert!(text.starts_with("n,edges,k,claimed,oracle,agree,short_circuited"));
}

#[test]
fn hunt_is_byte_deterministic() {
    let args = [
        "hunt", "--mode", "random", "--n", "9", "--p", "0.5", "--trials", "5", "--seed", "11",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_graph(&dir, "g.clq", TRIANGLE);

    // 0: success
    assert_eq!(
        run(&["decide", "--input", &input, "--k", "2"])
            .status
            .code(),
        Some(0)
    );

    // 1: usage errors (bad flag, bad k, bad mode, exhaustive guard)
    assert_eq!(run(&["decide", "--wat"]).status.code(), Some(1));
    assert_eq!(
        run(&["decide", "--input", &input, "--k", "9"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["hunt", "--mode", "sideways", "--n", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["hunt", "--mode", "exhaustive", "--n", "7"]).status.code(),
        Some(1)
    );

    // 2: input parse errors
    let bad = write_graph(&dir, "bad.clq", "p edge 3 2\ne 1 2\n");
    assert_eq!(
        run(&["decide", "--input", &bad, "--k", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["decide", "--input", "/definitely/missing.clq", "--k", "2"])
            .status
            .code(),
        Some(2)
    );

    // 3: expectation failure; n=4 still agrees everywhere, n=5 does not
    assert_eq!(
        run(&["hunt", "--mode", "exhaustive", "--n", "4", "--expect-agreement"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["hunt", "--mode", "exhaustive", "--n", "5", "--expect-agreement"])
            .status
            .code(),
        Some(3)
    );
}
