use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn edgereg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgereg")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    let out = edgereg(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn betti_entries(v: &Value) -> Vec<(u64, u64, u64)> {
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["beta"].as_u64().unwrap()))
        .collect()
}

const C4_EDGES: &str = "4\n1 2\n2 3\n3 4\n4 1\n";

#[test]
fn square_has_regularity_three() {
    let v = json(&["reg", C4_EDGES]);
    assert_eq!(v["reg"], 3);
    assert_eq!(v["zero_ideal"], false);
    assert_eq!(v["graph"], "Cl");
}

#[test]
fn tree_has_regularity_two() {
    let v = json(&["reg", "5\n1 2\n1 3\n3 4\n3 5\n", "--verify"]);
    assert_eq!(v["reg"], 2);
    assert_eq!(v["oracle"], 2);
    assert_eq!(v["consistent"], true);
}

#[test]
fn complete_graph_is_the_zero_ideal() {
    let v = json(&["reg", "D~{"]);
    assert_eq!(v["reg"], Value::Null);
    assert_eq!(v["zero_ideal"], true);
    let text = edgereg(&["reg", "D~{"]);
    assert!(text.status.success());
    assert!(String::from_utf8_lossy(&text.stdout).contains("zero ideal"));
}

#[test]
fn trace_json_schema() {
    let v = json(&["reg", "Dhc", "--trace", "--verify"]);
    let trace = &v["trace"];
    assert_eq!(trace["input"], "Dhc");
    assert_eq!(trace["reg"], 3);
    assert!(trace["flags"].is_array());
    let steps = trace["steps"].as_array().unwrap();
    assert!(!steps.is_empty());
    for s in steps {
        assert!(s["rule"].is_string() && s["before"].is_string());
        assert_eq!(s["verified"], true);
    }
    assert!(steps.last().unwrap()["after"].is_null());
}

#[test]
fn split_trace_records_both_parts() {
    // two squares sharing vertex 4
    let g = "7\n1 2\n2 3\n3 4\n1 4\n4 5\n5 6\n6 7\n4 7\n";
    let v = json(&["reg", g, "--trace"]);
    assert_eq!(v["reg"], 3);
    let first = &v["trace"]["steps"][0];
    assert!(first["rule"].as_str().unwrap().starts_with("Split("));
    assert!(first["after"]["P"].is_string() && first["after"]["Q"].is_string());
    assert_eq!(v["trace"]["flags"].as_array().unwrap().len(), 1);
}

#[test]
fn betti_tables() {
    let c4 = json(&["betti", C4_EDGES]);
    assert_eq!(betti_entries(&c4), vec![(0, 2, 2), (1, 4, 1)]);
    assert_eq!(c4["reg"], 3);

    let principal = json(&["betti", "--ideal", "(x1x2)"]);
    assert_eq!(betti_entries(&principal), vec![(0, 2, 1)]);

    let c5 = json(&["betti", "Dhc"]);
    assert_eq!((c5["reg"].as_u64(), c5["pd"].as_u64()), (Some(3), Some(2)));
    assert_eq!(c5["field"], "Q");
}

#[test]
fn betti_over_a_prime_field() {
    let v = json(&["betti", "Dhc", "--field", "gf:2"]);
    assert_eq!(v["field"], "GF(2)");
    assert_eq!(v["reg"], 3);
}

#[test]
fn dual_examples() {
    let gens = |v: &Value| v["gens"].clone();
    assert_eq!(gens(&json(&["dual", "--ideal", "(x1x2, x2x3)"])), serde_json::json!([[2], [1, 3]]));
    assert_eq!(gens(&json(&["dual", "--ideal", "(x1x3, x2x4)"])), serde_json::json!([[1, 2], [2, 3], [1, 4], [3, 4]]));
    assert_eq!(gens(&json(&["dual", "--ideal", "(x1, x2)"])), serde_json::json!([[1, 2]]));
}

#[test]
fn chordality_certificates() {
    let c4 = json(&["chordal", "Cl"]);
    assert_eq!(c4["chordal"], false);
    assert_eq!(c4["certificate"]["kind"], "chordless_cycle");
    assert_eq!(c4["certificate"]["vertices"], serde_json::json!([1, 2, 3, 4]));

    let path = json(&["chordal", "3\n1 2\n2 3\n"]);
    assert_eq!(path["chordal"], true);
    assert_eq!(path["certificate"]["vertices"].as_array().unwrap().len(), 3);
}

#[test]
fn reads_stdin_and_files() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgereg"))
        .args(["reg", "-", "--output", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(C4_EDGES.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reg"], 3);

    let path = std::env::temp_dir().join(format!("edgereg-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, "Dhc\n").unwrap();
    let v = json(&["reg", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["reg"], 3);
}

#[test]
fn format_override() {
    let v = json(&["reg", "Cl", "--format", "graph6"]);
    assert_eq!(v["reg"], 3);
    let bad = edgereg(&["reg", "Cl", "--format", "edgelist"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_with_two() {
    let out = edgereg(&["reg", "C~x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
    assert_eq!(edgereg(&["reg", "3\n1 4\n"]).status.code(), Some(2));
    assert_eq!(edgereg(&["betti", "--ideal", "(x1^2)"]).status.code(), Some(2));
    assert_eq!(edgereg(&["reg", "Cl", "--field", "gf:4"]).status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_with_two() {
    let out = edgereg(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cycle_suite_up_to_nine() {
    let v = json(&["verify", "cycles", "--max-n", "9"]);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["checked"], 12);
}

#[test]
fn seeded_suites_are_deterministic() {
    let args = ["verify", "reductions", "--max-n", "5", "--samples", "20", "--seed", "42"];
    let a = json(&args);
    let b = json(&args);
    assert_eq!(a, b);
    assert_eq!(a["failures"], 0);
}

#[test]
fn suite_reads_a_graph_stream() {
    let path = std::env::temp_dir().join(format!("edgereg-cli-graphs-{}.g6", std::process::id()));
    let petersen = "IheA@GUAo";
    std::fs::write(&path, format!("{petersen}\nFhCKG\n")).unwrap();
    let v = json(&["verify", "froberg", "--max-n", "3", "--graphs", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["failures"], 0);
    // one non-complete graph on 2 vertices, seven on 3, plus the two supplied
    assert_eq!(v["checked"], 1 + 7 + 2);
}
