//! End-to-end runs of the `iset` binary: JSON shape, exit codes,
//! determinism, and input round-trips.

use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_iset"))
}

fn run(args: &[&str]) -> (Value, Output) {
    let out = bin().args(args).output().expect("binary runs");
    let report: Value =
        serde_json::from_slice(&out.stdout).expect("stdout is a single JSON report");
    (report, out)
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("iset-cli-test-{name}"));
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn count_path4_is_8() {
    let file = write_temp("p4.g", "n 4\n0 1\n1 2\n2 3\n");
    let (report, out) = run(&["count", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(report["result"]["count"], "8");
    assert_eq!(report["status"], "ok");
    assert_eq!(report["command"], "count");
}

#[test]
fn json_output_is_deterministic() {
    let file = write_temp("det.g", "n 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let first = bin()
        .args(["sandwich", file.to_str().unwrap(), "--lambda", "2/3"])
        .output()
        .unwrap();
    let second = bin()
        .args(["sandwich", file.to_str().unwrap(), "--lambda", "2/3"])
        .output()
        .unwrap();
    let strip = |bytes: &[u8]| {
        let mut v: Value = serde_json::from_slice(bytes).unwrap();
        v.as_object_mut().unwrap().remove("runtime_ms");
        v
    };
    assert_eq!(strip(&first.stdout), strip(&second.stdout));
}

#[test]
fn sandwich_k33_upper_equality() {
    let file = write_temp(
        "k33.b",
        "bip 3 3\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n",
    );
    let (report, out) = run(&["sandwich", file.to_str().unwrap(), "--lambda", "1"]);
    assert!(out.status.success());
    assert_eq!(report["result"]["upper_equality"], true);
    assert_eq!(report["result"]["lower_equality"], false);
    let lo: f64 = report["result"]["exact_log"]["lo"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!((lo - 15f64.ln()).abs() < 1e-12);
}

#[test]
fn extremal_max_encloses_pinned_value() {
    let (report, out) = run(&[
        "extremal", "--dist", "1:2/3,2:1/3", "--lambda", "1", "--mode", "max",
    ]);
    assert!(out.status.success());
    let lo: f64 = report["result"]["log_per_vertex"]["lo"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    let hi: f64 = report["result"]["log_per_vertex"]["hi"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    let pinned = 5f64.ln() / 3.0;
    assert!(lo <= pinned && pinned <= hi);
}

#[test]
fn realize_output_reparses_to_same_distribution() {
    let (report, out) = run(&["realize", "--dist", "1:1/2,2:1/2", "--scale", "12", "--mode", "min"]);
    assert!(out.status.success());
    let text = report["result"]["graph"].as_str().unwrap();
    let reparsed = match iset_core::graph::parse_any(text).unwrap() {
        iset_core::graph::ParsedInput::Graph(g) => g,
        _ => panic!("expected a graph"),
    };
    let dist = iset_core::extremal::DegreeDist::from_graph(&reparsed).unwrap();
    assert_eq!(dist.to_string(), report["result"]["degree_distribution"]);
    assert_eq!(dist.to_string(), "1:1/2,2:1/2");
}

#[test]
fn echoed_graph_text_reparses_identically() {
    let file = write_temp("echo.g", "# a comment\nn 3\n0 1\n");
    let (report, _) = run(&["count", file.to_str().unwrap()]);
    let text = report["inputs"]["text"].as_str().unwrap();
    let reparsed = match iset_core::graph::parse_any(text).unwrap() {
        iset_core::graph::ParsedInput::Graph(g) => g,
        _ => panic!("expected a graph"),
    };
    assert_eq!(reparsed.n(), 3);
    assert_eq!(reparsed.edges(), vec![(0, 1)]);
}

#[test]
fn exit_codes() {
    let p4 = write_temp("codes.g", "n 4\n0 1\n1 2\n2 3\n");
    let ok = bin().args(["count", p4.to_str().unwrap()]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));

    let usage = bin().args(["definitely-not-a-command"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&usage.stdout).unwrap();
    assert_eq!(report["status"], "error");

    let end_vertex = bin()
        .args(["induction", p4.to_str().unwrap(), "--vertex", "0", "--lambda", "1"])
        .output()
        .unwrap();
    assert_eq!(end_vertex.status.code(), Some(1));

    let budget = bin()
        .args(["count", "--random-n", "40", "--random-p", "1/2", "--budget", "10"])
        .output()
        .unwrap();
    assert_eq!(budget.status.code(), Some(3));
    let report: Value = serde_json::from_slice(&budget.stdout).unwrap();
    assert_eq!(report["status"], "indeterminate");
}

#[test]
fn stdin_input() {
    let mut child = bin()
        .args(["count", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"n 2\n0 1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["count"], "3");
}

#[test]
fn random_input_is_seeded_and_documented() {
    let a = run(&["count", "--random-n", "10", "--random-p", "1/3", "--seed", "5"]);
    let b = run(&["count", "--random-n", "10", "--random-p", "1/3", "--seed", "5"]);
    assert_eq!(a.0["result"]["count"], b.0["result"]["count"]);
    assert_eq!(a.0["inputs"]["source"]["generator"], "splitmix64");
    assert_eq!(a.0["inputs"]["source"]["seed"], "5");
}

#[test]
fn lemma_verdict_and_witnessless_holds() {
    let (report, out) = run(&[
        "lemmas", "--which", "a1", "--delta", "2", "--lambda", "1", "--grid", "8",
    ]);
    assert!(out.status.success());
    assert_eq!(report["result"]["verdict"], "holds");
    assert!(report["result"].get("witness").is_none());
    let bits = report["precision_bits"].as_u64().unwrap();
    assert!(bits >= 128 && bits <= 4096);
}

#[test]
fn bounds_regular_closed_forms() {
    let (report, out) = run(&["bounds", "--n", "4", "--d", "0", "--lambda", "3"]);
    assert!(out.status.success());
    let lo: f64 = report["result"]["lower"]["lo"].as_str().unwrap().parse().unwrap();
    let hi: f64 = report["result"]["upper"]["hi"].as_str().unwrap().parse().unwrap();
    assert!((lo - 256.0).abs() < 1e-9 && (hi - 256.0).abs() < 1e-9);
}
