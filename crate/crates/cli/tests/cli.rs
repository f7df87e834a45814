use std::io::Write;
use std::process::{Command, Output, Stdio};

use critgraph::graph6::parse_graph6;
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_critgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_then_analyze_fig1() {
    let gen = run(&["gen", "fig1_nine_vertex"], "");
    assert!(gen.status.success());
    let out = run(&["analyze"], &stdout(&gen));
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let r = &v["result"][0];
    assert_eq!(r["gamma"], 3);
    assert_eq!(r["vertex_critical"], true);
    assert_eq!(r["deficiency"], 3);
    assert_eq!(r["near_pm"], false);
    assert_eq!(r["near_pm_witness"]["s"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["seed"], 0);
}

#[test]
fn gen_cocktail_party() {
    let out = run(&["gen", "cocktail_party", "3"], "");
    let g = parse_graph6(stdout(&out).trim()).unwrap();
    assert_eq!((g.order(), g.edge_count()), (6, 12));
}

#[test]
fn verify_odd_matching_exhaustive() {
    let out = run(&["verify", "matching:7:odd", "--exhaustive", "9"], "");
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let exc = v["result"]["exceptions"].as_array().unwrap();
    assert_eq!(exc.len(), 1);
    assert_eq!(exc[0]["graph6"], "H??@}Zo");
    assert_eq!(v["config"]["command"]["suite"], "matching:7:odd");

    let g6 = run(&["verify", "matching", "--k", "7", "--parity", "odd", "--exhaustive", "9", "--format", "graph6"], "");
    assert_eq!(stdout(&g6), "H??@}Zo\n");
}

#[test]
fn csv_columns_are_fixed() {
    let out = run(&["verify", "2critical", "--exhaustive", "5", "--format", "csv"], "");
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("order,candidates,passed,violations,exceptions"));
    assert_eq!(lines.next(), Some("1,0,0,0,0"));
    assert_eq!(lines.nth(1), Some("3,0,0,0,0"));
}

#[test]
fn violations_exit_one() {
    // Order 4 claimed complete but C_4 is absent.
    let out = run(&["verify", "2critical", "--assume-exhaustive", "-"], "C?\n");
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["violations"][0]["graph6"], "C]");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "matching:7:even", "--exhaustive", "3"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "bogus", "--exhaustive", "3"], "").status.code(), Some(2));
    assert_eq!(run(&["filter", "-p", "colour=3"], "A_\n").status.code(), Some(2));
    assert_eq!(run(&["analyze"], "not graph6\n").status.code(), Some(2));
    assert_eq!(run(&["gen", "nonsense"], "").status.code(), Some(2));
    assert_eq!(run(&["search", "case9"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(run(&["verify", "2critical", "--exhaustive", "10"], "").status.code(), Some(2));
}

#[test]
fn filter_streams_graph6() {
    let all = run(&["gen", "enumerate", "6"], "");
    let out = run(&["filter", "-p", "gamma=2", "-p", "vertex-critical", "-"], &stdout(&all));
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 1);
    let g = parse_graph6(&lines[0]).unwrap();
    assert_eq!((g.order(), g.edge_count()), (6, 12));
}

#[test]
fn search_outputs_reparse() {
    let out = run(&["search", "case4.2", "--format", "graph6"], "");
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 2);
    for l in lines {
        assert_eq!(parse_graph6(l).unwrap().order(), 15);
    }
    let json = run(&["search", "case3.2:6"], "");
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert!(v["result"]["count"].as_u64().unwrap() >= 1);
}

#[test]
fn identical_across_workers_and_seeded() {
    let args = |w: &'static str| ["verify", "facts", "--exhaustive", "8", "--sample", "500", "--seed", "7", "--workers", w];
    let one = run(&args("1"), "");
    let four = run(&args("4"), "");
    assert_eq!(one.stdout, four.stdout);
    let v: Value = serde_json::from_str(&stdout(&one)).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["result"]["coverage"], "sampled");

    let r1 = run(&["gen", "random", "9", "--count", "5", "--seed", "3"], "");
    let r2 = run(&["gen", "random", "9", "--count", "5", "--seed", "3", "--workers", "2"], "");
    assert_eq!(r1.stdout, r2.stdout);
    assert_eq!(stdout(&r1).lines().count(), 5);
}

#[test]
fn inline_graph6_and_strict_reading() {
    let out = run(&["analyze", "-g", "C]", "--reading", "strict"], "");
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"][0]["gamma"], 2);
    assert_eq!(v["config"]["command"]["reading"], "strict");
}
