use std::io::Write;
use std::process::{Command, Stdio};

use orient2::cli::{run, EXIT_BAD_INPUT, EXIT_NEGATIVE, EXIT_OK};
use orient2::codec::{parse_digraph6, to_graph6};
use orient2::oracle::extremal_graph;
use orient2::Graph;

fn call(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["orient2"];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
    }
    Graph::from_edges(10, &edges).unwrap()
}

#[test]
fn orient_k5() {
    let k5 = to_graph6(&Graph::complete(5).unwrap());
    let (code, out, _) = call(&["orient"], &format!("{k5}\n"));
    assert_eq!(code, EXIT_OK);
    let d = parse_digraph6(out.trim()).unwrap();
    assert_eq!(d.underlying(), Graph::complete(5).unwrap());
    assert!(d.has_diameter_at_most_two());
}

#[test]
fn orient_batch_and_json() {
    let input: String =
        (5..9).map(|n| to_graph6(&Graph::complete(n).unwrap()) + "\n").collect();
    let (code, out, _) = call(&["orient", "--json", "--trace"], &input);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    for (line, n) in lines.iter().zip(5..) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["schema"], "orient2/1");
        assert_eq!(v["diameter"], 2);
        assert_eq!(v["arcs"].as_array().unwrap().len(), n * (n - 1) / 2);
        assert_eq!(v["trace"][0]["step"], "pad");
    }
    // Identical input gives identical output.
    assert_eq!(call(&["orient", "--json", "--trace"], &input).1, out);
    let (_, plain, _) = call(&["orient", "--json"], &input);
    assert!(!plain.contains("trace"));
}

#[test]
fn orient_trace_goes_to_stderr_without_json() {
    let k6 = to_graph6(&Graph::complete(6).unwrap());
    let (code, out, err) = call(&["orient", "--trace"], &k6);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1);
    assert!(err.contains("\"step\":\"pad\""), "{err}");
}

#[test]
fn orient_rejects_bad_input() {
    let below = to_graph6(&extremal_graph(7).unwrap());
    let (code, _, err) = call(&["orient"], &below);
    assert_eq!(code, EXIT_BAD_INPUT);
    assert!(err.contains("19"), "message names the required size: {err}");
    let (code, _, _) = call(&["orient"], "D?{?\n");
    assert_eq!(code, EXIT_BAD_INPUT);
    let (code, _, _) = call(&["orient"], "");
    assert_eq!(code, EXIT_BAD_INPUT);
}

#[test]
fn orient_edge_list_file() {
    let dir = std::env::temp_dir().join(format!("orient2-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k5.txt");
    let mut text = String::from("5 10\n");
    for (u, v) in Graph::complete(5).unwrap().edges() {
        text += &format!("{u} {v}\n");
    }
    std::fs::write(&path, text).unwrap();
    let (code, out, _) = call(&["orient", "--file", path.to_str().unwrap()], "");
    assert_eq!(code, EXIT_OK);
    assert!(parse_digraph6(out.trim()).unwrap().has_diameter_at_most_two());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn diameter_command() {
    let input = format!(
        "{}\n{}\n{}\n",
        to_graph6(&petersen()),
        to_graph6(&Graph::path(3).unwrap()),
        to_graph6(&Graph::cycle(5).unwrap())
    );
    let (code, out, _) = call(&["diameter"], &input);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "6\ninfinite\n4\n");
    let k7 = to_graph6(&Graph::complete(7).unwrap());
    assert_eq!(call(&["diameter"], &k7).1, "2\n");
    assert_eq!(call(&["diameter", "--exact"], &k7).1, "2\n");
    let (code, out, _) = call(&["diameter", "--budget", "1"], &to_graph6(&petersen()));
    assert_eq!((code, out.as_str()), (EXIT_NEGATIVE, "indeterminate\n"));
    assert_eq!(call(&["diameter"], "!!").0, EXIT_BAD_INPUT);
}

#[test]
fn verify_and_sharpness() {
    let (code, out, _) = call(&["verify", "--n", "7"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("4 instances checked, 0 failures"), "{out}");
    assert_eq!(call(&["verify", "--n", "9"], "").0, EXIT_OK);
    assert_eq!(call(&["verify", "--n", "4"], "").0, EXIT_BAD_INPUT);
    let (code, out, _) = call(&["sharpness", "--n", "6"], "");
    assert_eq!((code, out.as_str()), (EXIT_OK, "CONFIRMED\n"));
    assert_eq!(call(&["sharpness", "--n", "10"], "").0, EXIT_BAD_INPUT);
    assert_eq!(call(&["sharpness", "--n", "9", "--budget", "1"], "").0, EXIT_NEGATIVE);
}

#[test]
fn classify_command() {
    // Complement is D_{3,4} ∪ 8K_1.
    let mut blue = Graph::empty(15).unwrap();
    for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (2, 3)] {
        blue.add_edge(u, v).unwrap();
    }
    let (code, out, _) = call(&["classify"], &to_graph6(&blue.complement()));
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows.iter().filter(|r| r.contains("PROPER_DUMBBELL(3,4)")).count(), 1);
    assert_eq!(rows.iter().filter(|r| r.contains("\tPATH(1)\t")).count(), 8);
    assert!(rows.contains(&"0,1,2,3,4,5,6\t7\tPROPER_DUMBBELL(3,4)\t3"));

    let (_, out, _) = call(&["classify"], &to_graph6(&Graph::complete(6).unwrap()));
    assert_eq!(out.lines().filter(|r| r.contains("PATH(1)")).count(), 6);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&[], "").0, EXIT_BAD_INPUT);
    assert_eq!(call(&["frobnicate"], "").0, EXIT_BAD_INPUT);
    let (code, out, err) = call(&["--help"], "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.matches("Usage:").count(), 1);
    assert!(err.is_empty());
}

#[test]
fn binary_reads_budget_from_environment() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_orient2"))
        .args(["diameter", "--exact"])
        .env("ORIENT2_BUDGET", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(to_graph6(&petersen()).as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_NEGATIVE));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "indeterminate\n");

    // The flag wins over the environment.
    let mut child = Command::new(env!("CARGO_BIN_EXE_orient2"))
        .args(["diameter", "--budget", "100000000"])
        .env("ORIENT2_BUDGET", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(to_graph6(&petersen()).as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "6\n");
}
