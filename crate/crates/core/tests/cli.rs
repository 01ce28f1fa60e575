use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quartic-k3")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quartic-k3"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn strata_json_schema() {
    let v = json(&run(&["strata", "--json"]));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 11);
    for r in rows {
        let mut keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["anti_invariant", "c", "delta", "ell", "n", "picard", "rank"]);
    }
    let four_lines = rows.iter().find(|r| r["n"] == 6 && r["c"] == 0).unwrap();
    assert_eq!(four_lines["rank"], 20);
    assert_eq!(four_lines["ell"], 2);
    assert_eq!(four_lines["picard"], "U + A1^2 + E8^2");
}

#[test]
fn strata_text_is_aligned() {
    let out = run(&["strata"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().nth(1).unwrap().starts_with("(0,0)"));
}

#[test]
fn json_output_is_byte_deterministic_with_sorted_keys() {
    let args = ["quartic", "classify", "--json", "--witnesses", "--cover", "y^2*z^2 - x^2*z^2 + x^4 + y^4"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    // serde_json::Value keeps keys sorted, so re-rendering is the identity
    let v = json(&a);
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", stdout(&a));
    assert_eq!(v["class"], "stable");
    assert_eq!(v["singular_type"]["n"], 1);
    assert_eq!(v["cover"]["moduli_location"], "D_{1,0}");
}

#[test]
fn quartic_classify_text_and_type() {
    assert_eq!(stdout(&run(&["quartic", "classify", "x^4 + y^4 + z^4"])).trim(), "stable, type (0,0)");
    assert_eq!(stdout(&run(&["quartic", "classify", "--type", "x*y*(x + y - z)*(x - y + 2*z)"])).trim(), "(6,0)");
    let text = stdout(&run(&["quartic", "classify", "--witnesses", "y^2*z^2 - x^4"]));
    assert!(text.starts_with("strictly_semistable, minimal orbit: two_tangent_conics"), "{text}");
    assert!(text.contains("(admissible)"), "{text}");
    let text = stdout(&run(&["quartic", "classify", "--cover", "(y*z + x^2)^2 + x*y^3"]));
    assert!(text.contains("maps to v0") && text.contains("point_v0_blown_up"), "{text}");
}

#[test]
fn octavic_classify() {
    let v = json(&run(&["octavic", "classify", "--json", "--cover", "x^4*y^4"]));
    assert_eq!(v["class"], "strictly_semistable");
    assert_eq!(v["minimal_orbit"], "two_quadruple_points");
    assert_eq!(v["cover"]["moduli_location"], "boundary_cusp");
    let text = stdout(&run(&["octavic", "classify", "x^2*(x - y)^2*(x + y)^2*y^2"]));
    assert_eq!(text.trim(), "stable, root multiplicities {2,2,2,2}");
}

#[test]
fn stdin_input() {
    let v = json(&run_stdin(&["quartic", "classify", "--json", "-"], "x^3*z + y^4\n"));
    assert_eq!(v["class"], "unstable");
    let v = json(&run_stdin(&["lattice", "invariants", "--json", "-"], "<2>^2 + D4^3"));
    assert_eq!(v["rank"], 14);
    assert_eq!(v["ell"], 8);
}

#[test]
fn lattice_subcommands() {
    let v = json(&run(&["lattice", "roots", "--json", "D4"]));
    assert_eq!(v["count"], 24);
    let v = json(&run(&["lattice", "invariants", "--json", r#"{"gram": [[0, 1], [1, 0]]}"#]));
    assert_eq!(v["det"], "-1");
    let v = json(&run(&["lattice", "complement", "--json", "D4", "--vectors", "1,0,0,0;0,0,1,0"]));
    assert_eq!(v["invariants"]["rank"], 2);
    assert_eq!(v["invariants"]["det"], "4");
    let root = "0,0,1,0,0,0,0,0,0,0,0,0,0,0";
    let v = json(&run(&["lattice", "classify-root", "--json", root]));
    assert_eq!(v["class"], "node_class");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["quartic", "classify", "x^4 + w^4"]).status.code(), Some(1));
    assert_eq!(run(&["quartic", "classify", "x^3"]).status.code(), Some(1));
    // --type needs a stable quartic
    assert_eq!(run(&["quartic", "classify", "--type", "x^3*z + y^4"]).status.code(), Some(1));
    assert_eq!(run(&["lattice", "roots", "U"]).status.code(), Some(1));
    assert_eq!(run(&["quartic"]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["octavic", "classify", "--type", "x^8 + y^8"]).status.code(), Some(64));
    let err = run(&["quartic", "classify", "x^4 + w^4"]);
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));
}
