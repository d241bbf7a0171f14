use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_buildings"))
}

fn symbol(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../symbols").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn build(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = run(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    path
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn flag_artifact_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "flag.json", &["flag", "--n", "3", "--p", "2"]);
    let a = json(&f);
    assert_eq!(a["format"], 1);
    assert_eq!(a["type"], "flag");
    assert_eq!(a["chambers"].as_array().unwrap().len(), 21);
    let o = run(&["verify", p(&f), "--axioms", "B1,B2", "--thick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["reports"][0]["axiom"], "B1-thick");
    let o = run(&["verify", p(&f), "--axioms", "B1',B2'"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn hexagon_is_thin() {
    let dir = tempfile::tempdir().unwrap();
    let sym = symbol("a2.cox");
    let h = build(dir.path(), "hex.json", &["coxeter", "--symbol", p(&sym)]);
    assert_eq!(json(&h)["chambers"].as_array().unwrap().len(), 6);
    assert_eq!(run(&["verify", p(&h), "--axioms", "B1-thick"]).status.code(), Some(1));
    assert_eq!(run(&["verify", p(&h), "--axioms", "B1,B2,B1',B2'"]).status.code(), Some(0));
}

#[test]
fn tree_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let t = build(dir.path(), "tree.json", &["tree", "--q", "2", "--depth", "4"]);
    let a = json(&t);
    assert_eq!(a["type"], "tree");
    assert_eq!(a["chambers"].as_array().unwrap().len(), 61);
    assert_eq!(run(&["verify", p(&t), "--axioms", "B2"]).status.code(), Some(0));
    assert_eq!(run(&["verify", p(&t), "--axioms", "B1-thick"]).status.code(), Some(1));
    let o = run(&["verify", p(&t), "--axioms", "B1'"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: unsupported:"));
    let dot = stdout(&run(&["dot", p(&t)]));
    assert!(dot.starts_with("graph tree {"));
    assert_eq!(dot.matches("fillcolor=black").count() + dot.matches("fillcolor=white").count(), 62);
}

#[test]
fn gb_satisfies_bn() {
    let dir = tempfile::tempdir().unwrap();
    let g = build(dir.path(), "gb.json", &["gb", "--n", "3", "--p", "2"]);
    let o = run(&["verify", p(&g), "--axioms", "BN"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = report["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["axiom"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["BN0", "BN1", "N/T=S_n", "BN2", "BN3"]);
    let f = build(dir.path(), "flag.json", &["flag", "--n", "3"]);
    let o = run(&["verify", p(&f), "--axioms", "BN"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn delta_words() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "flag.json", &["flag", "--n", "3", "--p", "2"]);
    let o = run(&["delta", p(&f), "<100> < <100,010>", "<001> < <010,001>"]);
    assert_eq!(stdout(&o), "s1 s2 s1 = (1,3)\n");
    assert_eq!(stdout(&run(&["delta", p(&f), "4", "4"])), "e\n");
    let o = run(&["delta", p(&f), "0", "21"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: out_of_range:"));

    let s = build(dir.path(), "sp.json", &["sp", "--n", "2", "--p", "2"]);
    let longest: Vec<String> = (0..45)
        .map(|d| stdout(&run(&["delta", p(&s), "0", &d.to_string()])))
        .filter(|w| w.split_whitespace().count() == 4)
        .collect();
    assert_eq!(longest.len(), 16);
    assert!(longest.iter().all(|w| !w.contains('=')));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = build(dir.path(), "a.json", &["sp", "--n", "2"]);
    let b = build(dir.path(), "b.json", &["sp", "--n", "2"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v1 = run(&["verify", p(&a), "--axioms", "B1,B2,B1',B2'"]);
    let v2 = run(&["verify", p(&b), "--axioms", "B1,B2,B1',B2'"]);
    assert_eq!(v1.stdout, v2.stdout);
    assert_eq!(v1.status.code(), Some(0));
}

#[test]
fn failures_are_one_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "flag.json", &["flag", "--n", "2"]);
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["verify", p(&f), "--axioms", "B9"], "error: usage:"),
        (vec!["verify", "/nonexistent.json", "--axioms", "B1"], "error: io:"),
        (vec!["build", "flag", "--n", "5", "--p", "2"], "error: guard_exceeded:"),
        (vec!["build", "flag", "--n", "3", "--p", "4"], "error: not_prime:"),
        (vec!["build", "flag"], "error: usage:"),
        (vec!["build", "coxeter"], "error: usage:"),
        (vec!["bruhat", "--p", "2", "--matrix", "1,1;1,1"], "error: singular:"),
        (vec!["nonsense"], "error: usage:"),
    ];
    for (args, prefix) in cases {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = stderr(&o);
        assert!(err.starts_with(prefix), "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"format\": 7}").unwrap();
    let o = run(&["stats", p(&bad)]);
    assert!(stderr(&o).starts_with("error: format:"));
}

#[test]
fn stats_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let s = build(dir.path(), "sp.json", &["sp", "--n", "2", "--p", "2"]);
    let stats_path = dir.path().join("stats.json");
    assert!(run(&["stats", p(&s), "--out", p(&stats_path)]).status.success());
    let stats = json(&stats_path);
    assert_eq!(stats["chambers"], 45);
    assert_eq!(stats["thick"], true);
    assert_eq!(stats["coxeter_order"], 8);
    assert_eq!(stats["panel_sizes"]["1"]["3"], 15);

    let dot = stdout(&run(&["dot", p(&s), "--incidence"]));
    assert!(dot.starts_with("graph incidence {"));
    assert_eq!(dot.matches(" -- ").count(), 45);
    let chambers = stdout(&run(&["dot", p(&s)]));
    assert!(chambers.starts_with("graph chambers {"));
    // each panel of 3 chambers contributes 3 edges
    assert_eq!(chambers.matches(" -- ").count(), 30 * 3);

    let f = build(dir.path(), "flag.json", &["flag", "--n", "3"]);
    let o = run(&["dot", p(&f), "--incidence"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bruhat_cell_of_a_matrix() {
    let o = run(&["bruhat", "--p", "2", "--matrix", "0,0,1;0,1,0;1,0,0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("w = (1,3)\n"));
    assert!(text.contains("word = s1 s2 s1\n"));
    assert!(text.contains("length = 3\n"));
    let o = run(&["bruhat", "--p", "3", "--matrix", "1,2;0,1"]);
    assert!(stdout(&o).contains("w = ()\n"));
}

#[test]
fn arrangement_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let a = build(dir.path(), "arr.json", &["arrangement", "--n", "3"]);
    let v = json(&a);
    let labels: Vec<&str> = v["chambers"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(labels.len(), 6);
    assert!(!labels.contains(&"++-") && !labels.contains(&"--+"));
    assert_eq!(run(&["verify", p(&a), "--axioms", "B1,B2,B1',B2'"]).status.code(), Some(0));
}
