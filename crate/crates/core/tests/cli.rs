use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use homdual::families::{gen_g1, gen_p};

fn homdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homdual")).args(args).env_remove("HOMDUAL_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_graph(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn hom_of_a_graph_with_itself_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(&dir, "g.g", "3 3\n0 1\n1 2\n2 0\n");
    let o = homdual(&["hom", g.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn missing_homomorphism_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cycle = write_graph(&dir, "c.g", "3 3\n0 1\n1 2\n2 0\n");
    let edge = write_graph(&dir, "e.g", "2 1\n0 1\n");
    let o = homdual(&["hom", cycle.to_str().unwrap(), edge.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_duality_prints_one_verdict_per_graph() {
    let o = homdual(&["verify-duality", "P:3", "D:3", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("VERDICT ")).count(), 512);
    assert!(out.lines().any(|l| l == "RESULT ok"));
    for line in out.lines().filter(|l| l.starts_with("VERDICT ")) {
        let verdict = line.rsplit(' ').next().unwrap();
        assert!(verdict == "LEFT" || verdict == "RIGHT", "{line}");
    }
}

#[test]
fn violations_exit_two() {
    let o = homdual(&["verify-duality", "P:3", "D:2", "--n-max", "3", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("VIOLATION"));
}

#[test]
fn worker_count_does_not_change_the_report() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_homdual"))
        .args(["verify-duality", "T2", "G2", "--n-max", "3", "--n-min", "0"])
        .env("HOMDUAL_JOBS", "3")
        .output()
        .unwrap();
    let with_flag = homdual(&["verify-duality", "T2", "G2", "--n-max", "3", "--n-min", "0", "--jobs", "1"]);
    assert_eq!(with_env.stdout, with_flag.stdout);
}

#[test]
fn no_t1_member_maps_to_g1() {
    let dir = tempfile::tempdir().unwrap();
    let g1 = write_graph(&dir, "G1.g", &gen_g1().to_string());
    let o = homdual(&["family-member", "T1", g1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn family_member_prints_a_checkable_witness() {
    let o = homdual(&["family-member", "P:3", "P:3:2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("member P^3_2\n"), "{out}");
}

#[test]
fn gen_emits_the_graph_format() {
    let o = homdual(&["gen", "P", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), gen_p(3, 2).to_string());
    let o = homdual(&["gen", "gadget", "(()())", "+--", "-+-", "--", "+++"]);
    assert_eq!(o.status.code(), Some(0));
    let parsed: homdual::DiGraph = stdout(&o).parse().unwrap();
    assert!(parsed.is_connected());
}

#[test]
fn nfa_output_shape() {
    let o = homdual(&["nfa", "D:2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("3 4"));
    assert!(out.contains("\ninitial 0 1 2\n"), "{out}");
}

#[test]
fn core_and_antichain() {
    let o = homdual(&["core", "path:+-+"]);
    let core: homdual::DiGraph = stdout(&o).parse().unwrap();
    assert!(homdual::digraph::is_isomorphic(&core, &homdual::word("+").path()));
    assert_eq!(homdual(&["antichain", "P:3:0", "P:3:1", "P:3:2"]).status.code(), Some(0));
    let o = homdual(&["antichain", "gadget:():+-:-+:--:++", "gadget:(()()):+-:-+:--:++"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumerate_counts() {
    let out = stdout(&homdual(&["enumerate", "2", "--dedup"]));
    assert!(out.ends_with("count 10\n"));
    let out = stdout(&homdual(&["enumerate", "1"]));
    assert_eq!(out, "graph 1:0\n1 0\ngraph 1:1\n1 1\n0 0\ncount 2\n");
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_graph(&dir, "bad.g", "2 1\n0 5\n");
    let o = homdual(&["core", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(64));
    assert!(!o.stderr.is_empty());
    assert_eq!(homdual(&["hom", "nope.g", "D:3"]).status.code(), Some(64));
    assert_eq!(homdual(&["verify-duality", "P:3", "D:3"]).status.code(), Some(64));
    assert_eq!(homdual(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(homdual(&["verify-duality", "P:3", "D:3", "--n-max", "6"]).status.code(), Some(64));
}
