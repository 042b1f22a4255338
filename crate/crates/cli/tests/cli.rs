use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use spantd_oracle::td::{td_validate, Decomposition};
use spantd_oracle::{gen, OracleGraph};
use tempfile::TempDir;

fn spantd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spantd")).args(args).env("RUST_LOG", "error").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_graph(dir: &TempDir, name: &str, g: &OracleGraph) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, g.to_gr()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn td_of_a_path_validates() {
    let dir = TempDir::new().unwrap();
    let gr = write_graph(&dir, "p20.gr", &gen::path(20));
    let td = dir.path().join("p20.td");
    let out = spantd(&["td", "--gr", s(&gr), "--k", "1", "--out", s(&td), "--validate"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed = Decomposition::parse(&std::fs::read_to_string(&td).unwrap()).unwrap();
    assert!(td_validate(&parsed, &gen::path(20), 14, 3 * 5 + 2).all());
}

#[test]
fn solve_cycle_of_five() {
    let dir = TempDir::new().unwrap();
    let gr = write_graph(&dir, "c5.gr", &gen::cycle(5));
    let out = spantd(&["solve", "--gr", s(&gr), "--k", "2", "--problem", "vc"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "value 3\n");
}

#[test]
fn solve_prints_a_witness() {
    let dir = TempDir::new().unwrap();
    let og = gen::cycle(5);
    let gr = write_graph(&dir, "c5.gr", &og);
    let out = spantd(&["solve", "--gr", s(&gr), "--k", "2", "--problem", "is", "--witness"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("value 2"));
    let chosen: Vec<usize> =
        lines.next().unwrap().strip_prefix("witness ").unwrap().split(' ').map(|v| v.parse::<usize>().unwrap() - 1).collect();
    assert_eq!(chosen.len(), 2);
    assert!(!og.has_edge(chosen[0], chosen[1]));
}

#[test]
fn colouring_without_a_solution() {
    let dir = TempDir::new().unwrap();
    let gr = write_graph(&dir, "c5.gr", &gen::cycle(5));
    let out = spantd(&["solve", "--gr", s(&gr), "--k", "2", "--problem", "qcolor", "--q", "2", "--witness"]);
    assert_eq!(stdout(&out), "value 0\nwitness none\n");
}

#[test]
fn complete_graph_is_too_wide() {
    let dir = TempDir::new().unwrap();
    let gr = write_graph(&dir, "k5.gr", &gen::complete(5));
    let out = spantd(&["td", "--gr", s(&gr), "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("treewidth of G is larger than 1"));
    let out = spantd(&["solve", "--gr", s(&gr), "--k", "1", "--problem", "ds"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_and_io_errors_exit_one() {
    assert_eq!(spantd(&["bogus"]).status.code(), Some(1));
    assert_eq!(spantd(&["td", "--k", "1"]).status.code(), Some(1));
    assert_eq!(spantd(&["td", "--gr", "/nonexistent/x.gr", "--k", "1"]).status.code(), Some(1));
    let dir = TempDir::new().unwrap();
    let gr = dir.path().join("bad.gr");
    std::fs::write(&gr, "p tw 2 1\n1 3\n").unwrap();
    assert_eq!(spantd(&["td", "--gr", s(&gr), "--k", "1"]).status.code(), Some(1));
}

#[test]
fn paths_are_disjoint_sequences() {
    let dir = TempDir::new().unwrap();
    let og = gen::grid(4, 4);
    let gr = write_graph(&dir, "grid.gr", &og);
    let out = spantd(&["paths", "--gr", s(&gr), "--s", "1", "--t", "16", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let paths: Vec<Vec<usize>> = stdout(&out)
        .lines()
        .map(|l| l.split(' ').map(|v| v.parse::<usize>().unwrap() - 1).collect())
        .collect();
    // corner vertices have degree two
    assert_eq!(paths.len(), 2);
    for p in &paths {
        assert_eq!((p[0], p[p.len() - 1]), (0, 15));
        assert!(p.windows(2).all(|w| og.has_edge(w[0], w[1])));
    }
    assert!(paths[0][1..paths[0].len() - 1].iter().all(|v| !paths[1].contains(v)));
}

#[test]
fn separator_is_balanced() {
    let dir = TempDir::new().unwrap();
    let og = gen::path(9);
    let gr = write_graph(&dir, "p9.gr", &og);
    let out = spantd(&["separator", "--gr", s(&gr), "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let sep: Vec<usize> = stdout(&out).split_whitespace().map(|v| v.parse::<usize>().unwrap() - 1).collect();
    assert!(sep.len() <= 4);
    let mut removed = vec![false; 9];
    for &v in &sep {
        removed[v] = true;
    }
    assert!(og.components_without(&removed).iter().all(|c| c.len() <= 6));
}

#[test]
fn oracle_checks_agree() {
    let dir = TempDir::new().unwrap();
    let og = gen::partial_ktree(18, 2, 0.1, &mut gen::rng(3));
    let gr = write_graph(&dir, "kt.gr", &og);
    for args in [
        vec!["--check", "td"],
        vec!["--check", "paths", "--s", "1", "--t", "2"],
        vec!["--check", "solve", "--problem", "maxcut"],
    ] {
        let mut full = vec!["oracle", "--gr", s(&gr), "--k", "2"];
        full.extend(args);
        let out = spantd(&full);
        assert_eq!(out.status.code(), Some(0), "{full:?}");
        assert!(stdout(&out).ends_with("agree\n"));
    }
}

#[test]
fn gen_path_and_cycle() {
    let out = spantd(&["gen", "path", "--n", "5"]);
    let g = OracleGraph::parse_gr(&stdout(&out)).unwrap();
    assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    let out = spantd(&["gen", "cycle", "--n", "6"]);
    assert_eq!(OracleGraph::parse_gr(&stdout(&out)).unwrap().m(), 6);
}

#[test]
fn gen_ktree_is_seeded_and_certified() {
    let run = |seed: &str| stdout(&spantd(&["gen", "ktree", "--n", "100", "--k", "3", "--seed", seed]));
    let text = run("7");
    assert_eq!(text, run("7"));
    assert_ne!(text, run("8"));
    assert!(text.starts_with("c width at most 3\n"));
    let g = OracleGraph::parse_gr(&text).unwrap();
    assert_eq!(g.components().len(), 1);
    // a 3-tree on n vertices has 3n - 6 edges
    assert_eq!(g.m(), 3 * 100 - 6);
}

#[test]
fn gen_round_trips_through_the_loader() {
    let dir = TempDir::new().unwrap();
    let gr = dir.path().join("g.gr");
    let out = spantd(&["gen", "gnp", "--n", "30", "--p", "0.2", "--seed", "5", "--out", s(&gr)]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&gr).unwrap();
    let g = spantd::graph::parse_gr(&text).unwrap();
    let og = OracleGraph::parse_gr(&text).unwrap();
    let mut written = Vec::new();
    spantd::graph::write_gr(&g, &mut written).unwrap();
    assert_eq!(OracleGraph::parse_gr(&String::from_utf8(written).unwrap()).unwrap().edges(), og.edges());
}

#[test]
fn bit_report_goes_to_stderr() {
    let dir = TempDir::new().unwrap();
    let gr = write_graph(&dir, "c5.gr", &gen::cycle(5));
    let out = Command::new(env!("CARGO_BIN_EXE_spantd"))
        .args(["solve", "--gr", s(&gr), "--k", "2", "--problem", "vc"])
        .env("SPANTD_BITS", "1")
        .env("RUST_LOG", "error")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "value 3\n");
    let err = String::from_utf8(out.stderr).unwrap();
    let peak: u64 = err.lines().next().unwrap().split(' ').nth(2).unwrap().parse().unwrap();
    let at_peak: u64 = err.lines().filter(|l| l.starts_with("bits at-peak")).map(|l| l.rsplit(' ').next().unwrap().parse::<u64>().unwrap()).sum();
    assert!(peak > 0);
    assert_eq!(peak, at_peak);
}
