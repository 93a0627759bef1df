//! End-to-end checks of the binary: exit codes, output shapes, and JSON
//! round-trips.

use std::io::Write;
use std::process::Command;

use unit_interval::fpt::{Budget, EditingSet};
use unit_interval::graph::Graph;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_uiedit"))
}

fn write_graph(dir: &std::path::Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(text.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("uiedit-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const CLAW: &str = "4 3\n0 1\n0 2\n0 3\n";
const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";
const C6: &str = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";
const W5: &str = "6 10\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 5\n2 5\n3 5\n4 5\n";
const P4: &str = "4 3\n0 1\n1 2\n2 3\n";

#[test]
fn exit_codes_follow_the_answer() {
    let dir = tempdir();
    let claw = write_graph(&dir, "claw.txt", CLAW);
    let c6 = write_graph(&dir, "c6.txt", C6);

    let out = bin().args(["solve", "uied", &claw, "-k", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("YES"));
    assert_eq!(stdout.lines().count(), 2, "one edge line expected: {}", stdout);

    let out = bin()
        .args(["solve", "uie", &c6, "--k1", "0", "--k2", "0", "--k3", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().args(["solve", "uivd", "/nonexistent", "-k", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn recognize_formats() {
    let dir = tempdir();
    let w5 = write_graph(&dir, "w5.txt", W5);
    let out = bin().args(["recognize", &w5]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("FATW5\n"));
    assert_eq!(stdout.lines().filter(|l| l.starts_with("CLASS ")).count(), 6);

    let claw = write_graph(&dir, "claw.txt", CLAW);
    let out = bin().args(["recognize", &claw]).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("WITNESS CLAW "));

    let c6 = write_graph(&dir, "c6.txt", C6);
    let out = bin().args(["recognize", &c6]).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("MODEL\n"));
}

#[test]
fn shortest_hole_output() {
    let dir = tempdir();
    let c6 = write_graph(&dir, "c6.txt", C6);
    let out = bin().args(["shortest-hole", &c6]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let tokens: Vec<&str> = stdout.trim().split_whitespace().collect();
    assert_eq!(tokens[0], "HOLE");
    assert_eq!(tokens.len(), 7);

    let p4 = write_graph(&dir, "p4.txt", P4);
    let out = bin().args(["shortest-hole", &p4]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "CHORDAL");

    let claw = write_graph(&dir, "claw.txt", CLAW);
    let out = bin().args(["shortest-hole", &claw]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_round_trips_and_reverifies() {
    let dir = tempdir();
    let w5 = write_graph(&dir, "w5.txt", W5);
    let g = Graph::parse(W5).unwrap();

    let out = bin()
        .args(["--json", "solve", "uie", &w5, "--k1", "1", "--k2", "1", "--k3", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["answer"], "YES");
    let parse_edges = |key: &str| -> Vec<(usize, usize)> {
        v[key]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                let pair = e.as_array().unwrap();
                (pair[0].as_u64().unwrap() as usize, pair[1].as_u64().unwrap() as usize)
            })
            .collect()
    };
    let sol = EditingSet {
        deleted_vertices: v["vertices_deleted"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize)
            .collect(),
        deleted_edges: parse_edges("edges_deleted"),
        added_edges: parse_edges("edges_added"),
    };
    assert!(sol.verify(&g));
    assert!(sol.fits(Budget::new(1, 1, 1)));

    // formatting never changes the machine contract
    let out_quiet = bin()
        .args(["--quiet", "solve", "uie", &w5, "--k1", "1", "--k2", "1", "--k3", "1"])
        .output()
        .unwrap();
    assert_eq!(out_quiet.status.code(), Some(0));
    assert!(out_quiet.stdout.is_empty());
}

#[test]
fn uie_prints_three_labeled_lines() {
    let dir = tempdir();
    let c4 = write_graph(&dir, "c4.txt", C4);
    let out = bin()
        .args(["solve", "uie", &c4, "--k1", "0", "--k2", "0", "--k3", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "YES");
    assert!(lines[1].starts_with("V-:"));
    assert!(lines[2].starts_with("E-:"));
    assert!(lines[3].starts_with("E+: +"));
}

#[test]
fn certify_flag_and_guard() {
    let dir = tempdir();
    let claw = write_graph(&dir, "claw.txt", CLAW);
    let out = bin().args(["--certify", "solve", "uivd", &claw, "-k", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    // a big unit interval path trips the oracle guard under --certify
    let n = 40;
    let mut text = format!("{} {}\n", n, n - 1);
    for i in 0..n - 1 {
        text.push_str(&format!("{} {}\n", i, i + 1));
    }
    let big = write_graph(&dir, "big.txt", &text);
    let out = bin().args(["--certify", "solve", "uivd", &big, "-k", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn gen_emits_parseable_graphs() {
    let out = bin()
        .args(["gen", "--kind", "phcag", "--n", "8", "--seed", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let g = Graph::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(g.n(), 8);
    assert!(g.is_connected());

    let out = bin()
        .args(["--json", "gen", "--kind", "phcag", "--n", "8", "--seed", "7"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let g2 = Graph::parse(v["graph"].as_str().unwrap()).unwrap();
    assert_eq!(g, g2);
    let model = unit_interval::arc::ArcModel::parse(v["model"].as_str().unwrap()).unwrap();
    assert!(model.verify(&g).all());

    let out = bin()
        .args(["gen", "--kind", "perturbed", "--n", "10", "--seed", "3", "--flips", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    Graph::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
}

#[test]
fn approx_prints_size_then_set() {
    let dir = tempdir();
    let claw = write_graph(&dir, "claw.txt", CLAW);
    let out = bin().args(["approx", "uivd", &claw]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("4"));
    assert_eq!(lines.filter(|l| l.starts_with("x ")).count(), 4);
}
