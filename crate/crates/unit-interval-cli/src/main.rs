//! `uiedit`: recognize unit interval and proper Helly circular-arc graphs,
//! and compute vertex-deletion, edge-deletion, or mixed editing sets.
//!
//! Exit codes: 0 = YES/success, 1 = NO, 2 = input error, 3 = guard
//! violation (an oracle size limit was hit under `--certify`).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use unit_interval::arc::ArcModel;
use unit_interval::fpt::{self, Budget, EditingSet};
use unit_interval::graph::{EdgeSet, Graph, VertexSet};
use unit_interval::holes;
use unit_interval::oracle;
use unit_interval::recognition::{
    recognize_f_free, recognize_phcag, PhcagOutcome, RecognitionOutcome,
};

#[derive(Parser)]
#[command(name = "uiedit", version, about)]
struct Cli {
    /// Re-verify the answer against the brute-force oracle before printing
    /// (refuses instances beyond the oracle's size guard).
    #[arg(long, global = true)]
    certify: bool,
    /// Machine-readable single-line JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress normal output; the exit code carries the answer.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph: arc model, forbidden witness, or fat 5-wheel.
    Recognize { file: String },
    /// Shortest hole of a proper Helly circular-arc graph, or CHORDAL.
    #[command(name = "shortest-hole")]
    ShortestHole { file: String },
    /// Decide a modification problem within a budget.
    Solve {
        #[command(subcommand)]
        problem: SolveProblem,
    },
    /// Approximation algorithms.
    Approx {
        #[command(subcommand)]
        problem: ApproxProblem,
    },
    /// Generate test instances.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Number of random edge flips for perturbed instances.
        #[arg(long, default_value_t = 3)]
        flips: usize,
        /// Also print the arc model after the graph (phcag only).
        #[arg(long)]
        with_model: bool,
    },
}

#[derive(Subcommand)]
enum SolveProblem {
    /// Unit interval vertex deletion: at most k deletions.
    Uivd {
        file: String,
        #[arg(short)]
        k: usize,
    },
    /// Unit interval edge deletion: at most k deletions.
    Uied {
        file: String,
        #[arg(short)]
        k: usize,
    },
    /// Unit interval editing under componentwise budgets.
    Uie {
        file: String,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long)]
        k3: usize,
    },
}

#[derive(Subcommand)]
enum ApproxProblem {
    /// Factor-6 approximation for minimum vertex deletion.
    Uivd { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Phcag,
    Perturbed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

struct Output {
    json: bool,
    quiet: bool,
}

impl Output {
    fn emit(&self, text: &str, value: serde_json::Value) {
        if self.quiet {
            return;
        }
        if self.json {
            println!("{}", value);
        } else {
            println!("{}", text);
        }
    }
}

const ORACLE_GUARD_N: usize = 14;

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let out = Output { json: cli.json, quiet: cli.quiet };
    match &cli.command {
        Command::Recognize { file } => {
            let g = read_graph(file)?;
            if !g.is_connected() {
                return Err("recognition needs a connected graph".into());
            }
            match recognize_f_free(&g).map_err(|e| e.to_string())? {
                RecognitionOutcome::Phcag(m) => {
                    if cli.certify && !m.verify(&g).all() {
                        return Err("internal: emitted model failed verification".into());
                    }
                    out.emit(
                        &format!("MODEL\n{}", m.to_text().trim_end()),
                        json_object("MODEL", &[], &[], &[], "model", json!({ "model": m.to_text() })),
                    );
                }
                RecognitionOutcome::Witness(w) => {
                    if cli.certify && !w.verify(&g) {
                        return Err("internal: emitted witness failed verification".into());
                    }
                    out.emit(
                        &w.to_line(),
                        json_object(
                            "WITNESS",
                            &[],
                            &[],
                            &[],
                            w.kind(),
                            json!({ "witness_vertices": w.vertices() }),
                        ),
                    );
                }
                RecognitionOutcome::FatW5(f) => {
                    if cli.certify && !f.verify(&g) {
                        return Err("internal: emitted partition failed verification".into());
                    }
                    let classes: Vec<Vec<usize>> = f.classes().cloned().collect();
                    out.emit(
                        &format!("FATW5\n{}", f.to_lines().trim_end()),
                        json_object("FATW5", &[], &[], &[], "fat-w5", json!({ "classes": classes })),
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ShortestHole { file } => {
            let g = read_graph(file)?;
            if !g.is_connected() {
                return Err("shortest-hole needs a connected graph".into());
            }
            let model = match recognize_phcag(&g).map_err(|e| e.to_string())? {
                PhcagOutcome::Model(m) => m,
                PhcagOutcome::Witness(w) => {
                    return Err(format!(
                        "input is not a proper Helly circular-arc graph ({})",
                        w.to_line()
                    ));
                }
            };
            if g.is_chordal().is_chordal() {
                out.emit("CHORDAL", json_object("CHORDAL", &[], &[], &[], "none", json!({})));
                return Ok(ExitCode::SUCCESS);
            }
            let hole = holes::shortest_hole(&g, &model).map_err(|e| e.to_string())?;
            if cli.certify {
                if g.n() > 16 {
                    return Ok(guard_violation(&out, "hole oracle limited to n <= 16"));
                }
                let brute = oracle::brute_shortest_hole(&g).map_err(|e| e.to_string())?;
                if brute != Some(hole.len()) {
                    return Err("internal: hole length disagrees with the oracle".into());
                }
            }
            let text = format!(
                "HOLE {}",
                hole.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            );
            out.emit(&text, json_object("HOLE", &[], &[], &[], "hole", json!({ "hole": hole })));
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { problem } => match problem {
            SolveProblem::Uivd { file, k } => {
                let g = read_graph(file)?;
                match fpt::solve_uivd(&g, *k) {
                    Some(sol) => {
                        if cli.certify {
                            if g.n() > ORACLE_GUARD_N {
                                return Ok(guard_violation(&out, "oracle limited to n <= 14"));
                            }
                            let (h, _) = g.remove_vertices(&sol).map_err(|e| e.to_string())?;
                            if !oracle::is_unit_interval_bruteforce(&h) {
                                return Err("internal: deletion set failed the oracle".into());
                            }
                        }
                        let mut text = String::from("YES");
                        for &v in &sol {
                            text.push_str(&format!("\nx {}", v));
                        }
                        out.emit(&text, json_object("YES", &sol, &[], &[], "vertex-set", json!({})));
                        Ok(ExitCode::SUCCESS)
                    }
                    None => {
                        out.emit("NO", json_object("NO", &[], &[], &[], "none", json!({})));
                        Ok(ExitCode::from(1))
                    }
                }
            }
            SolveProblem::Uied { file, k } => {
                let g = read_graph(file)?;
                match fpt::solve_uied(&g, *k) {
                    Some(sol) => {
                        if cli.certify {
                            if g.n() > ORACLE_GUARD_N {
                                return Ok(guard_violation(&out, "oracle limited to n <= 14"));
                            }
                            if !oracle::is_unit_interval_bruteforce(&g.remove_edges(&sol)) {
                                return Err("internal: edge set failed the oracle".into());
                            }
                        }
                        let mut text = String::from("YES");
                        for &(u, v) in &sol {
                            text.push_str(&format!("\n- {} {}", u, v));
                        }
                        out.emit(&text, json_object("YES", &[], &sol, &[], "edge-set", json!({})));
                        Ok(ExitCode::SUCCESS)
                    }
                    None => {
                        out.emit("NO", json_object("NO", &[], &[], &[], "none", json!({})));
                        Ok(ExitCode::from(1))
                    }
                }
            }
            SolveProblem::Uie { file, k1, k2, k3 } => {
                let g = read_graph(file)?;
                match fpt::solve_uie(&g, Budget::new(*k1, *k2, *k3)) {
                    Some(sol) => {
                        if cli.certify {
                            if g.n() > ORACLE_GUARD_N {
                                return Ok(guard_violation(&out, "oracle limited to n <= 14"));
                            }
                            if !certify_editing(&g, &sol) {
                                return Err("internal: editing set failed the oracle".into());
                            }
                        }
                        out.emit(&uie_text(&sol), uie_json(&sol));
                        Ok(ExitCode::SUCCESS)
                    }
                    None => {
                        out.emit("NO", json_object("NO", &[], &[], &[], "none", json!({})));
                        Ok(ExitCode::from(1))
                    }
                }
            }
        },
        Command::Approx { problem } => match problem {
            ApproxProblem::Uivd { file } => {
                let g = read_graph(file)?;
                let sol = fpt::approx_uivd(&g);
                if cli.certify {
                    if g.n() > ORACLE_GUARD_N {
                        return Ok(guard_violation(&out, "oracle limited to n <= 14"));
                    }
                    let (h, _) = g.remove_vertices(&sol).map_err(|e| e.to_string())?;
                    if !oracle::is_unit_interval_bruteforce(&h) {
                        return Err("internal: deletion set failed the oracle".into());
                    }
                }
                let mut text = format!("{}", sol.len());
                for &v in &sol {
                    text.push_str(&format!("\nx {}", v));
                }
                out.emit(&text, json_object("YES", &sol, &[], &[], "vertex-set", json!({})));
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Gen { kind, n, seed, flips, with_model } => {
            match kind {
                GenKind::Phcag => {
                    if *n < 4 {
                        return Err("phcag generation needs n >= 4".into());
                    }
                    let (g, model) = oracle::random_phcag(*n, *seed).map_err(|e| e.to_string())?;
                    let mut text = g.to_text().trim_end().to_string();
                    if *with_model {
                        text.push_str(&format!("\nMODEL\n{}", model.to_text().trim_end()));
                    }
                    out.emit(
                        &text,
                        json!({
                            "answer": "OK",
                            "graph": g.to_text(),
                            "model": model.to_text(),
                        }),
                    );
                }
                GenKind::Perturbed => {
                    let (g, applied) = oracle::random_perturbed(*n, *seed, *flips);
                    out.emit(
                        g.to_text().trim_end(),
                        json!({
                            "answer": "OK",
                            "graph": g.to_text(),
                            "flips": applied,
                        }),
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_graph(file: &str) -> Result<Graph, String> {
    let text =
        std::fs::read_to_string(file).map_err(|e| format!("cannot read {}: {}", file, e))?;
    Graph::parse(&text).map_err(|e| e.to_string())
}

fn guard_violation(out: &Output, msg: &str) -> ExitCode {
    out.emit(
        &format!("GUARD {}", msg),
        json!({ "answer": "GUARD", "reason": msg }),
    );
    ExitCode::from(3)
}

fn certify_editing(g: &Graph, sol: &EditingSet) -> bool {
    match sol.apply(g) {
        Ok((h, _)) => oracle::is_unit_interval_bruteforce(&h),
        Err(_) => false,
    }
}

fn uie_text(sol: &EditingSet) -> String {
    let verts: Vec<String> = sol.deleted_vertices.iter().map(|v| format!("x{}", v)).collect();
    let dels: Vec<String> =
        sol.deleted_edges.iter().map(|(u, v)| format!("-{},{}", u, v)).collect();
    let adds: Vec<String> = sol.added_edges.iter().map(|(u, v)| format!("+{},{}", u, v)).collect();
    format!("YES\nV-: {}\nE-: {}\nE+: {}", verts.join(" "), dels.join(" "), adds.join(" "))
}

fn uie_json(sol: &EditingSet) -> serde_json::Value {
    json_object(
        "YES",
        &sol.deleted_vertices,
        &sol.deleted_edges,
        &sol.added_edges,
        "editing-set",
        json!({}),
    )
}

fn json_object(
    answer: &str,
    vertices_deleted: &VertexSet,
    edges_deleted: &EdgeSet,
    edges_added: &EdgeSet,
    certificate_kind: &str,
    extra: serde_json::Value,
) -> serde_json::Value {
    let mut obj = json!({
        "answer": answer,
        "vertices_deleted": vertices_deleted,
        "edges_deleted": edges_deleted,
        "edges_added": edges_added,
        "certificate_kind": certificate_kind,
    });
    if let (Some(dst), Some(src)) = (obj.as_object_mut(), extra.as_object()) {
        for (k, v) in src {
            dst.insert(k.clone(), v.clone());
        }
    }
    obj
}
