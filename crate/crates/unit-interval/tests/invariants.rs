//! Cross-module invariants on small graphs and generated models.

use proptest::prelude::*;

use unit_interval::arc::{ArcModel, CutPoint};
use unit_interval::fpt;
use unit_interval::graph::Graph;
use unit_interval::holes;
use unit_interval::oracle;
use unit_interval::recognition::{
    is_unit_interval_certified, recognize_f_free, recognize_phcag, PhcagOutcome,
    RecognitionOutcome, UnitIntervalOutcome,
};
use unit_interval::solvers;

fn random_graph(n: usize, edge_bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if edge_bits & (1 << (bit % 64)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

proptest! {
    #[test]
    fn induced_subgraph_composes(bits in any::<u64>(), keep1 in 0u8..255, keep2 in 0u8..255) {
        let g = random_graph(8, bits);
        let s1: Vec<usize> = (0..8).filter(|&v| keep1 & (1 << v) != 0).collect();
        let (h1, map1) = g.induced_subgraph(&s1).unwrap();
        let s2: Vec<usize> = (0..h1.n()).filter(|&v| keep2 & (1 << (v % 8)) != 0).collect();
        let (h2, map2) = h1.induced_subgraph(&s2).unwrap();
        // composing the two inclusions equals inducing on the mapped set
        let direct: Vec<usize> = map2.iter().map(|&v| map1[v]).collect();
        let (h_direct, _) = g.induced_subgraph(&direct).unwrap();
        prop_assert_eq!(h2, h_direct);
    }

    #[test]
    fn chordality_matches_brute_force(bits in any::<u64>(), n in 4usize..8) {
        let g = random_graph(n, bits);
        let cert = g.is_chordal();
        prop_assert!(cert.verify(&g));
        let brute = oracle::brute_shortest_hole(&g).unwrap();
        prop_assert_eq!(cert.is_chordal(), brute.is_none());
        if let Some(h) = cert.hole() {
            prop_assert!(h.len() >= brute.unwrap());
        }
    }

    #[test]
    fn twin_classes_are_cliques(bits in any::<u64>(), n in 2usize..9) {
        let g = random_graph(n, bits);
        for class in g.twin_partition() {
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    prop_assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn canonicalize_preserves_graph(seed in 0u64..500) {
        let (g, model) = oracle::random_phcag(4 + (seed % 8) as usize, seed).unwrap();
        let c = model.canonicalize().unwrap();
        prop_assert_eq!(c.represented_graph(), g);
    }
}

#[test]
fn cut_to_interval_cross_check() {
    // the unrolled interval model represents exactly the graph minus the
    // directed cut, over all probes of 100 generated models
    let mut checked = 0;
    for seed in 0..100 {
        let n = 4 + (seed as usize % 9);
        let (g, model) = oracle::random_phcag(n, seed).unwrap();
        for i in 0..2 * model.n() {
            let alpha = CutPoint(i);
            let im = model.cut_to_interval_model(alpha);
            let expect = g.remove_edges(&model.directed_cut(alpha));
            assert_eq!(im.represented_graph(), expect, "seed {} probe {}", seed, i);
            assert!(im.is_proper());
        }
        checked += 1;
    }
    assert_eq!(checked, 100);
}

#[test]
fn point_clique_and_cut_leave_unit_interval() {
    for seed in 0..40 {
        let n = 5 + (seed as usize % 8);
        let (g, model) = oracle::random_phcag(n, seed).unwrap();
        for i in 0..2 * model.n() {
            let alpha = CutPoint(i);
            let (without_clique, _) = g.remove_vertices(&model.point_clique(alpha)).unwrap();
            assert!(is_unit_interval_certified(&without_clique).is_yes());
            let without_cut = g.remove_edges(&model.directed_cut(alpha));
            assert!(is_unit_interval_certified(&without_cut).is_yes());
        }
    }
}

#[test]
fn minimal_covers_are_exactly_holes() {
    // inclusion-minimal circle covers and holes coincide, by enumeration
    for seed in 0..12 {
        let n = 4 + (seed as usize % 6);
        let (g, model) = oracle::random_phcag(n, seed).unwrap();
        for mask in 1u32..(1 << n) {
            let vs: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            let covers = holes::covers_circle(&model, &vs);
            let minimal = covers
                && vs.iter().all(|&drop| {
                    let rest: Vec<usize> = vs.iter().copied().filter(|&x| x != drop).collect();
                    !holes::covers_circle(&model, &rest)
                });
            let mut cyclic = vs.clone();
            cyclic.sort_by_key(|&v| model.start(v));
            let is_hole = unit_interval::graph::verify_hole(&g, &cyclic);
            assert_eq!(minimal, is_hole, "seed {} set {:?}", seed, vs);
        }
    }
}

#[test]
fn recognition_trichotomy_small_graphs() {
    // every outcome on every connected graph with up to 6 vertices verifies,
    // and claw/tent/net/C4/C5-free graphs always get a model
    for n in 1..=6 {
        for g in oracle::enumerate_connected_graphs(n) {
            match recognize_f_free(&g).unwrap() {
                RecognitionOutcome::Phcag(m) => {
                    assert!(m.verify(&g).all(), "bad model for {:?}", g);
                }
                RecognitionOutcome::Witness(w) => {
                    assert!(w.verify(&g), "bad witness {:?} for {:?}", w, g);
                    assert!(
                        matches!(w.kind(), "CLAW" | "S3" | "S3BAR" | "C4"),
                        "unexpected tag {}",
                        w.kind()
                    );
                }
                RecognitionOutcome::FatW5(f) => {
                    assert!(f.verify(&g), "bad partition for {:?}", g);
                }
            }
            match recognize_phcag(&g).unwrap() {
                PhcagOutcome::Model(m) => assert!(m.verify(&g).all()),
                PhcagOutcome::Witness(w) => assert!(w.verify(&g)),
            }
        }
    }
}

#[test]
fn unit_interval_agrees_with_oracle_small() {
    for n in 1..=6 {
        for g in oracle::enumerate_connected_graphs(n) {
            let expected = oracle::is_unit_interval_bruteforce(&g);
            match is_unit_interval_certified(&g) {
                UnitIntervalOutcome::Yes(m) => {
                    assert!(expected, "certifier said yes, oracle no: {:?}", g);
                    assert_eq!(m.represented_graph(), g);
                    assert!(m.is_proper());
                }
                UnitIntervalOutcome::No(w) => {
                    assert!(!expected, "certifier said no, oracle yes: {:?}", g);
                    assert!(w.verify(&g));
                    assert!(matches!(w.kind(), "CLAW" | "S3" | "S3BAR" | "HOLE"));
                }
            }
        }
    }
}

#[test]
fn hole_length_floors() {
    // holes returned on models use at least 4 arcs; on graphs without C4 or
    // C5 the floor rises to 6
    for seed in 0..60 {
        let n = 6 + (seed as usize % 9);
        let (g, model) = oracle::random_phcag(n, seed).unwrap();
        let h = holes::shortest_hole(&g, &model).unwrap();
        assert!(h.len() >= 4);
        let brute = oracle::brute_shortest_hole(&g).unwrap().unwrap();
        if brute >= 6 {
            assert!(h.len() >= 6);
        }
    }
}

#[test]
fn solver_certificates_verify() {
    for n in 1..=5 {
        for g in oracle::enumerate_connected_graphs(n) {
            for k in 0..=3 {
                if let Some(sol) = fpt::solve_uivd(&g, k) {
                    assert!(sol.len() <= k);
                    let (h, _) = g.remove_vertices(&sol).unwrap();
                    assert!(oracle::is_unit_interval_bruteforce(&h));
                }
                if let Some(sol) = fpt::solve_uied(&g, k) {
                    assert!(sol.len() <= k);
                    let h = g.remove_edges(&sol);
                    assert!(oracle::is_unit_interval_bruteforce(&h));
                }
            }
        }
    }
}

#[test]
fn mixed_cut_respects_the_vertex_budget() {
    for seed in 0..30 {
        let (_, model) = oracle::random_phcag(10, seed).unwrap();
        for p in 0..4 {
            let r = solvers::mixed_min_edges(&model, p).unwrap();
            assert!(r.vertices.len() <= p.max(r.vertices.len().min(p)));
            assert!(r.vertices.len() <= p || r.value == 0);
            assert_eq!(r.value, r.edges.len());
        }
    }
}

#[test]
fn witness_lines_and_fat_lines_render() {
    let g = oracle::claw();
    match recognize_f_free(&g).unwrap() {
        RecognitionOutcome::Witness(w) => {
            let line = w.to_line();
            assert!(line.starts_with("WITNESS CLAW "));
        }
        o => panic!("claw must be witnessed, got {:?}", o),
    }
    let g = oracle::wheel(5);
    match recognize_f_free(&g).unwrap() {
        RecognitionOutcome::FatW5(f) => {
            let lines = f.to_lines();
            assert_eq!(lines.lines().count(), 6);
        }
        o => panic!("W5 is a fat W5, got {:?}", o),
    }
}

#[test]
fn generated_models_reconstruct() {
    // the recognizer must rebuild a verified model from the bare graph of a
    // generated model, across a spread of sizes
    for seed in 0..40 {
        let n = 4 + (seed as usize * 7) % 44;
        let n = n.max(4);
        let (g, _) = oracle::random_phcag(n, seed).unwrap();
        match recognize_phcag(&g).unwrap() {
            PhcagOutcome::Model(m) => assert!(m.verify(&g).all(), "n {} seed {}", n, seed),
            PhcagOutcome::Witness(w) => {
                panic!("generated model graph rejected: n {} seed {} {:?}", n, seed, w)
            }
        }
    }
}

#[test]
fn canonicalize_example_from_rationals() {
    // endpoints 0.1, 0.4, 0.3, 0.7 scaled by ten: ranks 0, 2, 1, 3
    let m = ArcModel::new(10, vec![(1, 4), (3, 7)]);
    let c = m.canonicalize().unwrap();
    assert_eq!(c.arcs(), &[(0, 2), (1, 3)]);
    assert_eq!(c.perimeter(), 4);
}
