//! Brute-force ground truth, instance generators, and small named graphs.
//!
//! Everything here works on the graph alone (no arc models), so agreement
//! between these oracles and the model-based solvers is evidence rather
//! than circularity. Sizes are guarded; these run on test instances only.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arc::ArcModel;
use crate::error::{Error, Result};
use crate::fpt::Budget;
use crate::graph::{EdgeSet, Graph, VertexSet};

// ---- named small graphs ----------------------------------------------------

pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle edges are simple")
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are simple")
}

pub fn complete_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).tuple_combinations().collect();
    Graph::from_edges(n, &edges).expect("clique edges are simple")
}

/// `K_{1,3}`: center 0, leaves 1..4.
pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("claw")
}

/// Tent: triangle 0,1,2 and rim 3,4,5 with `3~{0,1}`, `4~{1,2}`, `5~{2,0}`.
pub fn tent() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])
        .expect("tent")
}

/// Net: triangle 0,1,2 with pendants 3,4,5 attached one each.
pub fn net() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).expect("net")
}

/// Wheel: cycle `0..l` plus hub `l` adjacent to all.
pub fn wheel(l: usize) -> Graph {
    let mut edges: Vec<_> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    edges.extend((0..l).map(|i| (i, l)));
    Graph::from_edges(l + 1, &edges).expect("wheel")
}

/// Complement of the 6-cycle: two triangles `{0,2,4}` and `{1,3,5}` joined
/// by a perfect matching.
pub fn c6_complement() -> Graph {
    let mut edges = Vec::new();
    for i in 0..6usize {
        for j in i + 1..6 {
            if !matches!(j - i, 1 | 5) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(6, &edges).expect("complement edges are simple")
}

/// Hole `0..l` plus vertex `l` adjacent to none of it, tied to the hole by a
/// two-edge path through `l+1` so the graph is connected.
pub fn c_star(l: usize) -> Graph {
    let mut edges: Vec<_> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    edges.push((l, l + 1));
    edges.push((l + 1, 0));
    Graph::from_edges(l + 2, &edges).expect("c-star")
}

/// Fat 5-wheel with the given hole class sizes and hub size.
pub fn fat_w5_graph(hole_sizes: &[usize; 5], hub_size: usize) -> Graph {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &s in hole_sizes {
        classes.push((next..next + s).collect());
        next += s;
    }
    let hub: Vec<usize> = (next..next + hub_size).collect();
    next += hub_size;
    let mut edges = Vec::new();
    let add_clique = |c: &[usize], edges: &mut Vec<(usize, usize)>| {
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                edges.push((u, v));
            }
        }
    };
    for c in classes.iter() {
        add_clique(c, &mut edges);
    }
    add_clique(&hub, &mut edges);
    for i in 0..5 {
        for &u in &classes[i] {
            for &v in &classes[(i + 1) % 5] {
                edges.push((u, v));
            }
            for &v in &hub {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(next, &edges).expect("fat wheel")
}

/// Cycle `0..l` with one extra vertex per hole edge adjacent to both of its
/// ends (Tucker's CI(l, 1) family).
pub fn ci_graph(l: usize) -> Graph {
    let mut edges: Vec<_> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    for i in 0..l {
        let v = l + i;
        edges.push((v, i));
        edges.push((v, (i + 1) % l));
    }
    Graph::from_edges(2 * l, &edges).expect("ci graph")
}

// ---- unit interval membership by forbidden subgraphs -----------------------

/// Theorem-of-forbidden-subgraphs check: chordal plus no claw, tent, or net.
/// Runs entirely on the graph; intended for `n` up to the mid-teens.
pub fn is_unit_interval_bruteforce(g: &Graph) -> bool {
    if !g.is_chordal().is_chordal() {
        return false;
    }
    if crate::forbidden::find_claw(g).is_some() {
        return false;
    }
    for sub in (0..g.n()).tuple_combinations().map(|(a, b, c, d, e, f)| [a, b, c, d, e, f]) {
        if crate::forbidden::as_tent(g, &sub).is_some()
            || crate::forbidden::as_net(g, &sub).is_some()
        {
            return false;
        }
    }
    true
}

/// Shortest chordless cycle of length at least 4 by subset enumeration, or
/// `None` for chordal graphs. Guarded to small `n`.
pub fn brute_shortest_hole(g: &Graph) -> Result<Option<usize>> {
    let n = g.n();
    if n > 16 {
        return Err(Error::TooLarge(format!("hole enumeration over 2^{} subsets", n)));
    }
    let mut best: Option<usize> = None;
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 4 || best.map_or(false, |b| k >= b) {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if induces_cycle(g, &vs) {
            best = Some(k);
        }
    }
    Ok(best)
}

/// Does `vs` induce a (chordless) cycle: all induced degrees 2 and connected.
fn induces_cycle(g: &Graph, vs: &[usize]) -> bool {
    let (sub, _) = g.induced_subgraph(vs).expect("subset in range");
    sub.m() == sub.n() && (0..sub.n()).all(|v| sub.degree(v) == 2) && sub.is_connected()
}

// ---- exhaustive minima ------------------------------------------------------

/// Minimum vertex deletions to a unit interval graph, with a realizing set.
pub fn brute_min_uivd(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.n() > 14 {
        return Err(Error::TooLarge(format!("vertex subsets of n = {}", g.n())));
    }
    for k in 0..=g.n() {
        for del in (0..g.n()).combinations(k) {
            let (h, _) = g.remove_vertices(&del).expect("in range");
            if is_unit_interval_bruteforce(&h) {
                return Ok((k, del));
            }
        }
    }
    unreachable!("deleting everything leaves the empty graph")
}

/// Minimum edge deletions to a unit interval graph, with a realizing set.
pub fn brute_min_uied(g: &Graph) -> Result<(usize, EdgeSet)> {
    if g.m() > 26 {
        return Err(Error::TooLarge(format!("edge subsets of m = {}", g.m())));
    }
    let edges = g.edges();
    for k in 0..=edges.len() {
        for del in edges.iter().copied().combinations(k) {
            let h = g.remove_edges(&del);
            if is_unit_interval_bruteforce(&h) {
                return Ok((k, del));
            }
        }
    }
    unreachable!("deleting all edges leaves an edgeless graph")
}

/// Exhaustive editing decision within a componentwise budget; smallest
/// editing sets are tried first (vertices, then deletions, then additions).
pub fn brute_min_editing(g: &Graph, budget: Budget) -> Result<Option<(VertexSet, EdgeSet, EdgeSet)>> {
    if g.n() > 8 {
        return Err(Error::TooLarge(format!("editing enumeration at n = {}", g.n())));
    }
    for a in 0..=budget.vertex_deletions.min(g.n()) {
        for vdel in (0..g.n()).combinations(a) {
            let (h1, map) = g.remove_vertices(&vdel).expect("in range");
            let edges = h1.edges();
            for b in 0..=budget.edge_deletions.min(edges.len()) {
                for edel in edges.iter().copied().combinations(b) {
                    let h2 = h1.remove_edges(&edel);
                    let non = h2.non_edges();
                    for c in 0..=budget.edge_additions.min(non.len()) {
                        for eadd in non.iter().copied().combinations(c) {
                            let h3 = h2.add_edges(&eadd);
                            if is_unit_interval_bruteforce(&h3) {
                                let lift = |e: &EdgeSet| -> EdgeSet {
                                    e.iter()
                                        .map(|&(u, v)| {
                                            let (a, b) = (map[u], map[v]);
                                            (a.min(b), a.max(b))
                                        })
                                        .sorted()
                                        .collect()
                                };
                                return Ok(Some((vdel, lift(&edel), lift(&eadd))));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

// ---- generators -------------------------------------------------------------

/// Canonical model of the cycle `C_n`: arc `i` spans from just before slot
/// of vertex `i` to just past the start of vertex `i+1`.
pub fn cycle_model(n: usize) -> (Graph, ArcModel) {
    assert!(n >= 4);
    let order: Vec<usize> = (0..n).collect();
    let g = cycle_graph(n);
    let model = crate::sweep::arc_model_from_circular_order(&g, &order)
        .expect("cycle neighborhoods are circular runs");
    debug_assert!(model.verify(&g).all());
    (g, model)
}

/// Random connected non-chordal proper Helly arc model with its graph.
/// Arcs are laid out from random monotone clockwise reaches over a random
/// circular order; rejection keeps only verified non-chordal models.
pub fn random_phcag(n: usize, seed: u64) -> Result<(Graph, ArcModel)> {
    assert!(n >= 4);
    let attempts = 300;
    for attempt in 0..attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64 * 0x9e37_79b9));
        let max_reach = 3.min(n - 2).max(1);
        let mut reach: Vec<usize> = (0..n)
            .map(|_| 1 + rng.gen_range(0..max_reach))
            .collect();
        // clockwise reach targets must be circularly monotone for properness
        for i in 1..n {
            reach[i] = reach[i].max(reach[i - 1].saturating_sub(1));
        }
        if reach[0] + n <= reach[n - 1] + (n - 1) {
            reach[0] = reach[n - 1].saturating_sub(1).max(1);
        }
        let mut ends_at: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            ends_at[(i + reach[i]) % n].push(i);
        }
        for (t, owners) in ends_at.iter_mut().enumerate() {
            owners.sort_by_key(|&i| std::cmp::Reverse((t + n - i) % n));
        }
        let mut arcs = vec![(0usize, 0usize); n];
        let mut slot = 0;
        for t in 0..n {
            arcs[t].0 = slot;
            slot += 1;
            for &i in &ends_at[t] {
                arcs[i].1 = slot;
                slot += 1;
            }
        }
        let model = ArcModel::new(2 * n, arcs);
        let g = model.represented_graph();
        if !g.is_connected() || g.is_chordal().is_chordal() {
            continue;
        }
        if model.verify(&g).all() {
            return Ok((g, model));
        }
    }
    Err(Error::GeneratorExhausted(attempts))
}

/// Random unit interval graph from a random straight layout, perturbed by
/// flipping `flips` random vertex pairs. Returns the graph and the number
/// of flips actually applied (an upper bound on the editing distance).
pub fn random_perturbed(n: usize, seed: u64, flips: usize) -> (Graph, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // random proper interval graph: connect i to a run of successors
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut reach = vec![0usize; n];
    for i in 0..n {
        let lo = if i + 1 < n { i + 1 } else { i };
        let hi = (i + 1 + rng.gen_range(0..3)).min(n - 1);
        reach[i] = if i > 0 { reach[i - 1].max(hi) } else { hi };
        let _ = lo;
    }
    for i in 0..n {
        for j in i + 1..=reach[i] {
            edges.push((i, j));
        }
    }
    let mut g = Graph::from_edges(n, &edges).expect("layout edges are simple");
    let mut applied = 0;
    for _ in 0..flips {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        if g.has_edge(u, v) {
            g = g.remove_edges(&[(u.min(v), u.max(v))]);
        } else {
            g = g.add_edges(&[(u.min(v), u.max(v))]);
        }
        applied += 1;
    }
    (g, applied)
}

// ---- exhaustive graph enumeration ------------------------------------------

/// All connected graphs on `n` vertices up to isomorphism, `n <= 7`.
/// Built by extending the `(n-1)`-vertex list with one new vertex and
/// canonicalizing by the minimum adjacency bitmask over all permutations.
pub fn enumerate_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "enumeration is sized for n <= 7");
    enumerate_all_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

fn enumerate_all_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::new(0)];
    }
    let mut level: Vec<u64> = vec![0]; // adjacency masks, 1 vertex
    for k in 2..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for &mask in &level {
            for nb in 0u64..(1 << (k - 1)) {
                let extended = extend_mask(mask, k - 1, nb);
                let canon = canonical_mask(extended, k);
                if seen.insert(canon) {
                    next.push(canon);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|mask| graph_from_mask(mask, n)).collect()
}

fn bit_index(u: usize, v: usize) -> usize {
    let (a, b) = (u.min(v), u.max(v));
    b * (b - 1) / 2 + a
}

fn extend_mask(mask: u64, new_vertex: usize, nb: u64) -> u64 {
    let mut out = mask;
    for u in 0..new_vertex {
        if nb & (1 << u) != 0 {
            out |= 1 << bit_index(u, new_vertex);
        }
    }
    out
}

fn canonical_mask(mask: u64, k: usize) -> u64 {
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut m = 0u64;
        for u in 0..k {
            for v in u + 1..k {
                if mask & (1 << bit_index(u, v)) != 0 {
                    m |= 1 << bit_index(perm[u], perm[v]);
                }
            }
        }
        best = best.min(m);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn graph_from_mask(mask: u64, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask & (1 << bit_index(u, v)) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("mask edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_interval_basics() {
        assert!(is_unit_interval_bruteforce(&path_graph(7)));
        assert!(!is_unit_interval_bruteforce(&net()));
        assert!(!is_unit_interval_bruteforce(&cycle_graph(4)));
        assert!(!is_unit_interval_bruteforce(&claw()));
        assert!(!is_unit_interval_bruteforce(&tent()));
        assert!(is_unit_interval_bruteforce(&complete_graph(5)));
    }

    #[test]
    fn minima_of_named_graphs() {
        assert_eq!(brute_min_uivd(&claw()).unwrap().0, 1);
        assert_eq!(brute_min_uied(&claw()).unwrap().0, 1);
        assert_eq!(brute_min_uivd(&tent()).unwrap().0, 1);
        assert_eq!(brute_min_uied(&tent()).unwrap().0, 2);
        assert_eq!(brute_min_uivd(&wheel(5)).unwrap().0, 1);
        assert_eq!(brute_min_uied(&wheel(5)).unwrap().0, 2);
    }

    #[test]
    fn editing_examples() {
        let yes = brute_min_editing(&cycle_graph(4), Budget::new(0, 0, 1)).unwrap();
        assert!(yes.is_some());
        let no = brute_min_editing(&cycle_graph(6), Budget::new(0, 0, 2)).unwrap();
        assert!(no.is_none());
        let k1 = brute_min_editing(&complete_graph(1), Budget::new(0, 0, 0)).unwrap();
        assert_eq!(k1, Some((vec![], vec![], vec![])));
    }

    #[test]
    fn generator_products_verify() {
        for seed in 0..30 {
            let (g, model) = random_phcag(6 + (seed as usize % 7), seed).unwrap();
            assert!(model.verify(&g).all());
            assert!(g.is_connected());
            assert!(!g.is_chordal().is_chordal());
        }
    }

    #[test]
    fn generator_is_deterministic() {
        let (g1, m1) = random_phcag(9, 42).unwrap();
        let (g2, m2) = random_phcag(9, 42).unwrap();
        assert_eq!(g1, g2);
        assert_eq!(m1, m2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_connected_graphs(1).len(), 1);
        assert_eq!(enumerate_connected_graphs(2).len(), 1);
        assert_eq!(enumerate_connected_graphs(3).len(), 2);
        assert_eq!(enumerate_connected_graphs(4).len(), 6);
        assert_eq!(enumerate_connected_graphs(5).len(), 21);
        assert_eq!(enumerate_connected_graphs(6).len(), 112);
    }

    #[test]
    fn brute_hole_lengths() {
        assert_eq!(brute_shortest_hole(&cycle_graph(4)).unwrap(), Some(4));
        assert_eq!(brute_shortest_hole(&cycle_graph(9)).unwrap(), Some(9));
        assert_eq!(brute_shortest_hole(&path_graph(6)).unwrap(), None);
        assert_eq!(brute_shortest_hole(&ci_graph(6)).unwrap(), Some(6));
    }
}
