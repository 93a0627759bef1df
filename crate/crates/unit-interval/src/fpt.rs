//! Bounded search trees for unit interval modification.
//!
//! Vertex deletion branches six ways on a forbidden subgraph and otherwise
//! solves components exactly on their models; edge deletion refines the
//! branching (two-edge branches on tents and nets) to keep the tree at 4^k
//! leaves; general editing additionally destroys short holes, branching on
//! deleting a hole vertex or edge or adding a chord two steps along, and
//! finishes reduced components with the mixed vertex/edge scan, which never
//! needs additions.

use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::recognition::{recognize_f_free, ForbiddenWitness, RecognitionOutcome};
use crate::solvers;

/// Componentwise quotas: a set of size `(a, b, c)` fits iff `a <= k1`,
/// `b <= k2` and `c <= k3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub vertex_deletions: usize,
    pub edge_deletions: usize,
    pub edge_additions: usize,
}

impl Budget {
    pub fn new(k1: usize, k2: usize, k3: usize) -> Self {
        Budget { vertex_deletions: k1, edge_deletions: k2, edge_additions: k3 }
    }

    pub fn total(&self) -> usize {
        self.vertex_deletions + self.edge_deletions + self.edge_additions
    }
}

/// Vertex deletions, edge deletions over the remaining graph, and additions
/// of non-edges of the remaining graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditingSet {
    pub deleted_vertices: VertexSet,
    pub deleted_edges: EdgeSet,
    pub added_edges: EdgeSet,
}

impl EditingSet {
    pub fn size(&self) -> (usize, usize, usize) {
        (self.deleted_vertices.len(), self.deleted_edges.len(), self.added_edges.len())
    }

    pub fn fits(&self, b: Budget) -> bool {
        let (a, d, e) = self.size();
        a <= b.vertex_deletions && d <= b.edge_deletions && e <= b.edge_additions
    }

    /// Apply to `g`: delete vertices, delete edges, add edges. Returns the
    /// edited graph and the new-to-old id mapping.
    pub fn apply(&self, g: &Graph) -> crate::Result<(Graph, Vec<usize>)> {
        let (mut h, map) = g.remove_vertices(&self.deleted_vertices)?;
        let mut old_to_new = vec![usize::MAX; g.n()];
        for (new, &old) in map.iter().enumerate() {
            old_to_new[old] = new;
        }
        let relabel = |edges: &EdgeSet| -> EdgeSet {
            edges.iter().map(|&(u, v)| (old_to_new[u], old_to_new[v])).collect()
        };
        h = h.remove_edges(&relabel(&self.deleted_edges));
        h = h.add_edges(&relabel(&self.added_edges));
        Ok((h, map))
    }

    /// Structural validity plus the edited graph being unit interval.
    pub fn verify(&self, g: &Graph) -> bool {
        for &(u, v) in &self.deleted_edges {
            if !g.has_edge(u, v) {
                return false;
            }
        }
        for &(u, v) in &self.added_edges {
            if u == v || g.has_edge(u, v) {
                return false;
            }
        }
        let touched = |e: &EdgeSet| {
            e.iter().any(|&(u, v)| {
                self.deleted_vertices.contains(&u) || self.deleted_vertices.contains(&v)
            })
        };
        if touched(&self.deleted_edges) || touched(&self.added_edges) {
            return false;
        }
        match self.apply(g) {
            Ok((h, _)) => crate::recognition::is_unit_interval_certified(&h).is_yes(),
            Err(_) => false,
        }
    }
}

/// Search-tree accounting: `nodes` counts every invocation of the decision
/// procedure, `leaves` the invocations that did not branch. The branching
/// analysis bounds the leaves: at most `6^k` for vertex deletion and `4^k`
/// for edge deletion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
}

// ---- vertex deletion ---------------------------------------------------------

pub fn solve_uivd(g: &Graph, k: usize) -> Option<VertexSet> {
    solve_uivd_with_stats(g, k).0
}

pub fn solve_uivd_with_stats(g: &Graph, k: usize) -> (Option<VertexSet>, SearchStats) {
    let mut stats = SearchStats::default();
    let sol = uivd_rec(g, k, &mut stats);
    debug_assert!(sol.as_ref().map_or(true, |s|

        crate::recognition::is_unit_interval_certified(&g.remove_vertices(s).expect("ids valid").0)
            .is_yes()
    ));
    (sol, stats)
}

fn uivd_rec(g: &Graph, k: usize, stats: &mut SearchStats) -> Option<VertexSet> {
    stats.nodes += 1;
    let mut exact: VertexSet = Vec::new();
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp).expect("component ids valid");
        match recognize_f_free(&sub).expect("components are connected") {
            RecognitionOutcome::Witness(w) => {
                if k == 0 {
                    stats.leaves += 1;
                    return None;
                }
                for v in w.vertices() {
                    let v = map[v];
                    let (h, hmap) = g.remove_vertices(&[v]).expect("ids valid");
                    if let Some(sol) = uivd_rec(&h, k - 1, stats) {
                        let mut out: VertexSet = sol.into_iter().map(|x| hmap[x]).collect();
                        out.push(v);
                        out.sort_unstable();
                        return Some(out);
                    }
                }
                return None;
            }
            RecognitionOutcome::Phcag(model) => {
                let cut = solvers::min_vertex_cut(&model).expect("model is canonical");
                exact.extend(cut.vertices.into_iter().map(|x| map[x]));
            }
            RecognitionOutcome::FatW5(f) => {
                exact.extend(solvers::fat_w5_vertex_deletion(&f).into_iter().map(|x| map[x]));
            }
        }
    }
    stats.leaves += 1;
    if exact.len() <= k {
        exact.sort_unstable();
        Some(exact)
    } else {
        None
    }
}

/// Factor-6 approximation: delete every vertex of each forbidden subgraph
/// found, then solve the obstruction-free remainder exactly.
pub fn approx_uivd(g: &Graph) -> VertexSet {
    let mut current = g.clone();
    let mut to_orig: Vec<usize> = (0..g.n()).collect();
    let mut deleted: VertexSet = Vec::new();
    loop {
        let mut witness_vertices: VertexSet = Vec::new();
        let mut exact: VertexSet = Vec::new();
        for comp in current.connected_components() {
            let (sub, map) = current.induced_subgraph(&comp).expect("component ids valid");
            match recognize_f_free(&sub).expect("components are connected") {
                RecognitionOutcome::Witness(w) => {
                    witness_vertices.extend(w.vertices().into_iter().map(|v| map[v]));
                }
                RecognitionOutcome::Phcag(model) => {
                    let cut = solvers::min_vertex_cut(&model).expect("model is canonical");
                    exact.extend(cut.vertices.into_iter().map(|x| map[x]));
                }
                RecognitionOutcome::FatW5(f) => {
                    exact.extend(solvers::fat_w5_vertex_deletion(&f).into_iter().map(|x| map[x]));
                }
            }
        }
        if witness_vertices.is_empty() {
            deleted.extend(exact.into_iter().map(|v| to_orig[v]));
            deleted.sort_unstable();
            debug_assert!(crate::recognition::is_unit_interval_certified(
                &g.remove_vertices(&deleted).expect("ids valid").0
            )
            .is_yes());
            return deleted;
        }
        deleted.extend(witness_vertices.iter().map(|&v| to_orig[v]));
        let (next, map) = current.remove_vertices(&witness_vertices).expect("ids valid");
        to_orig = map.into_iter().map(|v| to_orig[v]).collect();
        current = next;
    }
}

// ---- edge deletion -----------------------------------------------------------

pub fn solve_uied(g: &Graph, k: usize) -> Option<EdgeSet> {
    solve_uied_with_stats(g, k).0
}

pub fn solve_uied_with_stats(g: &Graph, k: usize) -> (Option<EdgeSet>, SearchStats) {
    let mut stats = SearchStats::default();
    let sol = uied_rec(g, k, &mut stats);
    debug_assert!(sol.as_ref().map_or(true, |s| {
        crate::recognition::is_unit_interval_certified(&g.remove_edges(s)).is_yes()
    }));
    (sol, stats)
}

/// Branch moves for one witness: sets of edges to delete together, in
/// deterministic order. Tents force two deletions inside one of the three
/// outer triangles; nets lose a pendant edge or two triangle edges.
fn uied_branches(w: &ForbiddenWitness) -> Vec<EdgeSet> {
    let e = |a: usize, b: usize| (a.min(b), a.max(b));
    match w {
        ForbiddenWitness::Claw { center, leaves } => {
            leaves.iter().map(|&l| vec![e(*center, l)]).collect()
        }
        ForbiddenWitness::C4(c) => {
            (0..4).map(|i| vec![e(c[i], c[(i + 1) % 4])]).collect()
        }
        ForbiddenWitness::S3 { triangle: t, rim } => {
            let mut out = Vec::new();
            for i in 0..3 {
                let tri = [e(rim[i], t[i]), e(rim[i], t[(i + 1) % 3]), e(t[i], t[(i + 1) % 3])];
                for drop in 0..3 {
                    out.push(
                        (0..3).filter(|&j| j != drop).map(|j| tri[j]).collect::<Vec<_>>(),
                    );
                }
            }
            out
        }
        ForbiddenWitness::S3Bar { triangle: t, pendants } => {
            let mut out: Vec<EdgeSet> =
                (0..3).map(|i| vec![e(t[i], pendants[i])]).collect();
            let tri = [e(t[0], t[1]), e(t[1], t[2]), e(t[2], t[0])];
            for drop in 0..3 {
                out.push((0..3).filter(|&j| j != drop).map(|j| tri[j]).collect());
            }
            out
        }
        _ => unreachable!("edge branching only sees the four finite obstructions"),
    }
}

fn uied_rec(g: &Graph, k: usize, stats: &mut SearchStats) -> Option<EdgeSet> {
    stats.nodes += 1;
    let mut exact: EdgeSet = Vec::new();
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp).expect("component ids valid");
        match recognize_f_free(&sub).expect("components are connected") {
            RecognitionOutcome::Witness(w) => {
                let branches = uied_branches(&w.relabel(&map));
                let mut branched = false;
                for edges in branches {
                    if edges.len() > k {
                        continue;
                    }
                    branched = true;
                    let h = g.remove_edges(&edges);
                    if let Some(sol) = uied_rec(&h, k - edges.len(), stats) {
                        let mut out = sol;
                        out.extend(edges);
                        out.sort_unstable();
                        return Some(out);
                    }
                }
                if !branched {
                    stats.leaves += 1;
                }
                return None;
            }
            RecognitionOutcome::Phcag(model) => {
                let cut = solvers::min_edge_cut(&model).expect("model is canonical");
                exact.extend(
                    cut.edges.iter().map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v]))),
                );
            }
            RecognitionOutcome::FatW5(f) => {
                exact.extend(
                    solvers::fat_w5_edge_deletion(&f)
                        .iter()
                        .map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v]))),
                );
            }
        }
    }
    stats.leaves += 1;
    if exact.len() <= k {
        exact.sort_unstable();
        Some(exact)
    } else {
        None
    }
}

// ---- general editing -----------------------------------------------------------

#[derive(Clone, Debug)]
enum Edit {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    AddEdge(usize, usize),
}

pub fn solve_uie(g: &Graph, budget: Budget) -> Option<EditingSet> {
    solve_uie_with_stats(g, budget).0
}

pub fn solve_uie_with_stats(g: &Graph, budget: Budget) -> (Option<EditingSet>, SearchStats) {
    let mut stats = SearchStats::default();
    let sol = uie_rec(g, budget, &mut stats);
    debug_assert!(sol.as_ref().map_or(true, |s| s.verify(g) && s.fits(budget)));
    (sol, stats)
}

/// Single edits that destroy the given witness, ordered vertices first,
/// then edge deletions, then additions.
fn uie_edits(g: &Graph, w: &ForbiddenWitness, budget: Budget) -> Vec<Edit> {
    let vs = w.vertices();
    let mut out = Vec::new();
    if budget.vertex_deletions > 0 {
        out.extend(vs.iter().map(|&v| Edit::DeleteVertex(v)));
    }
    if budget.edge_deletions > 0 {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if g.has_edge(u, v) {
                    out.push(Edit::DeleteEdge(u.min(v), u.max(v)));
                }
            }
        }
    }
    if budget.edge_additions > 0 {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !g.has_edge(u, v) {
                    out.push(Edit::AddEdge(u.min(v), u.max(v)));
                }
            }
        }
    }
    out
}

/// Edits destroying a hole: one of its vertices, one of its edges, or one
/// chord joining vertices two apart.
fn hole_edits(hole: &[usize], budget: Budget) -> Vec<Edit> {
    let l = hole.len();
    let mut out = Vec::new();
    if budget.vertex_deletions > 0 {
        out.extend(hole.iter().map(|&v| Edit::DeleteVertex(v)));
    }
    if budget.edge_deletions > 0 {
        for i in 0..l {
            let (u, v) = (hole[i], hole[(i + 1) % l]);
            out.push(Edit::DeleteEdge(u.min(v), u.max(v)));
        }
    }
    if budget.edge_additions > 0 {
        for i in 0..l {
            let (u, v) = (hole[i], hole[(i + 2) % l]);
            out.push(Edit::AddEdge(u.min(v), u.max(v)));
        }
    }
    out
}

fn apply_edit(
    g: &Graph,
    budget: Budget,
    edit: &Edit,
    stats: &mut SearchStats,
) -> Option<EditingSet> {
    match *edit {
        Edit::DeleteVertex(v) => {
            let (h, map) = g.remove_vertices(&[v]).expect("ids valid");
            let b = Budget { vertex_deletions: budget.vertex_deletions - 1, ..budget };
            let sol = uie_rec(&h, b, stats)?;
            let lift_edge = |&(u, w): &(usize, usize)| (map[u].min(map[w]), map[u].max(map[w]));
            let mut deleted_vertices: VertexSet =
                sol.deleted_vertices.iter().map(|&x| map[x]).collect();
            deleted_vertices.push(v);
            deleted_vertices.sort_unstable();
            Some(EditingSet {
                deleted_vertices,
                deleted_edges: sol.deleted_edges.iter().map(lift_edge).collect(),
                added_edges: sol.added_edges.iter().map(lift_edge).collect(),
            })
        }
        Edit::DeleteEdge(u, v) => {
            let h = g.remove_edges(&[(u, v)]);
            let b = Budget { edge_deletions: budget.edge_deletions - 1, ..budget };
            let mut sol = uie_rec(&h, b, stats)?;
            // net effect: the pair drops out when an endpoint got deleted
            // below, or when the branch below re-added it
            if sol.deleted_vertices.contains(&u) || sol.deleted_vertices.contains(&v) {
            } else if let Some(pos) = sol.added_edges.iter().position(|&e| e == (u, v)) {
                sol.added_edges.remove(pos);
            } else {
                sol.deleted_edges.push((u, v));
                sol.deleted_edges.sort_unstable();
            }
            Some(sol)
        }
        Edit::AddEdge(u, v) => {
            let h = g.add_edges(&[(u, v)]);
            let b = Budget { edge_additions: budget.edge_additions - 1, ..budget };
            let mut sol = uie_rec(&h, b, stats)?;
            if sol.deleted_vertices.contains(&u) || sol.deleted_vertices.contains(&v) {
            } else if let Some(pos) = sol.deleted_edges.iter().position(|&e| e == (u, v)) {
                sol.deleted_edges.remove(pos);
            } else {
                sol.added_edges.push((u, v));
                sol.added_edges.sort_unstable();
            }
            Some(sol)
        }
    }
}

fn uie_rec(g: &Graph, budget: Budget, stats: &mut SearchStats) -> Option<EditingSet> {
    stats.nodes += 1;
    // reduced components awaiting the final vertex/edge trade-off
    let mut reduced: Vec<(Vec<usize>, crate::arc::ArcModel)> = Vec::new();
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp).expect("component ids valid");
        let edits = match recognize_f_free(&sub).expect("components are connected") {
            RecognitionOutcome::Witness(w) => uie_edits(g, &w.relabel(&map), budget),
            RecognitionOutcome::FatW5(f) => {
                // destroying the contained plain 5-cycle suffices
                let rim: Vec<usize> =
                    f.hole_classes.iter().map(|c| map[c[0]]).collect();
                hole_edits(&rim, budget)
            }
            RecognitionOutcome::Phcag(model) => {
                if sub.is_chordal().is_chordal() {
                    continue; // already unit interval
                }
                let hole =
                    crate::holes::shortest_hole(&sub, &model).expect("non-chordal verified model");
                if hole.len() <= budget.edge_additions + 3 {
                    let lifted: Vec<usize> = hole.iter().map(|&v| map[v]).collect();
                    hole_edits(&lifted, budget)
                } else {
                    reduced.push((map, model));
                    continue;
                }
            }
        };
        if edits.is_empty() {
            stats.leaves += 1;
            return None;
        }
        for edit in &edits {
            if let Some(sol) = apply_edit(g, budget, edit, stats) {
                return Some(sol);
            }
        }
        return None;
    }

    // every component is reduced: allocate the vertex quota across them and
    // pay the rest in edge deletions; no additions are ever needed here
    stats.leaves += 1;
    let k1 = budget.vertex_deletions;
    let mut dp: Vec<usize> = vec![usize::MAX; k1 + 1];
    dp[0] = 0;
    let curves: Vec<Vec<usize>> = reduced
        .iter()
        .map(|(_, model)| {
            (0..=k1)
                .map(|p| solvers::mixed_min_edges(model, p).expect("canonical model").value)
                .collect()
        })
        .collect();
    let mut parent: Vec<Vec<Option<usize>>> = Vec::new();
    for curve in &curves {
        let mut next = vec![usize::MAX; k1 + 1];
        let mut from = vec![None; k1 + 1];
        for used in 0..=k1 {
            if dp[used] == usize::MAX {
                continue;
            }
            for p in 0..=(k1 - used) {
                let q = curve[p];
                let total = dp[used].saturating_add(q);
                if total < next[used + p] {
                    next[used + p] = total;
                    from[used + p] = Some(p);
                }
            }
        }
        dp = next;
        parent.push(from);
    }
    let best_used = (0..=k1)
        .filter(|&u| dp[u] != usize::MAX && dp[u] <= budget.edge_deletions)
        .min_by_key(|&u| (dp[u], u));
    let mut used = best_used?;
    // trace the allocation back through the components
    let mut alloc = vec![0usize; reduced.len()];
    for c in (0..reduced.len()).rev() {
        let p = parent[c][used].expect("dp path exists");
        alloc[c] = p;
        used -= p;
    }
    let mut out = EditingSet::default();
    for (c, (map, model)) in reduced.iter().enumerate() {
        let r = solvers::mixed_min_edges(model, alloc[c]).expect("canonical model");
        out.deleted_vertices.extend(r.vertices.iter().map(|&v| map[v]));
        out.deleted_edges.extend(
            r.edges.iter().map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v]))),
        );
    }
    out.deleted_vertices.sort_unstable();
    out.deleted_edges.sort_unstable();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn uivd_examples() {
        let claw = oracle::claw();
        let sol = solve_uivd(&claw, 1).expect("one deletion fixes a claw");
        assert_eq!(sol.len(), 1);
        assert!(solve_uivd(&oracle::cycle_graph(4), 0).is_none());
        assert!(solve_uivd(&oracle::tent(), 1).is_some());
        assert!(solve_uivd(&oracle::wheel(5), 0).is_none());
        assert!(solve_uivd(&oracle::wheel(5), 1).is_some());
    }

    #[test]
    fn uied_examples() {
        assert!(solve_uied(&oracle::claw(), 1).is_some());
        assert!(solve_uied(&oracle::tent(), 1).is_none());
        assert!(solve_uied(&oracle::tent(), 2).is_some());
        assert!(solve_uied(&oracle::cycle_graph(6), 1).is_some());
        assert!(solve_uied(&oracle::wheel(5), 1).is_none());
        assert!(solve_uied(&oracle::wheel(5), 2).is_some());
    }

    #[test]
    fn uie_examples() {
        let c6 = oracle::cycle_graph(6);
        let sol = solve_uie(&c6, Budget::new(0, 1, 0)).expect("delete one hole edge");
        assert_eq!(sol.size(), (0, 1, 0));
        assert!(solve_uie(&c6, Budget::new(0, 0, 2)).is_none());
        let c4 = oracle::cycle_graph(4);
        let sol = solve_uie(&c4, Budget::new(0, 0, 1)).expect("one chord fills a C4");
        assert_eq!(sol.size(), (0, 0, 1));
        assert!(solve_uie(&oracle::wheel(5), Budget::new(1, 0, 0)).is_some());
        assert!(solve_uie(&oracle::wheel(5), Budget::new(0, 1, 0)).is_none());
    }

    #[test]
    fn uie_solutions_verify() {
        let g = oracle::ci_graph(6);
        for (k1, k2, k3) in [(0, 2, 0), (2, 0, 0), (1, 1, 1)] {
            if let Some(sol) = solve_uie(&g, Budget::new(k1, k2, k3)) {
                assert!(sol.verify(&g));
                assert!(sol.fits(Budget::new(k1, k2, k3)));
            }
        }
    }

    #[test]
    fn approx_on_unit_interval_input_is_empty() {
        assert!(approx_uivd(&oracle::path_graph(6)).is_empty());
        let sol = approx_uivd(&oracle::claw());
        assert_eq!(sol.len(), 4);
    }

    #[test]
    fn stats_bounds_hold_on_small_cases() {
        let (_, stats) = solve_uied_with_stats(&oracle::cycle_graph(4), 1);
        assert!(stats.leaves <= 4);
        let (_, stats) = solve_uivd_with_stats(&oracle::claw(), 1);
        assert!(stats.leaves <= 6);
    }

    #[test]
    fn disconnected_budget_is_shared() {
        // two disjoint C4s need two edits total
        let mut edges: Vec<(usize, usize)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        edges.extend((0..4).map(|i| (4 + i, 4 + (i + 1) % 4)));
        let g = Graph::from_edges(8, &edges).unwrap();
        assert!(solve_uied(&g, 1).is_none());
        assert!(solve_uied(&g, 2).is_some());
        assert!(solve_uivd(&g, 1).is_none());
        assert!(solve_uivd(&g, 2).is_some());
    }
}
