//! Exact deletion solvers on proper Helly arc models.
//!
//! On such a model the optimal structures are local to one of the `2n`
//! half-integer probe points: the minimum hole cover is the lightest point
//! clique, the minimum edge deletion set is the lightest directed cut, and
//! the minimum edge count under a vertex allowance `p` is realized by
//! deleting the `p` most recently started arcs over some probe and cutting
//! the rest. Each solver is a single sweep with incremental updates. The
//! fat 5-wheel cases have closed forms on the class sizes.

use crate::arc::{ArcModel, CutPoint};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::recognition::FatW5;

/// Winning probe with its value and realizing sets. `value` is the
/// cardinality of the optimal set: vertices for the vertex solver, edges for
/// the edge and mixed solvers (the mixed solver also reports the deleted
/// vertices, at most `p` of them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    pub probe: CutPoint,
    pub value: usize,
    pub vertices: VertexSet,
    pub edges: EdgeSet,
}

/// Classify each slot crossing: +1 when an arc starts there, -1 when one ends.
fn slot_owners(model: &ArcModel) -> (Vec<usize>, Vec<usize>) {
    let slots = 2 * model.n();
    let mut start_owner = vec![usize::MAX; slots];
    let mut end_owner = vec![usize::MAX; slots];
    for (v, &(s, e)) in model.arcs().iter().enumerate() {
        start_owner[s] = v;
        end_owner[e] = v;
    }
    (start_owner, end_owner)
}

/// Probe minimizing the point clique; deleting that clique leaves a unit
/// interval graph, and no smaller hole cover exists.
pub fn min_vertex_cut(model: &ArcModel) -> Result<ScanResult> {
    if !model.is_canonical() {
        return Err(Error::NotCanonical);
    }
    let slots = 2 * model.n();
    let (start_owner, end_owner) = slot_owners(model);
    let mut count = model.point_clique(CutPoint(0)).len();
    let mut best = (count, 0usize);
    for i in 1..slots {
        if start_owner[i] != usize::MAX {
            count += 1;
        } else if end_owner[i] != usize::MAX {
            count -= 1;
        }
        if count < best.0 {
            best = (count, i);
        }
    }
    let probe = CutPoint(best.1);
    let vertices = model.point_clique(probe);
    Ok(ScanResult { probe, value: vertices.len(), vertices, edges: Vec::new() })
}

/// Probe minimizing the directed cut; removing those edges leaves a unit
/// interval graph, and no smaller edge deletion set exists. One pass: the
/// cut is unchanged across clockwise endpoints, and crossing a start flips
/// exactly the edges at that vertex.
pub fn min_edge_cut(model: &ArcModel) -> Result<ScanResult> {
    if !model.is_canonical() {
        return Err(Error::NotCanonical);
    }
    let rep = model.represented_graph();
    let slots = 2 * model.n();
    let (start_owner, end_owner) = slot_owners(model);
    let mut count = model.directed_cut(CutPoint(0)).len();
    let mut best = (count, 0usize);
    for i in 1..slots {
        let v = start_owner[i];
        if v != usize::MAX {
            let right: usize = rep
                .neighbors(v)
                .iter()
                .filter(|&&u| model.arc_contains_doubled(u, 2 * model.end(v)))
                .count();
            count = count + right - (rep.degree(v) - right);
        } else {
            debug_assert_ne!(end_owner[i], usize::MAX);
        }
        if count < best.0 {
            best = (count, i);
        }
    }
    let probe = CutPoint(best.1);
    let edges = model.directed_cut(probe);
    debug_assert_eq!(edges.len(), best.0);
    Ok(ScanResult { probe, value: edges.len(), vertices: Vec::new(), edges })
}

/// Vertices of the point clique ordered by how recently their arcs started
/// before the probe, most recent first.
fn clique_by_recency(model: &ArcModel, probe: CutPoint) -> Vec<usize> {
    let slots = 2 * model.n();
    let p = probe.doubled();
    let mut members = model.point_clique(probe);
    members.sort_by_key(|&v| (p + 2 * slots - 2 * model.start(v)) % (2 * slots));
    members
}

/// The mixed set at one probe: delete the `p` most recently started arcs of
/// the point clique, then cut the residual model there.
fn mixed_at(model: &ArcModel, rep: &Graph, p: usize, probe: CutPoint) -> (VertexSet, EdgeSet) {
    let pd = probe.doubled();
    let by_recency = clique_by_recency(model, probe);
    let deleted: Vec<usize> = by_recency.iter().copied().take(p).collect();
    let mut is_deleted = vec![false; model.n()];
    for &v in &deleted {
        is_deleted[v] = true;
    }
    let mut edges = Vec::new();
    for &a in &by_recency[deleted.len()..] {
        for &b in rep.neighbors(a) {
            if !model.arc_contains_doubled(b, pd)
                && model.arc_contains_doubled(b, 2 * model.end(a))
            {
                debug_assert!(!is_deleted[b]);
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let mut vs = deleted;
    vs.sort_unstable();
    (vs, edges)
}

/// Minimum number of edge deletions over all editing sets that also delete
/// at most `p` vertices (and add nothing). When some probe's clique fits in
/// the vertex allowance the answer is zero edges; otherwise a queue of the
/// `p` latest started arcs slides around the circle and the cut of the
/// residual model is maintained incrementally.
pub fn mixed_min_edges(model: &ArcModel, p: usize) -> Result<ScanResult> {
    if !model.is_canonical() {
        return Err(Error::NotCanonical);
    }
    let vertex_best = min_vertex_cut(model)?;
    if vertex_best.value <= p {
        return Ok(ScanResult {
            probe: vertex_best.probe,
            value: 0,
            vertices: vertex_best.vertices,
            edges: Vec::new(),
        });
    }
    if p == 0 {
        return min_edge_cut(model);
    }

    let rep = model.represented_graph();
    let slots = 2 * model.n();
    let (start_owner, end_owner) = slot_owners(model);

    let mut queue: std::collections::VecDeque<usize> =
        clique_by_recency(model, CutPoint(0)).into_iter().take(p).rev().collect();
    let mut in_queue = vec![false; model.n()];
    for &v in &queue {
        in_queue[v] = true;
    }
    let mut count = mixed_at(model, &rep, p, CutPoint(0)).1.len();
    let mut best = (count, 0usize);

    for i in 1..slots {
        let v = start_owner[i];
        if v == usize::MAX {
            debug_assert_ne!(end_owner[i], usize::MAX);
            if count < best.0 {
                best = (count, i);
            }
            continue;
        }
        // edges into v from undeleted clique members stop being cut
        let lost: usize = rep
            .neighbors(v)
            .iter()
            .filter(|&&a| {
                !in_queue[a]
                    && model.arc_contains_doubled(a, 2 * i - 1)
                    && model.arc_contains_doubled(v, 2 * model.end(a))
            })
            .count();
        let u = queue.pop_front().expect("queue holds p vertices");
        in_queue[u] = false;
        queue.push_back(v);
        in_queue[v] = true;
        // edges out of the released vertex to arcs missing the probe are cut
        let gained: usize = rep
            .neighbors(u)
            .iter()
            .filter(|&&x| {
                !model.arc_contains_doubled(x, 2 * i + 1)
                    && model.arc_contains_doubled(x, 2 * model.end(u))
            })
            .count();
        count = count + gained - lost;
        if count < best.0 {
            best = (count, i);
        }
        debug_assert!(
            queue.iter().all(|&q| model.arc_contains_doubled(q, 2 * i + 1)),
            "queue members must cover the probe"
        );
    }

    let probe = CutPoint(best.1);
    let (vertices, edges) = mixed_at(model, &rep, p, probe);
    debug_assert_eq!(edges.len(), best.0);
    Ok(ScanResult { probe, value: edges.len(), vertices, edges })
}

/// Deleting the smallest clique of the fat hole leaves a unit interval
/// graph; ties resolve to the smallest index.
pub fn fat_w5_vertex_deletion(f: &FatW5) -> VertexSet {
    f.hole_classes[f.smallest_hole_class()].clone()
}

/// Cheapest way to open the fat hole: all edges between two consecutive
/// hole classes plus the edges from the smaller of them to the hub.
pub fn fat_w5_edge_deletion(f: &FatW5) -> EdgeSet {
    let size = |i: usize| f.hole_classes[i % 5].len();
    let cost =
        |i: usize| size(i) * size(i + 1) + size(i).min(size(i + 1)) * f.hub.len();
    let i = (0..5).min_by_key(|&i| (cost(i), i)).expect("five choices");
    let (a, b) = (&f.hole_classes[i], &f.hole_classes[(i + 1) % 5]);
    let smaller = if a.len() <= b.len() { a } else { b };
    let mut edges: EdgeSet = Vec::new();
    for &u in a {
        for &v in b {
            edges.push((u.min(v), u.max(v)));
        }
    }
    for &u in smaller {
        for &v in &f.hub {
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    edges
}
