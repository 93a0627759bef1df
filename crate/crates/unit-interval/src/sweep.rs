//! Lex-BFS sweeps, straight enumerations and model layout.
//!
//! A straight enumeration is a vertex order in which every closed
//! neighborhood occupies a consecutive block; a graph admits one exactly
//! when it is a proper interval graph. The 3-sweep Lex-BFS scheme computes a
//! candidate order; the final consecutiveness check makes the recognition
//! certifying. The layout helpers turn a (linear or circular) order plus
//! adjacency into a model with distinct integer endpoints.

use crate::arc::{ArcModel, IntervalModel};
use crate::graph::Graph;

/// Lex-BFS with ties broken towards the vertex latest in `prev`.
/// Partition refinement over cells kept in `prev`-descending order; the
/// neighbor sub-cell is placed ahead of the remainder.
pub(crate) fn lbfs_plus(g: &Graph, prev: &[usize]) -> Vec<usize> {
    let n = g.n();
    debug_assert_eq!(prev.len(), n);
    if n == 0 {
        return Vec::new();
    }
    let mut rank = vec![0usize; n];
    for (i, &v) in prev.iter().enumerate() {
        rank[v] = i;
    }
    // Re-sort adjacency by rank descending so that split cells inherit the
    // cell-internal order.
    let mut adj_desc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        let w = prev[i];
        for &x in g.neighbors(w) {
            adj_desc[x].push(w);
        }
    }

    // Intrusive doubly linked lists: vertices within cells, cells in a list.
    let mut vnext = vec![usize::MAX; n];
    let mut vprev = vec![usize::MAX; n];
    let mut vcell = vec![0usize; n];
    struct Cell {
        head: usize,
        tail: usize,
        next: usize,
        prev: usize,
        stamp: usize,
        buddy: usize,
    }
    let mut cells: Vec<Cell> = Vec::with_capacity(n + 1);
    cells.push(Cell { head: usize::MAX, tail: usize::MAX, next: usize::MAX, prev: usize::MAX, stamp: usize::MAX, buddy: usize::MAX });
    let mut first_cell = 0usize;
    for i in 0..n {
        // insert prev[i] at the head so the cell ends up rank-descending
        let v = prev[i];
        let c = &mut cells[0];
        vnext[v] = c.head;
        vprev[v] = usize::MAX;
        if c.head != usize::MAX {
            vprev[c.head] = v;
        } else {
            c.tail = v;
        }
        c.head = v;
        vcell[v] = 0;
    }

    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);

    let unlink_vertex = |cells: &mut Vec<Cell>,
                         vnext: &mut Vec<usize>,
                         vprev: &mut Vec<usize>,
                         v: usize,
                         cid: usize| {
        let (p, nx) = (vprev[v], vnext[v]);
        if p != usize::MAX {
            vnext[p] = nx;
        } else {
            cells[cid].head = nx;
        }
        if nx != usize::MAX {
            vprev[nx] = p;
        } else {
            cells[cid].tail = p;
        }
    };

    for step in 0..n {
        // Drop empty leading cells, then take the head of the first cell.
        while cells[first_cell].head == usize::MAX {
            first_cell = cells[first_cell].next;
        }
        let v = cells[first_cell].head;
        unlink_vertex(&mut cells, &mut vnext, &mut vprev, v, first_cell);
        visited[v] = true;
        order.push(v);

        for &u in &adj_desc[v] {
            if visited[u] {
                continue;
            }
            let cid = vcell[u];
            if cells[cid].stamp != step {
                let new_id = cells.len();
                let cprev = cells[cid].prev;
                cells.push(Cell { head: usize::MAX, tail: usize::MAX, next: cid, prev: cprev, stamp: usize::MAX, buddy: usize::MAX });
                if cprev != usize::MAX {
                    cells[cprev].next = new_id;
                }
                if cid == first_cell {
                    first_cell = new_id;
                }
                cells[cid].prev = new_id;
                cells[cid].stamp = step;
                cells[cid].buddy = new_id;
            }
            let buddy = cells[cid].buddy;
            unlink_vertex(&mut cells, &mut vnext, &mut vprev, u, cid);
            // append at tail: adj_desc iteration order keeps it rank-descending
            let t = cells[buddy].tail;
            vprev[u] = t;
            vnext[u] = usize::MAX;
            if t != usize::MAX {
                vnext[t] = u;
            } else {
                cells[buddy].head = u;
            }
            cells[buddy].tail = u;
            vcell[u] = buddy;
        }
    }
    order
}

/// True iff every closed neighborhood is consecutive in `order`.
pub(crate) fn is_straight_enumeration(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for v in 0..n {
        let mut lo = pos[v];
        let mut hi = pos[v];
        for &w in g.neighbors(v) {
            lo = lo.min(pos[w]);
            hi = hi.max(pos[w]);
        }
        if hi - lo != g.degree(v) {
            return false;
        }
    }
    true
}

/// 3-sweep Lex-BFS: returns a straight enumeration iff `g` is a proper
/// interval graph (components come out as consecutive blocks).
pub(crate) fn straight_enumeration(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let identity: Vec<usize> = (0..n).collect();
    let s1 = lbfs_plus(g, &identity);
    let s2 = lbfs_plus(g, &s1);
    let s3 = lbfs_plus(g, &s2);
    if is_straight_enumeration(g, &s3) {
        Some(s3)
    } else {
        None
    }
}

/// Proper interval model from a straight enumeration, with the 2n endpoints
/// canonicalized to distinct integers `0..2n`, stored doubled.
pub(crate) fn interval_model_from_order(g: &Graph, order: &[usize]) -> IntervalModel {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut reach: Vec<usize> = (0..n).map(|i| {
        let v = order[i];
        g.neighbors(v).iter().map(|&w| pos[w]).fold(i, usize::max)
    }).collect();
    // Properness wants right endpoints strictly increasing; a straight
    // enumeration already gives non-decreasing reach.
    for i in 1..n {
        reach[i] = reach[i].max(reach[i - 1]);
    }
    // Events: left endpoint of slot j at key (j, 0, j); right endpoint of
    // slot i at key (reach[i], 1, i). Rank-substitution gives the endpoints.
    let mut events: Vec<(usize, u8, usize)> = Vec::with_capacity(2 * n);
    for i in 0..n {
        events.push((i, 0, i));
        events.push((reach[i], 1, i));
    }
    events.sort_unstable();
    let mut lp = vec![0i64; n];
    let mut rp = vec![0i64; n];
    for (slot, &(_, kind, i)) in events.iter().enumerate() {
        if kind == 0 {
            lp[order[i]] = 2 * slot as i64;
        } else {
            rp[order[i]] = 2 * slot as i64;
        }
    }
    IntervalModel::from_doubled(lp, rp)
}

/// Lay out arcs for a circular vertex order: each vertex's closed
/// neighborhood must be a circular run around it. Returns `None` when the
/// run condition fails. The result has distinct integer endpoints `0..2n`
/// but is not guaranteed proper or Helly; callers verify.
pub(crate) fn arc_model_from_circular_order(g: &Graph, order: &[usize]) -> Option<ArcModel> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // clockwise reach b[i]: N[order[i]] == { order[i-a..=i+b] } circularly
    let mut reach = vec![0usize; n];
    for i in 0..n {
        let v = order[i];
        let mut fwd = 0;
        while fwd + 1 < n && g.has_edge(v, order[(i + fwd + 1) % n]) {
            fwd += 1;
        }
        let mut back = 0;
        while back + 1 + fwd < n && g.has_edge(v, order[(i + n - back - 1) % n]) {
            back += 1;
        }
        if fwd + back != g.degree(v) {
            return None; // neighborhood is not a circular run
        }
        reach[i] = fwd;
    }
    // Emit ccp(order[t]) followed by the cps of all arcs reaching exactly t,
    // more counterclockwise owners first.
    let mut ends_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        ends_at[(i + reach[i]) % n].push(i);
    }
    for (t, owners) in ends_at.iter_mut().enumerate() {
        owners.sort_by_key(|&i| std::cmp::Reverse((t + n - i) % n));
    }
    let mut start = vec![0usize; n];
    let mut end = vec![0usize; n];
    let mut slot = 0;
    for t in 0..n {
        start[order[t]] = slot;
        slot += 1;
        for &i in &ends_at[t] {
            end[order[i]] = slot;
            slot += 1;
        }
    }
    debug_assert_eq!(slot, 2 * n);
    Some(ArcModel::new(2 * n, start.into_iter().zip(end).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn lbfs_visits_everything_once() {
        let g = path(7);
        let order = lbfs_plus(&g, &(0..7).collect::<Vec<_>>());
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn paths_have_straight_enumerations() {
        for n in 1..10 {
            let order = straight_enumeration(&path(n)).expect("paths are proper interval");
            assert!(is_straight_enumeration(&path(n), &order));
        }
    }

    #[test]
    fn claw_has_none() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(straight_enumeration(&claw).is_none());
    }

    #[test]
    fn interval_model_represents_path() {
        let g = path(5);
        let order = straight_enumeration(&g).unwrap();
        let model = interval_model_from_order(&g, &order);
        assert_eq!(model.represented_graph(), g);
        assert!(model.is_proper());
    }

    #[test]
    fn circular_layout_of_cycle() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let order: Vec<usize> = (0..5).collect();
        let model = arc_model_from_circular_order(&g, &order).expect("cycle order is circular");
        assert_eq!(model.represented_graph(), g);
    }
}
