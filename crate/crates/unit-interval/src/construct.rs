//! Arc-model construction for connected non-chordal graphs.
//!
//! Strategy: collapse true twin classes, then cut the quotient at the closed
//! neighborhood of a hole vertex `v`. In any proper Helly model the arcs
//! avoiding the arc region of `v` form an interval model, so the rest of the
//! graph (the "line") carries a straight enumeration; the members of `N[v]`
//! carry one of their own, since their arcs cannot cover the circle. The
//! circular order of a valid model is then line-then-neighborhood, with two
//! refinements: members of `N[v]` are sorted so that suffix-covering arcs
//! come first (deepest first) and prefix-covering arcs last (deepest last),
//! and twin classes of the line, which the sweep orders arbitrarily, are
//! re-sorted by their coverage by prefix and suffix arcs. Candidates are
//! laid out and verified; any failure falls back to the caller's witness
//! search, which is complete, so an unverified candidate never escapes.

use crate::arc::ArcModel;
use crate::graph::{ChordalityCertificate, Graph};
use crate::sweep;

/// Try to build a verified proper Helly model for a connected non-chordal
/// graph. `hole` is any hole of `g`. Returns `None` when no candidate
/// circular order verifies (callers then hunt for a witness).
pub(crate) fn build_model(g: &Graph, hole: &[usize]) -> Option<ArcModel> {
    let classes = g.twin_partition();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let (q, rep_of) = g.induced_subgraph(&reps).expect("reps are in range");

    let q_hole: Vec<usize> = if classes.len() == g.n() {
        hole.to_vec()
    } else {
        match q.is_chordal() {
            ChordalityCertificate::Hole(h) => h,
            ChordalityCertificate::EliminationOrdering(_) => return None,
        }
    };
    // class index by representative old id
    let mut class_by_rep = std::collections::HashMap::new();
    for (ci, c) in classes.iter().enumerate() {
        class_by_rep.insert(c[0], ci);
    }

    let try_orders = |orders: Vec<Vec<usize>>| -> Option<ArcModel> {
        for q_order in orders {
            let g_order: Vec<usize> = q_order
                .iter()
                .flat_map(|&qi| classes[class_by_rep[&rep_of[qi]]].iter().copied())
                .collect();
            if let Some(model) = sweep::arc_model_from_circular_order(g, &g_order) {
                if model.verify(g).all() {
                    return Some(model);
                }
            }
        }
        None
    };
    if let Some(model) = try_orders(neighborhood_cut_orders(&q, &q_hole)) {
        return Some(model);
    }
    if q.n() <= 10 {
        return try_orders(brute_force_orders(&q));
    }
    None
}

fn neighborhood_cut_orders(q: &Graph, hole: &[usize]) -> Vec<Vec<usize>> {
    let v = hole[0];
    let mut in_s = vec![false; q.n()];
    in_s[v] = true;
    for &w in q.neighbors(v) {
        in_s[w] = true;
    }
    let s: Vec<usize> = (0..q.n()).filter(|&x| in_s[x]).collect();
    let rest: Vec<usize> = (0..q.n()).filter(|&x| !in_s[x]).collect();
    if rest.is_empty() {
        return Vec::new();
    }
    let (gp, map_p) = q.induced_subgraph(&rest).expect("in range");
    if !gp.is_connected() {
        return Vec::new();
    }
    let Some(sigma_local) = sweep::straight_enumeration(&gp) else {
        return Vec::new();
    };
    let (gs, map_s) = q.induced_subgraph(&s).expect("in range");
    let Some(tau_local) = sweep::straight_enumeration(&gs) else {
        return Vec::new();
    };
    let tau: Vec<usize> = tau_local.iter().map(|&x| map_s[x]).collect();
    // twin classes of the line, in parent ids
    let line_classes: Vec<Vec<usize>> = gp
        .twin_partition()
        .into_iter()
        .map(|c| c.into_iter().map(|x| map_p[x]).collect())
        .collect();

    let mut orders = Vec::new();
    for flip_sigma in [false, true] {
        let mut sigma: Vec<usize> = sigma_local.iter().map(|&x| map_p[x]).collect();
        if flip_sigma {
            sigma.reverse();
        }
        let Some(sigma) = refine_line_blocks(q, &sigma, &s, &line_classes) else {
            continue;
        };
        let t = sigma.len();
        let mut line_pos = vec![usize::MAX; q.n()];
        for (i, &u) in sigma.iter().enumerate() {
            line_pos[u] = i;
        }
        // coverage key: suffix coverers first (deepest first), then arcs
        // touching nothing of the line, then prefix coverers (deepest last)
        let key = |x: usize| -> Option<(usize, usize)> {
            let mut pos: Vec<usize> = q
                .neighbors(x)
                .iter()
                .map(|&w| line_pos[w])
                .filter(|&p| p != usize::MAX)
                .collect();
            if pos.is_empty() {
                return Some((t, 0));
            }
            pos.sort_unstable();
            let contiguous = pos.windows(2).all(|w| w[1] == w[0] + 1);
            if !contiguous {
                return None;
            }
            if *pos.last().unwrap() == t - 1 {
                Some((pos[0], 0)) // suffix (or everything)
            } else if pos[0] == 0 {
                Some((t, pos.len())) // prefix, deeper later
            } else {
                None // strictly interior coverage cannot reach the cut arc
            }
        };
        let keys: Option<Vec<(usize, (usize, usize))>> =
            tau.iter().map(|&x| key(x).map(|k| (x, k))).collect();
        let Some(keys) = keys else { continue };
        for flip_tau in [false, true] {
            let mut rho = keys.clone();
            if flip_tau {
                rho.reverse();
            }
            rho.sort_by_key(|&(_, k)| k);
            let mut order = sigma.clone();
            order.extend(rho.iter().map(|&(x, _)| x));
            orders.push(order);
        }
    }
    orders.dedup();
    orders
}

/// Reorder the members of each line twin class by their coverage by the cut
/// neighborhood: arcs covering a line prefix pull a vertex towards the
/// front, suffix coverers push it back. Within one class the coverage sets
/// are nested, so sorting by (prefix coverers descending, suffix coverers
/// ascending) recovers the unique valid order; a tie would mean two
/// quotient twins. Returns `None` when some neighborhood member covers a
/// class-level non-contiguous or interior stretch of the line.
fn refine_line_blocks(
    q: &Graph,
    sigma: &[usize],
    s: &[usize],
    line_classes: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let t = sigma.len();
    let mut pos = vec![usize::MAX; q.n()];
    for (i, &u) in sigma.iter().enumerate() {
        pos[u] = i;
    }
    // rank classes along the line by first appearance
    let mut class_of = vec![usize::MAX; q.n()];
    let mut class_min = vec![usize::MAX; line_classes.len()];
    for (ci, class) in line_classes.iter().enumerate() {
        for &u in class {
            class_of[u] = ci;
            class_min[ci] = class_min[ci].min(pos[u]);
        }
    }
    let mut rank_order: Vec<usize> = (0..line_classes.len()).collect();
    rank_order.sort_by_key(|&ci| class_min[ci]);
    let mut rank = vec![usize::MAX; line_classes.len()];
    for (r, &ci) in rank_order.iter().enumerate() {
        rank[ci] = r;
    }
    let last_rank = line_classes.len() - 1;

    let mut is_prefix_poker = vec![false; q.n()];
    let mut is_suffix_poker = vec![false; q.n()];
    for &x in s {
        let mut touched: Vec<usize> = q
            .neighbors(x)
            .iter()
            .filter(|&&w| pos[w] != usize::MAX)
            .map(|&w| rank[class_of[w]])
            .collect();
        if touched.is_empty() {
            continue;
        }
        touched.sort_unstable();
        touched.dedup();
        if touched.windows(2).any(|w| w[1] != w[0] + 1) {
            return None;
        }
        let (lo, hi) = (touched[0], *touched.last().unwrap());
        if lo == 0 && hi == last_rank {
            // covers the whole line at class level; distinguishes nothing
            continue;
        } else if lo == 0 {
            is_prefix_poker[x] = true;
        } else if hi == last_rank {
            is_suffix_poker[x] = true;
        } else {
            return None;
        }
    }

    let mut out = sigma.to_vec();
    for class in line_classes {
        if class.len() < 2 {
            continue;
        }
        let mut slots: Vec<usize> = class.iter().map(|&u| pos[u]).collect();
        slots.sort_unstable();
        let mut members: Vec<usize> = class.clone();
        members.sort_by_key(|&u| pos[u]);
        let coverage = |u: usize| -> (usize, usize) {
            let prefix =
                q.neighbors(u).iter().filter(|&&x| is_prefix_poker[x]).count();
            let suffix =
                q.neighbors(u).iter().filter(|&&x| is_suffix_poker[x]).count();
            (prefix, suffix)
        };
        members.sort_by_key(|&u| {
            let (p, s) = coverage(u);
            (std::cmp::Reverse(p), s)
        });
        for (slot, member) in slots.into_iter().zip(members) {
            out[slot] = member;
        }
    }
    let _ = t;
    Some(out)
}

/// All circular orders with vertex 0 pinned; last resort for tiny quotients.
fn brute_force_orders(q: &Graph) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    let n = q.n();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for perm in (1..n).permutations(n - 1) {
        let mut order = vec![0];
        order.extend(perm);
        out.push(order);
    }
    out
}
