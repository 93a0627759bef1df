//! Finders for the small forbidden induced subgraphs.
//!
//! Claw, tent (S3), net (complement of S3), the wheels W4 and W5, the
//! complement of C6, and the hole-plus-isolated-vertex family. Finders scan
//! vertex subsets in lexicographic order, so the first hit is deterministic.
//! They are deliberately brute force: they only run on NO-instances or on
//! graphs of bounded size.

use itertools::Itertools;

use crate::graph::Graph;
use crate::recognition::ForbiddenWitness;

/// Center adjacent to three pairwise non-adjacent leaves.
pub(crate) fn find_claw(g: &Graph) -> Option<ForbiddenWitness> {
    for center in 0..g.n() {
        let nb = g.neighbors(center);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in nb.iter().skip(j + 1) {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some(ForbiddenWitness::Claw { center, leaves: [a, b, c] });
                    }
                }
            }
        }
    }
    None
}

/// Tent: triangle `t0 t1 t2` plus rim vertices, `rim[i]` adjacent to
/// `t[i]` and `t[(i+1) % 3]` only.
pub(crate) fn as_tent(g: &Graph, sub: &[usize; 6]) -> Option<ForbiddenWitness> {
    // pick the triangle: the three vertices of degree 4 in the subgraph
    let deg =
        |v: usize| sub.iter().filter(|&&w| w != v && g.has_edge(v, w)).count();
    let mut tri: Vec<usize> = sub.iter().copied().filter(|&v| deg(v) == 4).collect();
    let rim: Vec<usize> = sub.iter().copied().filter(|&v| deg(v) == 2).collect();
    if tri.len() != 3 || rim.len() != 3 {
        return None;
    }
    if !tri.iter().tuple_combinations().all(|(&a, &b)| g.has_edge(a, b)) {
        return None;
    }
    if rim.iter().tuple_combinations().any(|(&a, &b)| g.has_edge(a, b)) {
        return None;
    }
    // align rim[i] to the pair {tri[i], tri[i+1]}
    let mut aligned = [usize::MAX; 3];
    for &r in &rim {
        let hit: Vec<usize> =
            (0..3).filter(|&i| g.has_edge(r, tri[i])).collect();
        if hit.len() != 2 {
            return None;
        }
        let slot = match (hit[0], hit[1]) {
            (0, 1) => 0,
            (1, 2) => 1,
            (0, 2) => 2,
            _ => unreachable!(),
        };
        if aligned[slot] != usize::MAX {
            return None;
        }
        aligned[slot] = r;
    }
    // slot 2 pairs {tri[2], tri[0]}: rotate so rim[i] ~ tri[i], tri[i+1]
    let triangle = [tri[0], tri[1], tri[2]];
    tri.rotate_left(0);
    Some(ForbiddenWitness::S3 { triangle, rim: aligned })
}

/// Net: triangle `t0 t1 t2` plus pendant `p[i]` adjacent to `t[i]` only.
pub(crate) fn as_net(g: &Graph, sub: &[usize; 6]) -> Option<ForbiddenWitness> {
    let deg =
        |v: usize| sub.iter().filter(|&&w| w != v && g.has_edge(v, w)).count();
    let tri: Vec<usize> = sub.iter().copied().filter(|&v| deg(v) == 3).collect();
    let pend: Vec<usize> = sub.iter().copied().filter(|&v| deg(v) == 1).collect();
    if tri.len() != 3 || pend.len() != 3 {
        return None;
    }
    if !tri.iter().tuple_combinations().all(|(&a, &b)| g.has_edge(a, b)) {
        return None;
    }
    let mut aligned = [usize::MAX; 3];
    for &p in &pend {
        let hit: Vec<usize> = (0..3).filter(|&i| g.has_edge(p, tri[i])).collect();
        if hit.len() != 1 || aligned[hit[0]] != usize::MAX {
            return None;
        }
        aligned[hit[0]] = p;
    }
    Some(ForbiddenWitness::S3Bar { triangle: [tri[0], tri[1], tri[2]], pendants: aligned })
}

pub(crate) fn find_tent(g: &Graph) -> Option<ForbiddenWitness> {
    subsets6(g).find_map(|sub| as_tent(g, &sub))
}

pub(crate) fn find_net(g: &Graph) -> Option<ForbiddenWitness> {
    subsets6(g).find_map(|sub| as_net(g, &sub))
}

fn subsets6(g: &Graph) -> impl Iterator<Item = [usize; 6]> + '_ {
    (0..g.n()).tuple_combinations().map(|(a, b, c, d, e, f)| [a, b, c, d, e, f])
}

/// Wheel W4: a 4-cycle plus a hub adjacent to all of it.
pub(crate) fn find_w4(g: &Graph) -> Option<ForbiddenWitness> {
    for sub in (0..g.n()).tuple_combinations().map(|(a, b, c, d, e)| [a, b, c, d, e]) {
        let deg = |v: usize| sub.iter().filter(|&&w| w != v && g.has_edge(v, w)).count();
        let Some(&hub) = sub.iter().find(|&&v| deg(v) == 4) else { continue };
        let rim: Vec<usize> = sub.iter().copied().filter(|&v| v != hub).collect();
        if rim.iter().any(|&v| deg(v) != 3) {
            continue;
        }
        if let Some(cycle) = cycle_order_4(g, &rim) {
            return Some(ForbiddenWitness::W4 { hole: cycle, hub });
        }
    }
    None
}

/// Wheel W5: a 5-cycle plus a hub adjacent to all of it.
pub(crate) fn find_w5(g: &Graph) -> Option<ForbiddenWitness> {
    for sub in subsets6(g) {
        let deg = |v: usize| sub.iter().filter(|&&w| w != v && g.has_edge(v, w)).count();
        let Some(&hub) = sub.iter().find(|&&v| deg(v) == 5) else { continue };
        let rim: Vec<usize> = sub.iter().copied().filter(|&v| v != hub).collect();
        if rim.iter().any(|&v| deg(v) != 3) {
            continue;
        }
        if let Some(cycle) = cycle_order_5(g, &rim) {
            return Some(ForbiddenWitness::W5 { hole: cycle, hub });
        }
    }
    None
}

/// Complement of C6: two disjoint triangles joined by a perfect matching.
pub(crate) fn find_c6bar(g: &Graph) -> Option<ForbiddenWitness> {
    for sub in subsets6(g) {
        let deg = |v: usize| sub.iter().filter(|&&w| w != v && g.has_edge(v, w)).count();
        if sub.iter().any(|&v| deg(v) != 3) {
            continue;
        }
        if let Some(w) = as_c6bar(g, &sub) {
            return Some(w);
        }
    }
    None
}

pub(crate) fn as_c6bar(g: &Graph, sub: &[usize; 6]) -> Option<ForbiddenWitness> {
    let a = sub[0];
    let nb: Vec<usize> = sub[1..].iter().copied().filter(|&v| g.has_edge(a, v)).collect();
    if nb.len() != 3 {
        return None;
    }
    // a's triangle: the two neighbors of a adjacent to each other
    let pair: Vec<(usize, usize)> = nb
        .iter()
        .tuple_combinations()
        .filter(|(&x, &y)| g.has_edge(x, y))
        .map(|(&x, &y)| (x, y))
        .collect();
    if pair.len() != 1 {
        return None;
    }
    let (x, y) = pair[0];
    let t1 = [a, x, y];
    let t2: Vec<usize> = sub.iter().copied().filter(|&v| !t1.contains(&v)).collect();
    if !t2.iter().tuple_combinations().all(|(&u, &v)| g.has_edge(u, v)) {
        return None;
    }
    // perfect matching between the triangles
    let mut matched = [usize::MAX; 3];
    for (i, &u) in t1.iter().enumerate() {
        let hits: Vec<usize> = t2.iter().copied().filter(|&v| g.has_edge(u, v)).collect();
        if hits.len() != 1 {
            return None;
        }
        matched[i] = hits[0];
    }
    if matched.iter().duplicates().next().is_some() {
        return None;
    }
    Some(ForbiddenWitness::C6Bar { triangles: [t1, matched] })
}

/// Hole plus a vertex adjacent to none of it: scan each vertex `v` and look
/// for a hole in the graph minus the closed neighborhood of `v`.
pub(crate) fn find_hole_star(g: &Graph) -> Option<ForbiddenWitness> {
    for v in 0..g.n() {
        let mut keep: Vec<usize> = (0..g.n()).filter(|&w| w != v && !g.has_edge(v, w)).collect();
        keep.sort_unstable();
        let (h, map) = g.induced_subgraph(&keep).ok()?;
        if let crate::graph::ChordalityCertificate::Hole(hole) = h.is_chordal() {
            let hole: Vec<usize> = hole.into_iter().map(|x| map[x]).collect();
            return Some(ForbiddenWitness::CStar { hole, isolated: v });
        }
    }
    None
}

fn cycle_order_4(g: &Graph, rim: &[usize]) -> Option<[usize; 4]> {
    debug_assert_eq!(rim.len(), 4);
    for perm in [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]] {
        let c = [rim[perm[0]], rim[perm[1]], rim[perm[2]], rim[perm[3]]];
        if crate::graph::verify_hole(g, &c) {
            return Some(c);
        }
    }
    None
}

fn cycle_order_5(g: &Graph, rim: &[usize]) -> Option<[usize; 5]> {
    debug_assert_eq!(rim.len(), 5);
    // fix rim[0] first; try all cyclic arrangements of the rest
    let rest = [rim[1], rim[2], rim[3], rim[4]];
    for perm in permutations4() {
        let c = [rim[0], rest[perm[0]], rest[perm[1]], rest[perm[2]], rest[perm[3]]];
        if crate::graph::verify_hole(g, &c) {
            return Some(c);
        }
    }
    None
}

fn permutations4() -> impl Iterator<Item = [usize; 4]> {
    (0..4).permutations(4).map(|p| [p[0], p[1], p[2], p[3]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn finds_claw() {
        let g = oracle::claw();
        let w = find_claw(&g).unwrap();
        assert!(w.verify(&g));
        assert!(find_claw(&oracle::cycle_graph(5)).is_none());
    }

    #[test]
    fn finds_tent_and_net() {
        let tent = oracle::tent();
        let w = find_tent(&tent).unwrap();
        assert!(w.verify(&tent));
        assert!(find_net(&tent).is_none());

        let net = oracle::net();
        let w = find_net(&net).unwrap();
        assert!(w.verify(&net));
        assert!(find_tent(&net).is_none());
    }

    #[test]
    fn finds_wheels() {
        let w4 = oracle::wheel(4);
        let w = find_w4(&w4).unwrap();
        assert!(w.verify(&w4));
        let w5 = oracle::wheel(5);
        let w = find_w5(&w5).unwrap();
        assert!(w.verify(&w5));
        assert!(find_w4(&w5).is_none());
    }

    #[test]
    fn finds_c6bar() {
        let g = oracle::c6_complement();
        let w = find_c6bar(&g).unwrap();
        assert!(w.verify(&g));
    }

    #[test]
    fn finds_hole_star() {
        let g = oracle::c_star(5);
        let w = find_hole_star(&g).unwrap();
        assert!(w.verify(&g));
        assert!(find_hole_star(&oracle::cycle_graph(6)).is_none());
    }
}
