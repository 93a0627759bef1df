//! Circular-arc and interval models.
//!
//! An arc model assigns each vertex a closed arc `[start, end]` on a circle
//! of integer perimeter; an arc with `start > end` passes through the point
//! 0. A model is canonical when the perimeter is `2n` and the `2n` endpoints
//! are exactly the distinct integers `0..2n`. All probing happens at the
//! half-integer points `i + 0.5`, so every comparison is exact; internally
//! points are carried doubled.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};

/// Probe point between endpoint slots: index `i` denotes the point `i + 0.5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutPoint(pub usize);

impl CutPoint {
    /// The probe point in doubled coordinates: `2i + 1`.
    pub fn doubled(self) -> usize {
        2 * self.0 + 1
    }
}

impl std::fmt::Display for CutPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}.5", self.0)
    }
}

/// Outcome of [`ArcModel::verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelReport {
    /// Represented graph equals the given graph.
    pub represents: bool,
    /// No arc contains another.
    pub proper: bool,
    /// Every set of pairwise intersecting arcs has a common point; checked
    /// through triples, which is exact for proper models of non-chordal
    /// graphs.
    pub helly: bool,
}

impl ModelReport {
    pub fn all(self) -> bool {
        self.represents && self.proper && self.helly
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct ArcModel {
    perimeter: usize,
    arcs: Vec<(usize, usize)>,
}

impl std::fmt::Debug for ArcModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ArcModel(L={}, arcs={:?})", self.perimeter, self.arcs)
    }
}

impl ArcModel {
    /// Model from raw integer endpoints `(start, end)`; `start` is the
    /// counterclockwise endpoint. No canonicality is assumed.
    pub fn new(perimeter: usize, arcs: Vec<(usize, usize)>) -> Self {
        ArcModel { perimeter, arcs }
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn perimeter(&self) -> usize {
        self.perimeter
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn start(&self, v: usize) -> usize {
        self.arcs[v].0
    }

    pub fn end(&self, v: usize) -> usize {
        self.arcs[v].1
    }

    /// True iff the closed arc of `v` contains the point `p/2`.
    pub fn arc_contains_doubled(&self, v: usize, p: usize) -> bool {
        let (s, e) = (2 * self.arcs[v].0, 2 * self.arcs[v].1);
        if s <= e {
            s <= p && p <= e
        } else {
            p >= s || p <= e
        }
    }

    /// True iff arcs of `u` and `v` share a point.
    pub fn arcs_intersect(&self, u: usize, v: usize) -> bool {
        u != v
            && (self.arc_contains_doubled(u, 2 * self.arcs[v].0)
                || self.arc_contains_doubled(v, 2 * self.arcs[u].0))
    }

    /// Is the model canonical: perimeter `2n`, endpoints a permutation of
    /// `0..2n`.
    pub fn is_canonical(&self) -> bool {
        let n = self.n();
        if self.perimeter != 2 * n {
            return false;
        }
        let mut seen = vec![false; 2 * n];
        for &(s, e) in &self.arcs {
            for p in [s, e] {
                if p >= 2 * n || seen[p] {
                    return false;
                }
                seen[p] = true;
            }
        }
        true
    }

    /// Rank-substitute the endpoints: perimeter becomes `2n` and the
    /// endpoints the integers `0..2n`, preserving their circular order and
    /// hence the represented graph.
    pub fn canonicalize(&self) -> Result<ArcModel> {
        let n = self.n();
        let mut events: Vec<(usize, usize, u8)> = Vec::with_capacity(2 * n);
        for (v, &(s, e)) in self.arcs.iter().enumerate() {
            events.push((s, v, 0));
            events.push((e, v, 1));
        }
        events.sort_unstable();
        for w in events.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateEndpoints);
            }
        }
        let mut arcs = vec![(0usize, 0usize); n];
        for (slot, &(_, v, kind)) in events.iter().enumerate() {
            if kind == 0 {
                arcs[v].0 = slot;
            } else {
                arcs[v].1 = slot;
            }
        }
        Ok(ArcModel { perimeter: 2 * n, arcs })
    }

    /// Rotate every endpoint by `-shift` (so the old point `shift` becomes 0).
    pub fn rotate(&self, shift: usize) -> ArcModel {
        let l = self.perimeter;
        let arcs = self
            .arcs
            .iter()
            .map(|&(s, e)| ((s + l - shift % l) % l, (e + l - shift % l) % l))
            .collect();
        ArcModel { perimeter: l, arcs }
    }

    /// Intersection graph of the arcs (closed arcs, shared point = edge).
    pub fn represented_graph(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        if self.is_canonical() {
            // sweep: u ~ v iff one arc's start lies inside the other
            let mut owner_of_start = vec![usize::MAX; 2 * n];
            for (v, &(s, _)) in self.arcs.iter().enumerate() {
                owner_of_start[s] = v;
            }
            for (v, &(s, e)) in self.arcs.iter().enumerate() {
                let mut p = (s + 1) % (2 * n);
                while p != s {
                    let u = owner_of_start[p];
                    if u != usize::MAX && u != v {
                        edges.push((u.min(v), u.max(v)));
                    }
                    if p == e {
                        break;
                    }
                    p = (p + 1) % (2 * n);
                }
            }
            edges.sort_unstable();
            edges.dedup();
        } else {
            for u in 0..n {
                for v in u + 1..n {
                    if self.arcs_intersect(u, v) {
                        edges.push((u, v));
                    }
                }
            }
        }
        Graph::from_edges(n, &edges).expect("intersection edges are simple")
    }

    /// The clique of vertices whose arcs contain the probe point.
    pub fn point_clique(&self, alpha: CutPoint) -> VertexSet {
        let p = alpha.doubled();
        (0..self.n()).filter(|&v| self.arc_contains_doubled(v, p)).collect()
    }

    /// `v` intersects `u` from the left: the clockwise endpoint of `v` lies
    /// in the arc of `u`. Requires adjacency; in a proper Helly model of a
    /// non-chordal graph exactly one of the two directions holds.
    pub fn intersects_from_left(&self, v: usize, u: usize) -> Result<bool> {
        if !self.arcs_intersect(v, u) {
            return Err(Error::NotAdjacent(v, u));
        }
        Ok(self.arc_contains_doubled(u, 2 * self.arcs[v].1))
    }

    /// Directed cut at the probe: edges `v u` with `v` in the point clique,
    /// `u` outside it, and `v` intersecting `u` from the left.
    pub fn directed_cut(&self, alpha: CutPoint) -> EdgeSet {
        let p = alpha.doubled();
        let mut out = Vec::new();
        for v in 0..self.n() {
            if !self.arc_contains_doubled(v, p) {
                continue;
            }
            for u in 0..self.n() {
                if u == v || self.arc_contains_doubled(u, p) {
                    continue;
                }
                if self.arcs_intersect(v, u) && self.arc_contains_doubled(u, 2 * self.arcs[v].1) {
                    out.push((v.min(u), v.max(u)));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Unroll the model at the probe: vertices covering it keep their start
    /// but have the perimeter added to their end, all others keep their arc
    /// as an interval. The result represents the graph minus the directed
    /// cut at the probe.
    pub fn cut_to_interval_model(&self, alpha: CutPoint) -> IntervalModel {
        let p = alpha.doubled() as i64;
        let l2 = 2 * self.perimeter as i64;
        let n = self.n();
        let mut lp = vec![0i64; n];
        let mut rp = vec![0i64; n];
        for v in 0..n {
            // rotate the probe to 0 (doubled coordinates)
            let s = (2 * self.arcs[v].0 as i64 - p).rem_euclid(l2);
            let e = (2 * self.arcs[v].1 as i64 - p).rem_euclid(l2);
            lp[v] = s;
            rp[v] = if s <= e { e } else { e + l2 };
        }
        IntervalModel::from_doubled(lp, rp)
    }

    /// Check the model against `g`: representation, properness, and the
    /// Helly property via pairwise-intersecting triples without a common
    /// point.
    pub fn verify(&self, g: &Graph) -> ModelReport {
        let rep = self.represented_graph();
        let represents = rep == *g;
        let proper = self.is_proper();
        let helly = self.is_helly_via_triples(&rep);
        ModelReport { represents, proper, helly }
    }

    /// No arc contains another. Containment-free iff, sweeping starts in
    /// circular order, no arc ends before an earlier-started arc that still
    /// spans it.
    pub fn is_proper(&self) -> bool {
        let n = self.n();
        let l = self.perimeter as i64;
        // (start, unrolled end)
        let mut spans: Vec<(i64, i64)> = self
            .arcs
            .iter()
            .map(|&(s, e)| {
                let (s, e) = (s as i64, e as i64);
                (s, if s < e { e } else { e + l })
            })
            .collect();
        spans.sort_unstable();
        let doubled: Vec<(i64, i64)> =
            spans.iter().map(|&(s, e)| (s + l, e + l)).collect();
        let mut best_end = i64::MIN;
        let mut prev_start = i64::MIN;
        for &(s, e) in spans.iter().chain(doubled.iter()) {
            if s == prev_start {
                return false; // duplicate starts always nest one way
            }
            prev_start = s;
            if e <= best_end {
                return false;
            }
            best_end = best_end.max(e);
        }
        let _ = n;
        true
    }

    fn is_helly_via_triples(&self, rep: &Graph) -> bool {
        for (u, v) in rep.edges() {
            for &w in rep.neighbors(v) {
                if w <= v || w == u || !rep.has_edge(u, w) {
                    continue;
                }
                if u < v && !self.triple_has_common_point(u, v, w) {
                    return false;
                }
            }
        }
        true
    }

    /// Three pairwise-intersecting arcs share a point iff one of their six
    /// endpoints lies in all three arcs.
    fn triple_has_common_point(&self, a: usize, b: usize, c: usize) -> bool {
        for v in [a, b, c] {
            for p in [2 * self.arcs[v].0, 2 * self.arcs[v].1] {
                if self.arc_contains_doubled(a, p)
                    && self.arc_contains_doubled(b, p)
                    && self.arc_contains_doubled(c, p)
                {
                    return true;
                }
            }
        }
        false
    }

    /// Parse the arc-model text format: first line `n L`, then `n` lines
    /// `start end`.
    pub fn parse(text: &str) -> Result<ArcModel> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) =
            lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let parse_num = |tok: Option<&str>, line: usize| -> Result<usize> {
            tok.ok_or(Error::Parse { line, msg: "expected a number".into() })?
                .parse()
                .map_err(|_| Error::Parse { line, msg: "expected a number".into() })
        };
        let mut it = header.split_whitespace();
        let n = parse_num(it.next(), ln + 1)?;
        let l = parse_num(it.next(), ln + 1)?;
        let mut arcs = Vec::with_capacity(n);
        for (ln, line) in lines {
            let mut it = line.split_whitespace();
            let s = parse_num(it.next(), ln + 1)?;
            let e = parse_num(it.next(), ln + 1)?;
            if s >= l || e >= l {
                return Err(Error::Parse { line: ln + 1, msg: "endpoint outside circle".into() });
            }
            arcs.push((s, e));
        }
        if arcs.len() != n {
            return Err(Error::Parse { line: 0, msg: format!("declared {} arcs, found {}", n, arcs.len()) });
        }
        Ok(ArcModel { perimeter: l, arcs })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.perimeter);
        for &(a, b) in &self.arcs {
            let _ = writeln!(s, "{} {}", a, b);
        }
        s
    }
}

/// Interval model with half-integer endpoints, stored doubled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalModel {
    lp: Vec<i64>,
    rp: Vec<i64>,
}

impl IntervalModel {
    pub fn from_doubled(lp: Vec<i64>, rp: Vec<i64>) -> Self {
        debug_assert_eq!(lp.len(), rp.len());
        debug_assert!(lp.iter().zip(&rp).all(|(l, r)| l < r));
        IntervalModel { lp, rp }
    }

    pub fn n(&self) -> usize {
        self.lp.len()
    }

    /// Left endpoint, doubled.
    pub fn left_doubled(&self, v: usize) -> i64 {
        self.lp[v]
    }

    /// Right endpoint, doubled.
    pub fn right_doubled(&self, v: usize) -> i64 {
        self.rp[v]
    }

    pub fn represented_graph(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.lp[u].max(self.lp[v]) <= self.rp[u].min(self.rp[v]) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("intersection edges are simple")
    }

    /// No interval contains another.
    pub fn is_proper(&self) -> bool {
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| (self.lp[v], self.rp[v]));
        let mut best = i64::MIN;
        let mut prev_lp = i64::MIN;
        for &v in &order {
            if self.lp[v] == prev_lp || self.rp[v] <= best {
                return false;
            }
            prev_lp = self.lp[v];
            best = self.rp[v];
        }
        true
    }

    /// Shift all endpoints (doubled units).
    pub fn shifted(&self, by: i64) -> IntervalModel {
        IntervalModel {
            lp: self.lp.iter().map(|x| x + by).collect(),
            rp: self.rp.iter().map(|x| x + by).collect(),
        }
    }

    /// Concatenate two interval models side by side with a gap.
    pub fn concat(&self, other: &IntervalModel) -> IntervalModel {
        let offset = self.rp.iter().copied().max().unwrap_or(0) + 4;
        let mut lp = self.lp.clone();
        let mut rp = self.rp.clone();
        lp.extend(other.lp.iter().map(|x| x + offset));
        rp.extend(other.rp.iter().map(|x| x + offset));
        IntervalModel { lp, rp }
    }

    /// View the intervals as arcs on a circle big enough to leave a gap.
    pub fn to_arc_model(&self) -> ArcModel {
        let n = self.n();
        if n == 0 {
            return ArcModel::new(2, Vec::new());
        }
        let events: Vec<i64> = {
            let mut e: Vec<i64> = self.lp.iter().chain(self.rp.iter()).copied().collect();
            e.sort_unstable();
            e
        };
        let rank = |x: i64| events.binary_search(&x).expect("endpoint present");
        let arcs = (0..n).map(|v| (rank(self.lp[v]), rank(self.rp[v]))).collect();
        ArcModel::new(2 * n, arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The standard 4-arc model of a C4 used throughout.
    pub(crate) fn c4_model() -> ArcModel {
        ArcModel::new(8, vec![(7, 2), (1, 4), (3, 6), (5, 0)])
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn canonicalize_rank_substitution() {
        // arcs [1,4] and [3,7] on perimeter 10 -> [0,2] and [1,3] on 4
        let m = ArcModel::new(10, vec![(1, 4), (3, 7)]);
        let c = m.canonicalize().unwrap();
        assert_eq!(c.perimeter(), 4);
        assert_eq!(c.arcs(), &[(0, 2), (1, 3)]);
    }

    #[test]
    fn canonicalize_is_identity_on_canonical() {
        let m = c4_model();
        assert!(m.is_canonical());
        assert_eq!(m.canonicalize().unwrap(), m);
    }

    #[test]
    fn canonicalize_rejects_duplicates() {
        let m = ArcModel::new(10, vec![(1, 4), (4, 7)]);
        assert!(matches!(m.canonicalize(), Err(Error::DuplicateEndpoints)));
    }

    #[test]
    fn canonicalize_preserves_graph() {
        let m = ArcModel::new(100, vec![(90, 20), (10, 40), (30, 60), (50, 2)]);
        let c = m.canonicalize().unwrap();
        assert_eq!(m.represented_graph(), c.represented_graph());
    }

    #[test]
    fn c4_model_represents_c4() {
        assert_eq!(c4_model().represented_graph(), c4());
    }

    #[test]
    fn disjoint_arcs_and_shared_point() {
        let m = ArcModel::new(8, vec![(0, 1), (3, 5)]);
        assert_eq!(m.represented_graph().m(), 0);
        // all arcs covering the point 0 -> complete graph
        let m = ArcModel::new(8, vec![(6, 1), (7, 2), (5, 3)]);
        assert_eq!(m.represented_graph().m(), 3);
    }

    #[test]
    fn point_cliques_of_c4_model() {
        let m = c4_model();
        assert_eq!(m.point_clique(CutPoint(0)), vec![0]);
        assert_eq!(m.point_clique(CutPoint(1)), vec![0, 1]);
    }

    #[test]
    fn left_intersection_is_antisymmetric_on_c4() {
        let m = c4_model();
        assert!(m.intersects_from_left(0, 1).unwrap());
        assert!(!m.intersects_from_left(1, 0).unwrap());
        for (u, v) in c4().edges() {
            assert_ne!(
                m.intersects_from_left(u, v).unwrap(),
                m.intersects_from_left(v, u).unwrap()
            );
        }
        assert!(m.intersects_from_left(0, 2).is_err());
    }

    #[test]
    fn directed_cuts_of_c4_model() {
        let m = c4_model();
        assert_eq!(m.directed_cut(CutPoint(0)), vec![(0, 1)]);
        assert_eq!(m.directed_cut(CutPoint(1)), vec![(1, 2)]);
        // every probe of a plain hole cuts exactly one edge
        for i in 0..8 {
            assert_eq!(m.directed_cut(CutPoint(i)).len(), 1);
        }
    }

    #[test]
    fn cut_to_interval_gives_path() {
        let m = c4_model();
        let im = m.cut_to_interval_model(CutPoint(0));
        let expected = c4().remove_edges(&[(0, 1)]);
        assert_eq!(im.represented_graph(), expected);
        assert!(im.is_proper());
    }

    #[test]
    fn verify_c4_model() {
        assert!(c4_model().verify(&c4()).all());
    }

    #[test]
    fn helly_fails_for_covering_triangle() {
        // three long arcs, pairwise intersecting, jointly covering the circle
        let m = ArcModel::new(6, vec![(0, 2), (2, 4), (4, 0)]);
        let rep = m.represented_graph();
        assert_eq!(rep.m(), 3);
        let report = m.verify(&rep);
        assert!(report.represents);
        assert!(!report.helly);
    }

    #[test]
    fn proper_fails_on_containment() {
        let m = ArcModel::new(8, vec![(0, 5), (1, 3)]);
        assert!(!m.is_proper());
        let m = ArcModel::new(8, vec![(6, 3), (7, 1)]); // wrap containment
        assert!(!m.is_proper());
        assert!(c4_model().is_proper());
    }

    #[test]
    fn model_text_roundtrip() {
        let m = c4_model();
        let t = m.to_text();
        assert_eq!(ArcModel::parse(&t).unwrap(), m);
    }

    #[test]
    fn interval_model_as_arcs() {
        let im = IntervalModel::from_doubled(vec![0, 3, 8], vec![4, 9, 12]);
        let am = im.to_arc_model();
        assert!(am.is_canonical());
        assert_eq!(am.represented_graph(), im.represented_graph());
    }
}
