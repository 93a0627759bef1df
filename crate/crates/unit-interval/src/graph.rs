//! Simple undirected graphs with sorted adjacency sets.
//!
//! Vertex ids are dense `0..n`. Adjacency lists are kept sorted so that
//! membership is `O(log d)` while all scan-style subroutines iterate the
//! lists directly. Every value is immutable after construction; operations
//! that "modify" a graph return a new one (plus an id mapping where vertices
//! are renumbered).

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Sorted list of vertex ids without duplicates.
pub type VertexSet = Vec<usize>;
/// Sorted list of vertex pairs `(u, v)` with `u < v`.
pub type EdgeSet = Vec<(usize, usize)>;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m, self.edges())
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for id in [u, v] {
            if id >= n {
                return Err(Error::VertexOutOfRange { id, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> EdgeSet {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-edges as sorted pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> EdgeSet {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Subgraph induced by `s`, with the mapping from new ids to old ids.
    /// `s` may be unsorted; the mapping is sorted ascending.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut keep = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&id) = keep.iter().find(|&&id| id >= n) {
            return Err(Error::VertexOutOfRange { id, n });
        }
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if new_id[w] != usize::MAX {
                    adj[i].push(new_id[w]);
                    if new_id[w] > i {
                        m += 1;
                    }
                }
            }
        }
        Ok((Graph { adj, m }, keep))
    }

    /// Graph with the vertices in `remove` deleted, plus new-to-old mapping.
    pub fn remove_vertices(&self, remove: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut gone = vec![false; self.n()];
        for &v in remove {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange { id: v, n: self.n() });
            }
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// Graph with the given edges removed (ids unchanged).
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            if let Ok(pos) = g.adj[u].binary_search(&v) {
                g.adj[u].remove(pos);
                let pos = g.adj[v].binary_search(&u).expect("symmetric adjacency");
                g.adj[v].remove(pos);
                g.m -= 1;
            }
        }
        g
    }

    /// Graph with the given non-edges added (ids unchanged).
    pub fn add_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            if u != v && !g.has_edge(u, v) {
                let pos = g.adj[u].binary_search(&v).unwrap_err();
                g.adj[u].insert(pos, v);
                let pos = g.adj[v].binary_search(&u).unwrap_err();
                g.adj[v].insert(pos, u);
                g.m += 1;
            }
        }
        g
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Maximal classes of vertices sharing a closed neighborhood, each a
    /// clique. Classes are sorted by smallest member.
    pub fn twin_partition(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut key: Vec<Vec<usize>> = Vec::with_capacity(n);
        for v in 0..n {
            let mut k = self.adj[v].clone();
            let pos = k.binary_search(&v).unwrap_err();
            k.insert(pos, v);
            key.push(k);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| key[a].cmp(&key[b]).then(a.cmp(&b)));
        let mut classes: Vec<VertexSet> = Vec::new();
        for &v in &order {
            match classes.last_mut() {
                Some(c) if key[c[0]] == key[v] => c.push(v),
                _ => classes.push(vec![v]),
            }
        }
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort_by_key(|c| c[0]);
        classes
    }

    /// Breadth-first distances from `s`; `usize::MAX` marks unreachable
    /// vertices. `blocked` vertices are never entered.
    pub(crate) fn bfs_distances(&self, s: usize, blocked: &[bool]) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        if blocked[s] {
            return (dist, parent);
        }
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !blocked[w] && dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }

    /// Parse the graph text format: first line `n m`, then `m` lines `u v`.
    /// Self-loops, duplicate edges and out-of-range ids are rejected.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize| -> Result<usize> {
            tok.ok_or(Error::Parse { line, msg: "expected a number".into() })?
                .parse()
                .map_err(|_| Error::Parse { line, msg: "expected a number".into() })
        };
        let n = parse_num(it.next(), ln + 1)?;
        let m = parse_num(it.next(), ln + 1)?;
        if it.next().is_some() {
            return Err(Error::Parse { line: ln + 1, msg: "trailing tokens after `n m`".into() });
        }
        let mut g = Graph::new(n);
        let mut read = 0;
        for (ln, line) in lines {
            if read == m {
                return Err(Error::Parse { line: ln + 1, msg: "more edge lines than declared".into() });
            }
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), ln + 1)?;
            let v = parse_num(it.next(), ln + 1)?;
            if it.next().is_some() {
                return Err(Error::Parse { line: ln + 1, msg: "trailing tokens after `u v`".into() });
            }
            g.insert_edge(u, v).map_err(|e| Error::Parse { line: ln + 1, msg: e.to_string() })?;
            read += 1;
        }
        if read != m {
            return Err(Error::Parse { line: 0, msg: format!("declared {} edges, found {}", m, read) });
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{} {}", u, v);
        }
        s
    }

    /// Maximum cardinality search with a certifying chordality check.
    pub fn is_chordal(&self) -> ChordalityCertificate {
        chordality(self)
    }
}

/// Outcome of the chordality test: a perfect elimination ordering when the
/// graph is chordal, otherwise a hole.
#[derive(Clone, Debug)]
pub enum ChordalityCertificate {
    /// Vertex permutation; every vertex's later neighbors form a clique.
    EliminationOrdering(Vec<usize>),
    /// Chordless cycle on at least four vertices, in cyclic order.
    Hole(Vec<usize>),
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::EliminationOrdering(_))
    }

    pub fn hole(&self) -> Option<&[usize]> {
        match self {
            ChordalityCertificate::Hole(h) => Some(h),
            _ => None,
        }
    }

    /// Check the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ChordalityCertificate::EliminationOrdering(order) => {
                if order.len() != g.n() {
                    return false;
                }
                let mut pos = vec![usize::MAX; g.n()];
                for (i, &v) in order.iter().enumerate() {
                    if v >= g.n() || pos[v] != usize::MAX {
                        return false;
                    }
                    pos[v] = i;
                }
                for (i, &v) in order.iter().enumerate() {
                    let later: Vec<usize> =
                        g.neighbors(v).iter().copied().filter(|&w| pos[w] > i).collect();
                    for (a, &x) in later.iter().enumerate() {
                        for &y in &later[a + 1..] {
                            if !g.has_edge(x, y) {
                                return false;
                            }
                        }
                    }
                }
                true
            }
            ChordalityCertificate::Hole(h) => verify_hole(g, h),
        }
    }
}

/// True iff `h` is a chordless cycle of length at least 4 in `g`.
pub fn verify_hole(g: &Graph, h: &[usize]) -> bool {
    let k = h.len();
    if k < 4 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for &v in h {
        if v >= g.n() || !seen.insert(v) {
            return false;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(h[i], h[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

fn chordality(g: &Graph) -> ChordalityCertificate {
    let n = g.n();
    if n == 0 {
        return ChordalityCertificate::EliminationOrdering(Vec::new());
    }

    // Maximum cardinality search; visit order reversed is the candidate
    // perfect elimination ordering.
    let mut weight = vec![0usize; n];
    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    bucket[0] = (0..n).rev().collect();
    let mut max_w = 0;
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = loop {
            while bucket[max_w].is_empty() {
                max_w = max_w.checked_sub(1).expect("some vertex remains");
            }
            let v = bucket[max_w].pop().expect("bucket nonempty");
            if !visited[v] && weight[v] == max_w {
                break v;
            }
        };
        visited[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
                bucket[weight[w]].push(w);
                max_w = max_w.max(weight[w]);
            }
        }
    }
    let order: Vec<usize> = visit.into_iter().rev().collect();

    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    // Zero fill-in test: the later neighbors of v minus the parent must be
    // neighbors of the parent. A violation hands us v with two non-adjacent
    // later neighbors.
    let mut deferred: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut mark = vec![false; n];
    for &p in &order {
        for &w in g.neighbors(p) {
            mark[w] = true;
        }
        let mut failure = None;
        for &(w, contributor) in &deferred[p] {
            if !mark[w] {
                failure = Some((contributor, p, w));
                break;
            }
        }
        for &w in g.neighbors(p) {
            mark[w] = false;
        }
        if let Some((v, x, y)) = failure {
            return ChordalityCertificate::Hole(extract_hole(g, v, x, y));
        }
        let i = pos[p];
        let later: Vec<usize> = g.neighbors(p).iter().copied().filter(|&w| pos[w] > i).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            for &w in &later {
                if w != parent {
                    deferred[parent].push((w, p));
                }
            }
        }
    }
    ChordalityCertificate::EliminationOrdering(order)
}

/// Hole through `v` given two non-adjacent neighbors `x, y` of `v`: a
/// shortest x-y path avoiding the rest of `N[v]` is induced, so together with
/// `v` it closes a chordless cycle. Falls back to scanning all such triples;
/// some triple admits a path whenever the graph is non-chordal.
fn extract_hole(g: &Graph, v: usize, x: usize, y: usize) -> Vec<usize> {
    if let Some(h) = hole_via(g, v, x, y) {
        return h;
    }
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !g.has_edge(x, y) {
                    if let Some(h) = hole_via(g, v, x, y) {
                        return h;
                    }
                }
            }
        }
    }
    unreachable!("hole extraction called on a chordal graph")
}

fn hole_via(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let mut blocked = vec![false; g.n()];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = true;
    }
    blocked[x] = false;
    blocked[y] = false;
    let (dist, parent) = g.bfs_distances(x, &blocked);
    if dist[y] == usize::MAX {
        return None;
    }
    let mut path = vec![y];
    let mut cur = y;
    while cur != x {
        cur = parent[cur];
        path.push(cur);
    }
    path.push(v);
    debug_assert!(verify_hole(g, &path));
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn parse_and_roundtrip() {
        let g = Graph::parse("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(0, 2));
        let again = Graph::parse(&g.to_text()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Graph::parse("2 1\n0 0\n").is_err());
        assert!(Graph::parse("2 2\n0 1\n1 0\n").is_err());
        assert!(Graph::parse("2 1\n0 5\n").is_err());
        assert!(Graph::parse("2 2\n0 1\n").is_err());
    }

    #[test]
    fn induced_subgraph_of_c4_is_path() {
        let g = cycle(4);
        let (h, map) = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.m(), 2);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && !h.has_edge(0, 2));
    }

    #[test]
    fn induced_subgraph_identity() {
        let g = cycle(5);
        let (h, _) = g.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn wheel_rim_is_c5() {
        // W5: rim 0..5, hub 5.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let g = Graph::from_edges(6, &edges).unwrap();
        let (h, _) = g.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(h, cycle(5));
    }

    #[test]
    fn c4_yields_hole() {
        let cert = cycle(4).is_chordal();
        assert!(!cert.is_chordal());
        assert!(cert.verify(&cycle(4)));
        assert_eq!(cert.hole().unwrap().len(), 4);
    }

    #[test]
    fn tree_is_chordal() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let cert = g.is_chordal();
        assert!(cert.is_chordal());
        assert!(cert.verify(&g));
    }

    #[test]
    fn c6_with_long_chord_has_short_hole() {
        let mut g = cycle(6);
        g = g.add_edges(&[(0, 3)]);
        let cert = g.is_chordal();
        let h = cert.hole().expect("non-chordal");
        assert!(verify_hole(&g, h));
        assert!(h.len() == 4 || h.len() == 5);
    }

    #[test]
    fn twin_partition_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.twin_partition(), vec![vec![0, 1, 2]]);
        let c5 = cycle(5);
        assert_eq!(c5.twin_partition().len(), 5);
    }

    #[test]
    fn twin_classes_induce_cliques() {
        let g = Graph::parse("6 7\n0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n").unwrap();
        for class in g.twin_partition() {
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(cycle(5).is_connected());
        assert_eq!(Graph::new(4).connected_components().len(), 4);
    }
}
