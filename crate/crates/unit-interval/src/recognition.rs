//! Certifying recognition.
//!
//! Three entry points, each returning either a verified model or a verified
//! obstruction:
//! - [`recognize_phcag`]: proper Helly circular-arc graphs. YES gives an arc
//!   model passing [`crate::arc::ArcModel::verify`]; NO gives one of claw,
//!   tent, net, `W4`, `W5`, complement of `C6`, or a hole plus a vertex
//!   adjacent to none of it.
//! - [`recognize_f_free`]: the claw/tent/net/`C4` family. Outcomes are a
//!   model, a witness from that family, or a partition into six twin-class
//!   cliques whose quotient is a 5-wheel. A bare `C4` counts as a model
//!   here; hole hunting happens downstream on the model.
//! - [`is_unit_interval_certified`]: unit interval membership, by
//!   chordality plus a proper interval model. Disconnected inputs are
//!   handled per component.

use crate::arc::{ArcModel, IntervalModel};
use crate::construct;
use crate::error::{Error, Result};
use crate::forbidden;
use crate::graph::{ChordalityCertificate, Graph, VertexSet, verify_hole};
use crate::sweep;

/// A vertex-labeled certificate of non-membership. `verify` checks the
/// induced subgraph on the listed vertices against the named pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenWitness {
    /// `center` adjacent to three pairwise non-adjacent `leaves`.
    Claw { center: usize, leaves: [usize; 3] },
    /// Tent: `triangle` pairwise adjacent, `rim[i]` adjacent to
    /// `triangle[i]` and `triangle[(i+1)%3]` only.
    S3 { triangle: [usize; 3], rim: [usize; 3] },
    /// Net: `triangle` pairwise adjacent, `pendants[i]` adjacent to
    /// `triangle[i]` only.
    S3Bar { triangle: [usize; 3], pendants: [usize; 3] },
    /// Chordless 4-cycle in cyclic order.
    C4([usize; 4]),
    /// Chordless 5-cycle in cyclic order.
    C5([usize; 5]),
    /// Chordless cycle of length at least 4, cyclic order.
    Hole(Vec<usize>),
    /// 4-wheel: hole plus a hub adjacent to all of it.
    W4 { hole: [usize; 4], hub: usize },
    /// 5-wheel.
    W5 { hole: [usize; 5], hub: usize },
    /// Complement of `C6`: two triangles joined by the perfect matching
    /// `triangles[0][i] ~ triangles[1][i]`.
    C6Bar { triangles: [[usize; 3]; 2] },
    /// Hole plus a vertex adjacent to none of its vertices.
    CStar { hole: Vec<usize>, isolated: usize },
}

impl ForbiddenWitness {
    pub fn kind(&self) -> &'static str {
        match self {
            ForbiddenWitness::Claw { .. } => "CLAW",
            ForbiddenWitness::S3 { .. } => "S3",
            ForbiddenWitness::S3Bar { .. } => "S3BAR",
            ForbiddenWitness::C4(_) => "C4",
            ForbiddenWitness::C5(_) => "C5",
            ForbiddenWitness::Hole(_) => "HOLE",
            ForbiddenWitness::W4 { .. } => "W4",
            ForbiddenWitness::W5 { .. } => "W5",
            ForbiddenWitness::C6Bar { .. } => "C6BAR",
            ForbiddenWitness::CStar { .. } => "CSTAR",
        }
    }

    /// All vertices of the witness; for wheels and stars the hole comes
    /// first, the apex last.
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            ForbiddenWitness::Claw { center, leaves } => {
                let mut v = vec![*center];
                v.extend(leaves);
                v
            }
            ForbiddenWitness::S3 { triangle, rim } => {
                triangle.iter().chain(rim.iter()).copied().collect()
            }
            ForbiddenWitness::S3Bar { triangle, pendants } => {
                triangle.iter().chain(pendants.iter()).copied().collect()
            }
            ForbiddenWitness::C4(c) => c.to_vec(),
            ForbiddenWitness::C5(c) => c.to_vec(),
            ForbiddenWitness::Hole(h) => h.clone(),
            ForbiddenWitness::W4 { hole, hub } => {
                let mut v = hole.to_vec();
                v.push(*hub);
                v
            }
            ForbiddenWitness::W5 { hole, hub } => {
                let mut v = hole.to_vec();
                v.push(*hub);
                v
            }
            ForbiddenWitness::C6Bar { triangles } => {
                triangles[0].iter().chain(triangles[1].iter()).copied().collect()
            }
            ForbiddenWitness::CStar { hole, isolated } => {
                let mut v = hole.clone();
                v.push(*isolated);
                v
            }
        }
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        let mut seen = std::collections::HashSet::new();
        if !vs.iter().all(|&v| v < g.n() && seen.insert(v)) {
            return false;
        }
        match self {
            ForbiddenWitness::Claw { center, leaves } => {
                leaves.iter().all(|&l| g.has_edge(*center, l))
                    && !g.has_edge(leaves[0], leaves[1])
                    && !g.has_edge(leaves[0], leaves[2])
                    && !g.has_edge(leaves[1], leaves[2])
            }
            ForbiddenWitness::S3 { triangle: t, rim } => {
                (0..3).all(|i| g.has_edge(t[i], t[(i + 1) % 3]))
                    && (0..3).all(|i| {
                        g.has_edge(rim[i], t[i])
                            && g.has_edge(rim[i], t[(i + 1) % 3])
                            && !g.has_edge(rim[i], t[(i + 2) % 3])
                    })
                    && (0..3).all(|i| !g.has_edge(rim[i], rim[(i + 1) % 3]))
            }
            ForbiddenWitness::S3Bar { triangle: t, pendants } => {
                (0..3).all(|i| g.has_edge(t[i], t[(i + 1) % 3]))
                    && (0..3).all(|i| {
                        g.has_edge(pendants[i], t[i])
                            && !g.has_edge(pendants[i], t[(i + 1) % 3])
                            && !g.has_edge(pendants[i], t[(i + 2) % 3])
                    })
                    && (0..3).all(|i| !g.has_edge(pendants[i], pendants[(i + 1) % 3]))
            }
            ForbiddenWitness::C4(c) => verify_hole(g, c),
            ForbiddenWitness::C5(c) => verify_hole(g, c),
            ForbiddenWitness::Hole(h) => verify_hole(g, h),
            ForbiddenWitness::W4 { hole, hub } => {
                verify_hole(g, hole) && hole.iter().all(|&h| g.has_edge(*hub, h))
            }
            ForbiddenWitness::W5 { hole, hub } => {
                verify_hole(g, hole) && hole.iter().all(|&h| g.has_edge(*hub, h))
            }
            ForbiddenWitness::C6Bar { triangles: [t1, t2] } => {
                (0..3).all(|i| {
                    g.has_edge(t1[i], t1[(i + 1) % 3]) && g.has_edge(t2[i], t2[(i + 1) % 3])
                }) && (0..3).all(|i| {
                    (0..3).all(|j| g.has_edge(t1[i], t2[j]) == (i == j))
                })
            }
            ForbiddenWitness::CStar { hole, isolated } => {
                hole.len() >= 4
                    && verify_hole(g, hole)
                    && hole.iter().all(|&h| !g.has_edge(*isolated, h))
            }
        }
    }

    /// Rewrite vertex ids through `map` (new id -> old id), for lifting a
    /// witness found in an induced subgraph back to the parent graph.
    pub fn relabel(&self, map: &[usize]) -> ForbiddenWitness {
        let f = |v: usize| map[v];
        let f3 = |a: &[usize; 3]| [map[a[0]], map[a[1]], map[a[2]]];
        match self {
            ForbiddenWitness::Claw { center, leaves } => {
                ForbiddenWitness::Claw { center: f(*center), leaves: f3(leaves) }
            }
            ForbiddenWitness::S3 { triangle, rim } => {
                ForbiddenWitness::S3 { triangle: f3(triangle), rim: f3(rim) }
            }
            ForbiddenWitness::S3Bar { triangle, pendants } => {
                ForbiddenWitness::S3Bar { triangle: f3(triangle), pendants: f3(pendants) }
            }
            ForbiddenWitness::C4(c) => ForbiddenWitness::C4(c.map(f)),
            ForbiddenWitness::C5(c) => ForbiddenWitness::C5(c.map(f)),
            ForbiddenWitness::Hole(h) => {
                ForbiddenWitness::Hole(h.iter().map(|&v| map[v]).collect())
            }
            ForbiddenWitness::W4 { hole, hub } => {
                ForbiddenWitness::W4 { hole: hole.map(f), hub: f(*hub) }
            }
            ForbiddenWitness::W5 { hole, hub } => {
                ForbiddenWitness::W5 { hole: hole.map(f), hub: f(*hub) }
            }
            ForbiddenWitness::C6Bar { triangles } => ForbiddenWitness::C6Bar {
                triangles: [f3(&triangles[0]), f3(&triangles[1])],
            },
            ForbiddenWitness::CStar { hole, isolated } => ForbiddenWitness::CStar {
                hole: hole.iter().map(|&v| map[v]).collect(),
                isolated: f(*isolated),
            },
        }
    }

    /// One-line serialization: `WITNESS <tag> <vertices>`.
    pub fn to_line(&self) -> String {
        let vs: Vec<String> = self.vertices().iter().map(|v| v.to_string()).collect();
        format!("WITNESS {} {}", self.kind(), vs.join(" "))
    }
}

/// Six twin-class cliques whose quotient is a 5-wheel: five classes form the
/// fat hole, one the hub.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatW5 {
    pub hole_classes: [VertexSet; 5],
    pub hub: VertexSet,
}

impl FatW5 {
    pub fn classes(&self) -> impl Iterator<Item = &VertexSet> {
        self.hole_classes.iter().chain(std::iter::once(&self.hub))
    }

    /// Partition check, twin-class check (equal closed neighborhoods), and
    /// the 5-wheel quotient adjacency.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        let mut total = 0;
        for class in self.classes() {
            if class.is_empty() {
                return false;
            }
            for &v in class {
                if v >= g.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
                total += 1;
            }
        }
        if total != g.n() {
            return false;
        }
        let closed = |v: usize| {
            let mut c = g.neighbors(v).to_vec();
            c.push(v);
            c.sort_unstable();
            c
        };
        for class in self.classes() {
            let c0 = closed(class[0]);
            if class.iter().any(|&v| closed(v) != c0) {
                return false;
            }
        }
        let rep = |i: usize| self.hole_classes[i][0];
        let hub = self.hub[0];
        for i in 0..5 {
            if !g.has_edge(rep(i), rep((i + 1) % 5)) || !g.has_edge(rep(i), hub) {
                return false;
            }
            if g.has_edge(rep(i), rep((i + 2) % 5)) {
                return false;
            }
        }
        true
    }

    pub fn smallest_hole_class(&self) -> usize {
        (0..5).min_by_key(|&i| (self.hole_classes[i].len(), i)).expect("five classes")
    }

    /// Serialization: six `CLASS i: <vertices>` lines.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (i, class) in self.classes().enumerate() {
            let vs: Vec<String> = class.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("CLASS {}: {}\n", i, vs.join(" ")));
        }
        out
    }
}

/// Outcome of [`recognize_phcag`].
#[derive(Clone, Debug)]
pub enum PhcagOutcome {
    Model(ArcModel),
    Witness(ForbiddenWitness),
}

/// Outcome of [`recognize_f_free`].
#[derive(Clone, Debug)]
pub enum RecognitionOutcome {
    Phcag(ArcModel),
    Witness(ForbiddenWitness),
    FatW5(FatW5),
}

/// Outcome of [`is_unit_interval_certified`].
#[derive(Clone, Debug)]
pub enum UnitIntervalOutcome {
    Yes(IntervalModel),
    No(ForbiddenWitness),
}

impl UnitIntervalOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, UnitIntervalOutcome::Yes(_))
    }
}

/// Certifying recognition of proper Helly circular-arc graphs on a connected
/// input. The model construction is verification-gated: a candidate model is
/// built (directly for chordal inputs, through the circular order of a twin
/// quotient otherwise) and checked; on failure an exhaustive obstruction
/// search takes over, which is complete for this class.
pub fn recognize_phcag(g: &Graph) -> Result<PhcagOutcome> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 0 {
        return Ok(PhcagOutcome::Model(ArcModel::new(0, Vec::new())));
    }
    if n == 1 {
        return Ok(PhcagOutcome::Model(ArcModel::new(2, vec![(0, 1)])));
    }
    match g.is_chordal() {
        ChordalityCertificate::EliminationOrdering(_) => {
            if let Some(order) = sweep::straight_enumeration(g) {
                let im = sweep::interval_model_from_order(g, &order);
                let am = im.to_arc_model();
                debug_assert!(am.verify(g).all());
                return Ok(PhcagOutcome::Model(am));
            }
            // chordal but not unit interval: a claw, tent or net exists
            small_witness(g)
                .map(PhcagOutcome::Witness)
                .ok_or_else(|| Error::Internal("chordal non-interval graph without witness".into()))
        }
        ChordalityCertificate::Hole(hole) => {
            if let Some(model) = construct::build_model(g, &hole) {
                return Ok(PhcagOutcome::Model(model));
            }
            if let Some(w) = small_witness(g) {
                return Ok(PhcagOutcome::Witness(w));
            }
            if let Some(w) = forbidden::find_w4(g) {
                return Ok(PhcagOutcome::Witness(w));
            }
            if let Some(w) = forbidden::find_c6bar(g) {
                return Ok(PhcagOutcome::Witness(w));
            }
            if let Some(w) = forbidden::find_hole_star(g) {
                return Ok(PhcagOutcome::Witness(w));
            }
            if let Some(w) = forbidden::find_w5(g) {
                return Ok(PhcagOutcome::Witness(w));
            }
            Err(Error::Internal("model construction failed on an obstruction-free graph".into()))
        }
    }
}

fn small_witness(g: &Graph) -> Option<ForbiddenWitness> {
    forbidden::find_claw(g)
        .or_else(|| forbidden::find_tent(g))
        .or_else(|| forbidden::find_net(g))
}

/// The trichotomy for connected graphs: an arc model, a witness from
/// {claw, tent, net, C4}, or a fat 5-wheel partition.
pub fn recognize_f_free(g: &Graph) -> Result<RecognitionOutcome> {
    let outcome = match recognize_phcag(g)? {
        PhcagOutcome::Model(m) => return Ok(RecognitionOutcome::Phcag(m)),
        PhcagOutcome::Witness(w) => w,
    };
    let out = match outcome {
        w @ (ForbiddenWitness::Claw { .. }
        | ForbiddenWitness::S3 { .. }
        | ForbiddenWitness::S3Bar { .. }) => RecognitionOutcome::Witness(w),
        ForbiddenWitness::W4 { hole, .. } => {
            RecognitionOutcome::Witness(ForbiddenWitness::C4(hole))
        }
        ForbiddenWitness::C6Bar { triangles: [t1, t2] } => {
            // matching edge, triangle edge, matching edge, triangle edge
            RecognitionOutcome::Witness(ForbiddenWitness::C4([t1[0], t2[0], t2[2], t1[2]]))
        }
        ForbiddenWitness::CStar { hole, .. } if hole.len() == 4 => {
            RecognitionOutcome::Witness(ForbiddenWitness::C4([hole[0], hole[1], hole[2], hole[3]]))
        }
        ForbiddenWitness::CStar { hole, isolated } => {
            RecognitionOutcome::Witness(witness_from_far_vertex(g, &hole, isolated))
        }
        ForbiddenWitness::W5 { hole, hub } => grow_fat_w5(g, hole, hub)?,
        w => {
            return Err(Error::Internal(format!(
                "unexpected witness {} from the circular-arc recognizer",
                w.kind()
            )))
        }
    };
    debug_assert!(match &out {
        RecognitionOutcome::Witness(w) => w.verify(g),
        RecognitionOutcome::FatW5(f) => f.verify(g),
        RecognitionOutcome::Phcag(_) => true,
    });
    Ok(out)
}

/// A vertex `far` adjacent to no vertex of a hole of length at least 5
/// yields a claw or a net: walk a shortest path from `far` to the hole and
/// split on how its last inner vertex attaches.
fn witness_from_far_vertex(g: &Graph, hole: &[usize], far: usize) -> ForbiddenWitness {
    let l = hole.len();
    debug_assert!(l >= 5);
    let mut on_hole = vec![usize::MAX; g.n()];
    for (i, &h) in hole.iter().enumerate() {
        on_hole[h] = i;
    }
    let blocked = vec![false; g.n()];
    let (dist, parent) = g.bfs_distances(far, &blocked);
    let &hit = hole
        .iter()
        .min_by_key(|&&h| dist[h])
        .expect("hole nonempty");
    debug_assert!(dist[hit] >= 2, "far vertex is adjacent to the hole");
    // path far .. x y hit
    let y = parent[hit];
    let x = if y == far { far } else { parent[y] };
    let i = on_hole[hit];
    let idx = |d: i64| hole[((i as i64 + d).rem_euclid(l as i64)) as usize];
    let y_hits: Vec<usize> = (0..l).filter(|&j| g.has_edge(y, hole[j])).collect();
    debug_assert!(y_hits.contains(&i));
    if y_hits.len() == 1 {
        return ForbiddenWitness::Claw { center: hit, leaves: [y, idx(-1), idx(1)] };
    }
    if y_hits.len() == 2 {
        let (a, b) = (y_hits[0], y_hits[1]);
        let consecutive = (b + l - a) % l == 1 || (a + l - b) % l == 1;
        if consecutive {
            // orient so y ~ hole[i], hole[i+1]
            let i = if (b + l - a) % l == 1 { a } else { b };
            let at = |d: i64| hole[((i as i64 + d).rem_euclid(l as i64)) as usize];
            return ForbiddenWitness::S3Bar {
                triangle: [y, at(0), at(1)],
                pendants: [x, at(-1), at(2)],
            };
        }
    }
    // two non-adjacent hole neighbors of y exist
    for (a, &ja) in y_hits.iter().enumerate() {
        for &jb in &y_hits[a + 1..] {
            if !g.has_edge(hole[ja], hole[jb]) {
                return ForbiddenWitness::Claw { center: y, leaves: [x, hole[ja], hole[jb]] };
            }
        }
    }
    unreachable!("three pairwise adjacent vertices on a hole")
}

/// Grow the six cliques of a fat 5-wheel from a plain 5-wheel, returning a
/// small witness as soon as a vertex refuses to fit.
fn grow_fat_w5(g: &Graph, rim: [usize; 5], hub: usize) -> Result<RecognitionOutcome> {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n]; // 0..5 rim classes, 5 = hub class
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); 6];
    for (i, &h) in rim.iter().enumerate() {
        class_of[h] = i;
        classes[i].push(h);
    }
    class_of[hub] = 5;
    classes[5].push(hub);

    let at = |i: usize, d: i64| rim[((i as i64 + d).rem_euclid(5)) as usize];
    let witness = |w: ForbiddenWitness| Ok(RecognitionOutcome::Witness(w));

    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let hits: Vec<usize> = (0..5).filter(|&i| g.has_edge(x, rim[i])).collect();
        match hits.len() {
            0 => {
                // the rim and x form a hole plus a far vertex; same split as
                // the path-based extraction, with x as the source
                return witness(witness_from_far_vertex(g, &rim, x));
            }
            1 => {
                let i = hits[0];
                return witness(ForbiddenWitness::Claw {
                    center: rim[i],
                    leaves: [x, at(i, -1), at(i, 1)],
                });
            }
            _ => {}
        }
        // exactly two consecutive rim neighbors
        let consecutive_pair = hits.len() == 2
            && ((hits[1] + 5 - hits[0]) % 5 == 1 || (hits[0] + 5 - hits[1]) % 5 == 1);
        if consecutive_pair {
            let i = if hits == vec![0, 4] { 4 } else { hits[0] };
            if g.has_edge(x, hub) {
                return witness(ForbiddenWitness::Claw {
                    center: hub,
                    leaves: [at(i, -1), at(i, 2), x],
                });
            }
            return witness(ForbiddenWitness::S3 {
                triangle: [rim[i], at(i, 1), hub],
                rim: [x, at(i, 2), at(i, -1)],
            });
        }
        // x adjacent to both neighbors of a rim vertex but not the vertex
        if let Some(i) = (0..5).find(|&i| {
            g.has_edge(x, at(i, -1)) && g.has_edge(x, at(i, 1)) && !g.has_edge(x, rim[i])
        }) {
            return witness(ForbiddenWitness::C4([x, at(i, -1), rim[i], at(i, 1)]));
        }
        if hits.len() == 5 {
            if let Some(y) = classes.iter().flatten().find(|&&y| !g.has_edge(x, y)).copied() {
                let (a, b) = match class_of[y] {
                    5 => (rim[0], rim[2]),
                    i => (at(i, -1), at(i, 1)),
                };
                return witness(ForbiddenWitness::C4([x, a, y, b]));
            }
            class_of[x] = 5;
            classes[5].push(x);
            continue;
        }
        // remaining: exactly three consecutive rim neighbors centered at i
        let i = (0..5)
            .find(|&i| {
                g.has_edge(x, rim[i]) && g.has_edge(x, at(i, -1)) && g.has_edge(x, at(i, 1))
            })
            .ok_or_else(|| Error::Internal("rim adjacency fell through the case split".into()))?;
        if let Some(&y) = classes[i].iter().chain(classes[5].iter()).find(|&&y| !g.has_edge(x, y))
        {
            return witness(ForbiddenWitness::C4([x, at(i, -1), y, at(i, 1)]));
        }
        let prev = ((i + 4) % 5, (i + 1) % 5);
        if let Some(&y) = classes[prev.0].iter().find(|&&y| !g.has_edge(x, y)) {
            return witness(ForbiddenWitness::Claw { center: hub, leaves: [y, at(i, 2), x] });
        }
        if let Some(&y) = classes[prev.1].iter().find(|&&y| !g.has_edge(x, y)) {
            return witness(ForbiddenWitness::Claw { center: hub, leaves: [at(i, -2), y, x] });
        }
        if let Some(&y) = classes[(i + 3) % 5].iter().find(|&&y| g.has_edge(x, y)) {
            return witness(ForbiddenWitness::C4([x, at(i, 1), at(i, 2), y]));
        }
        if let Some(&y) = classes[(i + 2) % 5].iter().find(|&&y| g.has_edge(x, y)) {
            return witness(ForbiddenWitness::C4([x, at(i, -1), at(i, -2), y]));
        }
        class_of[x] = i;
        classes[i].push(x);
    }

    let mut it = classes.into_iter();
    let mut take = || {
        let mut c = it.next().expect("six classes");
        c.sort_unstable();
        c
    };
    let fat = FatW5 {
        hole_classes: [take(), take(), take(), take(), take()],
        hub: take(),
    };
    Ok(RecognitionOutcome::FatW5(fat))
}

/// Unit interval membership with certificates, per connected component:
/// a proper interval model on YES, otherwise a claw, tent, net, or hole.
pub fn is_unit_interval_certified(g: &Graph) -> UnitIntervalOutcome {
    let mut lp = vec![0i64; g.n()];
    let mut rp = vec![0i64; g.n()];
    let mut offset = 0i64;
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp).expect("components are in range");
        match component_unit_interval(&sub) {
            Ok(im) => {
                let mut span = 0;
                for v in 0..im.n() {
                    lp[map[v]] = im.left_doubled(v) + offset;
                    rp[map[v]] = im.right_doubled(v) + offset;
                    span = span.max(im.right_doubled(v));
                }
                offset += span + 4;
            }
            Err(w) => return UnitIntervalOutcome::No(w.relabel(&map)),
        }
    }
    UnitIntervalOutcome::Yes(IntervalModel::from_doubled(lp, rp))
}

fn component_unit_interval(g: &Graph) -> std::result::Result<IntervalModel, ForbiddenWitness> {
    match g.is_chordal() {
        ChordalityCertificate::Hole(h) => Err(ForbiddenWitness::Hole(h)),
        ChordalityCertificate::EliminationOrdering(_) => {
            if let Some(order) = sweep::straight_enumeration(g) {
                Ok(sweep::interval_model_from_order(g, &order))
            } else {
                Err(small_witness(g).expect("chordal non-interval graph has a small witness"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn c5_gets_a_model() {
        let g = oracle::cycle_graph(5);
        match recognize_phcag(&g).unwrap() {
            PhcagOutcome::Model(m) => {
                assert!(m.verify(&g).all());
                assert!(m.is_canonical());
            }
            PhcagOutcome::Witness(w) => panic!("unexpected witness {:?}", w),
        }
    }

    #[test]
    fn claw_and_w4_are_witnessed() {
        let claw = oracle::claw();
        match recognize_phcag(&claw).unwrap() {
            PhcagOutcome::Witness(w) => {
                assert_eq!(w.kind(), "CLAW");
                assert!(w.verify(&claw));
            }
            _ => panic!("claw is not a circular-arc graph of this class"),
        }
        let w4 = oracle::wheel(4);
        match recognize_phcag(&w4).unwrap() {
            PhcagOutcome::Witness(w) => {
                assert_eq!(w.kind(), "W4");
                assert!(w.verify(&w4));
            }
            _ => panic!("W4 must be rejected"),
        }
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(recognize_phcag(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn f_free_trichotomy_on_w5_and_tent() {
        let w5 = oracle::wheel(5);
        match recognize_f_free(&w5).unwrap() {
            RecognitionOutcome::FatW5(f) => {
                assert!(f.verify(&w5));
                assert!(f.classes().all(|c| c.len() == 1));
            }
            o => panic!("expected fat W5, got {:?}", o),
        }
        let tent = oracle::tent();
        match recognize_f_free(&tent).unwrap() {
            RecognitionOutcome::Witness(w) => assert_eq!(w.kind(), "S3"),
            o => panic!("expected tent witness, got {:?}", o),
        }
    }

    #[test]
    fn blown_up_w5_is_fat() {
        let g = oracle::fat_w5_graph(&[1, 2, 1, 1, 1], 2);
        match recognize_f_free(&g).unwrap() {
            RecognitionOutcome::FatW5(f) => {
                assert!(f.verify(&g));
                let mut sizes: Vec<usize> = f.hole_classes.iter().map(|c| c.len()).collect();
                sizes.sort_unstable();
                assert_eq!(sizes, vec![1, 1, 1, 1, 2]);
                assert_eq!(f.hub.len(), 2);
            }
            o => panic!("expected fat W5, got {:?}", o),
        }
    }

    #[test]
    fn far_vertex_with_single_anchor_gives_claw() {
        // C5 plus a path of length 2 to the hole: the path's inner vertex has
        // a single hole neighbor
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.push((5, 6));
        edges.push((6, 0));
        let g = Graph::from_edges(7, &edges).unwrap();
        match recognize_f_free(&g).unwrap() {
            RecognitionOutcome::Witness(w) => {
                assert_eq!(w.kind(), "CLAW");
                assert!(w.verify(&g));
            }
            o => panic!("expected claw, got {:?}", o),
        }
    }

    #[test]
    fn bare_c4_is_a_model_for_f_free() {
        let g = oracle::cycle_graph(4);
        match recognize_f_free(&g).unwrap() {
            RecognitionOutcome::Phcag(m) => assert!(m.verify(&g).all()),
            o => panic!("C4 admits a model, got {:?}", o),
        }
    }

    #[test]
    fn unit_interval_certification() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        match is_unit_interval_certified(&p5) {
            UnitIntervalOutcome::Yes(m) => {
                assert_eq!(m.represented_graph(), p5);
                assert!(m.is_proper());
            }
            UnitIntervalOutcome::No(w) => panic!("paths are unit interval: {:?}", w),
        }
        match is_unit_interval_certified(&oracle::cycle_graph(4)) {
            UnitIntervalOutcome::No(w) => {
                assert_eq!(w.kind(), "HOLE");
                assert_eq!(w.vertices().len(), 4);
            }
            _ => panic!("C4 is not unit interval"),
        }
        match is_unit_interval_certified(&oracle::net()) {
            UnitIntervalOutcome::No(w) => assert_eq!(w.kind(), "S3BAR"),
            _ => panic!("net is not unit interval"),
        }
    }

    #[test]
    fn disconnected_unit_interval() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        match is_unit_interval_certified(&g) {
            UnitIntervalOutcome::Yes(m) => {
                assert_eq!(m.represented_graph(), g);
                assert!(m.is_proper());
            }
            _ => panic!("two paths are unit interval"),
        }
    }
}
