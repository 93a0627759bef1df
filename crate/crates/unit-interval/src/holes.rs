//! Shortest holes on proper Helly arc models.
//!
//! One endpoint sweep maintains a circular collection of arrays, one per arc
//! covering the probe just past the reference arc's clockwise end. Each
//! array greedily extends by the most clockwise arc containing its last
//! member's clockwise endpoint; arrays with no candidate are dropped. Any
//! surviving array closes into a hole either by itself or through the
//! reference vertex, and the shortest such closure is a shortest hole of the
//! whole graph, because every hole must cross the probe.

use crate::arc::ArcModel;
use crate::error::{Error, Result};
use crate::graph::{verify_hole, Graph};

/// Shortest hole of a non-chordal graph given a canonical proper Helly
/// model. Array invariants are asserted when `debug_assertions` are on.
pub fn shortest_hole(g: &Graph, model: &ArcModel) -> Result<Vec<usize>> {
    shortest_hole_impl(g, model, cfg!(debug_assertions))
}

/// As [`shortest_hole`], with the sweep invariants (successor-rightmost and
/// array size balance) checked after every step regardless of build flags.
pub fn shortest_hole_checked(g: &Graph, model: &ArcModel) -> Result<Vec<usize>> {
    shortest_hole_impl(g, model, true)
}

fn shortest_hole_impl(g: &Graph, model: &ArcModel, check: bool) -> Result<Vec<usize>> {
    if !model.is_canonical() {
        return Err(Error::NotCanonical);
    }
    let n = model.n();
    let slots = 2 * n;
    if n < 4 {
        return Err(Error::ChordalInput);
    }

    // rotate so that slot 0 is some arc's counterclockwise endpoint
    let shift = (0..slots)
        .find(|&s| model.arcs().iter().any(|&(start, _)| start == s))
        .expect("every model has a start");
    let m = model.rotate(shift);

    let mut start_owner = vec![usize::MAX; slots];
    let mut end_owner = vec![usize::MAX; slots];
    for (v, &(s, e)) in m.arcs().iter().enumerate() {
        start_owner[s] = v;
        end_owner[e] = v;
    }
    let v_ref = start_owner[0];
    let v_end = m.end(v_ref);

    // one array per arc starting strictly inside the reference arc; these
    // are exactly the arcs covering the probe just past its end
    let mut arrays: Vec<Vec<usize>> = (1..v_end)
        .filter_map(|i| (start_owner[i] != usize::MAX).then(|| vec![start_owner[i]]))
        .collect();
    let k = arrays.len();
    if k == 0 {
        return Err(Error::ChordalInput);
    }
    let mut next: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let mut prev: Vec<usize> = (0..k).map(|i| (i + k - 1) % k).collect();
    let mut alive = vec![true; k];
    let mut alive_count = k;
    let mut cur = 0usize;
    let mut pending: Option<usize> = None;

    for i in v_end + 1..slots {
        if alive_count == 0 {
            break;
        }
        if start_owner[i] != usize::MAX {
            pending = Some(start_owner[i]);
            continue;
        }
        let z = *arrays[cur].last().expect("arrays are nonempty");
        if end_owner[i] != z {
            continue;
        }
        match pending.take() {
            None => {
                alive[cur] = false;
                alive_count -= 1;
                let (p, nx) = (prev[cur], next[cur]);
                next[p] = nx;
                prev[nx] = p;
                cur = nx;
            }
            Some(w) => {
                arrays[cur].push(w);
                cur = next[cur];
            }
        }
        if check {
            assert_sweep_invariants(&m, &arrays, &alive);
        }
    }
    if alive_count == 0 {
        return Err(Error::Internal("all arrays dropped during the hole sweep".into()));
    }

    if check {
        // surviving arrays end in arcs wrapping past the reference start
        for (a, arr) in arrays.iter().enumerate() {
            if alive[a] {
                let z = *arr.last().expect("nonempty");
                let e = m.end(z);
                assert!(
                    e < v_end,
                    "surviving array must wrap: end {} vs reference end {}",
                    e,
                    v_end
                );
            }
        }
    }

    let smallest = arrays
        .iter()
        .enumerate()
        .filter(|&(a, _)| alive[a])
        .map(|(_, arr)| arr.len())
        .min()
        .expect("a live array exists");
    // closure within an array beats closure through the reference vertex of
    // the same length class, so scan sizes in increasing order
    for target in [smallest, smallest + 1] {
        for (a, arr) in arrays.iter().enumerate() {
            if !alive[a] || arr.len() != target || arr.len() < 4 {
                continue;
            }
            let (first, last) = (arr[0], *arr.last().expect("nonempty"));
            if m.arcs_intersect(first, last) && verify_hole(g, arr) {
                return Ok(arr.clone());
            }
        }
        if target == smallest {
            // no closure among the smallest arrays; the reference vertex
            // closes the last-created one at length smallest + 1
            if let Some(arr) = arrays
                .iter()
                .enumerate()
                .rev()
                .find(|&(a, arr)| alive[a] && arr.len() == smallest)
                .map(|(_, arr)| arr)
            {
                let mut hole = vec![v_ref];
                hole.extend(arr);
                if hole.len() >= 4 && verify_hole(g, &hole) {
                    return Ok(hole);
                }
            }
        }
    }
    Err(Error::Internal("hole sweep terminated without a closure".into()))
}

fn assert_sweep_invariants(m: &ArcModel, arrays: &[Vec<usize>], alive: &[bool]) {
    let slots = 2 * m.n();
    let clockwise_gap = |from: usize, to: usize| (to + slots - from) % slots;
    for (a, arr) in arrays.iter().enumerate() {
        if !alive[a] {
            continue;
        }
        for pair in arr.windows(2) {
            let (u, w) = (pair[0], pair[1]);
            let p = m.end(u);
            assert!(m.arc_contains_doubled(w, 2 * p), "successor must contain the endpoint");
            // rightmost: no other arc containing cp(u) reaches further
            for x in 0..m.n() {
                if x != u && x != w && m.arc_contains_doubled(x, 2 * p) {
                    assert!(
                        clockwise_gap(p, m.end(x)) < clockwise_gap(p, m.end(w)),
                        "successor must be the most clockwise arc over the endpoint"
                    );
                }
            }
        }
    }
    let sizes: Vec<usize> =
        arrays.iter().enumerate().filter(|&(a, _)| alive[a]).map(|(_, x)| x.len()).collect();
    if let (Some(&mn), Some(&mx)) = (sizes.iter().min(), sizes.iter().max()) {
        assert!(mx - mn <= 1, "array sizes must stay balanced, got {:?}", sizes);
    }
}

/// Shrink a circle-covering arc set to an inclusion-minimal cover and read
/// it off as a hole (arcs of a minimal cover, in circular order, induce one).
pub fn minimal_cover_to_hole(model: &ArcModel, arcs: &[usize]) -> Result<Vec<usize>> {
    if !model.is_canonical() {
        return Err(Error::NotCanonical);
    }
    let mut active: Vec<usize> = arcs.to_vec();
    active.sort_unstable();
    active.dedup();
    if !covers_circle(model, &active) {
        return Err(Error::NotACover);
    }
    loop {
        let mut dropped = false;
        for pos in 0..active.len() {
            let mut trial = active.clone();
            trial.remove(pos);
            if covers_circle(model, &trial) {
                active = trial;
                dropped = true;
                break;
            }
        }
        if !dropped {
            break;
        }
    }
    active.sort_by_key(|&v| model.start(v));
    Ok(active)
}

/// Do the arcs jointly cover the circle? Coverage can only change at the
/// endpoints, so probing every half-integer point decides it.
pub fn covers_circle(model: &ArcModel, arcs: &[usize]) -> bool {
    let slots = 2 * model.n();
    (0..slots).all(|i| arcs.iter().any(|&v| model.arc_contains_doubled(v, 2 * i + 1)))
}
