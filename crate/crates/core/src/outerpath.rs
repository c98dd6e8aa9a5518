//! k-stable sets of size at least `(k-1)/k * n` in maximal outerpaths.
//!
//! The solver peels the graph from one end of its dual path. A left part `gl`
//! grows from the special edge by absorbing all remaining neighbours of the
//! active vertex; once it passes `k + 1` vertices the last two absorbed
//! vertices are handed back, the active vertex is dropped, and the rest is
//! solved on the far side of the cut edge.

use serde::{Deserialize, Serialize};

use crate::certificate::{Algorithm, Certificate, Rational};
use crate::error::{Error, Result};
use crate::graph::{degree_in, VertexSet};
use crate::outerplane::OuterplaneGraph;

/// State of the left-part growth. All vertices are positions of the outerplane graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveFront {
    /// Vertices of the part still being solved.
    pub region: VertexSet,
    pub gl: VertexSet,
    /// Active vertex.
    pub s: usize,
    /// Other end of the active edge.
    pub t: usize,
    pub special_edge: (usize, usize),
    pub special_vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrontStep {
    Continue(ActiveFront),
    /// Stop: drop `h`, keep `gl \ {h}`, recurse beyond `wz`.
    Cut { h: usize, wz: (usize, usize), gl: VertexSet },
    /// At most one vertex remains outside `gl` and no endpoint is active.
    Exhausted { gl: VertexSet },
}

/// One level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterpathStep {
    pub n: usize,
    /// Original ids.
    pub special_edge: (usize, usize),
    pub special_vertex: usize,
    pub outcome: StepOutcome,
    /// Neighbours of the special vertex inside this level's set, if it was kept.
    pub special_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepOutcome {
    TakeAll,
    DropOne { dropped: usize },
    Exhausted,
    Cut { h: usize, w: usize, z: usize, gl_size: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterpathTrace {
    pub steps: Vec<OuterpathStep>,
}

impl OuterpathTrace {
    /// Whether every kept special vertex has at most `k - 1` neighbours in its level's set.
    pub fn special_invariant_holds(&self, k: usize) -> bool {
        self.steps.iter().all(|s| s.special_degree.is_none_or(|d| d < k))
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn outside_neighbours(og: &OuterplaneGraph, front: &ActiveFront, x: usize) -> usize {
    og.graph()
        .neighbors(x)
        .iter()
        .filter(|&&y| front.region.contains(y) && !front.gl.contains(y))
        .count()
}

/// The endpoint of `(a, b)` with at least two neighbours outside `gl`.
fn active_end(og: &OuterplaneGraph, front: &ActiveFront, a: usize, b: usize) -> Option<(usize, usize)> {
    if outside_neighbours(og, front, a) >= 2 {
        Some((a, b))
    } else if outside_neighbours(og, front, b) >= 2 {
        Some((b, a))
    } else {
        None
    }
}

/// Front on a region whose special edge is `(u, v)`, with `u` special.
pub fn initial_front(og: &OuterplaneGraph, region: VertexSet, u: usize, v: usize) -> Option<ActiveFront> {
    let mut front = ActiveFront {
        gl: [u, v].into_iter().collect(),
        region,
        s: u,
        t: v,
        special_edge: (u, v),
        special_vertex: u,
    };
    let (s, t) = active_end(og, &front, u, v)?;
    front.s = s;
    front.t = t;
    Some(front)
}

/// One growth step: absorb the outside neighbours of the active vertex.
pub fn grow_front(front: &ActiveFront, og: &OuterplaneGraph, k: usize) -> FrontStep {
    let g = og.graph();
    let s = front.s;
    let mut next = front.clone();
    for &y in g.neighbors(s) {
        if front.region.contains(y) {
            next.gl.insert(y);
        }
    }
    let (a, b) = front.special_edge;
    let dist = og.edge_distances((a, b)).expect("special edge exists");
    let nb: Vec<usize> = g.neighbors(s).iter().copied().filter(|&y| front.region.contains(y)).collect();
    let mut best: Option<(usize, (usize, usize))> = None;
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if g.has_edge(x, y) {
                let e = key(x, y);
                let d = dist[&e];
                if best.is_none_or(|(bd, be)| d > bd || (d == bd && e < be)) {
                    best = Some((d, e));
                }
            }
        }
    }
    let (_, (s1, t1)) = best.expect("the active vertex has a fan edge");
    if next.gl.len() <= k + 1 {
        match active_end(og, &next, s1, t1) {
            Some((s2, t2)) => {
                next.s = s2;
                next.t = t2;
                FrontStep::Continue(next)
            }
            None => FrontStep::Exhausted { gl: next.gl },
        }
    } else {
        next.gl.remove(s1);
        next.gl.remove(t1);
        FrontStep::Cut { h: s, wz: (s1, t1), gl: next.gl }
    }
}

/// Outer edge of the lowest-labelled leaf face, as positions `(u, v)` with `u`
/// the lower label and `v` following `u` or preceding it on the cycle.
fn top_special_edge(og: &OuterplaneGraph) -> (usize, usize) {
    let n = og.n();
    let dual = og.weak_dual();
    let lab = |f: &[usize; 3]| f.iter().map(|&p| og.label(p)).min().unwrap();
    let leaf = (0..dual.nodes.len())
        .filter(|&i| dual.adj[i].len() <= 1)
        .min_by_key(|&i| (lab(&dual.nodes[i]), i))
        .expect("a tree has a leaf");
    let f = dual.nodes[leaf];
    let mut outer: Vec<(usize, usize)> = Vec::new();
    for (i, &x) in f.iter().enumerate() {
        for &y in &f[i + 1..] {
            if (x + 1) % n == y || (y + 1) % n == x {
                let (lx, ly) = (og.label(x), og.label(y));
                outer.push(if lx < ly { (x, y) } else { (y, x) });
            }
        }
    }
    outer.into_iter().min_by_key(|&(x, y)| (og.label(x), og.label(y))).unwrap()
}

/// Positions of the side of edge `(x, y)` not containing `avoid`.
fn far_side(og: &OuterplaneGraph, x: usize, y: usize, avoid: usize) -> VertexSet {
    let side = og.side_from(x, y).expect("cut edge exists");
    if side.contains(avoid) && avoid != x && avoid != y {
        og.side_from(y, x).expect("cut edge exists").vertices()
    } else {
        side.vertices()
    }
}

/// Runs the solver and returns the set in positions with its trace.
pub fn solve_positions(og: &OuterplaneGraph, k: usize) -> Result<(VertexSet, OuterpathTrace)> {
    if k < 3 {
        return Err(Error::KTooSmall(k));
    }
    let n = og.n();
    let mut trace = OuterpathTrace::default();
    let mut out = VertexSet::with_capacity(n);
    if n == 0 {
        return Ok((out, trace));
    }
    if n <= k {
        out = VertexSet::full(n);
        return Ok((out, trace));
    }
    if !og.is_outerpath() {
        return Err(Error::NotOuterpath);
    }
    let g = og.graph();
    let (mut u, mut v) = top_special_edge(og);
    let mut region = VertexSet::full(n);
    loop {
        let size = region.len();
        let mut level: VertexSet;
        let outcome;
        let mut rest: Option<(VertexSet, usize, usize)> = None;
        if size <= k {
            level = region.clone();
            outcome = StepOutcome::TakeAll;
        } else if size == k + 1 {
            let x = region.iter().max_by_key(|&p| og.label(p)).unwrap();
            level = region.clone();
            level.remove(x);
            outcome = StepOutcome::DropOne { dropped: og.label(x) };
        } else {
            let mut front = initial_front(og, region.clone(), u, v).ok_or_else(|| {
                Error::PreconditionViolated("special edge has no active end".into())
            })?;
            loop {
                match grow_front(&front, og, k) {
                    FrontStep::Continue(f) => front = f,
                    FrontStep::Exhausted { .. } => {
                        level = region.clone();
                        level.remove(u);
                        outcome = StepOutcome::Exhausted;
                        break;
                    }
                    FrontStep::Cut { h, wz: (w, z), gl } => {
                        level = gl.clone();
                        level.remove(h);
                        let far = far_side(og, w, z, u);
                        let out_deg =
                            |x: usize| g.neighbors(x).iter().filter(|&&y| far.contains(y)).count();
                        let (dw, dz) = (out_deg(w), out_deg(z));
                        let (su, sv) = if dw > dz || (dw == dz && og.label(w) < og.label(z)) {
                            (w, z)
                        } else {
                            (z, w)
                        };
                        outcome = StepOutcome::Cut {
                            h: og.label(h),
                            w: og.label(w),
                            z: og.label(z),
                            gl_size: gl.len(),
                        };
                        rest = Some((far, su, sv));
                        break;
                    }
                }
            }
        }
        trace.steps.push(OuterpathStep {
            n: size,
            special_edge: (og.label(u), og.label(v)),
            special_vertex: og.label(u),
            outcome,
            special_degree: None,
        });
        out.union_with(&level);
        match rest {
            Some((far, su, sv)) => {
                region = far;
                u = su;
                v = sv;
            }
            None => break,
        }
    }
    // Special-vertex check per level, against the set chosen inside that level's region.
    let mut region = VertexSet::full(n);
    let mut specials = Vec::new();
    for step in &trace.steps {
        let p = og.labels().iter().position(|&l| l == step.special_vertex).unwrap();
        specials.push((region.clone(), p));
        if let StepOutcome::Cut { w, z, .. } = step.outcome {
            let pw = og.labels().iter().position(|&l| l == w).unwrap();
            let pz = og.labels().iter().position(|&l| l == z).unwrap();
            region = far_side(og, pw, pz, p);
        }
    }
    for (step, (reg, p)) in trace.steps.iter_mut().zip(specials) {
        if out.contains(p) {
            let mut inside: VertexSet = out.iter().filter(|&x| reg.contains(x)).collect();
            inside.insert(p);
            step.special_degree = Some(degree_in(g, &inside, p));
        }
    }
    Ok((out, trace))
}

/// `(k-1)/k * n`.
pub fn outerpath_guarantee(n: usize, k: usize) -> Rational {
    Rational::new((k as i64 - 1) * n as i64, k as i64)
}

/// Certificate on original ids together with the recursion trace.
pub fn solve_outerpath_traced(og: &OuterplaneGraph, k: usize) -> Result<(Certificate, OuterpathTrace)> {
    let (set, trace) = solve_positions(og, k)?;
    let g = og.labeled_graph()?;
    let cert = Certificate::new(
        &g,
        k,
        og.to_labels(&set),
        Algorithm::OuterpathLB,
        outerpath_guarantee(og.n(), k),
    )?;
    Ok((cert, trace))
}

pub fn solve_outerpath(og: &OuterplaneGraph, k: usize) -> Result<Certificate> {
    solve_outerpath_traced(og, k).map(|(c, _)| c)
}
