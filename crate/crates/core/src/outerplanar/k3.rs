//! The k = 3 ladder.
//!
//! Sides are scanned by increasing size. A side of size 6, 9, 10 or 12 to 21
//! always yields a set avoiding its ends; sizes 7, 8 and 11 yield one only
//! under extra conditions, and otherwise provide endpoint-including sets that
//! the larger rungs assemble.

use super::qualified::{halves_from, other_end, outer_end, without, QualifiedSetSpec};
use super::Fired;
use crate::error::{Error, Result};
use crate::graph::{degree_in, VertexSet};
use crate::outerplane::{OuterplaneGraph, SplitSubgraph};

const K: usize = 3;

/// Sizes tried before falling back to decomposition, in order.
const LADDER: [usize; 12] = [6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 17, 18];

/// Which of the two equivalent tests runs first for an 11-vertex side split 4 + 8.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum H11Order {
    #[default]
    EndDegreeFirst,
    ApexNeighborsFirst,
}

#[derive(Clone, Copy)]
enum Ends {
    One(usize),
    Both,
}

fn apex(og: &OuterplaneGraph, s: &SplitSubgraph) -> usize {
    og.apex(s).expect("ladder sides have at least six vertices")
}

/// 5-over-7 with one end or 6-over-7 with both; assumes the apex sees the whole side.
fn q7(og: &OuterplaneGraph, s: &SplitSubgraph, ends: Ends) -> Result<VertexSet> {
    let w = apex(og, s);
    match ends {
        Ends::One(x) => {
            QualifiedSetSpec::with_end(s, x, 5, 1, K).check(og, s, without(s, &[other_end(s, x), w]))
        }
        Ends::Both => QualifiedSetSpec::with_both(7, 6, 2, K).check(og, s, without(s, &[w])),
    }
}

/// 6-over-8 with `x`.
fn q8(og: &OuterplaneGraph, s: &SplitSubgraph, x: usize) -> Result<VertexSet> {
    let (hx, hy, w) = halves_from(og, s, x);
    let set = if hx.len == 2 {
        let mut set = q7(og, &hy, Ends::One(w))?;
        set.insert(x);
        set
    } else if hy.len == 2 {
        q7(og, &hx, Ends::Both)?
    } else {
        without(s, &[other_end(s, x), w])
    };
    QualifiedSetSpec::with_end(s, x, 6, 2, K).check(og, s, set)
}

/// 8-over-11 with `x`; exists once the 11-vertex rung has declined this side.
fn q11(og: &OuterplaneGraph, s: &SplitSubgraph, x: usize) -> Result<VertexSet> {
    let (hx, hy, w) = halves_from(og, s, x);
    let (small, big) = if hx.len < hy.len { (hx, hy) } else { (hy, hx) };
    let p = outer_end(&small, w);
    let q = outer_end(&big, w);
    let on_big = |y: usize| match big.len {
        7 => q7(og, &big, Ends::One(y)),
        8 => q8(og, &big, y),
        _ => Err(Error::NotFound(format!("11-vertex side split {}+{}", small.len, big.len))),
    };
    let mut set = if x == p {
        let mut set = on_big(w)?;
        set.remove(w);
        set.insert(p);
        set
    } else {
        on_big(q)?
    };
    set.extend(small.interior());
    QualifiedSetSpec::with_end(s, x, 8, 1, K).check(og, s, set)
}

/// Endpoint-including set on a side of size 7, 8 or 11.
pub fn build(og: &OuterplaneGraph, s: &SplitSubgraph, spec: &QualifiedSetSpec) -> Result<VertexSet> {
    let x = if spec.include_u { s.u } else { s.v };
    let set = match (s.len, spec.include_u && spec.include_v) {
        (7, true) => q7(og, s, Ends::Both)?,
        (7, false) => q7(og, s, Ends::One(x))?,
        (8, false) => q8(og, s, x)?,
        (11, false) => q11(og, s, x)?,
        _ => return Err(Error::NotFound(format!("no construction for {spec}"))),
    };
    spec.check(og, s, set)
}

fn union(mut a: VertexSet, b: impl IntoIterator<Item = usize>) -> VertexSet {
    a.extend(b);
    a
}

fn minus(mut a: VertexSet, x: usize) -> VertexSet {
    a.remove(x);
    a
}

/// The set this side contributes, if its rung applies.
fn fire(og: &OuterplaneGraph, s: &SplitSubgraph, order: H11Order) -> Result<Option<(VertexSet, String)>> {
    let g = og.graph();
    let (a, b, w) = og.halves(s).expect("ladder sides have an apex");
    let (small, big) = if a.len <= b.len { (a, b) } else { (b, a) };
    let ts: Vec<usize> = small.interior().collect();
    let w_on_ts = ts.iter().filter(|&&t| g.has_edge(w, t)).count();
    let ends = without(s, &[s.u, s.v]);
    let label = |what: &str| format!("h={} ({},{}) {what}", s.len, small.len, big.len);
    let fired = match (s.len, small.len) {
        (6, _) => Some((ends, label("ends removed"))),
        (7, _) if degree_in(g, &s.vertices(), w) < 6 => Some((ends, label("apex misses a vertex"))),
        (8, 4) if degree_in(g, &ends, w) <= 3 => Some((ends, label("apex sparse"))),
        (9, 2) => Some((q8(og, &big, w)?, label("6-over-8"))),
        (9, 3) => Some((union(q7(og, &big, Ends::One(w))?, ts), label("5-over-7 plus t"))),
        (9, 5) => Some((without(s, &[s.u, s.v, w]), label("ends and apex removed"))),
        (10, 3) => Some((union(q8(og, &big, w)?, ts), label("6-over-8 plus t"))),
        (10, 4) => Some((union(q7(og, &big, Ends::One(w))?, ts), label("5-over-7 plus t's"))),
        (11, 4) => {
            let base = q8(og, &big, w)?;
            let deg1 = degree_in(g, &base, w) <= 1;
            let sparse = w_on_ts <= 1;
            let why = match order {
                H11Order::EndDegreeFirst if deg1 => Some("apex degree one"),
                H11Order::EndDegreeFirst if sparse => Some("apex sees one t"),
                H11Order::ApexNeighborsFirst if sparse => Some("apex sees one t"),
                H11Order::ApexNeighborsFirst if deg1 => Some("apex degree one"),
                _ => None,
            };
            why.map(|why| (union(base, ts), label(why)))
        }
        (11, 5) if w_on_ts <= 2 => Some((union(q7(og, &big, Ends::One(w))?, ts), label("apex sees two t's"))),
        (12, 2) => Some((q11(og, &big, w)?, label("8-over-11"))),
        (12, 5) => Some((union(minus(q8(og, &big, w)?, w), ts), label("6-over-8 minus apex plus t's"))),
        (13, 3) => Some((union(q11(og, &big, w)?, ts), label("8-over-11 plus t"))),
        (13, 7) => Some((union(q7(og, &a, Ends::One(w))?, q7(og, &b, Ends::One(w))?.iter()), label("two 5-over-7"))),
        (14, 4) => Some((union(q11(og, &big, w)?, ts), label("8-over-11 plus t's"))),
        (14, 7) => Some((union(q7(og, &small, Ends::One(w))?, q8(og, &big, w)?.iter()), label("5-over-7 and 6-over-8"))),
        (15, 5) => Some((union(minus(q11(og, &big, w)?, w), ts), label("8-over-11 minus apex plus t's"))),
        (15, 8) => Some((
            union(minus(q8(og, &a, w)?, w), minus(q8(og, &b, w)?, w).iter()),
            label("two 6-over-8 minus apex"),
        )),
        (17, 7) => Some((union(q7(og, &small, Ends::One(w))?, q11(og, &big, w)?.iter()), label("5-over-7 and 8-over-11"))),
        (18, 8) => Some((union(q8(og, &small, w)?, q11(og, &big, w)?.iter()), label("6-over-8 and 8-over-11"))),
        (21, 11) => Some((union(q11(og, &a, w)?, q11(og, &b, w)?.iter()), label("two 8-over-11"))),
        _ => None,
    };
    Ok(fired)
}

/// Nominal size of the set from a side of `h` vertices.
pub fn nominal(h: usize) -> usize {
    match h {
        6 => 4,
        7 => 5,
        8 | 9 => 6,
        10 => 7,
        11 | 12 => 8,
        13 => 9,
        14 | 15 => 10,
        17 => 12,
        18 => 13,
        21 => 15,
        _ => 0,
    }
}

/// One step of the ladder on a graph with at least 12 vertices.
pub fn pick(og: &OuterplaneGraph, order: H11Order) -> Result<Fired> {
    let mut sides = og.all_sides();
    sides.sort_by_key(|s| (s.len, s.u));
    for h in LADDER {
        for s in sides.iter().filter(|s| s.len == h) {
            if let Some((set, case)) = fire(og, s, order)? {
                return Fired::new(og, *s, set, case, nominal(h), K);
            }
        }
    }
    let s = og.decompose(10, (0, 1))?;
    match fire(og, &s, order)? {
        Some((set, case)) if s.len == 21 => Fired::new(og, s, set, case, nominal(21), K),
        _ => Err(Error::NotFound(format!("no rung applies to a side of {} vertices", s.len))),
    }
}
