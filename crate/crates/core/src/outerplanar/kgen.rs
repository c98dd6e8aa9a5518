//! The k >= 4 recursion.
//!
//! With `K = floor(3k/2)` (which is `(3k-1)/2` for odd `k`):
//!
//! * a side of `k + 3` vertices gives its interior;
//! * sides of `k + 4 ..= K + 3` vertices either give their interior or carry
//!   an `(h-2)`-over-`h` set with each end and an `(h-1)`-over-`h` set with both;
//! * otherwise the smallest side of `K + 4 ..= 2K + 5` vertices is split at its
//!   apex and assembled from those sets.

use std::collections::HashMap;

use super::qualified::{outer_end, without, QualifiedSetSpec};
use super::Fired;
use crate::error::{Error, Result};
use crate::graph::{degree_in, VertexSet};
use crate::outerplane::{OuterplaneGraph, SplitSubgraph};

/// `floor(3k/2)`.
pub fn big_k(k: usize) -> usize {
    3 * k / 2
}

/// Largest graph handled by the base case.
pub fn base_max(k: usize) -> usize {
    big_k(k) + 3
}

/// Minimum size of the set taken from a side of `h` vertices.
pub fn good_size(h: usize, k: usize) -> usize {
    if h <= big_k(k) + 3 {
        h - 2
    } else if h <= 2 * k + 4 {
        h - 3
    } else {
        h - 4
    }
}

#[derive(Clone, Debug)]
struct Sets {
    with_u: VertexSet,
    with_v: VertexSet,
    both: VertexSet,
}

impl Sets {
    fn with(&self, side: &SplitSubgraph, x: usize) -> &VertexSet {
        if x == side.u {
            &self.with_u
        } else {
            &self.with_v
        }
    }
}

enum Middle {
    Good(VertexSet, String),
    Sets(Sets),
}

fn union(a: &VertexSet, b: impl IntoIterator<Item = usize>) -> VertexSet {
    let mut out = a.clone();
    out.extend(b);
    out
}

fn middle(og: &OuterplaneGraph, s: &SplitSubgraph, k: usize, memo: &HashMap<SplitSubgraph, Sets>) -> Result<Middle> {
    let g = og.graph();
    let h = s.len;
    let (h1, h2, w) = og.halves(s).expect("sides past k + 3 have an apex");
    let spec_u = QualifiedSetSpec::with_end(s, s.u, h - 2, h - k - 3, k);
    let spec_v = QualifiedSetSpec::with_end(s, s.v, h - 2, h - k - 3, k);
    let spec_b = QualifiedSetSpec::with_both(h, h - 1, h - k - 2, k);
    let ends = without(s, &[s.u, s.v]);

    if degree_in(g, &ends, w) > k {
        return Ok(Middle::Sets(Sets {
            with_u: spec_u.check(og, s, without(s, &[w, s.v]))?,
            with_v: spec_v.check(og, s, without(s, &[s.u, w]))?,
            both: spec_b.check(og, s, without(s, &[w]))?,
        }));
    }
    if h1.len <= k + 2 && h2.len <= k + 2 {
        return Ok(Middle::Good(ends, format!("h={h} ({},{}) halves small", h1.len, h2.len)));
    }
    let (big, small) = if h1.len >= h2.len { (h1, h2) } else { (h2, h1) };
    let qb = memo
        .get(&big)
        .ok_or_else(|| Error::NotFound(format!("no sets for a {}-vertex half", big.len)))?;
    let p = outer_end(&big, w);
    let q = outer_end(&small, w);
    let with_p = union(&qb.both, small.positions().filter(|&x| x != q));
    let with_q = union(qb.with(&big, w), small.positions());
    let both = union(&qb.both, small.positions());
    let (with_u, with_v) = if p == s.u { (with_p, with_q) } else { (with_q, with_p) };
    Ok(Middle::Sets(Sets {
        with_u: spec_u.check(og, s, with_u)?,
        with_v: spec_v.check(og, s, with_v)?,
        both: spec_b.check(og, s, both)?,
    }))
}

/// Sides of `k + 4 ..= upto` vertices in increasing size: the first one that
/// yields a set avoiding its ends, or the table of endpoint sets.
fn scan_middle(
    og: &OuterplaneGraph,
    sides: &[SplitSubgraph],
    k: usize,
    upto: usize,
) -> Result<std::result::Result<Fired, HashMap<SplitSubgraph, Sets>>> {
    let mut memo = HashMap::new();
    for s in sides.iter().filter(|s| s.len >= k + 4 && s.len <= upto) {
        match middle(og, s, k, &memo)? {
            Middle::Good(set, case) => return Ok(Ok(Fired::new(og, *s, set, case, good_size(s.len, k), k)?)),
            Middle::Sets(sets) => {
                memo.insert(*s, sets);
            }
        }
    }
    Ok(Err(memo))
}

fn sorted_sides(og: &OuterplaneGraph) -> Vec<SplitSubgraph> {
    let mut sides = og.all_sides();
    sides.sort_by_key(|s| (s.len, s.u));
    sides
}

/// One step on a graph with more than `base_max(k)` vertices.
pub fn pick(og: &OuterplaneGraph, k: usize) -> Result<Fired> {
    let sides = sorted_sides(og);
    if let Some(s) = sides.iter().find(|s| s.len == k + 3) {
        let set = without(s, &[s.u, s.v]);
        return Fired::new(og, *s, set, format!("h={} ends removed", s.len), s.len - 2, k);
    }
    let memo = match scan_middle(og, &sides, k, base_max(k))? {
        Ok(fired) => return Ok(fired),
        Err(memo) => memo,
    };

    let lo = big_k(k) + 4;
    let hi = 2 * (big_k(k) + 2) + 1;
    let s = *sides
        .iter()
        .find(|s| s.len >= lo && s.len <= hi)
        .ok_or_else(|| Error::NotFound(format!("no side with {lo} to {hi} vertices")))?;
    let h = s.len;
    let (h1, h2, w) = og.halves(&s).expect("large sides have an apex");
    let lookup = |half: &SplitSubgraph| {
        memo.get(half)
            .map(|q| q.with(half, w).clone())
            .ok_or_else(|| Error::NotFound(format!("no sets for a {}-vertex half", half.len)))
    };
    let label = |what: &str| format!("h={h} ({},{}) {what}", h1.len, h2.len);
    let (set, case) = if h1.len <= k + 2 && h2.len <= k + 2 {
        (without(&s, &[s.u, s.v, w]), label("halves small"))
    } else if h1.len > k + 2 && h2.len > k + 2 {
        (union(&lookup(&h1)?, lookup(&h2)?.iter()), label("two halves with apex"))
    } else {
        let (big, small) = if h1.len > k + 2 { (h1, h2) } else { (h2, h1) };
        let q = outer_end(&small, w);
        let qb = lookup(&big)?;
        if h <= 2 * k + 4 {
            (union(&qb, small.positions().filter(|&x| x != q)), label("one half with apex"))
        } else {
            let mut set = union(&qb, small.positions().filter(|&x| x != q));
            set.remove(w);
            (set, label("one half without apex"))
        }
    };
    Fired::new(og, s, set, case, good_size(h, k), k)
}

/// Endpoint-including set on a side of `k + 4 ..= base_max(k)` vertices.
pub fn build(og: &OuterplaneGraph, side: &SplitSubgraph, spec: &QualifiedSetSpec) -> Result<VertexSet> {
    let k = spec.k;
    if side.len < k + 4 || side.len > base_max(k) {
        return Err(Error::NotFound(format!("no construction for {spec}")));
    }
    let sides = sorted_sides(og);
    let mut memo = HashMap::new();
    for s in sides.iter().filter(|s| s.len >= k + 4 && s.len <= side.len) {
        if let Middle::Sets(sets) = middle(og, s, k, &memo)? {
            memo.insert(*s, sets);
        }
    }
    let sets = memo
        .get(side)
        .ok_or_else(|| Error::NotFound(format!("{spec}: side yields a set avoiding its ends")))?;
    let set = match (spec.include_u, spec.include_v) {
        (true, true) => sets.both.clone(),
        (true, false) => sets.with_u.clone(),
        (false, true) => sets.with_v.clone(),
        (false, false) => return Err(Error::NotFound(format!("no construction for {spec}"))),
    };
    spec.check(og, side, set)
}
