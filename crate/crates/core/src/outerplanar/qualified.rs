//! Sets of prescribed size on a split side with endpoint membership and degree caps.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{degree_in, VertexSet};
use crate::outerplane::{OuterplaneGraph, SplitSubgraph};

/// Requirements on a subset of a side `H` with ends `u` and `v`.
///
/// The set has exactly `a` vertices of `H`, contains exactly the ends flagged
/// in `include`, induces maximum degree at most `k`, and every included end
/// has induced degree at most `cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QualifiedSetSpec {
    pub h: usize,
    pub a: usize,
    pub include_u: bool,
    pub include_v: bool,
    pub cap: usize,
    pub k: usize,
}

impl QualifiedSetSpec {
    /// A set avoiding both ends.
    pub fn good(h: usize, a: usize, k: usize) -> Self {
        QualifiedSetSpec { h, a, include_u: false, include_v: false, cap: 0, k }
    }

    /// A set containing exactly the end `x` of `side`.
    pub fn with_end(side: &SplitSubgraph, x: usize, a: usize, cap: usize, k: usize) -> Self {
        QualifiedSetSpec {
            h: side.len,
            a,
            include_u: x == side.u,
            include_v: x == side.v,
            cap,
            k,
        }
    }

    pub fn with_both(h: usize, a: usize, cap: usize, k: usize) -> Self {
        QualifiedSetSpec { h, a, include_u: true, include_v: true, cap, k }
    }

    /// First unmet requirement of `set` on `side`, if any.
    pub fn violation(&self, og: &OuterplaneGraph, side: &SplitSubgraph, set: &VertexSet) -> Option<String> {
        let g = og.graph();
        if side.len != self.h {
            return Some(format!("side has {} vertices, requirement wants {}", side.len, self.h));
        }
        if let Some(x) = set.iter().find(|&x| !side.contains(x)) {
            return Some(format!("{x} lies outside the side"));
        }
        if set.len() != self.a {
            return Some(format!("size {} instead of {}", set.len(), self.a));
        }
        for (end, want) in [(side.u, self.include_u), (side.v, self.include_v)] {
            if set.contains(end) != want {
                return Some(format!("end {end} membership should be {want}"));
            }
            if want && degree_in(g, set, end) > self.cap {
                return Some(format!("end {end} has degree {} above cap {}", degree_in(g, set, end), self.cap));
            }
        }
        set.iter()
            .find(|&x| degree_in(g, set, x) > self.k)
            .map(|x| format!("{x} has degree {} above {}", degree_in(g, set, x), self.k))
    }

    /// `Ok(set)` when it meets the requirements, `NotFound` otherwise.
    pub fn check(&self, og: &OuterplaneGraph, side: &SplitSubgraph, set: VertexSet) -> Result<VertexSet> {
        match self.violation(og, side, &set) {
            None => Ok(set),
            Some(why) => Err(Error::NotFound(format!("{self}: {why}"))),
        }
    }
}

impl fmt::Display for QualifiedSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-over-{}", self.a, self.h)?;
        match (self.include_u, self.include_v) {
            (false, false) => Ok(()),
            (true, false) => write!(f, " with u (cap {})", self.cap),
            (false, true) => write!(f, " with v (cap {})", self.cap),
            (true, true) => write!(f, " with u and v (cap {})", self.cap),
        }
    }
}

/// Exhaustive search over all subsets meeting the membership constraints.
/// Meant for cross-checking constructions on small sides.
pub fn search_qualified(og: &OuterplaneGraph, side: &SplitSubgraph, spec: &QualifiedSetSpec) -> Option<VertexSet> {
    let inner: Vec<usize> = side.interior().collect();
    let fixed = usize::from(spec.include_u) + usize::from(spec.include_v);
    if spec.a < fixed || spec.a - fixed > inner.len() || inner.len() > 20 {
        return None;
    }
    let want = spec.a - fixed;
    for mask in 0u32..(1u32 << inner.len()) {
        if mask.count_ones() as usize != want {
            continue;
        }
        let mut set: VertexSet = inner
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &x)| x)
            .collect();
        if spec.include_u {
            set.insert(side.u);
        }
        if spec.include_v {
            set.insert(side.v);
        }
        if spec.violation(og, side, &set).is_none() {
            return Some(set);
        }
    }
    None
}

/// The end of `side` other than `x`.
pub fn other_end(side: &SplitSubgraph, x: usize) -> usize {
    if x == side.u {
        side.v
    } else {
        side.u
    }
}

/// Halves of `side` at its apex, ordered as `(half at x, half at the other end, apex)`.
pub fn halves_from(og: &OuterplaneGraph, side: &SplitSubgraph, x: usize) -> (SplitSubgraph, SplitSubgraph, usize) {
    let (h1, h2, w) = og.halves(side).expect("sides of three or more vertices have an apex");
    if x == side.u {
        (h1, h2, w)
    } else {
        (h2, h1, w)
    }
}

/// Outer end of a half, i.e. the end that is not the apex.
pub fn outer_end(half: &SplitSubgraph, w: usize) -> usize {
    other_end(half, w)
}

/// `side` minus the listed vertices.
pub fn without(side: &SplitSubgraph, drop: &[usize]) -> VertexSet {
    side.positions().filter(|p| !drop.contains(p)).collect()
}
