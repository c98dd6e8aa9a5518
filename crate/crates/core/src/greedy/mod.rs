//! Greedy removal of maximum-degree vertices.
//!
//! `Plain` deletes a vertex of maximum degree until the degree is at most `k`.
//! For `k` in {3, 4}, `DominatingSet` stops at degree `k + 1`, completes the
//! rest to a `(k+1)`-regular graph and deletes a dominating set of it.
//! `Best` keeps whichever of the two deletes fewer vertices.

pub mod augment;
pub mod bounds;
pub mod domset;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

pub use augment::{augment_to_regular, edge_saturate, find_gadget, AugmentationReport};
pub use bounds::{bound_calculator, planar_corollary, BoundCase, BoundReport};
pub use domset::{dominating_set, DomBudget, DomMode, DomRecord};

use crate::certificate::{clamp_nonneg, Algorithm, Certificate, Rational};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    Plain,
    DominatingSet,
    Best,
}

/// Which maximum-degree vertex goes first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum TieBreak {
    /// Lowest id.
    #[default]
    Low,
    /// Fewest maximum-degree neighbours, then lowest id.
    Adversarial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GreedyOptions {
    pub strategy: Strategy,
    pub tiebreak: TieBreak,
    pub dom: DomBudget,
}

impl Default for GreedyOptions {
    fn default() -> Self {
        GreedyOptions { strategy: Strategy::Best, tiebreak: TieBreak::Low, dom: DomBudget::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Removal {
    pub vertex: usize,
    /// Degree in the current graph when removed.
    pub degree: usize,
    /// Vertices left before this removal.
    pub remaining: usize,
}

/// Size of the current graph the first time its degree is at most `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    pub degree: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalTrace {
    /// `Plain` or `DominatingSet`; the one kept when `Best` was asked for.
    pub strategy: Strategy,
    pub removals: Vec<Removal>,
    /// Removed vertices by degree; dominating-set removals count at `k + 1`.
    pub r: BTreeMap<usize, usize>,
    /// Removals at degree 6 or more.
    pub r6plus: usize,
    pub snapshots: Vec<Snapshot>,
    pub augmentation: Option<AugmentationReport>,
    pub domination: Vec<DomRecord>,
}

impl RemovalTrace {
    fn new(strategy: Strategy) -> Self {
        RemovalTrace {
            strategy,
            removals: Vec::new(),
            r: BTreeMap::new(),
            r6plus: 0,
            snapshots: Vec::new(),
            augmentation: None,
            domination: Vec::new(),
        }
    }

    fn count(&mut self, degree: usize) {
        *self.r.entry(degree).or_default() += 1;
        if degree >= 6 {
            self.r6plus += 1;
        }
    }

    pub fn removed(&self) -> usize {
        self.removals.len()
    }

    /// `r[i]`, zero when absent.
    pub fn r_at(&self, i: usize) -> usize {
        self.r.get(&i).copied().unwrap_or(0)
    }

    /// Size of the graph the first time its degree was at most `degree`.
    pub fn snapshot(&self, degree: usize) -> Option<usize> {
        self.snapshots.iter().find(|s| s.degree == degree).map(|s| s.size)
    }

    /// Whether every dominated component met its size bound.
    pub fn domination_bounds_met(&self) -> bool {
        self.domination.iter().all(|d| d.bound_met)
    }

    /// One JSON object per removal, then a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.removals {
            out += &serde_json::to_string(r).expect("plain struct");
            out.push('\n');
        }
        let summary = serde_json::json!({
            "strategy": self.strategy,
            "r": self.r,
            "r6plus": self.r6plus,
            "snapshots": self.snapshots,
            "augmentation": self.augmentation,
            "domination": self.domination,
        });
        out += &summary.to_string();
        out.push('\n');
        out
    }
}

/// The shrinking graph with vertices bucketed by current degree.
struct Working<'a> {
    g: &'a Graph,
    k: usize,
    alive: Vec<bool>,
    deg: Vec<usize>,
    buckets: Vec<BTreeSet<usize>>,
    top: usize,
    size: usize,
    next_snapshot: usize,
    trace: RemovalTrace,
}

impl<'a> Working<'a> {
    fn new(g: &'a Graph, k: usize, strategy: Strategy) -> Self {
        let deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let top = g.max_degree();
        let mut buckets = vec![BTreeSet::new(); top + 1];
        for (v, &d) in deg.iter().enumerate() {
            buckets[d].insert(v);
        }
        let mut w = Working {
            g,
            k,
            alive: vec![true; g.n()],
            deg,
            buckets,
            top,
            size: g.n(),
            next_snapshot: top.max(k),
            trace: RemovalTrace::new(strategy),
        };
        w.snap();
        w
    }

    fn snap(&mut self) {
        while self.top < self.buckets.len() && self.buckets[self.top].is_empty() && self.top > 0 {
            self.top -= 1;
        }
        while self.next_snapshot >= self.k && self.next_snapshot >= self.top {
            self.trace.snapshots.push(Snapshot { degree: self.next_snapshot, size: self.size });
            if self.next_snapshot == 0 {
                break;
            }
            self.next_snapshot -= 1;
        }
    }

    fn remove(&mut self, v: usize, counted_as: usize) {
        let d = self.deg[v];
        self.trace.removals.push(Removal { vertex: v, degree: d, remaining: self.size });
        self.trace.count(counted_as);
        self.buckets[d].remove(&v);
        self.alive[v] = false;
        self.size -= 1;
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                let dw = self.deg[w];
                self.buckets[dw].remove(&w);
                self.buckets[dw - 1].insert(w);
                self.deg[w] = dw - 1;
            }
        }
        self.snap();
    }

    fn pick(&self, tiebreak: TieBreak) -> usize {
        let bucket = &self.buckets[self.top];
        match tiebreak {
            TieBreak::Low => *bucket.first().expect("top bucket is non-empty"),
            TieBreak::Adversarial => *bucket
                .iter()
                .min_by_key(|&&v| {
                    let hot = self.g.neighbors(v).iter().filter(|&&w| self.alive[w] && self.deg[w] == self.top);
                    (hot.count(), v)
                })
                .expect("top bucket is non-empty"),
        }
    }

    /// Removes maximum-degree vertices while the degree exceeds `limit`.
    fn reduce_to(&mut self, limit: usize, tiebreak: TieBreak) {
        while self.top > limit {
            let v = self.pick(tiebreak);
            self.remove(v, self.top);
        }
    }

    fn remaining(&self) -> VertexSet {
        (0..self.g.n()).filter(|&v| self.alive[v]).collect()
    }
}

fn plain(g: &Graph, k: usize, tiebreak: TieBreak) -> (VertexSet, RemovalTrace) {
    let mut w = Working::new(g, k, Strategy::Plain);
    w.reduce_to(k, tiebreak);
    (w.remaining(), w.trace)
}

fn dominating(g: &Graph, k: usize, opts: &GreedyOptions) -> Result<(VertexSet, RemovalTrace)> {
    let r = k + 1;
    let mut w = Working::new(g, k, Strategy::DominatingSet);
    w.reduce_to(r, opts.tiebreak);
    if w.top <= k {
        return Ok((w.remaining(), w.trace));
    }
    let (sub, map) = induced_subgraph(g, &w.remaining())?;
    let (h, report) = augment_to_regular(&sub, r)?;
    let (d, records) = domset::dominate_components(&h, r, opts.dom)?;
    let mut doomed: Vec<usize> = d.iter().filter(|&v| v < sub.n()).map(|v| map[v]).collect();
    w.trace.augmentation = Some(report);
    w.trace.domination = records;
    // Highest current degree first, so recorded degrees never go up.
    while !doomed.is_empty() {
        let i = (0..doomed.len()).max_by_key(|&i| (w.deg[doomed[i]], std::cmp::Reverse(doomed[i]))).unwrap();
        let v = doomed.swap_remove(i);
        w.remove(v, r);
    }
    if w.top > k {
        return Err(Error::Certificate(format!("degree {} left after removing a dominating set", w.top)));
    }
    Ok((w.remaining(), w.trace))
}

/// `n - m/(k+1)`: each plain removal deletes at least `k + 1` edges.
fn edge_bound(g: &Graph, k: usize) -> Rational {
    Rational::from_integer(g.n() as i64) - Rational::new(g.m() as i64, k as i64 + 1)
}

fn guarantee(g: &Graph, k: usize, asked: Strategy, dom_trace: Option<&RemovalTrace>) -> Rational {
    let d = g.max_degree();
    if d <= k {
        return Rational::from_integer(g.n() as i64);
    }
    let theorem = || {
        dom_trace
            .filter(|t| t.domination_bounds_met())
            .and_then(|_| bound_calculator(g.n(), g.m(), d, k, None).ok())
            .map(|b| b.value)
    };
    let value = match asked {
        Strategy::Plain => edge_bound(g, k),
        Strategy::Best => theorem().map_or(edge_bound(g, k), |t| t.max(edge_bound(g, k))),
        Strategy::DominatingSet if d == k + 1 => theorem().unwrap_or_default(),
        Strategy::DominatingSet => Rational::default(),
    };
    clamp_nonneg(value)
}

/// Greedy removal with explicit options.
pub fn greedy_removal_with(g: &Graph, k: usize, opts: &GreedyOptions) -> Result<(Certificate, RemovalTrace)> {
    if k < 3 {
        return Err(Error::KTooSmall(k));
    }
    let dom_ok = k == 3 || k == 4;
    let (set, trace, dom_trace) = match opts.strategy {
        Strategy::Plain => {
            let (s, t) = plain(g, k, opts.tiebreak);
            (s, t, None)
        }
        Strategy::DominatingSet if !dom_ok => return Err(Error::StrategyUnavailable(k)),
        Strategy::DominatingSet => {
            let (s, t) = dominating(g, k, opts)?;
            (s, t.clone(), Some(t))
        }
        Strategy::Best => {
            let (ps, pt) = plain(g, k, opts.tiebreak);
            if dom_ok {
                let (ds, dt) = dominating(g, k, opts)?;
                if ds.len() > ps.len() {
                    (ds, dt.clone(), Some(dt))
                } else {
                    (ps, pt, Some(dt))
                }
            } else {
                (ps, pt, None)
            }
        }
    };
    let bound = guarantee(g, k, opts.strategy, dom_trace.as_ref());
    let cert = Certificate::new(g, k, set, Algorithm::GreedyRemoval, bound)?;
    Ok((cert, trace))
}

/// Greedy removal with lowest-id tie-breaking.
pub fn greedy_removal(g: &Graph, k: usize, strategy: Strategy) -> Result<(Certificate, RemovalTrace)> {
    greedy_removal_with(g, k, &GreedyOptions { strategy, ..GreedyOptions::default() })
}
