//! Large k-stable sets in maximal outerplanar graphs.
//!
//! Each step cuts a side `H` with ends `u`, `v` off the current graph, takes a
//! set inside `H` avoiding `u` and `v`, and continues on the rest of the graph
//! with `u` and `v` kept. The two parts only meet at `u` and `v`, so their
//! union stays k-stable. Small graphs are solved exactly.

pub mod k3;
pub mod kgen;
pub mod qualified;

use serde::{Deserialize, Serialize};

pub use k3::H11Order;
pub use qualified::{search_qualified, QualifiedSetSpec};

use crate::certificate::{Algorithm, Certificate, Rational};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::oracle::{exact_max_kstable, Budget};
use crate::outerplane::{OuterplaneGraph, SplitSubgraph};

/// A side chosen by one step and the set taken inside it.
#[derive(Clone, Debug)]
pub struct Fired {
    pub side: SplitSubgraph,
    pub set: VertexSet,
    pub case: String,
}

impl Fired {
    /// Checks that `set` avoids the ends, is k-stable and has at least `min_size` vertices.
    pub(crate) fn new(
        og: &OuterplaneGraph,
        side: SplitSubgraph,
        set: VertexSet,
        case: String,
        min_size: usize,
        k: usize,
    ) -> Result<Fired> {
        let set = QualifiedSetSpec::good(side.len, set.len(), k).check(og, &side, set)?;
        if set.len() < min_size {
            return Err(Error::NotFound(format!("{case}: {} vertices, need {min_size}", set.len())));
        }
        Ok(Fired { side, set, case })
    }
}

/// One line of the trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitStep {
    /// Vertices of the graph this step ran on.
    pub n: usize,
    pub h: usize,
    pub h1: usize,
    pub h2: usize,
    pub case: String,
    pub spec: String,
    pub size: usize,
    pub merge_ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplanarTrace {
    pub steps: Vec<SplitStep>,
}

impl OuterplanarTrace {
    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.steps
            .iter()
            .map(|s| serde_json::to_string(s).expect("plain struct") + "\n")
            .collect()
    }
}

/// Guaranteed size for an `n`-vertex maximal outerplanar graph.
pub fn outerplanar_guarantee(n: usize, k: usize) -> Rational {
    let n = n as i64;
    let k = k as i64;
    let ratio = if k == 3 {
        Rational::new(2, 3)
    } else if k % 2 == 0 {
        Rational::new(2 * k + 1, 2 * k + 5)
    } else {
        Rational::new(6 * k + 2, 6 * k + 14)
    };
    ratio * n
}

/// Largest `n` solved directly.
pub fn base_max(k: usize) -> usize {
    if k == 3 {
        11
    } else {
        kgen::base_max(k)
    }
}

/// Union of a set inside a side and a set on the rest, which share only `u` and `v`.
pub fn merge_split_sets(i_h: &VertexSet, i_hbar: &VertexSet, u: usize, v: usize) -> Result<VertexSet> {
    for end in [u, v] {
        if i_h.contains(end) {
            return Err(Error::PreconditionViolated(format!("side set contains end {end}")));
        }
    }
    let mut out = i_hbar.clone();
    out.union_with(i_h);
    Ok(out)
}

/// Maximum k-stable set of a small graph.
pub fn base_case_set(og: &OuterplaneGraph, k: usize) -> Result<VertexSet> {
    let (set, stats) = exact_max_kstable(og.graph(), k, Budget::default());
    stats.ensure_optimal()?;
    Ok(set)
}

/// Endpoint-including set meeting `spec` on `side`.
pub fn build_qualified_set(og: &OuterplaneGraph, side: &SplitSubgraph, spec: &QualifiedSetSpec) -> Result<VertexSet> {
    if spec.k == 3 {
        k3::build(og, side, spec)
    } else {
        kgen::build(og, side, spec)
    }
}

fn run(og: &OuterplaneGraph, k: usize, order: H11Order) -> Result<(VertexSet, OuterplanarTrace)> {
    if k < 3 {
        return Err(Error::KTooSmall(k));
    }
    let mut cur = og.clone();
    let mut acc = VertexSet::new();
    let mut trace = OuterplanarTrace::default();
    while cur.n() > base_max(k) {
        let fired = if k == 3 { k3::pick(&cur, order)? } else { kgen::pick(&cur, k)? };
        let (h1, h2, _) = cur.halves(&fired.side).expect("fired sides have an apex");
        let i_h = cur.to_labels(&fired.set);
        let merged = merge_split_sets(&i_h, &acc, cur.label(fired.side.u), cur.label(fired.side.v));
        trace.steps.push(SplitStep {
            n: cur.n(),
            h: fired.side.len,
            h1: h1.len,
            h2: h2.len,
            case: fired.case,
            spec: QualifiedSetSpec::good(fired.side.len, fired.set.len(), k).to_string(),
            size: fired.set.len(),
            merge_ok: merged.is_ok(),
        });
        acc = merged?;
        cur = cur.remainder(&fired.side);
    }
    let base = base_case_set(&cur, k)?;
    trace.steps.push(SplitStep {
        n: cur.n(),
        h: cur.n(),
        h1: 0,
        h2: 0,
        case: "base".into(),
        spec: format!("maximum {k}-stable"),
        size: base.len(),
        merge_ok: true,
    });
    acc.union_with(&cur.to_labels(&base));
    Ok((acc, trace))
}

/// Certificate on original ids with the step trace, using the given 11-vertex test order.
pub fn solve_outerplanar_with(og: &OuterplaneGraph, k: usize, order: H11Order) -> Result<(Certificate, OuterplanarTrace)> {
    let (set, trace) = run(og, k, order)?;
    let algorithm = if k == 3 { Algorithm::Outerplanar3LB } else { Algorithm::OuterplanarKLB };
    let cert = Certificate::new(&og.labeled_graph()?, k, set, algorithm, outerplanar_guarantee(og.n(), k))?;
    Ok((cert, trace))
}

pub fn solve_outerplanar_traced(og: &OuterplaneGraph, k: usize) -> Result<(Certificate, OuterplanarTrace)> {
    solve_outerplanar_with(og, k, H11Order::default())
}

pub fn solve_outerplanar(og: &OuterplaneGraph, k: usize) -> Result<Certificate> {
    solve_outerplanar_traced(og, k).map(|(c, _)| c)
}
