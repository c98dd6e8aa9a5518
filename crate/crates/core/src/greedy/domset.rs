//! Dominating sets per connected component, checked against the known
//! bounds for connected 4-regular (`4h/11`) and 5-regular (`5h/14`) graphs.

use serde::{Deserialize, Serialize};

use crate::certificate::{ratio_str, Rational};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::oracle::{exact_min_dominating, heuristic_dominating, Budget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DomMode {
    Exact,
    Heuristic,
}

/// Minimum (`Exact`) or greedy-plus-swaps (`Heuristic`) dominating set.
pub fn dominating_set(g: &Graph, mode: DomMode) -> Result<VertexSet> {
    match mode {
        DomMode::Heuristic => Ok(heuristic_dominating(g)),
        DomMode::Exact => {
            let (set, stats) = exact_min_dominating(g, Budget::default())?;
            stats.ensure_optimal()?;
            Ok(set)
        }
    }
}

/// Size bound for a connected `r`-regular graph on `h` vertices.
pub fn cited_bound(r: usize, h: usize) -> Result<Rational> {
    let h = h as i64;
    match r {
        4 => Ok(Rational::new(4 * h, 11)),
        5 => Ok(Rational::new(5 * h, 14)),
        _ => Err(Error::StrategyUnavailable(r - 1)),
    }
}

/// One component of the regular graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomRecord {
    pub h: usize,
    pub size: usize,
    /// Whether the size was proven minimum.
    pub exact: bool,
    #[serde(with = "ratio_str")]
    pub cited_bound: Rational,
    pub bound_met: bool,
}

/// How hard to search each component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DomBudget {
    /// Components up to this size get branch and bound.
    pub exact_cap: usize,
    pub max_nodes: u64,
}

impl Default for DomBudget {
    fn default() -> Self {
        DomBudget { exact_cap: 60, max_nodes: 200_000 }
    }
}

/// Union of per-component dominating sets of the `r`-regular graph `h`.
pub fn dominate_components(h: &Graph, r: usize, budget: DomBudget) -> Result<(VertexSet, Vec<DomRecord>)> {
    let mut all = VertexSet::new();
    let mut records = Vec::new();
    for comp in h.components() {
        let members: VertexSet = comp.iter().copied().collect();
        let (sub, map) = induced_subgraph(h, &members)?;
        let (set, exact) = if sub.n() <= budget.exact_cap {
            let b = Budget { max_nodes: budget.max_nodes, max_n: budget.exact_cap, ..Budget::default() };
            let (set, stats) = exact_min_dominating(&sub, b)?;
            (set, stats.proven_optimal)
        } else {
            (heuristic_dominating(&sub), false)
        };
        let bound = cited_bound(r, sub.n())?;
        records.push(DomRecord {
            h: sub.n(),
            size: set.len(),
            exact,
            cited_bound: bound,
            bound_met: Rational::from_integer(set.len() as i64) <= bound,
        });
        all.extend(set.iter().map(|v| map[v]));
    }
    Ok((all, records))
}
