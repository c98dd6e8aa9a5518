//! Completion of a graph of maximum degree `r` to an `r`-regular supergraph.
//!
//! Edges are first added between non-adjacent deficient vertices until the
//! deficient vertices form a clique; a gadget of a few new vertices then
//! supplies the remaining degree.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// What [`augment_to_regular`] added.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationReport {
    pub r: usize,
    /// Edges added between original vertices, then gadget edges.
    pub added_edges: Vec<(usize, usize)>,
    /// New vertices, numbered from the original vertex count upwards.
    pub added_vertices: usize,
    /// Degrees of the residual clique before the gadget, ascending.
    pub gadget_case: Vec<usize>,
}

/// A gadget for a residual clique: vertices `0..x` are the clique, `x..x+t` are new.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub new_vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

fn check_max_degree(g: &Graph, r: usize) -> Result<()> {
    match (0..g.n()).find(|&v| g.degree(v) > r) {
        Some(v) => Err(Error::PreconditionViolated(format!("vertex {v} has degree {} above {r}", g.degree(v)))),
        None => Ok(()),
    }
}

/// Edges joining non-adjacent vertices of degree below `r`, added in id order.
pub fn saturating_edges(g: &Graph, r: usize) -> Result<Vec<(usize, usize)>> {
    check_max_degree(g, r)?;
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let low: Vec<usize> = (0..g.n()).filter(|&v| deg[v] < r).collect();
    let mut added = Vec::new();
    for (i, &a) in low.iter().enumerate() {
        for &b in &low[i + 1..] {
            if deg[a] == r {
                break;
            }
            if deg[b] < r && !g.has_edge(a, b) {
                deg[a] += 1;
                deg[b] += 1;
                added.push((a, b));
            }
        }
    }
    Ok(added)
}

/// `g` plus [`saturating_edges`]; the vertices still below `r` form a clique.
pub fn edge_saturate(g: &Graph, r: usize) -> Result<Graph> {
    g.with_edges(&saturating_edges(g, r)?)
}

/// Havel-Hakimi realisation of `need` on vertices `offset..offset+need.len()`.
fn realise(need: &[usize], offset: usize) -> Option<Vec<(usize, usize)>> {
    let mut left: Vec<(usize, usize)> = need.iter().copied().zip(0..).collect();
    let mut edges = Vec::new();
    loop {
        left.sort_by(|a, b| b.cmp(a));
        let (d, v) = left[0];
        if d == 0 {
            return Some(edges);
        }
        if d >= left.len() {
            return None;
        }
        left[0].0 = 0;
        for slot in left.iter_mut().skip(1).take(d) {
            if slot.0 == 0 {
                return None;
            }
            slot.0 -= 1;
            edges.push((offset + v, offset + slot.1));
        }
    }
}

struct GadgetSearch<'a> {
    deficit: &'a [usize],
    r: usize,
    t: usize,
    /// For each new vertex, the clique vertices attached so far.
    attached: Vec<Vec<usize>>,
}

impl GadgetSearch<'_> {
    fn run(&mut self, i: usize) -> Option<Vec<(usize, usize)>> {
        let x = self.deficit.len();
        if i == x {
            let need: Vec<usize> = self.attached.iter().map(|a| self.r - a.len()).collect();
            let mut edges = realise(&need, x)?;
            for (j, a) in self.attached.iter().enumerate() {
                edges.extend(a.iter().map(|&c| (c, x + j)));
            }
            return Some(edges);
        }
        // New vertices with the same attachments are interchangeable: pick counts per class.
        let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (j, a) in self.attached.iter().enumerate() {
            if a.len() < self.r {
                classes.entry(a.clone()).or_default().push(j);
            }
        }
        let classes: Vec<Vec<usize>> = classes.into_values().collect();
        let mut counts = vec![0; classes.len()];
        self.choose(i, &classes, &mut counts, 0, self.deficit[i])
    }

    fn choose(
        &mut self,
        i: usize,
        classes: &[Vec<usize>],
        counts: &mut Vec<usize>,
        c: usize,
        left: usize,
    ) -> Option<Vec<(usize, usize)>> {
        if c == classes.len() {
            if left > 0 {
                return None;
            }
            let picked: Vec<usize> = classes.iter().zip(counts.iter()).flat_map(|(cl, &m)| cl[..m].to_vec()).collect();
            for &j in &picked {
                self.attached[j].push(i);
            }
            let found = self.run(i + 1);
            for &j in &picked {
                self.attached[j].pop();
            }
            return found;
        }
        for m in (0..=left.min(classes[c].len())).rev() {
            counts[c] = m;
            if let Some(e) = self.choose(i, classes, counts, c + 1, left - m) {
                return Some(e);
            }
        }
        counts[c] = 0;
        None
    }
}

/// Smallest gadget completing a clique whose vertices have the given degrees.
///
/// The clique vertices are `0..degrees.len()`; returns `None` if no gadget
/// with at most `max_new` new vertices exists.
pub fn find_gadget(degrees: &[usize], r: usize, max_new: usize) -> Option<Gadget> {
    if degrees.iter().any(|&d| d > r) {
        return None;
    }
    let deficit: Vec<usize> = degrees.iter().map(|&d| r - d).collect();
    let total: usize = deficit.iter().sum();
    if total == 0 {
        return Some(Gadget { new_vertices: 0, edges: Vec::new() });
    }
    let lo = deficit.iter().copied().max().unwrap_or(0).max(1);
    for t in lo..=max_new {
        if (t * r + total) % 2 == 1 || t * r < total {
            continue;
        }
        let mut search = GadgetSearch { deficit: &deficit, r, t, attached: vec![Vec::new(); t] };
        if let Some(edges) = search.run(0) {
            return Some(Gadget { new_vertices: search.t, edges });
        }
    }
    None
}

/// Largest gadget the augmentation may need for target degree `r`.
pub fn gadget_budget(r: usize) -> usize {
    r + 2
}

/// `r`-regular supergraph of `g` with `g` as the induced subgraph on `0..n`.
pub fn augment_to_regular(g: &Graph, r: usize) -> Result<(Graph, AugmentationReport)> {
    let mut added_edges = saturating_edges(g, r)?;
    let sat = g.with_edges(&added_edges)?;
    let low: Vec<usize> = (0..sat.n()).filter(|&v| sat.degree(v) < r).collect();
    let degrees: Vec<usize> = low.iter().map(|&v| sat.degree(v)).collect();
    let gadget = find_gadget(&degrees, r, gadget_budget(r)).ok_or_else(|| {
        Error::NotFound(format!("no gadget for residual degrees {degrees:?} with target {r}"))
    })?;
    let n = g.n();
    let x = low.len();
    let map = |p: usize| if p < x { low[p] } else { n + p - x };
    let gadget_edges: Vec<(usize, usize)> = gadget.edges.iter().map(|&(a, b)| (map(a), map(b))).collect();
    let mut all: Vec<(usize, usize)> = sat.edges().collect();
    all.extend(gadget_edges.iter().copied());
    let h = Graph::from_edges(n + gadget.new_vertices, all)?;
    added_edges.extend(gadget_edges);
    let mut gadget_case = degrees;
    gadget_case.sort_unstable();
    Ok((h, AugmentationReport { r, added_edges, added_vertices: gadget.new_vertices, gadget_case }))
}

/// Every degree multiset a residual clique can have: `x <= r` vertices with
/// degrees in `x-1..r` and an even deficiency total.
pub fn residual_cases(r: usize) -> Vec<Vec<usize>> {
    fn rec(x: usize, lo: usize, hi: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == x {
            out.push(cur.clone());
            return;
        }
        for d in from.max(lo)..hi {
            cur.push(d);
            rec(x, lo, hi, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for x in 1..=r {
        let mut all = Vec::new();
        rec(x, x - 1, r, 0, &mut Vec::new(), &mut all);
        out.extend(all.into_iter().filter(|c| c.iter().map(|d| r - d).sum::<usize>() % 2 == 0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturation_leaves_a_clique() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let s = edge_saturate(&c5, 4).unwrap();
        let low: Vec<usize> = (0..5).filter(|&v| s.degree(v) < 4).collect();
        assert!(low.len() <= 4);
        for (i, &a) in low.iter().enumerate() {
            for &b in &low[i + 1..] {
                assert!(s.has_edge(a, b));
            }
        }
        let two = edge_saturate(&Graph::empty(2), 4).unwrap();
        assert_eq!(two.m(), 1);
    }

    #[test]
    fn single_isolated_vertex() {
        let (h, rep) = augment_to_regular(&Graph::empty(1), 4).unwrap();
        assert!((0..h.n()).all(|v| h.degree(v) == 4));
        assert_eq!(rep.gadget_case, vec![0]);
        assert!(rep.added_vertices <= 6);
    }

    #[test]
    fn regular_input_unchanged() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
        let (h, rep) = augment_to_regular(&k5, 4).unwrap();
        assert_eq!(h, k5);
        assert_eq!(rep.added_vertices, 0);
        assert!(rep.added_edges.is_empty());
    }

    #[test]
    fn case_lists() {
        assert_eq!(residual_cases(4).len(), 9);
        assert!(residual_cases(4).contains(&vec![3, 3]));
        assert!(residual_cases(4).contains(&vec![0]));
    }
}
