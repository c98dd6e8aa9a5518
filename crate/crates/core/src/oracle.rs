//! Exact branch-and-bound searches and exhaustive instance enumeration.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::outerplane::OuterplaneGraph;

/// Limits on a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
    /// Largest graph the dominating-set search accepts.
    pub max_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 10_000_000, max_time: Duration::from_secs(60), max_n: 60 }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes, ..Budget::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub best_size: usize,
    pub proven_optimal: bool,
    pub time_ms: u64,
}

impl SearchStats {
    /// `Err(BudgetExhausted)` unless the search closed.
    pub fn ensure_optimal(&self) -> Result<()> {
        if self.proven_optimal {
            Ok(())
        } else {
            Err(Error::BudgetExhausted)
        }
    }
}

struct Clock {
    start: Instant,
    budget: Budget,
    nodes: u64,
    out: bool,
}

impl Clock {
    fn new(budget: Budget) -> Self {
        Clock { start: Instant::now(), budget, nodes: 0, out: false }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.budget.max_time)
        {
            self.out = true;
        }
        !self.out
    }

    fn stats(&self, best: usize) -> SearchStats {
        SearchStats {
            nodes_expanded: self.nodes,
            best_size: best,
            proven_optimal: !self.out,
            time_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// Removes maximum-degree vertices until the rest is k-stable, then puts back
/// whatever fits.
pub fn greedy_kstable(g: &Graph, k: usize) -> VertexSet {
    let n = g.n();
    let mut kept = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    while let Some(v) = (0..n).filter(|&v| kept[v] && deg[v] > k).max_by_key(|&v| (deg[v], usize::MAX - v)) {
        kept[v] = false;
        for &w in g.neighbors(v) {
            deg[w] -= 1;
        }
    }
    for v in 0..n {
        if !kept[v] && deg[v] <= k && g.neighbors(v).iter().all(|&w| !kept[w] || deg[w] < k) {
            kept[v] = true;
            for &w in g.neighbors(v) {
                deg[w] += 1;
            }
        }
    }
    (0..n).filter(|&v| kept[v]).collect()
}

struct KStableSearch<'a> {
    g: &'a Graph,
    k: usize,
    removed: Vec<bool>,
    fixed: Vec<bool>,
    deg: Vec<usize>,
    n_removed: usize,
    best_removed: usize,
    best: Vec<bool>,
    clock: Clock,
}

impl KStableSearch<'_> {
    fn remove(&mut self, v: usize) {
        self.removed[v] = true;
        self.n_removed += 1;
        for &w in self.g.neighbors(v) {
            self.deg[w] -= 1;
        }
    }

    fn restore(&mut self, v: usize) {
        self.removed[v] = false;
        self.n_removed -= 1;
        for &w in self.g.neighbors(v) {
            self.deg[w] += 1;
        }
    }

    fn candidates(&self, v: usize) -> Vec<usize> {
        let mut c: Vec<usize> = Vec::new();
        if !self.fixed[v] {
            c.push(v);
        }
        let mut nb: Vec<usize> = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !self.removed[w] && !self.fixed[w])
            .collect();
        nb.sort_by_key(|&w| std::cmp::Reverse(self.deg[w]));
        c.extend(nb);
        c
    }

    /// Lower bound on further removals from a disjoint packing of violated
    /// vertices. `None` if some violation cannot be repaired.
    fn lower_bound(&self) -> Option<usize> {
        let n = self.g.n();
        let mut viol: Vec<usize> =
            (0..n).filter(|&v| !self.removed[v] && self.deg[v] > self.k).collect();
        viol.sort_by_key(|&v| std::cmp::Reverse(self.deg[v]));
        let mut used = vec![false; n];
        let mut lb = 0;
        for v in viol {
            let excess = self.deg[v] - self.k;
            let c = self.candidates(v);
            let need = if self.fixed[v] { excess } else { 1 };
            if c.len() < need {
                return None;
            }
            if c.iter().all(|&x| !used[x]) {
                for &x in &c {
                    used[x] = true;
                }
                lb += need;
            }
        }
        Some(lb)
    }

    fn run(&mut self) {
        if !self.clock.tick() {
            return;
        }
        let Some(lb) = self.lower_bound() else { return };
        if self.n_removed + lb >= self.best_removed {
            return;
        }
        let n = self.g.n();
        let pick = (0..n)
            .filter(|&v| !self.removed[v] && self.deg[v] > self.k)
            .max_by_key(|&v| (self.fixed[v], self.deg[v]));
        let Some(v) = pick else {
            self.best_removed = self.n_removed;
            self.best = self.removed.clone();
            return;
        };
        let cands = self.candidates(v);
        let mut fixed_here = Vec::new();
        for &c in &cands {
            self.remove(c);
            self.run();
            self.restore(c);
            if self.clock.out {
                break;
            }
            self.fixed[c] = true;
            fixed_here.push(c);
        }
        for c in fixed_here {
            self.fixed[c] = false;
        }
    }
}

/// Maximum k-stable set by branch and bound.
///
/// When the budget runs out the best set found is returned with
/// `proven_optimal = false`.
pub fn exact_max_kstable(g: &Graph, k: usize, budget: Budget) -> (VertexSet, SearchStats) {
    let n = g.n();
    let inc = greedy_kstable(g, k);
    let mut s = KStableSearch {
        g,
        k,
        removed: vec![false; n],
        fixed: vec![false; n],
        deg: (0..n).map(|v| g.degree(v)).collect(),
        n_removed: 0,
        best_removed: n - inc.len(),
        best: (0..n).map(|v| !inc.contains(v)).collect(),
        clock: Clock::new(budget),
    };
    s.run();
    let set: VertexSet = (0..n).filter(|&v| !s.best[v]).collect();
    let stats = s.clock.stats(set.len());
    (set, stats)
}

/// Greedy cover followed by redundancy pruning and one-for-two swaps.
pub fn heuristic_dominating(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut cover = vec![0usize; n];
    let mut in_d = vec![false; n];
    let closed = |v: usize| std::iter::once(v).chain(g.neighbors(v).iter().copied());
    let mut undominated = n;
    while undominated > 0 {
        let best = (0..n)
            .filter(|&v| !in_d[v])
            .max_by_key(|&v| (closed(v).filter(|&x| cover[x] == 0).count(), usize::MAX - v))
            .unwrap();
        in_d[best] = true;
        for x in closed(best) {
            if cover[x] == 0 {
                undominated -= 1;
            }
            cover[x] += 1;
        }
    }
    let redundant = |v: usize, cover: &[usize]| closed(v).all(|x| cover[x] >= 2);
    let prune = |in_d: &mut [bool], cover: &mut [usize]| {
        for (v, member) in in_d.iter_mut().enumerate() {
            if *member && redundant(v, cover) {
                *member = false;
                for x in closed(v) {
                    cover[x] -= 1;
                }
            }
        }
    };
    prune(&mut in_d, &mut cover);
    // Add one vertex, then drop every member near it that became redundant; keep if two dropped.
    let mut improved = true;
    while improved {
        improved = false;
        for c in 0..n {
            if in_d[c] {
                continue;
            }
            in_d[c] = true;
            for x in closed(c) {
                cover[x] += 1;
            }
            let mut near: Vec<usize> = closed(c).flat_map(closed).filter(|&v| v != c && in_d[v]).collect();
            near.sort_unstable();
            near.dedup();
            let mut dropped = Vec::new();
            for v in near {
                if redundant(v, &cover) {
                    in_d[v] = false;
                    for x in closed(v) {
                        cover[x] -= 1;
                    }
                    dropped.push(v);
                }
            }
            if dropped.len() >= 2 {
                improved = true;
                continue;
            }
            for v in dropped.into_iter().chain(std::iter::once(c)) {
                in_d[v] = !in_d[v];
                for x in closed(v) {
                    if in_d[v] {
                        cover[x] += 1;
                    } else {
                        cover[x] -= 1;
                    }
                }
            }
        }
    }
    (0..n).filter(|&v| in_d[v]).collect()
}

struct DomSearch<'a> {
    g: &'a Graph,
    cover: Vec<usize>,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    clock: Clock,
}

impl DomSearch<'_> {
    fn closed(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(v).chain(self.g.neighbors(v).iter().copied())
    }

    fn gain(&self, c: usize) -> usize {
        self.closed(c).filter(|&x| self.cover[x] == 0).count()
    }

    fn choose(&mut self, c: usize, delta: isize) {
        let g = self.g;
        for x in std::iter::once(c).chain(g.neighbors(c).iter().copied()) {
            self.cover[x] = (self.cover[x] as isize + delta) as usize;
        }
    }

    fn run(&mut self) {
        if !self.clock.tick() {
            return;
        }
        let n = self.g.n();
        let mut bound = 0.0f64;
        let mut pick: Option<(usize, Vec<usize>)> = None;
        for x in (0..n).filter(|&x| self.cover[x] == 0) {
            let cands: Vec<usize> = self.closed(x).filter(|&c| !self.forbidden[c]).collect();
            let Some(top) = cands.iter().map(|&c| self.gain(c)).max() else { return };
            bound += 1.0 / top as f64;
            if pick.as_ref().is_none_or(|(_, p)| cands.len() < p.len()) {
                pick = Some((x, cands));
            }
        }
        let Some((_, mut cands)) = pick else {
            self.best = self.chosen.clone();
            return;
        };
        if self.chosen.len() + (bound - 1e-9).ceil() as usize >= self.best.len() {
            return;
        }
        cands.sort_by_key(|&c| std::cmp::Reverse(self.gain(c)));
        let mut forbidden_here = Vec::new();
        for c in cands {
            self.choose(c, 1);
            self.chosen.push(c);
            self.run();
            self.chosen.pop();
            self.choose(c, -1);
            if self.clock.out {
                break;
            }
            self.forbidden[c] = true;
            forbidden_here.push(c);
        }
        for c in forbidden_here {
            self.forbidden[c] = false;
        }
    }
}

/// Minimum dominating set by branch and bound over undominated vertices.
pub fn exact_min_dominating(g: &Graph, budget: Budget) -> Result<(VertexSet, SearchStats)> {
    let n = g.n();
    if n > budget.max_n {
        return Err(Error::ExactTooLarge { n, cap: budget.max_n });
    }
    let inc = heuristic_dominating(g);
    let mut s = DomSearch {
        g,
        cover: vec![0; n],
        forbidden: vec![false; n],
        chosen: Vec::new(),
        best: inc.to_vec(),
        clock: Clock::new(budget),
    };
    s.run();
    let set: VertexSet = s.best.iter().copied().collect();
    let stats = s.clock.stats(set.len());
    Ok((set, stats))
}

/// Whether every vertex is in `d` or adjacent to it.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    (0..g.n()).all(|v| d.contains(v) || g.neighbors(v).iter().any(|&w| d.contains(w)))
}

/// Catalan numbers `C_0..=C_m`.
pub fn catalan(m: usize) -> Vec<u64> {
    let mut c = vec![1u64; m + 1];
    for i in 1..=m {
        c[i] = (0..i).map(|j| c[j] * c[i - 1 - j]).sum();
    }
    c
}

/// Every triangulation of the convex `n`-gon with vertices `0..n` in order.
pub struct PolygonTriangulations {
    n: usize,
    rank: u64,
    total: u64,
    cat: Vec<u64>,
}

impl PolygonTriangulations {
    /// Chords of the triangulation of `a..=b` with the given rank.
    fn unrank(&self, a: usize, b: usize, mut r: u64, out: &mut Vec<(usize, usize)>) {
        if b - a < 2 {
            return;
        }
        for w in a + 1..b {
            let left = self.cat[w - a - 1];
            let right = self.cat[b - w - 1];
            if r < left * right {
                if w - a >= 2 {
                    out.push((a, w));
                }
                if b - w >= 2 {
                    out.push((w, b));
                }
                self.unrank(a, w, r / right, out);
                self.unrank(w, b, r % right, out);
                return;
            }
            r -= left * right;
        }
    }
}

impl Iterator for PolygonTriangulations {
    type Item = OuterplaneGraph;

    fn next(&mut self) -> Option<OuterplaneGraph> {
        if self.rank >= self.total {
            return None;
        }
        let n = self.n;
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
        let mut chords = Vec::new();
        self.unrank(0, n - 1, self.rank, &mut chords);
        chords.retain(|&(a, b)| !(a == 0 && b == n - 1));
        edges.extend(chords);
        self.rank += 1;
        let g = Graph::from_edges(n, edges).expect("triangulations are simple");
        let order: Vec<usize> = (0..n).collect();
        Some(OuterplaneGraph::from_graph(&g, &order).expect("unranked triangulations are maximal"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.rank) as usize;
        (left, Some(left))
    }
}

/// Lazily yields all `Catalan(n-2)` labeled triangulations of the `n`-gon.
pub fn enumerate_polygon_triangulations(n: usize) -> Result<PolygonTriangulations> {
    if !(3..=14).contains(&n) {
        return Err(Error::NTooLarge(n));
    }
    let cat = catalan(n);
    Ok(PolygonTriangulations { n, rank: 0, total: cat[n - 2], cat })
}
