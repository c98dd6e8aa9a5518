//! Maximal outerplanar graphs in their canonical outer order.
//!
//! An [`OuterplaneGraph`] stores its vertices by *position*: position `i` is the
//! `i`-th vertex met along the outer cycle, so the outer cycle is
//! `0, 1, ..., n-1`. The original ids are kept in [`OuterplaneGraph::labels`].
//! Every method on this type takes and returns positions unless its name says
//! otherwise.
//!
//! Internal faces are indexed by their *span* edge: the face below an edge
//! `(a, b)` with `b - a >= 2` is the triangle `(a, w, b)` with `a < w < b`.
//! The edges with `b - a >= 2` are the chords plus `(0, n-1)`, so there are
//! exactly `n - 2` faces.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A maximal outerplanar graph with outer cycle `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplaneGraph {
    g: Graph,
    labels: Vec<usize>,
    chords: Vec<(usize, usize)>,
}

/// A run of consecutive positions along the outer cycle whose two ends are adjacent.
///
/// `u` is the first position and `v` the last; the side holds `len` positions
/// starting at `u` and wrapping past `n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitSubgraph {
    pub u: usize,
    pub v: usize,
    pub len: usize,
    n: usize,
}

impl SplitSubgraph {
    /// Positions in outer order from `u` to `v`.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).map(move |i| (self.u + i) % self.n)
    }

    pub fn vertices(&self) -> VertexSet {
        self.positions().collect()
    }

    /// Position of the `i`-th vertex of the side.
    pub fn at(&self, i: usize) -> usize {
        (self.u + i) % self.n
    }

    /// Offset of position `p` from `u`, or `None` if `p` is outside the side.
    pub fn offset(&self, p: usize) -> Option<usize> {
        let r = (p + self.n - self.u) % self.n;
        (r < self.len).then_some(r)
    }

    pub fn contains(&self, p: usize) -> bool {
        self.offset(p).is_some()
    }

    /// Positions strictly between `u` and `v`.
    pub fn interior(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.len.saturating_sub(1)).map(move |i| (self.u + i) % self.n)
    }

    /// The positions not in this side; the ends `u` and `v` are not part of it.
    pub fn complement(&self) -> Vec<usize> {
        (self.len..self.n).map(|i| (self.u + i) % self.n).collect()
    }
}

/// Tree of internal faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakDual {
    /// Each face as its three positions in increasing order.
    pub nodes: Vec<[usize; 3]>,
    /// Face adjacency across shared chords.
    pub adj: Vec<Vec<usize>>,
}

impl WeakDual {
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }
}

fn check_permutation(order: &[usize], n: usize) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::BadOrder(n));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::BadOrder(n));
        }
        pos[v] = i;
    }
    Ok(pos)
}

/// Position-space edges `(a, b)` with `a < b`.
fn position_edges(g: &Graph, pos: &[usize]) -> Vec<(usize, usize)> {
    g.edges()
        .map(|(x, y)| {
            let (a, b) = (pos[x], pos[y]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// First crossing pair among `edges`, viewed as chords of a convex polygon.
fn find_crossing(edges: &[(usize, usize)]) -> Option<((usize, usize), (usize, usize))> {
    let mut sorted = edges.to_vec();
    sorted.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &sorted {
        while stack.last().is_some_and(|&(_, d)| d <= a) {
            stack.pop();
        }
        if let Some(&top) = stack.last() {
            if b > top.1 {
                return Some((top, (a, b)));
            }
        }
        stack.push((a, b));
    }
    None
}

impl OuterplaneGraph {
    /// Reads `g` with outer cycle `order` and checks that it is maximal outerplanar.
    pub fn from_graph(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.n();
        let pos = check_permutation(order, n)?;
        let edges = position_edges(g, &pos);
        let pg = Graph::from_edges(n, edges.iter().copied())?;
        let bad = |msg: String| Err(Error::NotMaximalOuterplanar(msg));
        if n <= 2 {
            if pg.m() != n * n.saturating_sub(1) / 2 {
                return bad(format!("{n} vertices must be pairwise adjacent"));
            }
            return Ok(OuterplaneGraph { g: pg, labels: order.to_vec(), chords: Vec::new() });
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if !pg.has_edge(i, j) {
                return bad(format!("outer cycle edge {}-{} missing", order[i], order[j]));
            }
        }
        if let Some((e, f)) = find_crossing(&edges) {
            return bad(format!(
                "edges {}-{} and {}-{} cross",
                order[e.0], order[e.1], order[f.0], order[f.1]
            ));
        }
        let chords: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| b - a >= 2 && !(a == 0 && b == n - 1))
            .collect();
        if chords.len() != n - 3 {
            return bad(format!("{} chords, expected {}", chords.len(), n - 3));
        }
        let mut chords = chords;
        chords.sort_unstable();
        Ok(OuterplaneGraph { g: pg, labels: order.to_vec(), chords })
    }

    /// Triangulates `g` under the witness order `order`, fanning every internal
    /// face from its lowest id.
    pub fn complete_to_maximal(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.n();
        let pos = check_permutation(order, n)?;
        let mut edges = position_edges(g, &pos);
        if let Some((e, f)) = find_crossing(&edges) {
            return Err(Error::WitnessInvalid(
                (order[e.0], order[e.1]),
                (order[f.0], order[f.1]),
            ));
        }
        if n <= 3 {
            let full: Vec<(usize, usize)> =
                (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let lg = Graph::from_edges(n, full.iter().map(|&(a, b)| (order[a], order[b])))?;
            return OuterplaneGraph::from_graph(&lg, order);
        }
        for i in 0..n - 1 {
            edges.push((i, i + 1));
        }
        edges.push((0, n - 1));
        let mut pg = Graph::from_edges_dedup(n, edges)?;
        let mut added = Vec::new();
        for (a, b) in pg.edges().collect::<Vec<_>>() {
            if b - a < 2 {
                continue;
            }
            // Walk the face below (a, b) by always taking the farthest neighbour not past b.
            let mut face = vec![a];
            let mut p = a;
            while p != b {
                let nb = pg.neighbors(p);
                let idx = nb.partition_point(|&x| x <= b);
                let mut q = nb[idx - 1];
                if p == a && q == b {
                    q = nb[idx - 2];
                }
                face.push(q);
                p = q;
            }
            if face.len() > 3 {
                let apex = *face.iter().min_by_key(|&&x| order[x]).unwrap();
                for &x in &face {
                    if x != apex && !pg.has_edge(apex, x) {
                        added.push((apex.min(x), apex.max(x)));
                    }
                }
            }
        }
        if !added.is_empty() {
            pg = pg.with_edges(&added)?;
        }
        let lg = Graph::from_edges(n, pg.edges().map(|(a, b)| (order[a], order[b])))?;
        OuterplaneGraph::from_graph(&lg, order)
    }

    /// Builds directly from a position-space graph already known to be maximal.
    pub(crate) fn from_positions(g: Graph, labels: Vec<usize>) -> Result<Self> {
        let order: Vec<usize> = (0..g.n()).collect();
        let mut og = OuterplaneGraph::from_graph(&g, &order)?;
        og.labels = labels;
        Ok(og)
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    /// The graph on positions.
    pub fn graph(&self) -> &Graph {
        &self.g
    }

    /// `labels()[p]` is the original id at position `p`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> usize {
        self.labels[p]
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    /// The graph on original ids; fails unless the labels are a permutation of `0..n`.
    pub fn labeled_graph(&self) -> Result<Graph> {
        check_permutation(&self.labels, self.n())?;
        Graph::from_edges(self.n(), self.g.edges().map(|(a, b)| (self.labels[a], self.labels[b])))
    }

    pub fn labeled_chords(&self) -> Vec<(usize, usize)> {
        let mut c: Vec<(usize, usize)> = self
            .chords
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.labels[a], self.labels[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        c.sort_unstable();
        c
    }

    /// Maps a set of positions to original ids.
    pub fn to_labels(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|p| self.labels[p]).collect()
    }

    fn side(&self, u: usize, len: usize) -> SplitSubgraph {
        let n = self.n();
        SplitSubgraph { u, v: (u + len - 1) % n, len, n }
    }

    /// The side of edge `(x, y)` running from `x` forward to `y`.
    pub fn side_from(&self, x: usize, y: usize) -> Result<SplitSubgraph> {
        if !self.g.has_edge(x, y) {
            return Err(Error::EdgeAbsent(x, y));
        }
        let n = self.n();
        Ok(self.side(x, (y + n - x) % n + 1))
    }

    /// Both sides of the edge `(u, v)`: the first runs from the smaller position up,
    /// the second wraps around. Their sizes sum to `n + 2`.
    pub fn split(&self, u: usize, v: usize) -> Result<(SplitSubgraph, SplitSubgraph)> {
        let (a, b) = (u.min(v), u.max(v));
        if a == b || !self.g.has_edge(a, b) {
            return Err(Error::EdgeAbsent(u, v));
        }
        Ok((self.side_from(a, b)?, self.side_from(b, a)?))
    }

    /// Every side of every edge, each side once.
    pub fn all_sides(&self) -> Vec<SplitSubgraph> {
        let mut out = Vec::with_capacity(4 * self.n());
        for (a, b) in self.g.edges() {
            out.push(self.side(a, b - a + 1));
            out.push(self.side(b, self.n() - (b - a) + 1));
        }
        out
    }

    /// Common neighbour of the ends of `side` strictly inside it; `None` when `len < 3`.
    pub fn apex(&self, side: &SplitSubgraph) -> Option<usize> {
        if side.len < 3 {
            return None;
        }
        self.g
            .neighbors(side.u)
            .iter()
            .copied()
            .filter_map(|x| side.offset(x).filter(|&r| r > 0 && r < side.len - 1).map(|r| (r, x)))
            .max()
            .map(|(_, x)| x)
    }

    /// The two sides of `side` cut at its apex `w`: `(u..w, w..v)`.
    pub fn halves(&self, side: &SplitSubgraph) -> Option<(SplitSubgraph, SplitSubgraph, usize)> {
        let w = self.apex(side)?;
        let r = side.offset(w).unwrap();
        Some((self.side(side.u, r + 1), self.side(w, side.len - r), w))
    }

    /// Internal faces as sorted triples, in order of their span edge.
    pub fn faces(&self) -> Vec<[usize; 3]> {
        let n = self.n();
        if n < 3 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(n - 2);
        for (a, b) in self.g.edges() {
            if b - a >= 2 {
                let w = self.apex(&self.side(a, b - a + 1)).expect("span edges have an apex");
                out.push([a, w, b]);
            }
        }
        out
    }

    pub fn weak_dual(&self) -> WeakDual {
        let nodes = self.faces();
        let mut by_span = HashMap::new();
        for (i, f) in nodes.iter().enumerate() {
            by_span.insert((f[0], f[2]), i);
        }
        let mut adj = vec![Vec::new(); nodes.len()];
        for (i, f) in nodes.iter().enumerate() {
            for child in [(f[0], f[1]), (f[1], f[2])] {
                if let Some(&j) = by_span.get(&child) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        WeakDual { nodes, adj }
    }

    pub fn is_outerpath(&self) -> bool {
        self.weak_dual().is_path()
    }

    /// Edges sharing an internal face with `(a, b)`.
    fn cofacial(&self, a: usize, b: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &w in self.g.neighbors(a) {
            if w != b && self.g.has_edge(w, b) {
                out.push((a.min(w), a.max(w)));
                out.push((b.min(w), b.max(w)));
            }
        }
        out
    }

    /// Distance from `from` to every edge, counted in face steps.
    pub fn edge_distances(&self, from: (usize, usize)) -> Result<HashMap<(usize, usize), usize>> {
        let key = (from.0.min(from.1), from.0.max(from.1));
        if !self.g.has_edge(key.0, key.1) {
            return Err(Error::EdgeAbsent(from.0, from.1));
        }
        let mut dist = HashMap::with_capacity(2 * self.n());
        dist.insert(key, 0);
        let mut queue = VecDeque::from([key]);
        while let Some(e) = queue.pop_front() {
            let d = dist[&e];
            for f in self.cofacial(e.0, e.1) {
                dist.entry(f).or_insert_with(|| {
                    queue.push_back(f);
                    d + 1
                });
            }
        }
        Ok(dist)
    }

    /// The edge cofacial with `uv` one step closer to `xy`; `None` when `uv = xy`.
    pub fn xy_parent(&self, xy: (usize, usize), uv: (usize, usize)) -> Result<Option<(usize, usize)>> {
        let dist = self.edge_distances(xy)?;
        let key = (uv.0.min(uv.1), uv.0.max(uv.1));
        let d = *dist.get(&key).ok_or(Error::EdgeAbsent(uv.0, uv.1))?;
        if d == 0 {
            return Ok(None);
        }
        Ok(self.cofacial(key.0, key.1).into_iter().filter(|f| dist[f] + 1 == d).min())
    }

    /// A side with between `ell + 2` and `2 ell + 1` vertices; if it is not the
    /// whole graph it avoids the outer edge `xy`.
    pub fn decompose(&self, ell: usize, xy: (usize, usize)) -> Result<SplitSubgraph> {
        let n = self.n();
        if n < ell + 2 || n < 3 {
            return Err(Error::TooSmall { n, need: (ell + 2).max(3) });
        }
        let (x, y) = xy;
        let forward = if (x + 1) % n == y {
            self.side(y, n)
        } else if (y + 1) % n == x {
            self.side(x, n)
        } else {
            return Err(Error::PreconditionViolated(format!("{x}-{y} is not an outer edge")));
        };
        let mut cur = forward;
        while cur.len > 2 * ell + 1 {
            let (g1, g2, _) = self.halves(&cur).expect("large sides have an apex");
            cur = if g1.len >= 2 * ell + 2 {
                g1
            } else if g2.len >= 2 * ell + 2 {
                g2
            } else if g1.len >= ell + 2 {
                return Ok(g1);
            } else {
                return Ok(g2);
            };
        }
        Ok(cur)
    }

    /// `side` as a maximal outerplanar graph of its own, positions renumbered from 0.
    pub fn sub_outerplane(&self, side: &SplitSubgraph) -> OuterplaneGraph {
        let ps: Vec<usize> = side.positions().collect();
        self.induced_run(&ps).expect("a side is maximal outerplanar")
    }

    /// The subgraph on a consecutive run of positions, completed to a maximal one.
    pub fn remainder(&self, side: &SplitSubgraph) -> OuterplaneGraph {
        let ps = side.complement();
        let order: Vec<usize> = (0..ps.len()).collect();
        let g = self.run_graph(&ps);
        let mut og = OuterplaneGraph::complete_to_maximal(&g, &order).expect("runs never cross");
        og.labels = ps.iter().map(|&p| self.labels[p]).collect();
        og
    }

    fn run_graph(&self, ps: &[usize]) -> Graph {
        let mut idx = vec![usize::MAX; self.n()];
        for (i, &p) in ps.iter().enumerate() {
            idx[p] = i;
        }
        Graph::from_edges(
            ps.len(),
            self.g
                .edges()
                .filter(|&(a, b)| idx[a] != usize::MAX && idx[b] != usize::MAX)
                .map(|(a, b)| (idx[a], idx[b])),
        )
        .expect("induced edges are simple")
    }

    fn induced_run(&self, ps: &[usize]) -> Result<OuterplaneGraph> {
        let g = self.run_graph(ps);
        OuterplaneGraph::from_positions(g, ps.iter().map(|&p| self.labels[p]).collect())
    }
}
