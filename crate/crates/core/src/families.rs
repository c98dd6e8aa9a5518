//! Extremal families and random instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::certificate::{format_ratio, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::GraphFile;
use crate::outerplane::OuterplaneGraph;

/// A generated family member with the upper bound it is built to enforce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub graph: Graph,
    /// Witness outer order for outerplanar members.
    pub outer_order: Option<Vec<usize>>,
    pub family: &'static str,
    pub n: usize,
    pub k: usize,
    pub h: usize,
    pub claimed_upper_bound: Rational,
    /// Isolated padding vertices, always the highest ids.
    pub fillers: Vec<usize>,
}

impl FamilyInstance {
    /// Maximal outerplanar completion along the witness order.
    pub fn outerplane(&self) -> Result<OuterplaneGraph> {
        let order = self
            .outer_order
            .as_ref()
            .ok_or_else(|| Error::PreconditionViolated(format!("{} is not outerplanar", self.family)))?;
        OuterplaneGraph::complete_to_maximal(&self.graph, order)
    }

    pub fn to_file(&self) -> GraphFile {
        let mut f = GraphFile::from_graph(&self.graph)
            .with_meta("family", self.family)
            .with_meta("k", self.k)
            .with_meta("h", self.h)
            .with_meta("claimed_upper_bound", format_ratio(self.claimed_upper_bound))
            .with_meta("fillers", json!(self.fillers));
        f.outer_order = self.outer_order.clone();
        f
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        Err(Error::KTooSmall(k))
    } else {
        Ok(())
    }
}

/// Blocks `1..=blocks` of `u` vertices hung off a path of `v` vertices.
/// Returns the edges plus ids of `v_i` and `u^i_j` (1-based indices).
struct Strip {
    v: Vec<usize>,
    u: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

fn strip(blocks: usize, k: usize, first_id: usize) -> Strip {
    let v: Vec<usize> = (0..blocks).map(|i| first_id + i).collect();
    let u: Vec<Vec<usize>> = (0..blocks)
        .map(|i| (0..k - 1).map(|j| first_id + blocks + i * (k - 1) + j).collect())
        .collect();
    let mut edges = Vec::new();
    for i in 0..blocks {
        if i + 1 < blocks {
            edges.push((v[i], v[i + 1]));
        }
        for j in 0..k - 1 {
            edges.push((v[i], u[i][j]));
            if j + 1 < k - 1 {
                edges.push((u[i][j], u[i][j + 1]));
            }
        }
        if i > 0 {
            edges.push((v[i - 1], u[i][0]));
        }
        if i + 1 < blocks {
            edges.push((u[i][k - 2], v[i + 1]));
        }
    }
    Strip { v, u, edges }
}

impl Strip {
    /// Outer order: odd-indexed blocks on one side, even on the other, starting at `v_1`.
    fn outer_order(&self) -> Vec<usize> {
        let h = self.v.len();
        let mut bottom = Vec::new();
        let mut top = Vec::new();
        for i in 0..h {
            if i % 2 == 0 {
                bottom.push(self.v[i]);
                top.extend(&self.u[i]);
            } else {
                top.push(self.v[i]);
                bottom.extend(&self.u[i]);
            }
        }
        top.reverse();
        bottom.extend(top);
        bottom
    }
}

/// Outerpath on which every k-stable set has at most `(k-1)/k * n + 2` vertices.
pub fn gen_outerpath_ub(n: usize, k: usize) -> Result<FamilyInstance> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::ParamsTooSmall("n must be at least 1".into()));
    }
    let h = n / k;
    let s = strip(h, k, 0);
    let fillers: Vec<usize> = (h * k..n).collect();
    let mut order = s.outer_order();
    order.extend(&fillers);
    Ok(FamilyInstance {
        graph: Graph::from_edges(n, s.edges)?,
        outer_order: Some(order),
        family: "outerpath-ub",
        n,
        k,
        h,
        claimed_upper_bound: Rational::new((k as i64 - 1) * n as i64, k as i64) + 2,
        fillers,
    })
}

/// Strip of `2h` blocks with an apex over each pair of consecutive blocks.
pub fn gen_planar_ub_a(n: usize, k: usize) -> Result<FamilyInstance> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::ParamsTooSmall("n must be at least 1".into()));
    }
    let h = n / (2 * k + 1);
    let s = strip(2 * h, k, 0);
    let mut edges = s.edges.clone();
    let w0 = 2 * h * k;
    for i in 0..h {
        let w = w0 + i;
        let (a, b) = (2 * i, 2 * i + 1);
        if i > 0 {
            edges.push((w, s.v[a - 1]));
        }
        edges.push((w, s.v[a]));
        edges.push((w, s.v[b]));
        if i + 1 < h {
            edges.push((w, s.v[b + 1]));
        }
        for &x in s.u[a].iter().chain(&s.u[b]) {
            edges.push((w, x));
        }
    }
    let fillers: Vec<usize> = (h * (2 * k + 1)..n).collect();
    Ok(FamilyInstance {
        graph: Graph::from_edges(n, edges)?,
        outer_order: None,
        family: "planar-ub-a",
        n,
        k,
        h,
        claimed_upper_bound: Rational::new((2 * k as i64 - 2) * n as i64, 2 * k as i64 + 1) + 5,
        fillers,
    })
}

/// Cycle with `h` pairs of vertices, each pair joined to its own window of `k + 2`.
pub fn gen_planar_ub_b(n: usize, k: usize) -> Result<FamilyInstance> {
    check_k(k)?;
    if n < k + 6 {
        return Err(Error::ParamsTooSmall(format!("n = {n} is below k + 6 = {}", k + 6)));
    }
    let h = n / (k + 4);
    let c = n - 2 * h;
    let mut edges: Vec<(usize, usize)> = (0..c).map(|j| (j, (j + 1) % c)).collect();
    for i in 0..h {
        let (v, w) = (c + 2 * i, c + 2 * i + 1);
        for j in i * (k + 2)..(i + 1) * (k + 2) {
            edges.push((v, j));
            edges.push((w, j));
        }
    }
    Ok(FamilyInstance {
        graph: Graph::from_edges(n, edges)?,
        outer_order: None,
        family: "planar-ub-b",
        n,
        k,
        h,
        claimed_upper_bound: Rational::new((k as i64 + 2) * n as i64, k as i64 + 4) + 2,
        fillers: Vec::new(),
    })
}

/// 4-regular planar graph with an independent dominating set of about `n/2`.
///
/// A tube of 4-cycles joined ring to ring, each end closed by a hub. For
/// `n % 4 == 0` two extra vertices are inserted into quadrilateral faces;
/// `n = 8` is the square antiprism.
pub fn gen_greedy_adversary(n: usize) -> Result<FamilyInstance> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::ParamsTooSmall(format!("n = {n} must be even and at least 6")));
    }
    let edges = if n == 8 {
        let mut e = Vec::new();
        for j in 0..4 {
            e.push((j, (j + 1) % 4));
            e.push((4 + j, 4 + (j + 1) % 4));
            e.push((j, 4 + j));
            e.push((j, 4 + (j + 1) % 4));
        }
        e
    } else {
        let base = if n % 4 == 2 { n } else { n - 2 };
        let b = (base - 2) / 4;
        let id = |r: usize, j: usize| 4 * r + j;
        let mut e = Vec::new();
        for r in 0..b {
            for j in 0..4 {
                e.push((id(r, j), id(r, (j + 1) % 4)));
                if r + 1 < b {
                    e.push((id(r, j), id(r + 1, j)));
                }
            }
        }
        let (top, bottom) = (4 * b, 4 * b + 1);
        for j in 0..4 {
            e.push((top, id(0, j)));
            e.push((bottom, id(b - 1, j)));
        }
        if base < n {
            // Split two ring edges of one quadrilateral face and join both ends to a new vertex.
            let r = b / 2 - 1;
            for (x, j) in [(base, 0), (base + 1, 2)] {
                let quad = [id(r, j), id(r, j + 1), id(r + 1, j), id(r + 1, j + 1)];
                e.retain(|&(p, q)| {
                    let key = (p.min(q), p.max(q));
                    key != (quad[0], quad[1]) && key != (quad[2], quad[3])
                });
                e.extend(quad.iter().map(|&y| (x, y)));
            }
        }
        e
    };
    Ok(FamilyInstance {
        graph: Graph::from_edges(n, edges)?,
        outer_order: None,
        family: "greedy-adv",
        n,
        k: 3,
        h: 0,
        claimed_upper_bound: Rational::from_integer(n as i64),
        fillers: Vec::new(),
    })
}

/// Fans glued edge to edge: each block is a fan on `h` vertices drawn from
/// `sizes` whose hub sits at a random interior position, attached along a
/// random outer edge of the graph built so far.
pub fn random_glued_fans(blocks: usize, sizes: &[usize], seed: u64) -> Result<OuterplaneGraph> {
    if blocks == 0 || sizes.is_empty() || sizes.iter().any(|&h| h < 3) {
        return Err(Error::ParamsTooSmall("need at least one block of three or more vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cycle = vec![0usize, 1];
    let mut edges = vec![(0usize, 1usize)];
    let mut n = 2;
    for _ in 0..blocks {
        let h = *sizes.choose(&mut rng).expect("nonempty");
        let hub = rng.gen_range(1..h - 1);
        let i = rng.gen_range(0..cycle.len());
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let ids: Vec<usize> = std::iter::once(a).chain(n..n + h - 2).chain(std::iter::once(b)).collect();
        n += h - 2;
        edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
        edges.extend((0..h).filter(|&j| j + 1 != hub && j != hub && j != hub + 1).map(|j| (ids[hub], ids[j])));
        cycle.splice(i + 1..i + 1, ids[1..h - 1].iter().copied());
    }
    let g = Graph::from_edges_dedup(n, edges)?;
    OuterplaneGraph::from_graph(&g, &cycle)
}

/// Uniform triangulation of the convex `n`-gon from a uniform full binary tree.
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Result<OuterplaneGraph> {
    if n < 3 {
        return Err(Error::TooSmall { n, need: 3 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Remy growth; node 0 starts as the lone leaf.
    let m = n - 2;
    let mut left = vec![usize::MAX; 2 * m + 1];
    let mut right = vec![usize::MAX; 2 * m + 1];
    let mut parent = vec![usize::MAX; 2 * m + 1];
    let mut root = 0;
    let mut count = 1;
    for _ in 0..m {
        let x = rng.gen_range(0..count);
        let (inner, leaf) = (count, count + 1);
        count += 2;
        let p = parent[x];
        if p == usize::MAX {
            root = inner;
        } else if left[p] == x {
            left[p] = inner;
        } else {
            right[p] = inner;
        }
        parent[inner] = p;
        if rng.gen_bool(0.5) {
            (left[inner], right[inner]) = (x, leaf);
        } else {
            (left[inner], right[inner]) = (leaf, x);
        }
        parent[x] = inner;
        parent[leaf] = inner;
    }
    let mut leaves = vec![0usize; count];
    let mut post = Vec::with_capacity(count);
    let mut stack = vec![(root, false)];
    while let Some((x, done)) = stack.pop() {
        if left[x] == usize::MAX {
            leaves[x] = 1;
        } else if done {
            leaves[x] = leaves[left[x]] + leaves[right[x]];
            post.push(x);
        } else {
            stack.push((x, true));
            stack.push((left[x], false));
            stack.push((right[x], false));
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    let mut stack = vec![(root, 0usize, n - 1)];
    while let Some((x, a, b)) = stack.pop() {
        if left[x] == usize::MAX {
            continue;
        }
        let w = a + leaves[left[x]];
        if w - a >= 2 {
            edges.push((a, w));
        }
        if b - w >= 2 {
            edges.push((w, b));
        }
        stack.push((left[x], a, w));
        stack.push((right[x], w, b));
    }
    let g = Graph::from_edges(n, edges)?;
    OuterplaneGraph::from_graph(&g, &(0..n).collect::<Vec<_>>())
}

/// Maximal outerpath grown by a left/right coin walk, then rotated at random.
pub fn random_maximal_outerpath(n: usize, seed: u64) -> Result<OuterplaneGraph> {
    if n < 3 {
        return Err(Error::TooSmall { n, need: 3 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    let (mut l, mut r) = (0, n - 1);
    while r > l + 2 {
        if rng.gen_bool(0.5) {
            l += 1;
        } else {
            r -= 1;
        }
        edges.push((l, r));
    }
    let shift = rng.gen_range(0..n);
    let g = Graph::from_edges(n, edges.into_iter().map(|(a, b)| ((a + shift) % n, (b + shift) % n)))?;
    OuterplaneGraph::from_graph(&g, &(0..n).collect::<Vec<_>>())
}

/// Random Apollonian network: repeatedly stack a vertex into a random face of K4.
pub fn random_planar_triangulation(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 {
        return Err(Error::TooSmall { n, need: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut faces = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [a, c, v], [b, c, v]]);
    }
    Graph::from_edges(n, edges)
}

/// Connected simple `r`-regular graph from the pairing model with rejection.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if r >= n || (n * r) % 2 == 1 {
        return Err(Error::ParamsTooSmall(format!("no {r}-regular graph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let mut points: Vec<usize> = (0..n * r).map(|p| p / r).collect();
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::from_edges(n, pairs) {
            if g.components().len() == 1 {
                return Ok(g);
            }
        }
    }
    Err(Error::BudgetExhausted)
}

/// Replaces every edge by a path of length two; new vertices follow the edge order.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .enumerate()
        .flat_map(|(i, (a, b))| [(a, n + i), (b, n + i)])
        .collect();
    Graph::from_edges(n + g.m(), edges).expect("subdivisions are simple")
}
