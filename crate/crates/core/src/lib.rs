//! Large induced subgraphs of bounded degree.
//!
//! A *k-stable set* of a graph is a vertex set inducing a subgraph of maximum
//! degree at most `k`. This crate computes such sets with provable size
//! guarantees on outerpaths, outerplanar graphs and arbitrary graphs, builds
//! graph families on which no large k-stable set exists, and provides exact
//! branch-and-bound oracles to check both sides.
//!
//! Every solver returns a [`Certificate`]: the set, the size it is guaranteed
//! to reach as an exact rational, and the size it reached.

pub mod certificate;
pub mod error;
pub mod families;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod oracle;
pub mod outerpath;
pub mod outerplanar;
pub mod outerplane;

pub use certificate::{Algorithm, Certificate, Rational};
pub use error::{Error, Result};
pub use graph::{induced_subgraph, max_induced_degree, verify_kstable, Graph, VertexSet};
pub use outerplane::{OuterplaneGraph, SplitSubgraph, WeakDual};
