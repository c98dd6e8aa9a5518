//! JSON edge-list files and DOT export.
//!
//! A graph file is a single JSON object with fields in this order:
//!
//! ```text
//! {"n":4,"edges":[[0,1],[0,2],[1,2],[2,3]],"outer_order":[0,1,2,3],"chords":[[0,2]],"meta":{}}
//! ```
//!
//! `edges` is sorted with `u < v` in every pair. `outer_order` and `chords` are
//! present only for outerplane graphs. `meta` is a free-form object.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::outerplane::OuterplaneGraph;

/// On-disk form of a graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_order: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chords: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub meta: Map<String, Value>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().collect(),
            outer_order: None,
            chords: None,
            meta: Map::new(),
        }
    }

    /// Stores the graph under its original labels, with the outer order and chords.
    pub fn from_outerplane(og: &OuterplaneGraph) -> Result<Self> {
        let g = og.labeled_graph()?;
        let mut f = GraphFile::from_graph(&g);
        f.outer_order = Some(og.labels().to_vec());
        f.chords = Some(og.labeled_chords());
        Ok(f)
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.meta.insert(key.to_string(), value.into());
        self
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }

    /// The outerplane graph described by `outer_order`, if any.
    pub fn outerplane(&self) -> Result<Option<OuterplaneGraph>> {
        match &self.outer_order {
            None => Ok(None),
            Some(order) => OuterplaneGraph::from_graph(&self.graph()?, order).map(Some),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph files always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: GraphFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        f.graph()?;
        Ok(f)
    }
}

/// DOT text for `g`; members of `highlight` are filled.
///
/// ```text
/// graph G {
///   0 [style=filled];
///   1;
///   0 -- 1;
/// }
/// ```
pub fn to_dot(g: &Graph, highlight: Option<&VertexSet>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        if highlight.is_some_and(|h| h.contains(v)) {
            s.push_str(&format!("  {v} [style=filled];\n"));
        } else {
            s.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}
