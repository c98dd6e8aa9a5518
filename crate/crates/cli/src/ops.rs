//! Single-instance operations behind `gen`, `solve`, `oracle` and `verify`.

use std::fmt;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use kstable::certificate::{Algorithm, Certificate, Rational, Violation};
use kstable::families;
use kstable::greedy::{self, GreedyOptions, Strategy, TieBreak};
use kstable::io::GraphFile;
use kstable::oracle::{exact_max_kstable, exact_min_dominating, Budget, SearchStats};
use kstable::{outerpath, outerplanar, Graph, OuterplaneGraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    OuterpathUb,
    PlanarUbA,
    PlanarUbB,
    GreedyAdv,
    RandMop,
    RandOuterpath,
    RandTri,
}

impl Family {
    /// Whether members carry an outer order.
    pub fn outerplanar(self) -> bool {
        matches!(self, Family::OuterpathUb | Family::RandMop | Family::RandOuterpath)
    }

    pub fn outerpath(self) -> bool {
        matches!(self, Family::OuterpathUb | Family::RandOuterpath)
    }

    pub fn random(self) -> bool {
        matches!(self, Family::RandMop | Family::RandOuterpath | Family::RandTri)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// Builds one family member; `k` is ignored by families that do not use it.
pub fn generate(family: Family, n: usize, k: usize, seed: u64) -> Result<GraphFile> {
    let file = match family {
        Family::OuterpathUb => families::gen_outerpath_ub(n, k)?.to_file(),
        Family::PlanarUbA => families::gen_planar_ub_a(n, k)?.to_file(),
        Family::PlanarUbB => families::gen_planar_ub_b(n, k)?.to_file(),
        Family::GreedyAdv => families::gen_greedy_adversary(n)?.to_file(),
        Family::RandMop => GraphFile::from_outerplane(&families::random_maximal_outerplanar(n, seed)?)?,
        Family::RandOuterpath => GraphFile::from_outerplane(&families::random_maximal_outerpath(n, seed)?)?,
        Family::RandTri => GraphFile::from_graph(&families::random_planar_triangulation(n, seed)?),
    };
    let file = file.with_meta("family", family.to_string());
    Ok(if family.random() { file.with_meta("seed", seed) } else { file })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Alg {
    Outerpath,
    Outerplanar,
    Greedy,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Plain,
    Domset,
    Best,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Plain => Strategy::Plain,
            StrategyArg::Domset => Strategy::DominatingSet,
            StrategyArg::Best => Strategy::Best,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TieBreakArg {
    Low,
    Adversarial,
}

impl From<TieBreakArg> for TieBreak {
    fn from(t: TieBreakArg) -> Self {
        match t {
            TieBreakArg::Low => TieBreak::Low,
            TieBreakArg::Adversarial => TieBreak::Adversarial,
        }
    }
}

pub fn read_graph_file(path: &std::path::Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    GraphFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

/// The maximal outerplanar completion along the file's outer order.
pub fn outerplane_of(file: &GraphFile) -> Result<OuterplaneGraph> {
    let order = file.outer_order.as_ref().context("this algorithm needs an outer_order in the graph file")?;
    Ok(OuterplaneGraph::complete_to_maximal(&file.graph()?, order)?)
}

/// Maximum k-stable set as a certificate whose guarantee is its own size.
pub fn exact_certificate(g: &Graph, k: usize, budget: Budget) -> Result<(Certificate, SearchStats)> {
    let (set, stats) = exact_max_kstable(g, k, budget);
    stats.ensure_optimal()?;
    let size = Rational::from_integer(set.len() as i64);
    Ok((Certificate::new(g, k, set, Algorithm::ExactOracle, size)?, stats))
}

/// Runs one algorithm; returns the certificate and its trace as JSON lines.
pub fn solve(file: &GraphFile, alg: Alg, k: usize, opts: &GreedyOptions) -> Result<(Certificate, String)> {
    let g = file.graph()?;
    Ok(match alg {
        Alg::Outerpath => {
            let (c, t) = outerpath::solve_outerpath_traced(&outerplane_of(file)?, k)?;
            let lines = t.steps.iter().map(|s| serde_json::to_string(s).expect("plain struct") + "\n").collect();
            (c, lines)
        }
        Alg::Outerplanar => {
            let (c, t) = outerplanar::solve_outerplanar_traced(&outerplane_of(file)?, k)?;
            (c, t.to_json_lines())
        }
        Alg::Greedy => {
            let (c, t) = greedy::greedy_removal_with(&g, k, opts)?;
            (c, t.to_json_lines())
        }
        Alg::Exact => {
            let (c, stats) = exact_certificate(&g, k, Budget::default())?;
            (c, serde_json::to_string(&stats)? + "\n")
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleWhat {
    Kstable,
    Domset,
}

#[derive(Serialize)]
pub struct OracleOutput {
    pub set: VertexSet,
    pub stats: SearchStats,
}

pub fn oracle(g: &Graph, what: OracleWhat, k: usize) -> Result<OracleOutput> {
    let (set, stats) = match what {
        OracleWhat::Kstable => exact_max_kstable(g, k, Budget::default()),
        OracleWhat::Domset => exact_min_dominating(g, Budget::default())?,
    };
    Ok(OracleOutput { set, stats })
}

/// Exit codes of `verify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    NotStable(String),
    BelowGuarantee(String),
}

impl Verdict {
    pub fn code(&self) -> i32 {
        match self {
            Verdict::Valid => 0,
            Verdict::NotStable(_) => 1,
            Verdict::BelowGuarantee(_) => 2,
        }
    }
}

/// A set file holds either a certificate or a bare JSON array of vertices.
#[derive(Deserialize)]
#[serde(untagged)]
enum SetFile {
    Cert(Certificate),
    Bare(Vec<usize>),
}

/// The vertex set of a certificate or bare array.
pub fn parse_set(text: &str) -> Result<VertexSet> {
    Ok(match serde_json::from_str(text).context("set file is neither a certificate nor an array")? {
        SetFile::Cert(c) => c.set,
        SetFile::Bare(v) => v.into_iter().collect(),
    })
}

/// Checks a set against a graph; `k` overrides the certificate's own bound.
pub fn verify(g: &Graph, set_text: &str, k: Option<usize>) -> Result<Verdict> {
    let parsed: SetFile = serde_json::from_str(set_text).context("set file is neither a certificate nor an array")?;
    let cert = match parsed {
        SetFile::Cert(mut c) => {
            c.k = k.unwrap_or(c.k);
            c
        }
        SetFile::Bare(v) => {
            let Some(k) = k else { bail!("--k is required for a bare vertex list") };
            let set: VertexSet = v.into_iter().collect();
            let achieved_size = set.len();
            Certificate { k, set, algorithm: Algorithm::ExactOracle, guaranteed_size: Rational::from_integer(0), achieved_size }
        }
    };
    Ok(match cert.violation(g) {
        None => Verdict::Valid,
        Some(v @ Violation::BelowGuarantee { .. }) => Verdict::BelowGuarantee(format!("{v:?}")),
        Some(v) => Verdict::NotStable(format!("{v:?}")),
    })
}
