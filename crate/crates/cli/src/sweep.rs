//! Batch experiments driven by a TOML config, written as CSV.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use kstable::certificate::{format_ratio, Certificate, Rational};
use kstable::greedy::{GreedyOptions, Strategy};
use kstable::oracle::{exact_max_kstable, Budget};

use crate::ops::{self, Alg, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepAlg {
    Outerpath,
    Outerplanar,
    GreedyPlain,
    GreedyDomset,
    GreedyBest,
    Exact,
}

impl SweepAlg {
    pub fn name(self) -> &'static str {
        match self {
            SweepAlg::Outerpath => "outerpath",
            SweepAlg::Outerplanar => "outerplanar",
            SweepAlg::GreedyPlain => "greedy-plain",
            SweepAlg::GreedyDomset => "greedy-domset",
            SweepAlg::GreedyBest => "greedy-best",
            SweepAlg::Exact => "exact",
        }
    }

    fn split(self) -> (Alg, Strategy) {
        match self {
            SweepAlg::Outerpath => (Alg::Outerpath, Strategy::Best),
            SweepAlg::Outerplanar => (Alg::Outerplanar, Strategy::Best),
            SweepAlg::GreedyPlain => (Alg::Greedy, Strategy::Plain),
            SweepAlg::GreedyDomset => (Alg::Greedy, Strategy::DominatingSet),
            SweepAlg::GreedyBest => (Alg::Greedy, Strategy::Best),
            SweepAlg::Exact => (Alg::Exact, Strategy::Best),
        }
    }
}

fn default_instances() -> usize {
    1
}

fn default_oracle_max_n() -> usize {
    40
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub family: Family,
    pub n: Vec<usize>,
    pub k: Vec<usize>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_instances")]
    pub instances: usize,
    pub algorithms: Vec<SweepAlg>,
    #[serde(default)]
    pub oracle: bool,
    #[serde(default = "default_oracle_max_n")]
    pub oracle_max_n: usize,
    /// Off by default so the CSV is byte-identical across runs.
    #[serde(default)]
    pub timing: bool,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub cert_dir: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = toml::from_str(text).map_err(|e| {
            let at = e.span().map(|s| line_col(text, s.start)).map(|(l, c)| format!(" at line {l}, column {c}"));
            anyhow::anyhow!("invalid config{}: {}", at.unwrap_or_default(), e.message())
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_toml(&text).with_context(|| format!("in {}", path.display()))
    }

    /// Field-level checks serde cannot express.
    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        if self.algorithms.is_empty() {
            problems.push("algorithms: must list at least one algorithm".to_string());
        }
        if let Some(&k) = self.k.iter().find(|&&k| k < 3) {
            problems.push(format!("k: value {k} is below 3"));
        }
        if let Some(&n) = self.n.iter().find(|&&n| n < 3) {
            problems.push(format!("n: value {n} is below 3"));
        }
        for a in &self.algorithms {
            let needs = match a {
                SweepAlg::Outerpath => self.family.outerpath(),
                SweepAlg::Outerplanar => self.family.outerplanar(),
                _ => true,
            };
            if !needs {
                problems.push(format!("algorithms: {} does not apply to family {}", a.name(), self.family));
            }
        }
        if self.algorithms.contains(&SweepAlg::GreedyDomset) {
            if let Some(&k) = self.k.iter().find(|&&k| k > 4) {
                problems.push(format!("algorithms: greedy-domset needs k of 3 or 4, got {k}"));
            }
        }
        if !self.family.random() && self.instances > 1 {
            problems.push(format!("instances: family {} is deterministic, use 1", self.family));
        }
        if problems.is_empty() {
            Ok(())
        } else {
            bail!("invalid config:\n  {}", problems.join("\n  "))
        }
    }

    /// Seed of instance `i`, derived from the master seed.
    pub fn instance_seed(&self, i: usize) -> u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(i as u64);
        rng.next_u64()
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, col)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultRow {
    pub instance: String,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub algorithm: String,
    pub achieved: usize,
    pub guaranteed: String,
    pub ratio: String,
    pub oracle: Option<usize>,
    pub runtime_ms: Option<u64>,
}

pub const HEADER: [&str; 11] =
    ["instance", "family", "n", "m", "k", "algorithm", "achieved", "guaranteed", "ratio", "oracle", "runtime_ms"];

struct Job {
    n: usize,
    k: usize,
    i: usize,
}

/// Result of one sweep: per-run rows, and certificates keyed by instance label.
pub struct SweepOutput {
    pub rows: Vec<ResultRow>,
    pub certificates: Vec<(String, Certificate)>,
}

fn ratio_str(r: Rational) -> String {
    format!("{:.6}", *r.numer() as f64 / *r.denom() as f64)
}

fn run_job(cfg: &ExperimentConfig, job: &Job) -> Result<Vec<(ResultRow, Certificate)>> {
    let seed = cfg.instance_seed(job.i);
    let file = ops::generate(cfg.family, job.n, job.k, seed)?;
    let g = file.graph()?;
    let label = format!("{}-n{}-k{}-i{}", cfg.family, job.n, job.k, job.i);
    let oracle = (cfg.oracle && g.n() <= cfg.oracle_max_n)
        .then(|| {
            let (set, stats) = exact_max_kstable(&g, job.k, Budget::default());
            stats.proven_optimal.then_some(set.len())
        })
        .flatten();
    let mut out = Vec::new();
    for &a in &cfg.algorithms {
        let (alg, strategy) = a.split();
        let start = Instant::now();
        let opts = GreedyOptions { strategy, ..Default::default() };
        let (cert, _) = ops::solve(&file, alg, job.k, &opts).with_context(|| format!("{label} with {}", a.name()))?;
        let runtime_ms = cfg.timing.then(|| start.elapsed().as_millis() as u64);
        out.push((
            ResultRow {
                instance: label.clone(),
                family: cfg.family.to_string(),
                n: g.n(),
                m: g.m(),
                k: job.k,
                algorithm: a.name().to_string(),
                achieved: cert.achieved_size,
                guaranteed: format_ratio(cert.guaranteed_size),
                ratio: ratio_str(cert.ratio(g.n())),
                oracle,
                runtime_ms,
            },
            cert,
        ));
    }
    Ok(out)
}

/// Runs every (n, k, instance, algorithm) combination in parallel, in config order.
pub fn run(cfg: &ExperimentConfig) -> Result<SweepOutput> {
    let jobs: Vec<Job> = cfg
        .n
        .iter()
        .flat_map(|&n| cfg.k.iter().flat_map(move |&k| (0..cfg.instances).map(move |i| Job { n, k, i })))
        .collect();
    let results: Vec<Vec<(ResultRow, Certificate)>> =
        jobs.par_iter().map(|j| run_job(cfg, j)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut certificates = Vec::new();
    for (row, cert) in results.into_iter().flatten() {
        certificates.push((format!("{}-{}", row.instance, row.algorithm), cert));
        rows.push(row);
    }
    Ok(SweepOutput { rows, certificates })
}

/// Minimum achieved/n per (family, k, algorithm), as summary rows.
pub fn summary(rows: &[ResultRow]) -> Vec<ResultRow> {
    let mut best: BTreeMap<(String, usize, String), (Rational, &ResultRow)> = BTreeMap::new();
    for r in rows {
        let q = if r.n == 0 { Rational::from_integer(1) } else { Rational::new(r.achieved as i64, r.n as i64) };
        let key = (r.family.clone(), r.k, r.algorithm.clone());
        if best.get(&key).is_none_or(|(b, _)| q < *b) {
            best.insert(key, (q, r));
        }
    }
    best.into_iter()
        .map(|((family, k, algorithm), (q, r))| ResultRow {
            instance: "min-ratio".into(),
            family,
            n: r.n,
            m: r.m,
            k,
            algorithm,
            achieved: r.achieved,
            guaranteed: r.guaranteed.clone(),
            ratio: ratio_str(q),
            oracle: r.oracle,
            runtime_ms: None,
        })
        .collect()
}

/// CSV with header, per-run rows, then summary rows.
pub fn write_csv<W: Write>(w: W, rows: &[ResultRow]) -> Result<()> {
    let mut wr = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    wr.write_record(HEADER)?;
    for r in rows.iter().chain(summary(rows).iter()) {
        wr.serialize(r)?;
    }
    wr.flush()?;
    Ok(())
}

/// Writes every certificate as `<dir>/<label>.json`.
pub fn write_certificates(dir: &Path, certs: &[(String, Certificate)]) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (label, c) in certs {
        let path = dir.join(format!("{label}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(c)?).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
