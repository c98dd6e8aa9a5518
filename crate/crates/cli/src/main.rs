use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use kstable::greedy::GreedyOptions;
use kstable::io::to_dot;
use kstable_cli::ops::{self, Alg, Family, OracleWhat, StrategyArg, TieBreakArg};
use kstable_cli::sweep::{self, ExperimentConfig};

/// Large induced subgraphs of bounded degree.
#[derive(Parser)]
#[command(name = "kstable", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a family member as a graph JSON file.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an algorithm and print its certificate.
    Solve {
        #[arg(long, value_enum)]
        alg: Alg,
        #[arg(long)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "best")]
        strategy: StrategyArg,
        #[arg(long, value_enum, default_value = "low")]
        tiebreak: TieBreakArg,
        /// Write the run trace here as JSON lines.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact maximum k-stable set or minimum dominating set.
    Oracle {
        #[arg(long, value_enum)]
        what: OracleWhat,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check a certificate or vertex list. Exit 0 valid, 1 not k-stable, 2 below guarantee, 3 malformed.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run a TOML-configured experiment and write CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a graph as Graphviz DOT, optionally highlighting a set.
    ExportDot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<u8> {
    match cmd {
        Cmd::Gen { family, n, k, seed, out } => {
            emit(out.as_ref(), &(ops::generate(family, n, k, seed)?.to_json() + "\n"))?;
        }
        Cmd::Solve { alg, k, input, strategy, tiebreak, trace, out } => {
            let file = ops::read_graph_file(&input)?;
            let opts = GreedyOptions { strategy: strategy.into(), tiebreak: tiebreak.into(), ..Default::default() };
            let (cert, lines) = ops::solve(&file, alg, k, &opts)?;
            if let Some(t) = &trace {
                std::fs::write(t, lines).with_context(|| format!("writing {}", t.display()))?;
            }
            emit(out.as_ref(), &(serde_json::to_string_pretty(&cert)? + "\n"))?;
        }
        Cmd::Oracle { what, k, input } => {
            let g = ops::read_graph_file(&input)?.graph()?;
            println!("{}", serde_json::to_string_pretty(&ops::oracle(&g, what, k)?)?);
        }
        Cmd::Verify { graph, set, k } => {
            let g = ops::read_graph_file(&graph)?.graph()?;
            let text = std::fs::read_to_string(&set).with_context(|| format!("reading {}", set.display()))?;
            let verdict = ops::verify(&g, &text, k)?;
            match &verdict {
                ops::Verdict::Valid => println!("ok"),
                ops::Verdict::NotStable(m) | ops::Verdict::BelowGuarantee(m) => eprintln!("invalid: {m}"),
            }
            return Ok(verdict.code() as u8);
        }
        Cmd::Sweep { config, out } => {
            let cfg = ExperimentConfig::load(&config)?;
            let res = sweep::run(&cfg)?;
            if let Some(dir) = &cfg.cert_dir {
                sweep::write_certificates(dir, &res.certificates)?;
            }
            let mut buf = Vec::new();
            sweep::write_csv(&mut buf, &res.rows)?;
            emit(out.as_ref().or(cfg.out.as_ref()), std::str::from_utf8(&buf)?)?;
        }
        Cmd::ExportDot { input, set, out } => {
            let g = ops::read_graph_file(&input)?.graph()?;
            let highlight = match &set {
                Some(p) => {
                    let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                    Some(ops::parse_set(&text)?)
                }
                None => None,
            };
            emit(out.as_ref(), &to_dot(&g, highlight.as_ref()))?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(3);
        }
        Err(e) => e.exit(),
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
