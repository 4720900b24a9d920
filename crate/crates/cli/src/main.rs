//! `isogame`: command-line driver for the isolation game experiments.
//!
//! Exit status: 0 when every assertion holds, 1 when one fails, 2 on
//! usage or input errors. Conjecture findings never change the status.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use isogame_core::graph::{graph6_encode, FCatalog};
use isogame_core::verify::{self, Report, RunConfig, Source, MAX_SWEEP_ORDER};
use isogame_core::Player;

#[derive(Parser)]
#[command(name = "isogame", version, about = "Exact solver and verification experiments for the isolation game")]
struct Cli {
    /// Worker threads (0 uses every core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest order for sweeps and formula ranges.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Catalog of F7..F11 in graph6 (defaults to the bundled copy).
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle values against the closed forms.
    VerifyCycles {
        #[arg(long, default_value_t = 4)]
        min_n: usize,
    },
    /// Path values against the closed forms and the earlier bracket.
    VerifyPaths {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
    },
    /// Connected graphs whose Dominator-start value is half their order.
    ExtremalD,
    /// Connected graphs whose Staller-start value is half their order.
    ExtremalS {
        /// Write the derived F7..F11 catalog here.
        #[arg(long)]
        catalog_out: Option<PathBuf>,
    },
    /// Every tree: the 5/11 bound and the residual strategy audit.
    VerifyTrees {
        /// Allow orders above 8.
        #[arg(long)]
        long: bool,
    },
    /// Graphs with two triangles attached to every vertex of a base.
    VerifyGhat {
        /// Base graph specs.
        #[arg(long = "base", default_values_t = ["complete:1".to_string(), "path:2".into(), "path:3".into(), "complete:3".into(), "path:4".into()])]
        bases: Vec<String>,
    },
    /// Conjectured bounds on generated or supplied graphs.
    Fuzz {
        /// Generator spec or graph6 file.
        #[arg(long, default_value = "random:4-16:2")]
        source: String,
        /// Instances drawn from random sources.
        #[arg(long, default_value_t = 1000)]
        count: usize,
    },
    /// Game values and isolation number of every input graph.
    Solve {
        /// Generator spec or graph6 file.
        input: String,
        /// Attach the principal line for this starting player only.
        #[arg(long)]
        first: Option<Player>,
        /// Attach principal lines.
        #[arg(long)]
        traces: bool,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Play against the solver on standard input.
    Play {
        /// Generator spec of a single graph.
        graph: String,
        #[arg(long, default_value = "staller")]
        human: Player,
        /// Starting player (defaults to the human).
        #[arg(long)]
        first: Option<Player>,
    },
    /// Print the graphs of a generator spec in graph6.
    Enumerate {
        spec: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Recompute every record of a saved JSON report.
    Recertify { report: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing output"),
    }
}

fn emit_report(cli: &Cli, r: &Report) -> Result<bool> {
    let text = match cli.format {
        Format::Json => r.to_json() + "\n",
        Format::Csv => r.to_csv(),
        Format::Text => r.to_text(),
    };
    emit(cli, &text)?;
    let s = &r.summary;
    eprintln!(
        "{}: {} records, {} passed, {} failed, {} skipped, {} findings",
        r.experiment,
        s.records,
        s.passed,
        s.failed,
        s.skipped,
        s.findings.len()
    );
    for a in s.assertions.iter().filter(|a| !a.holds) {
        eprintln!("assertion failed: {}: {}", a.name, a.detail);
    }
    Ok(r.passed())
}

fn sweep_order(cli: &Cli, long: bool, hi: usize) -> Result<usize> {
    let n = cli.max_n.unwrap_or(MAX_SWEEP_ORDER);
    if n > MAX_SWEEP_ORDER && !long {
        bail!("--max-n above {MAX_SWEEP_ORDER} needs --long");
    }
    if n > hi {
        bail!("--max-n {n} exceeds {hi}");
    }
    Ok(n)
}

fn run(cli: Cli) -> Result<bool> {
    let catalog = match &cli.catalog {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Some(FCatalog::parse(&text)?)
        }
        None => FCatalog::try_bundled().ok(),
    };
    let cfg = RunConfig { jobs: cli.jobs, seed: cli.seed, catalog, traces: false };
    match &cli.command {
        Command::VerifyCycles { min_n } => {
            emit_report(&cli, &verify::verify_cycles(*min_n, cli.max_n.unwrap_or(22), &cfg)?)
        }
        Command::VerifyPaths { min_n } => {
            emit_report(&cli, &verify::verify_paths(*min_n, cli.max_n.unwrap_or(22), &cfg)?)
        }
        Command::ExtremalD => emit_report(&cli, &verify::extremal_d(sweep_order(&cli, false, MAX_SWEEP_ORDER)?, &cfg)?),
        Command::ExtremalS { catalog_out } => {
            let (report, derived) = verify::extremal_s(sweep_order(&cli, false, MAX_SWEEP_ORDER)?, &cfg)?;
            let ok = emit_report(&cli, &report)?;
            if let Some(p) = catalog_out {
                let c = derived.ok_or_else(|| anyhow!("no catalog derived; the sweep must reach order 8 and find 11 graphs"))?;
                fs::write(p, c.to_text()).with_context(|| format!("writing {}", p.display()))?;
            }
            Ok(ok)
        }
        Command::VerifyTrees { long } => emit_report(&cli, &verify::verify_trees(sweep_order(&cli, *long, 15)?, &cfg)?),
        Command::VerifyGhat { bases } => {
            let bases = bases.iter().map(|b| Source::parse(b)).collect::<Result<Vec<_>, _>>()?;
            emit_report(&cli, &verify::verify_ghat(&bases, &cfg)?)
        }
        Command::Fuzz { source, count } => emit_report(&cli, &verify::fuzz(&Source::parse(source)?, *count, &cfg)?),
        Command::Solve { input, first, traces, count } => {
            let cfg = RunConfig { traces: *traces || first.is_some(), ..cfg };
            emit_report(&cli, &verify::solve(&Source::parse(input)?, *count, *first, &cfg)?)
        }
        Command::Play { graph, human, first } => {
            let src = Source::parse(graph)?;
            if !src.is_single() {
                bail!("{graph} names a family; play needs one graph");
            }
            let inst = src.instances(1, cli.seed, cfg.catalog.as_ref())?.remove(0);
            let g = inst.graph.map_err(|e| anyhow!(e))?;
            let stdin = io::stdin();
            verify::play_session(&g, *human, first.unwrap_or(*human), stdin.lock(), io::stdout())?;
            Ok(true)
        }
        Command::Enumerate { spec, count } => {
            let mut text = String::new();
            for inst in Source::parse(spec)?.instances(*count, cli.seed, cfg.catalog.as_ref())? {
                let g = inst.graph.map_err(|e| anyhow!("{}: {e}", inst.source))?;
                text.push_str(&graph6_encode(&g));
                text.push('\n');
            }
            emit(&cli, &text)?;
            Ok(true)
        }
        Command::Recertify { report } => {
            let text = fs::read_to_string(report).with_context(|| format!("reading {}", report.display()))?;
            let r = Report::from_json(&text)?;
            match r.recertify() {
                Ok(()) => {
                    eprintln!("{}: all {} records reproduce", r.experiment, r.records.len());
                    Ok(true)
                }
                Err(errs) => {
                    for e in &errs {
                        eprintln!("{e}");
                    }
                    Ok(false)
                }
            }
        }
    }
}
