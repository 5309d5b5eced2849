use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use kempe_recon::certify::{certify_instance, parse_instance, Failure, InstanceFormat, Report};
use kempe_recon::graph::{degeneracy, read_dimacs};
use kempe_recon::instance::write_normalized;
use kempe_recon::oracle::fixtures::TOY_CTT;
use kempe_recon::oracle::{
    block_order_enumerate, build_reconfig_graph, connectivity, enumerate_colorings, toy_blocks, Caps, Relation,
};
use kempe_recon::reconfig::{kempe_reconfigure, read_plan, replay, verify_plan, write_plan};
use kempe_recon::reduction::{fixed_set, reduce_instance, write_reduced};
use kempe_recon::subdeg::subdeg_ub;
use kempe_recon::{Color, Coloring, Graph, UtpInstance, VertexOrdering};

#[derive(Parser)]
#[command(name = "kempe-recon", version, about = "Kempe-exchange connectedness certificates for timetabling instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Cctt,
    TimItc,
    TimMn,
    Utp,
    Auto,
}

impl From<Format> for InstanceFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Cctt => InstanceFormat::Cctt,
            Format::TimItc => InstanceFormat::TimItc,
            Format::TimMn => InstanceFormat::TimMn,
            Format::Utp => InstanceFormat::Normalized,
            Format::Auto => InstanceFormat::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationArg {
    Kempe,
    Elementary,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingArg {
    /// Degeneracy witness ordering.
    Degeneracy,
    /// Vertices in id order.
    Identity,
}

#[derive(Subcommand)]
enum Command {
    /// Certify connectedness for a batch of instance files.
    Certify {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        #[arg(long, value_enum, default_value = "csv")]
        report: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_timestamp: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Build a Kempe-exchange plan between two colorings of a DIMACS graph.
    Reconfigure {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(short, long)]
        k: Color,
        #[arg(long, value_enum, default_value = "degeneracy")]
        ordering: OrderingArg,
        /// File with a 1-based vertex ordering, overriding --ordering.
        #[arg(long)]
        ordering_file: Option<PathBuf>,
        /// Drop adjacent cancelling exchanges.
        #[arg(long)]
        compact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a plan to a coloring and print the result.
    Replay {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        plan: PathBuf,
        /// Print every intermediate coloring.
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustive reconfiguration-graph statistics for a tiny graph.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short, long)]
        k: Color,
        /// One line of allowed colors per vertex.
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "kempe")]
        relation: RelationArg,
        /// Write `<prefix>.col` and `<prefix>.nodes`.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Dump the reduced graph of an instance.
    Reduce {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        /// Also print the fixed set and the subdegeneracy bound.
        #[arg(long)]
        subdeg: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rewrite an instance in the normalized text format.
    Normalize {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate block orders on the built-in toy instance.
    ToyProof {
        /// Print all orders, not only those ending with G.
        #[arg(long)]
        all: bool,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    read_dimacs(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn parse_numbers(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split_ascii_whitespace()
        .map(|t| t.parse().with_context(|| format!("{what}: `{t}` is not a number")))
        .collect()
}

fn load_coloring(path: &Path, palette: Color) -> Result<Coloring> {
    let colors = parse_numbers(&read(path)?, &path.display().to_string())?;
    Ok(Coloring::new(colors.into_iter().map(|c| c as Color).collect(), palette)?)
}

fn load_instance(path: &Path, format: Format) -> Result<UtpInstance> {
    let text = read(path)?;
    let ext = path.extension().and_then(|e| e.to_str());
    parse_instance(&text, format.into(), ext).with_context(|| format!("{}", path.display()))
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn certify(
    paths: &[PathBuf],
    format: Format,
    report: ReportFormat,
    out: Option<&Path>,
    no_timestamp: bool,
    jobs: Option<usize>,
) -> Result<ExitCode> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build()?;
    let results: Vec<Result<_, Failure>> = pool.install(|| {
        paths
            .par_iter()
            .map(|path| {
                let fail = |e: anyhow::Error| Failure {
                    source: path.display().to_string(),
                    message: format!("{e:#}"),
                };
                let inst = load_instance(path, format).map_err(fail)?;
                certify_instance(&stem(path), &inst).map_err(|e| fail(e.into()))
            })
            .collect()
    });
    let timestamp = (!no_timestamp).then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    let mut rep = Report::new(env!("CARGO_PKG_VERSION"), timestamp);
    for r in results {
        match r {
            Ok(record) => rep.records.push(record),
            Err(failure) => {
                eprintln!("error: {}: {}", failure.source, failure.message);
                rep.failures.push(failure);
            }
        }
    }
    let text = match report {
        ReportFormat::Csv => rep.to_csv(),
        ReportFormat::Md => rep.to_markdown(),
    };
    emit(out, &text)?;
    Ok(if rep.failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Certify {
            paths,
            format,
            report,
            out,
            no_timestamp,
            jobs,
        } => return certify(&paths, format, report, out.as_deref(), no_timestamp, jobs),
        Command::Reconfigure {
            graph,
            from,
            to,
            k,
            ordering,
            ordering_file,
            compact,
            out,
        } => {
            let g = load_graph(&graph)?;
            let (c1, c2) = (load_coloring(&from, k)?, load_coloring(&to, k)?);
            let sigma = match ordering_file {
                Some(path) => {
                    let ids = parse_numbers(&read(&path)?, "ordering")?;
                    if ids.contains(&0) {
                        bail!("ordering ids are 1-based");
                    }
                    VertexOrdering::new(ids.into_iter().map(|v| v - 1).collect(), g.vertex_count())?
                }
                None => match ordering {
                    OrderingArg::Degeneracy => degeneracy(&g).1,
                    OrderingArg::Identity => VertexOrdering::identity(g.vertex_count()),
                },
            };
            let plan = kempe_reconfigure(&g, &sigma, &c1, &c2, k)?;
            let exchanges = if compact { plan.compacted() } else { plan.exchanges().to_vec() };
            let verdict = verify_plan(&g, &c1, &c2, &exchanges, None);
            if !verdict.passed() {
                bail!("generated plan failed verification: {verdict:?}");
            }
            eprintln!(
                "{} exchanges ({} corrective), {} colors used",
                exchanges.len(),
                plan.corrections().count(),
                verdict.colors_used
            );
            emit(out.as_deref(), &write_plan(k, &exchanges))?;
        }
        Command::Replay {
            graph,
            coloring,
            plan,
            trace,
        } => {
            let g = load_graph(&graph)?;
            let (k, exchanges) = read_plan(&read(&plan)?).with_context(|| format!("{}", plan.display()))?;
            let start = load_coloring(&coloring, k)?;
            let run = replay(&g, &start, &exchanges)?;
            if trace {
                for c in &run.trace {
                    println!("{c}");
                }
            } else {
                println!("{}", run.final_coloring);
            }
        }
        Command::Oracle {
            graph,
            k,
            lists,
            relation,
            export,
        } => {
            let g = load_graph(&graph)?;
            let lists = match lists {
                Some(path) => {
                    let text = read(&path)?;
                    let parsed: Result<Vec<Vec<Color>>> = text
                        .lines()
                        .filter(|l| !l.trim().is_empty())
                        .map(|l| Ok(parse_numbers(l, "lists")?.into_iter().map(|c| c as Color).collect()))
                        .collect();
                    Some(parsed?)
                }
                None => None,
            };
            let caps = Caps::from_env()?;
            let nodes = enumerate_colorings(&g, k, lists.as_deref(), &caps)?;
            let relation = match relation {
                RelationArg::Kempe => Relation::Kempe,
                RelationArg::Elementary => Relation::Elementary,
            };
            let rg = build_reconfig_graph(&g, &nodes, relation);
            let stats = connectivity(&rg);
            println!("colorings {}", rg.node_count());
            println!("edges {}", rg.edge_count());
            println!("connected {}", stats.connected);
            println!("components {}", stats.components);
            match stats.diameter {
                Some(d) => println!("diameter {d}"),
                None => println!("diameter infinite"),
            }
            if let Some(prefix) = export {
                fs::write(prefix.with_extension("col"), rg.to_dimacs())?;
                fs::write(prefix.with_extension("nodes"), rg.manifest())?;
            }
        }
        Command::Reduce {
            path,
            format,
            subdeg,
            out,
        } => {
            let inst = load_instance(&path, format)?;
            let reduced = reduce_instance(&inst)?;
            let mut text = write_reduced(&reduced);
            if subdeg {
                let fixed = fixed_set(&reduced);
                let ids: Vec<String> = fixed.members().iter().map(|v| (v + 1).to_string()).collect();
                text.push_str(&format!("c fixed {}\n", ids.join(" ")));
                let result = subdeg_ub(reduced.graph(), fixed.as_set());
                for line in result.to_string().lines() {
                    text.push_str(&format!("c {line}\n"));
                }
            }
            emit(out.as_deref(), &text)?;
        }
        Command::Normalize { path, format, out } => {
            let inst = load_instance(&path, format)?;
            emit(out.as_deref(), &write_normalized(&inst))?;
        }
        Command::ToyProof { all } => {
            let inst = parse_instance(TOY_CTT, InstanceFormat::Cctt, None)?;
            let reduced = reduce_instance(&inst)?;
            let fixed = fixed_set(&reduced);
            let mut table = block_order_enumerate(&reduced, &toy_blocks(&inst), &fixed)?;
            if !all {
                let last = table.names.iter().position(|n| n == "G");
                table.rows.retain(|r| r.order.last().copied() == last);
            }
            print!("{table}");
            let result = subdeg_ub(reduced.graph(), fixed.as_set());
            println!("heuristic subdeg_ub {}", result.value);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
