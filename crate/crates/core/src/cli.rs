//! The `nelson-forge` command line.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails or a
//! countermodel is found, 2 for usage and input errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::export::{hasse_dot, to_json_string, AlgebraJson};
use crate::logic::{
    countermodel_search, parse, SearchOptions, SearchOutcome, DEFAULT_VALUATION_CAP,
};
use crate::nelson::{is_semi_simple, NelsonAlgebra, PairElement};
use crate::relations::{
    enumerate_quasiorders_with, enumeration_bound, parse_relation, QuasiOrder, RelationFilter,
};
use crate::roughsets::{drs_construct, effectiveness_criteria, irs_direct};
use crate::suite::{check_algebra, check_relation, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "nelson-forge",
    version,
    about = "Rough-set Nelson algebras of finite quasiorders"
)]
pub struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rep {
    Irs,
    Drs,
}

#[derive(Debug, Args)]
pub struct RelationInput {
    /// Relation file: universe size on the first line, then `i j` pairs.
    pub relation: PathBuf,
    /// Complete the listed pairs to a quasiorder instead of rejecting them.
    #[arg(long)]
    pub closure: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the rough-set algebra of a relation and write it as JSON.
    Build {
        #[command(flatten)]
        input: RelationInput,
        #[arg(long, value_enum, default_value = "irs")]
        rep: Rep,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every structural check on a relation, or the axiom checks on a JSON algebra.
    Check {
        /// Relation file (omit with --algebra-json).
        relation: Option<PathBuf>,
        #[arg(long)]
        closure: bool,
        /// Check an algebra exported as JSON instead of a relation.
        #[arg(long, conflicts_with = "relation")]
        algebra_json: Option<PathBuf>,
        /// Seed for sampled checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Write the Hasse diagram of the rough-set algebra as Graphviz DOT.
    Hasse {
        #[command(flatten)]
        input: RelationInput,
        #[arg(long, value_enum, default_value = "irs")]
        rep: Rep,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search rough-set models for a countermodel to a formula.
    Validate {
        formula: String,
        /// Largest universe size searched.
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Only models whose closed points are cofinal.
        #[arg(long)]
        effective_only: bool,
        /// Evaluate T on non-effective models as well.
        #[arg(long)]
        force: bool,
        /// Valuations allowed per model.
        #[arg(long, default_value_t = DEFAULT_VALUATION_CAP)]
        cap: u64,
        /// Exit code used when a countermodel is found.
        #[arg(long, default_value_t = EXIT_FAILURE)]
        countermodel_exit: i32,
    },
    /// Count quasiorders of a given size and summarize their algebras.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Partial orders only.
        #[arg(long, conflicts_with_all = ["equivalences", "effective"])]
        posets: bool,
        /// Equivalence relations only.
        #[arg(long, conflicts_with = "effective")]
        equivalences: bool,
        /// Relations whose closed points are cofinal.
        #[arg(long)]
        effective: bool,
        /// One representative per isomorphism class.
        #[arg(long)]
        canonical: bool,
        /// List every relation with its carrier size.
        #[arg(long)]
        list: bool,
    },
}

fn load_relation(path: &Path, closure: bool, err: &mut (dyn Write + Send)) -> Result<QuasiOrder> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let loaded = parse_relation(&text, closure)?;
    if !loaded.added.is_empty() {
        let pairs: Vec<String> = loaded
            .added
            .iter()
            .map(|(i, j)| format!("({i}, {j})"))
            .collect();
        let _ = writeln!(err, "closure added {}", pairs.join(" "));
    }
    Ok(loaded.relation)
}

fn build(r: &QuasiOrder, rep: Rep) -> Result<NelsonAlgebra> {
    match rep {
        Rep::Irs => irs_direct(r),
        Rep::Drs => drs_construct(r),
    }
}

fn write_output(path: Option<&Path>, text: &str, out: &mut (dyn Write + Send)) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn pair_json(p: PairElement) -> serde_json::Value {
    json!([p.left.to_vec(), p.right.to_vec()])
}

fn run(cli: Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    let json = cli.json;
    match cli.command {
        Command::Build {
            input,
            rep,
            out: path,
        } => {
            let r = load_relation(&input.relation, input.closure, err)?;
            let a = build(&r, rep)?;
            let e = effectiveness_criteria(&r)?;
            let header = if json {
                serde_json::to_string(&json!({
                    "size": a.len(),
                    "effective": e.effective(),
                    "criteria": e,
                    "out": path.as_ref().map(|p| p.display().to_string()),
                }))? + "\n"
            } else {
                format!("elements: {}\neffective: {}\n", a.len(), e.effective())
            };
            let body = to_json_string(&a);
            match &path {
                Some(_) => {
                    write_output(path.as_deref(), &body, out)?;
                    out.write_all(header.as_bytes())?;
                }
                None => {
                    err.write_all(header.as_bytes())?;
                    out.write_all(body.as_bytes())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            relation,
            closure,
            algebra_json,
            seed,
        } => {
            if let Some(path) = algebra_json {
                let text = fs::read_to_string(&path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                let a: AlgebraJson = serde_json::from_str(&text)?;
                let a = a.to_algebra()?;
                let reports = check_algebra(&a);
                let passed = reports.iter().all(|r| r.passed());
                if json {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&json!({
                            "passed": passed,
                            "semi_simple": is_semi_simple(&a),
                            "effective": a.is_effective(),
                            "reports": reports,
                        }))?
                    )?;
                } else {
                    for r in &reports {
                        writeln!(out, "{r}")?;
                    }
                    writeln!(out, "semi-simple: {}", is_semi_simple(&a))?;
                    writeln!(out, "effective: {}", a.is_effective())?;
                }
                return Ok(if passed { EXIT_OK } else { EXIT_FAILURE });
            }
            let Some(path) = relation else {
                return Err(Error::Precondition(
                    "check needs a relation file or --algebra-json".into(),
                ));
            };
            let r = load_relation(&path, closure, err)?;
            let c = check_relation(&r, seed)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&json!({
                        "passed": c.passed(),
                        "seed": seed,
                        "check": c,
                    }))?
                )?;
            } else {
                writeln!(out, "seed: {seed}")?;
                for rep in &c.reports {
                    writeln!(out, "{rep}")?;
                }
                writeln!(out, "elements: {}", c.irs_size)?;
                writeln!(out, "semi-simple: {}", c.semi_simple)?;
                writeln!(out, "effective: {}", c.effective)?;
            }
            Ok(if c.passed() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Hasse {
            input,
            rep,
            out: path,
        } => {
            let r = load_relation(&input.relation, input.closure, err)?;
            let a = build(&r, rep)?;
            let dot = hasse_dot(&a)?;
            let edges = dot.matches(" -> ").count();
            match &path {
                Some(_) => {
                    write_output(path.as_deref(), &dot, out)?;
                    if json {
                        writeln!(
                            out,
                            "{}",
                            json!({"nodes": a.len(), "edges": edges, "out": path.as_ref().map(|p| p.display().to_string())})
                        )?;
                    } else {
                        writeln!(out, "nodes: {}\nedges: {edges}", a.len())?;
                    }
                }
                None => out.write_all(dot.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Validate {
            formula,
            max_size,
            effective_only,
            force,
            cap,
            countermodel_exit,
        } => {
            let f = parse(&formula)?;
            if force {
                let _ = writeln!(err, "warning: T is evaluated outside effective models");
            }
            let opts = SearchOptions {
                max_n: max_size,
                effective_only,
                cap,
                jobs: cli.jobs,
                force,
            };
            let outcome = countermodel_search(&f, &opts)?;
            match &outcome {
                SearchOutcome::Exhausted {
                    max_n,
                    models,
                    skipped,
                } => {
                    if json {
                        writeln!(
                            out,
                            "{}",
                            json!({
                                "formula": f.to_string(),
                                "verdict": "no_countermodel",
                                "max_n": max_n,
                                "models": models,
                                "skipped": skipped,
                            })
                        )?;
                    } else {
                        writeln!(
                            out,
                            "no countermodel up to n={max_n} ({models} models checked)"
                        )?;
                        if *skipped > 0 {
                            writeln!(out, "skipped: {skipped} models where T left the carrier")?;
                        }
                    }
                    Ok(EXIT_OK)
                }
                SearchOutcome::Countermodel(c) => {
                    let valuation: BTreeMap<&String, serde_json::Value> = c
                        .valuation
                        .iter()
                        .map(|(k, &v)| (k, pair_json(v)))
                        .collect();
                    if json {
                        writeln!(
                            out,
                            "{}",
                            json!({
                                "formula": f.to_string(),
                                "verdict": "countermodel",
                                "relation": c.relation.to_text(),
                                "elements": c.algebra.len(),
                                "valuation": valuation,
                                "value": pair_json(c.value),
                            })
                        )?;
                    } else {
                        writeln!(
                            out,
                            "countermodel at n={} ({} elements)",
                            c.relation.size(),
                            c.algebra.len()
                        )?;
                        writeln!(out, "relation:")?;
                        out.write_all(c.relation.to_text().as_bytes())?;
                        for (atom, v) in &c.valuation {
                            writeln!(out, "{atom} = {v}")?;
                        }
                        writeln!(out, "value = {}", c.value)?;
                    }
                    Ok(countermodel_exit)
                }
            }
        }
        Command::Enumerate {
            size,
            posets,
            equivalences,
            effective,
            canonical,
            list,
        } => {
            let (filter, label) = match (posets, equivalences, effective) {
                (true, _, _) => (RelationFilter::PartialOrders, "partial orders"),
                (_, true, _) => (RelationFilter::Equivalences, "equivalences"),
                (_, _, true) => (RelationFilter::CofinalClosedPoints, "cofinal closed points"),
                _ => (RelationFilter::All, "quasiorders"),
            };
            let relations: Vec<QuasiOrder> =
                enumerate_quasiorders_with(size, filter, canonical, enumeration_bound())?.collect();
            let rows: Vec<(usize, bool)> = relations
                .par_iter()
                .map(|r| Ok((irs_direct(r)?.len(), effectiveness_criteria(r)?.effective())))
                .collect::<Result<_>>()?;
            let effective_count = rows.iter().filter(|r| r.1).count();
            let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
            for (m, _) in &rows {
                *histogram.entry(*m).or_default() += 1;
            }
            if json {
                let listing: Vec<serde_json::Value> = relations
                    .iter()
                    .zip(&rows)
                    .map(|(r, (m, e))| {
                        json!({
                            "pairs": r.off_diagonal_pairs(),
                            "encoding": r.encoding(),
                            "elements": m,
                            "effective": e,
                        })
                    })
                    .collect();
                let mut doc = json!({
                    "size": size,
                    "filter": filter,
                    "canonical": canonical,
                    "count": relations.len(),
                    "effective": effective_count,
                    "carrier_sizes": histogram,
                });
                if list {
                    doc["relations"] = serde_json::Value::Array(listing);
                }
                writeln!(out, "{doc}")?;
            } else {
                writeln!(out, "n = {size}: {} {label}", relations.len())?;
                writeln!(out, "effective: {effective_count}")?;
                let hist: Vec<String> = histogram.iter().map(|(m, c)| format!("{m}:{c}")).collect();
                writeln!(out, "carrier sizes: {}", hist.join(" "))?;
                if list {
                    for (r, (m, e)) in relations.iter().zip(&rows) {
                        let pairs: Vec<String> = r
                            .off_diagonal_pairs()
                            .iter()
                            .map(|(i, j)| format!("{i}R{j}"))
                            .collect();
                        writeln!(out, "[{}] elements={m} effective={e}", pairs.join(" "))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line against explicit streams and returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    let pool = match cli.jobs {
        Some(k) => match rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
        {
            Ok(pool) => Some(pool),
            Err(e) => {
                let _ = writeln!(err, "error: thread pool: {e}");
                return EXIT_USAGE;
            }
        },
        None => None,
    };
    let result = match &pool {
        Some(pool) => pool.install(|| run(cli, out, err)),
        None => run(cli, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
