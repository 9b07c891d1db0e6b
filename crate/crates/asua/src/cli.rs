//! Command-line front end.
//!
//! One thin binary with subcommands over the library: `solve`, `formula`,
//! `verify`, `simulate`, `maze`, `generate`, and `survey`. Exit codes are
//! stable: 0 success, 1 verification mismatches, 2 file/parse errors,
//! 3 validation errors, 4 solve errors.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::{Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::chain::{
    build_transition, chain_residuals, solve_asua, solve_asua_float,
};
use crate::closed_form::{cycle_asua, path_asua, stem_offset, SeaDragonSpec};
use crate::edge_list;
use crate::error::Error;
use crate::families::{gen_cycle, gen_path, gen_sea_dragon, gen_star};
use crate::format::{exact_table, float_table, rational_str};
use crate::graph::VertexId;
use crate::maze::{maze_to_graph, parse_maze, render_asua_grid, Cell};
use crate::monte_carlo::{simulate, WalkConfig};
use crate::rational::Rational;
use crate::survey::{render_survey_with, survey, SigmaConvention};
use crate::verify::{
    render_report, verify_cycle, verify_path, verify_sd1, verify_sd2, verify_sd3, verify_sd4,
    verify_stem_theorem, VerifyReport,
};

/// Inclusive integer range written `a..b` (or a single value `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| -> Result<u64, String> {
            t.parse().map_err(|_| format!("expected an integer, got {t:?}"))
        };
        if let Some((lo, hi)) = s.split_once("..") {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(format!("empty range {s:?}"));
            }
            Ok(RangeArg { lo, hi })
        } else {
            let v = parse(s)?;
            Ok(RangeArg { lo: v, hi: v })
        }
    }
}

impl RangeArg {
    fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AbsorberArg {
    Max,
    Min,
    Each,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyFamily {
    Path,
    Cycle,
    Sd1,
    Sd2,
    Sd3,
    Sd4,
    Stem,
}

#[derive(Parser, Debug)]
#[command(name = "asua", version, about = "Expected steps to absorption for random walks on graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve a graph file (or raw `matrix N` chain file) for expected
    /// absorption steps per vertex.
    Solve {
        file: PathBuf,
        /// Use the double-precision solver instead of exact rationals.
        #[arg(long)]
        float: bool,
        /// Also print the maximum neighbor-identity residual.
        #[arg(long)]
        check: bool,
    },
    /// Evaluate a closed-form family formula.
    Formula {
        #[command(subcommand)]
        family: FormulaCommand,
    },
    /// Sweep closed forms against the exact solver; exits 1 on mismatch.
    Verify {
        /// Family to sweep; omitting it runs the full sweep.
        #[arg(value_enum)]
        family: Option<VerifyFamily>,
        /// Spine-length range, e.g. `3..12`.
        #[arg(long)]
        n: Option<RangeArg>,
        /// Total stem-mass range for sd2/sd3/sd4, e.g. `1..5`.
        #[arg(long)]
        d: Option<RangeArg>,
        /// Also evaluate the (k+1)^2 first-piece variant of the SD2/SD3
        /// forms and report its mismatch counts.
        #[arg(long = "sd23-printed-constant")]
        sd23_printed_constant: bool,
        /// Tree count for the stem sweep.
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Seed for the stem sweep.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Estimate expected absorption steps by simulating seeded walks.
    Simulate {
        file: PathBuf,
        /// Start vertex (1-based).
        #[arg(long)]
        start: usize,
        #[arg(long, default_value_t = 100_000)]
        walks: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-walk step cap; capped walks are excluded from the mean.
        #[arg(long, default_value_t = 1_000_000_000)]
        cap: u64,
    },
    /// Solve a maze file and print per-cell expected steps as a grid.
    Maze { file: PathBuf },
    /// Emit a family graph in edge-list format.
    Generate {
        #[command(subcommand)]
        family: GenerateCommand,
    },
    /// Survey t_sigma and round-trip extremes over all trees per order.
    Survey {
        /// Order range, within 2..=10.
        #[arg(long, default_value = "3..8")]
        n: RangeArg,
        /// Absorber convention(s) to report.
        #[arg(long, value_enum, default_value_t = AbsorberArg::Each)]
        absorber: AbsorberArg,
        /// Also list every tree with its statistics.
        #[arg(long)]
        trees: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum FormulaCommand {
    /// Path value (n-1)^2 - (i-1)^2.
    Path {
        n: u64,
        i: Option<u64>,
        /// Print all spine values 1..=n-1.
        #[arg(long)]
        all: bool,
    },
    /// Cycle value i(n-i).
    Cycle {
        n: u64,
        i: Option<u64>,
        #[arg(long)]
        all: bool,
    },
    /// Stem excess l^2 - (j-1)^2 of stem vertex u_j over its attachment.
    Stem { l: u64, j: u64 },
    /// SD1 spine value; leaf positions comma-separated, e.g. `2,4`.
    Sd1 {
        n: u64,
        positions: String,
        i: Option<u64>,
        #[arg(long)]
        all: bool,
    },
    /// SD2 spine value: b leaves at position k.
    Sd2 {
        n: u64,
        k: u64,
        b: u64,
        i: Option<u64>,
        #[arg(long)]
        all: bool,
    },
    /// SD3 spine value: one stem of length c at position k.
    Sd3 {
        n: u64,
        k: u64,
        c: u64,
        i: Option<u64>,
        #[arg(long)]
        all: bool,
    },
    /// SD4 spine value: stems with comma-separated lengths at position k.
    Sd4 {
        n: u64,
        k: u64,
        stems: String,
        i: Option<u64>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenerateCommand {
    Path {
        n: u64,
        /// Override the absorbing set, comma-separated 1-based ids.
        #[arg(long)]
        absorb: Option<String>,
    },
    Cycle {
        n: u64,
        #[arg(long)]
        absorb: Option<String>,
    },
    Star {
        n: u64,
        #[arg(long)]
        absorb: Option<String>,
    },
    Sd1 {
        n: u64,
        positions: String,
        #[arg(long)]
        absorb: Option<String>,
    },
    Sd2 {
        n: u64,
        k: u64,
        b: u64,
        #[arg(long)]
        absorb: Option<String>,
    },
    Sd3 {
        n: u64,
        k: u64,
        c: u64,
        #[arg(long)]
        absorb: Option<String>,
    },
    Sd4 {
        n: u64,
        k: u64,
        stems: String,
        #[arg(long)]
        absorb: Option<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Asua(Error),
    Io(PathBuf, std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Asua(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Asua(e)
    }
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Io(..) => 2,
        CliError::Asua(e) => match e {
            Error::Parse { .. }
            | Error::RaggedRows { .. }
            | Error::IllegalCharacter { .. }
            | Error::NoTarget
            | Error::EmptyMaze
            | Error::NotSquare
            | Error::NotStochastic { .. } => 2,
            Error::SingularSystem => 4,
            _ => 3,
        },
    }
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn parse_csv_u64(text: &str, what: &str) -> Result<Vec<u64>, CliError> {
    text.split(',')
        .map(|t| {
            t.trim().parse().map_err(|_| {
                CliError::Asua(Error::BadSpec(format!("expected {what}, got {t:?}")))
            })
        })
        .collect()
}

fn parse_absorb(text: &str) -> Result<Vec<VertexId>, CliError> {
    parse_csv_u64(text, "a 1-based vertex id")?
        .into_iter()
        .map(|raw| {
            VertexId::from_one_based(raw as usize)
                .ok_or_else(|| CliError::Asua(Error::BadSpec("vertex ids are 1-based".into())))
        })
        .collect()
}

fn execute(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Solve { file, float, check } => cmd_solve(cli.format, file, *float, *check),
        Command::Formula { family } => cmd_formula(cli.format, family),
        Command::Verify {
            family,
            n,
            d,
            sd23_printed_constant,
            count,
            seed,
        } => cmd_verify(cli.format, *family, *n, *d, *sd23_printed_constant, *count, *seed),
        Command::Simulate { file, start, walks, seed, cap } => {
            cmd_simulate(cli.format, file, *start, *walks, *seed, *cap)
        }
        Command::Maze { file } => cmd_maze(cli.format, file),
        Command::Generate { family } => cmd_generate(cli.format, family),
        Command::Survey { n, absorber, trees } => cmd_survey(cli.format, *n, *absorber, *trees),
    }
}

fn cmd_solve(format: Format, file: &Path, float: bool, check: bool) -> Result<ExitCode, CliError> {
    let text = read_file(file)?;
    let tm = if edge_list::looks_like_matrix(&text) {
        edge_list::parse_matrix(&text)?
    } else {
        build_transition(&edge_list::parse_graph(&text)?)?
    };
    if float {
        let f = solve_asua_float(&tm)?;
        match format {
            Format::Tsv => {
                print!("{}", float_table(&tm, &f));
                if check {
                    println!("max_residual\t{:e}", f.residual);
                }
            }
            Format::Json => {
                let vertices: Vec<_> = (0..tm.order())
                    .map(|i| {
                        let v = VertexId::new(i);
                        json!({"id": v.one_based(), "decimal": f.value_or_zero(v)})
                    })
                    .collect();
                let mut obj = json!({"command": "solve", "solver": "float", "vertices": vertices});
                if check {
                    obj["max_residual"] = json!(f.residual);
                }
                println!("{obj}");
            }
        }
    } else {
        let t = solve_asua(&tm)?;
        match format {
            Format::Tsv => {
                print!("{}", exact_table(&tm, &t));
                if check {
                    let residuals = chain_residuals(&tm, &t)?;
                    let max = residuals
                        .iter()
                        .map(|(_, r)| r.abs())
                        .max()
                        .unwrap_or_else(Rational::zero);
                    println!("max_residual\t{}", rational_str(&max));
                }
            }
            Format::Json => {
                let vertices: Vec<_> = (0..tm.order())
                    .map(|i| {
                        let v = VertexId::new(i);
                        let value = t.value_or_zero(v);
                        json!({
                            "id": v.one_based(),
                            "value": rational_str(&value),
                            "decimal": value.to_f64(),
                        })
                    })
                    .collect();
                println!("{}", json!({"command": "solve", "solver": "exact", "vertices": vertices}));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn spine_values(
    n: u64,
    value_at: impl Fn(u64) -> Result<u64, Error>,
    i: Option<u64>,
    all: bool,
) -> Result<Vec<u64>, CliError> {
    if all {
        (1..=n.saturating_sub(1))
            .map(|i| value_at(i).map_err(CliError::Asua))
            .collect()
    } else {
        let i = i.ok_or_else(|| {
            CliError::Asua(Error::BadSpec("provide a spine index or --all".into()))
        })?;
        Ok(vec![value_at(i)?])
    }
}

fn cmd_formula(format: Format, family: &FormulaCommand) -> Result<ExitCode, CliError> {
    let values = match family {
        FormulaCommand::Path { n, i, all } => spine_values(*n, |i| path_asua(*n, i), *i, *all)?,
        FormulaCommand::Cycle { n, i, all } => spine_values(*n, |i| cycle_asua(*n, i), *i, *all)?,
        FormulaCommand::Stem { l, j } => vec![stem_offset(*l, *j)?],
        FormulaCommand::Sd1 { n, positions, i, all } => {
            let spec = SeaDragonSpec::Sd1 {
                n: *n,
                leaf_positions: parse_csv_u64(positions, "a leaf position")?,
            };
            spec.validate()?;
            spine_values(*n, |i| spec.asua(i), *i, *all)?
        }
        FormulaCommand::Sd2 { n, k, b, i, all } => {
            let spec = SeaDragonSpec::Sd2 { n: *n, position: *k, leaf_count: *b };
            spec.validate()?;
            spine_values(*n, |i| spec.asua(i), *i, *all)?
        }
        FormulaCommand::Sd3 { n, k, c, i, all } => {
            let spec = SeaDragonSpec::Sd3 { n: *n, position: *k, stem_length: *c };
            spec.validate()?;
            spine_values(*n, |i| spec.asua(i), *i, *all)?
        }
        FormulaCommand::Sd4 { n, k, stems, i, all } => {
            let spec = SeaDragonSpec::Sd4 {
                n: *n,
                position: *k,
                stem_lengths: parse_csv_u64(stems, "a stem length")?,
            };
            spec.validate()?;
            spine_values(*n, |i| spec.asua(i), *i, *all)?
        }
    };
    match format {
        Format::Tsv => {
            let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            println!("{}", parts.join(" "));
        }
        Format::Json => println!("{}", json!({"command": "formula", "values": values})),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    format: Format,
    family: Option<VerifyFamily>,
    n: Option<RangeArg>,
    d: Option<RangeArg>,
    printed: bool,
    count: usize,
    seed: u64,
) -> Result<ExitCode, CliError> {
    let n_or = |lo: u64, hi: u64| n.unwrap_or(RangeArg { lo, hi }).iter();
    let d_or = |lo: u64, hi: u64| d.unwrap_or(RangeArg { lo, hi }).iter();

    let mut reports: Vec<VerifyReport> = Vec::new();
    let families: Vec<VerifyFamily> = match family {
        Some(f) => vec![f],
        None => vec![
            VerifyFamily::Path,
            VerifyFamily::Cycle,
            VerifyFamily::Sd1,
            VerifyFamily::Sd2,
            VerifyFamily::Sd3,
            VerifyFamily::Sd4,
            VerifyFamily::Stem,
        ],
    };
    for f in families {
        let report = match f {
            VerifyFamily::Path => verify_path(n_or(2, 200))?,
            VerifyFamily::Cycle => verify_cycle(n_or(3, 200))?,
            VerifyFamily::Sd1 => verify_sd1(n_or(3, 12))?,
            VerifyFamily::Sd2 => verify_sd2(n_or(3, 12), d_or(1, 5), printed)?,
            VerifyFamily::Sd3 => verify_sd3(n_or(3, 12), d_or(1, 5), printed)?,
            VerifyFamily::Sd4 => verify_sd4(n_or(3, 12), d_or(1, 5), printed)?,
            VerifyFamily::Stem => verify_stem_theorem(count, seed)?,
        };
        reports.push(report);
    }
    let pass = reports.iter().all(|r| r.passed());
    match format {
        Format::Tsv => {
            for report in &reports {
                print!("{}", render_report(report));
            }
            println!("RESULT {}", if pass { "pass" } else { "fail" });
        }
        Format::Json => {
            let items: Vec<_> = reports
                .iter()
                .map(|r| {
                    let printed = r.printed_constant.map(|p| {
                        json!({
                            "instances": p.instances,
                            "instances_mismatching": p.instances_mismatching,
                            "values_mismatching": p.values_mismatching,
                        })
                    });
                    json!({
                        "family": r.family,
                        "instances": r.instances,
                        "values_checked": r.values_checked,
                        "mismatches": r.mismatches.len(),
                        "printed_constant": printed,
                    })
                })
                .collect();
            println!("{}", json!({"command": "verify", "pass": pass, "reports": items}));
        }
    }
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_simulate(
    format: Format,
    file: &Path,
    start: usize,
    walks: u64,
    seed: u64,
    cap: u64,
) -> Result<ExitCode, CliError> {
    let text = read_file(file)?;
    let g = edge_list::parse_graph(&text)?;
    let start = VertexId::from_one_based(start)
        .ok_or_else(|| CliError::Asua(Error::BadSpec("vertex ids are 1-based".into())))?;
    let mut cfg = WalkConfig::new(start, walks, seed);
    cfg.step_cap = cap;
    let est = simulate(&g, &cfg)?;
    match format {
        Format::Tsv => {
            println!("mean\t{:.6}", est.mean);
            println!("stderr\t{:.6}", est.stderr);
            println!("walks_completed\t{}", est.walks_completed);
            println!("walks_capped\t{}", est.walks_capped);
        }
        Format::Json => println!(
            "{}",
            json!({
                "command": "simulate",
                "mean": est.mean,
                "stderr": est.stderr,
                "walks_completed": est.walks_completed,
                "walks_capped": est.walks_capped,
            })
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_maze(format: Format, file: &Path) -> Result<ExitCode, CliError> {
    let text = read_file(file)?;
    let m = parse_maze(&text)?;
    let (g, map) = maze_to_graph(&m)?;
    let t = crate::chain::solve_graph(&g)?;
    match format {
        Format::Tsv => print!("{}", render_asua_grid(&m, &map, &g, &t)),
        Format::Json => {
            let cells: Vec<Vec<serde_json::Value>> = (0..m.rows())
                .map(|r| {
                    (0..m.cols())
                        .map(|c| match m.cell(r, c) {
                            Cell::Wall => serde_json::Value::Null,
                            _ => {
                                let v = map.vertex(r, c).expect("non-wall cell");
                                json!(rational_str(&t.value_or_zero(v)))
                            }
                        })
                        .collect()
                })
                .collect();
            println!(
                "{}",
                json!({"command": "maze", "rows": m.rows(), "cols": m.cols(), "cells": cells})
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(format: Format, family: &GenerateCommand) -> Result<ExitCode, CliError> {
    let (mut g, absorb) = match family {
        GenerateCommand::Path { n, absorb } => (gen_path(*n)?, absorb),
        GenerateCommand::Cycle { n, absorb } => (gen_cycle(*n)?, absorb),
        GenerateCommand::Star { n, absorb } => (gen_star(*n)?, absorb),
        GenerateCommand::Sd1 { n, positions, absorb } => (
            gen_sea_dragon(&SeaDragonSpec::Sd1 {
                n: *n,
                leaf_positions: parse_csv_u64(positions, "a leaf position")?,
            })?,
            absorb,
        ),
        GenerateCommand::Sd2 { n, k, b, absorb } => (
            gen_sea_dragon(&SeaDragonSpec::Sd2 { n: *n, position: *k, leaf_count: *b })?,
            absorb,
        ),
        GenerateCommand::Sd3 { n, k, c, absorb } => (
            gen_sea_dragon(&SeaDragonSpec::Sd3 { n: *n, position: *k, stem_length: *c })?,
            absorb,
        ),
        GenerateCommand::Sd4 { n, k, stems, absorb } => (
            gen_sea_dragon(&SeaDragonSpec::Sd4 {
                n: *n,
                position: *k,
                stem_lengths: parse_csv_u64(stems, "a stem length")?,
            })?,
            absorb,
        ),
    };
    if let Some(text) = absorb {
        g = g.with_absorbing(&parse_absorb(text)?)?;
    }
    match format {
        Format::Tsv => print!("{}", edge_list::format_graph(&g)),
        Format::Json => {
            let edges: Vec<_> = g
                .edges()
                .map(|(u, v, m)| json!([u.one_based(), v.one_based(), m]))
                .collect();
            let absorb: Vec<_> = g.absorbing().iter().map(|a| a.one_based()).collect();
            println!(
                "{}",
                json!({
                    "command": "generate",
                    "vertices": g.vertex_count(),
                    "absorb": absorb,
                    "edges": edges,
                })
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_survey(
    format: Format,
    n: RangeArg,
    absorber: AbsorberArg,
    trees: bool,
) -> Result<ExitCode, CliError> {
    let orders = survey(n.lo as usize..=n.hi as usize)?;
    let conventions: &[SigmaConvention] = match absorber {
        AbsorberArg::Max => &[SigmaConvention::Max],
        AbsorberArg::Min => &[SigmaConvention::Min],
        AbsorberArg::Each => &[
            SigmaConvention::Max,
            SigmaConvention::Min,
            SigmaConvention::Each,
        ],
    };
    match format {
        Format::Tsv => print!("{}", render_survey_with(&orders, trees, conventions)),
        Format::Json => {
            let items: Vec<_> = orders
                .iter()
                .map(|o| {
                    let extreme = |e: &crate::survey::ExtremeSummary| {
                        json!({
                            "statistic": e.statistic,
                            "min": rational_str(&e.min_value),
                            "min_trees": e.min_trees,
                            "max": rational_str(&e.max_value),
                            "max_trees": e.max_trees,
                            "star_attains_min": e.star_attains_min,
                            "path_attains_max": e.path_attains_max,
                        })
                    };
                    json!({
                        "n": o.n,
                        "tree_count": o.tree_count,
                        "star": o.star_index,
                        "path": o.path_index,
                        "sigma_max_convention": extreme(&o.sigma_max_convention),
                        "sigma_min_convention": extreme(&o.sigma_min_convention),
                        "sigma_each_within_band": o.sigma_each_within_band,
                        "round_trip_max_pairs": extreme(&o.round_trip_max_pairs),
                        "round_trip_diameter": extreme(&o.round_trip_diameter),
                    })
                })
                .collect();
            println!("{}", json!({"command": "survey", "orders": items}));
        }
    }
    Ok(ExitCode::SUCCESS)
}
