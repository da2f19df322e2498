//! `cusp-floer`: obstruction reports for singular plane curves, V-invariant
//! tables and an exact homology oracle for bigraded complexes.

/// `println!` that propagates write errors.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        writeln!(std::io::stdout().lock(), $($arg)*)?
    }};
}

/// `print!` that propagates write errors.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        write!(std::io::stdout().lock(), $($arg)*)?
    }};
}

mod commands;
mod config;
mod repro;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use cusp_floer::NumericalSemigroup;

use commands::{EXIT_CONSISTENT, EXIT_ERROR};

#[derive(Parser)]
#[command(name = "cusp-floer", version, about = "Knot Floer obstructions to singular plane curves")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the obstruction check on a curve configuration file.
    /// Exit code: 0 consistent, 2 obstructed, 1 error.
    Check {
        path: PathBuf,
        /// Accept configurations whose genus does not match the genus formula.
        #[arg(long)]
        allow_genus_slack: bool,
    },
    /// Print the counting function R(k) = #(S ∩ [0, k)) for k < UPTO.
    Semigroup {
        #[arg(required = true, num_args = 1..)]
        generators: Vec<i64>,
        #[arg(long, default_value_t = 20)]
        upto: i64,
    },
    /// Tabulate V_s, V^top_s and V^bot_s of a composite knot.
    Vtable {
        /// Cusp given by a torus knot, as `p,q` (repeatable).
        #[arg(long = "torus", value_parser = parse_pair)]
        torus: Vec<(i64, i64)>,
        /// Cusp given by its gap set, as `g1,g2,…` (repeatable).
        #[arg(long = "gaps", value_parser = parse_list)]
        gaps: Vec<Vec<i64>>,
        /// Positive T(2,2n) links, as `n:count` (repeatable).
        #[arg(long = "pos", value_parser = parse_link)]
        pos: Vec<(i64, i64)>,
        /// Negative T(2,2n) links, as `n:count` (repeatable).
        #[arg(long = "neg", value_parser = parse_link)]
        neg: Vec<(i64, i64)>,
        /// Number of Borromean summands.
        #[arg(long, default_value_t = 0)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        s_min: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        s_max: Option<i64>,
        /// Recompute every row with the homology oracle on the chain model.
        #[arg(long)]
        validate_with_oracle: bool,
        /// Write the chain model as a complex-description file.
        #[arg(long)]
        export_model: Option<PathBuf>,
    },
    /// Compute V_s (or V^top/V^bot when actions are present) of a complex file.
    Oracle {
        path: PathBuf,
        /// Level `n` or `n/2` (repeatable).
        #[arg(long = "s", allow_hyphen_values = true, value_parser = commands::parse_half)]
        levels: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        s_min: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        s_max: Option<i64>,
        /// Also report free rank and torsion count of each homology.
        #[arg(long)]
        stats: bool,
    },
    /// Reproduce a worked example, printing expected against computed values.
    /// Exit code: 0 reproduced, 1 otherwise.
    Repro {
        #[arg(value_enum)]
        scenario: repro::Scenario,
    },
}

fn parse_list(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}")))
        .collect()
}

fn parse_pair(text: &str) -> Result<(i64, i64), String> {
    match parse_list(text)?.as_slice() {
        &[p, q] => Ok((p, q)),
        _ => Err(format!("expected p,q, got {text:?}")),
    }
}

fn parse_link(text: &str) -> Result<(i64, i64), String> {
    let (n, c) = text.split_once(':').ok_or_else(|| format!("expected n:count, got {text:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("not an integer: {n:?}"))?;
    let c = c.trim().parse().map_err(|_| format!("not an integer: {c:?}"))?;
    Ok((n, c))
}

fn accumulate(entries: &[(i64, i64)]) -> BTreeMap<i64, i64> {
    let mut map = BTreeMap::new();
    for &(n, c) in entries {
        *map.entry(n).or_insert(0) += c;
    }
    map
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Check { path, allow_genus_slack } => commands::cmd_check(&path, cli.json, allow_genus_slack),
        Command::Semigroup { generators, upto } => commands::cmd_semigroup(&generators, upto, cli.json),
        Command::Vtable { torus, gaps, pos, neg, genus, s_min, s_max, validate_with_oracle, export_model } => {
            let mut cusps = torus
                .iter()
                .map(|&(p, q)| NumericalSemigroup::torus_knot(p, q))
                .collect::<Result<Vec<_>, _>>()?;
            for g in &gaps {
                cusps.push(NumericalSemigroup::from_gaps(g).with_context(|| format!("gap set {g:?}"))?);
            }
            let args = commands::VtableArgs {
                cusps,
                positive: accumulate(&pos),
                negative: accumulate(&neg),
                genus,
                s_min,
                s_max,
                validate_with_oracle,
                export_model,
            };
            commands::cmd_vtable(args, cli.json)
        }
        Command::Oracle { path, mut levels, s_min, s_max, stats } => {
            match (s_min, s_max) {
                (Some(lo), Some(hi)) => levels.extend((lo..=hi).map(|s| 2 * s)),
                (None, None) => {}
                _ => anyhow::bail!("--s-min and --s-max must be given together"),
            }
            if levels.is_empty() {
                levels.push(0);
            }
            commands::cmd_oracle(&path, &levels, stats, cli.json)
        }
        Command::Repro { scenario } => {
            let outcome = repro::run(scenario)?;
            if cli.json {
                outln!("{}", serde_json::to_string_pretty(&outcome)?);
            } else {
                outln!("scenario {}", outcome.scenario);
                for l in &outcome.lines {
                    outln!(
                        "  {} {}: expected {}, computed {}",
                        if l.ok { "PASS" } else { "FAIL" },
                        l.quantity,
                        l.expected,
                        l.computed
                    );
                }
                outln!("{}", if outcome.passed { "reproduced" } else { "NOT reproduced" });
            }
            Ok(if outcome.passed { EXIT_CONSISTENT } else { EXIT_ERROR })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::from(EXIT_ERROR)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
