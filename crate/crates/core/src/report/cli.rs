//! The `siegel-dims` command line.
//!
//! Exit status: 0 on success, 1 on invalid input or a domain error (including a
//! failed verification), 2 when an internal integrity check fails.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand};
use num::BigUint;

use crate::arith::{format_rational, is_prime, FractionParts, SquareFreeLevel};
use crate::dims::{DimValue, Weight};
use crate::error::{Error, Result};
use crate::irreps;
use crate::newforms::{self, BoundPair};
use crate::report::table::{Family, Format, TableSpec};
use crate::report::verify;

#[derive(Debug, Parser)]
#[command(
    name = "siegel-dims",
    version,
    about = "Dimensions of spaces of degree-2 Siegel cusp forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one dimension.
    Dim(Opts),
    /// Print a table of dimensions over a weight or level range.
    Table(Opts),
    /// Print the newform bounds at a prime (--prime) or square-free (--level) level.
    Bounds(Opts),
    /// List the decompositions of a target into irrep dimensions.
    Decompose(Opts),
    /// Full analysis of S_k(Gamma(p)).
    Analyze(Opts),
    /// Print the GSp(4,F_p) irrep dimension table.
    Irreps(Opts),
    /// Recompute every published value.
    Verify(Opts),
}

#[derive(Debug, Args)]
struct Opts {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, conflicts_with = "weights")]
    weight: Option<u32>,
    /// Inclusive range `A..B`.
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, conflicts_with = "levels")]
    level: Option<u64>,
    /// Comma-separated list, or `A..B` for the primes in that range.
    #[arg(long)]
    levels: Option<String>,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long)]
    target: Option<String>,
    #[arg(long)]
    include_nonunitary: bool,
    /// Print the integer envelope ceil(lower) floor(upper) instead of fractions.
    #[arg(long)]
    envelope: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn missing(what: &str) -> Error {
    Error::InvalidRange(format!("missing required option --{what}"))
}

fn parse_range(s: &str) -> Result<(u64, u64)> {
    let bad = || Error::InvalidRange(format!("cannot parse range `{s}` (expected A..B)"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse::<u64>().map_err(|_| bad())?;
    let b = b
        .trim()
        .trim_start_matches('=')
        .parse::<u64>()
        .map_err(|_| bad())?;
    if a > b {
        return Err(Error::InvalidRange(format!("empty range `{s}`")));
    }
    Ok((a, b))
}

impl Opts {
    fn weight(&self) -> Result<Weight> {
        Weight::new(self.weight.ok_or_else(|| missing("weight"))?)
    }

    fn weights(&self) -> Result<Vec<u32>> {
        match (&self.weights, self.weight) {
            (Some(r), _) => {
                let (a, b) = parse_range(r)?;
                let a = u32::try_from(a).map_err(|_| Error::InvalidRange(r.clone()))?;
                let b = u32::try_from(b).map_err(|_| Error::InvalidRange(r.clone()))?;
                Ok((a..=b).collect())
            }
            (None, Some(k)) => Ok(vec![k]),
            (None, None) => Err(missing("weight or --weights")),
        }
    }

    fn levels(&self) -> Result<Vec<u64>> {
        match (&self.levels, self.level.or(self.prime)) {
            (Some(s), _) if s.contains("..") => {
                let (a, b) = parse_range(s)?;
                let primes: Vec<u64> = (a..=b).filter(|&n| is_prime(n)).collect();
                if primes.is_empty() {
                    return Err(Error::InvalidRange(format!("no primes in `{s}`")));
                }
                Ok(primes)
            }
            (Some(s), _) => s
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::InvalidRange(format!("bad level `{t}`")))
                })
                .collect(),
            (None, Some(l)) => Ok(vec![l]),
            (None, None) => Ok(Vec::new()),
        }
    }

    fn level_or_prime(&self) -> Option<u64> {
        self.level.or(self.prime)
    }

    fn prime(&self) -> Result<u64> {
        self.prime.or(self.level).ok_or_else(|| missing("prime"))
    }

    fn family(&self) -> Result<Family> {
        self.family.ok_or_else(|| missing("family"))
    }
}

fn cmd_dim(o: &Opts) -> Result<String> {
    let family = o.family()?;
    let k = match (family, o.weight) {
        (Family::Paramodular, None) => Weight::new(4)?,
        _ => o.weight()?,
    };
    let group = family.with_level(o.level_or_prime())?;
    let dim = group.dimension(k)?;
    Ok(match o.format {
        Format::Json => format!("{{\"dim\": {dim}}}\n"),
        _ => format!("{dim}\n"),
    })
}

fn cmd_table(o: &Opts) -> Result<String> {
    let family = o.family()?;
    let weights = match (family, o.weight, &o.weights) {
        (Family::Paramodular, None, None) => vec![4],
        _ => o.weights()?,
    };
    TableSpec {
        family,
        weights,
        levels: o.levels()?,
        format: o.format,
    }
    .emit()
}

fn render_bounds(b: &BoundPair, o: &Opts) -> String {
    match (o.format, o.envelope) {
        (Format::Json, _) => {
            let (lo, hi) = b.integer_envelope();
            let value = serde_json::json!({
                "lower": FractionParts::from(b.lower()),
                "upper": FractionParts::from(b.upper()),
                "integer_envelope": [lo.to_string(), hi.to_string()],
            });
            format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))
        }
        (_, true) => {
            let (lo, hi) = b.integer_envelope();
            format!("{lo} {hi}\n")
        }
        _ => format!(
            "{} {}\n",
            format_rational(b.lower()),
            format_rational(b.upper())
        ),
    }
}

fn cmd_bounds(o: &Opts) -> Result<String> {
    let k = o.weight()?;
    let bounds = match (o.prime, o.level) {
        (Some(p), None) => newforms::bounds_prime(k, p)?,
        (None, Some(n)) => newforms::bounds_squarefree(k, &SquareFreeLevel::parse(n)?)?,
        (Some(_), Some(_)) => {
            return Err(Error::InvalidRange(
                "give either --prime or --level, not both".into(),
            ))
        }
        (None, None) => return Err(missing("prime or --level")),
    };
    Ok(render_bounds(&bounds, o))
}

fn cmd_decompose(o: &Opts) -> Result<String> {
    let p = o.prime()?;
    let target = o.target.as_deref().ok_or_else(|| missing("target"))?;
    let target = BigUint::from_str(target.trim())
        .map(DimValue::from)
        .map_err(|_| Error::InvalidRange(format!("bad target `{target}`")))?;
    let sols = newforms::decompose(p, &target, o.include_nonunitary)?;
    let width = if o.include_nonunitary { 17 } else { 15 };
    Ok(match o.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = sols
                .iter()
                .map(|d| serde_json::json!({ "multiplicities": d.multiplicities(), "terms": d.terms() }))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&rows).expect("json"))
        }
        Format::Csv => {
            let header: Vec<String> = (1..=width).map(|n| format!("c{n}")).collect();
            let mut out = format!("{}\n", header.join(","));
            for d in &sols {
                let row: Vec<String> = d.multiplicities().iter().map(u64::to_string).collect();
                out.push_str(&format!("{}\n", row.join(",")));
            }
            out
        }
        _ => sols.iter().map(|d| format!("{}\n", d.terms())).collect(),
    })
}

fn cmd_analyze(o: &Opts) -> Result<String> {
    let report = newforms::analyze_level(o.weight()?, o.prime()?)?;
    Ok(match o.format {
        Format::Json => format!("{}\n", report.to_json()),
        _ => report.to_text(),
    })
}

fn cmd_irreps(o: &Opts) -> Result<String> {
    let p = o.prime()?;
    let rows = irreps::table_at(p)?;
    Ok(match o.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).expect("json")),
        Format::Csv => {
            let mut out = String::from("index,formula,value,unitary\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.index, r.formula, r.value, r.unitary
                ));
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{|l|l|r|c|}\n\\hline\nindex & formula & value & unitary \\\\\n\\hline\n");
            for r in &rows {
                out.push_str(&format!(
                    "$a_{{{}}}$ & ${}$ & {} & {} \\\\\n",
                    r.index,
                    r.formula.replace("1/2 ", "\\tfrac{1}{2}"),
                    r.value,
                    if r.unitary { "yes" } else { "no" }
                ));
            }
            out.push_str("\\hline\n\\end{tabular}\n");
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let flag = if r.unitary { "" } else { "  (non-unitary)" };
                out.push_str(&format!(
                    "a{:<3}{:<18}{:>14}{flag}\n",
                    r.index, r.formula, r.value
                ));
            }
            out
        }
    })
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let rendered = e.render().to_string();
                    let _ = write!(err, "{rendered}");
                    if !rendered.contains("Usage:") {
                        let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    }
                    1
                }
            };
        }
    };

    let result = match &cli.command {
        Command::Dim(o) => cmd_dim(o),
        Command::Table(o) => cmd_table(o),
        Command::Bounds(o) => cmd_bounds(o),
        Command::Decompose(o) => cmd_decompose(o),
        Command::Analyze(o) => cmd_analyze(o),
        Command::Irreps(o) => cmd_irreps(o),
        Command::Verify(o) => {
            let report = verify::verify_paper();
            let text = match o.format {
                Format::Json => format!("{}\n", report.to_json()),
                _ => report.to_text(),
            };
            let _ = out.write_all(text.as_bytes());
            if !report.passed() {
                for c in report.failures() {
                    let _ = writeln!(
                        err,
                        "verification failed: {} (expected {}, computed {})",
                        c.name, c.expected, c.computed
                    );
                }
                return 1;
            }
            return 0;
        }
    };

    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_integrity_failure() {
                2
            } else {
                1
            }
        }
    }
}
