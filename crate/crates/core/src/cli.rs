//! Command-line front end.
//!
//! Each subcommand is a `cmd_*` function returning a [`CommandResult`]. In
//! JSON mode the binary prints only the payload on stdout, so the output of
//! `construct --json` is itself an ideal file. Diagnostics go to stderr.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Read};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{check_conditions, power_mu_profile, tiny_square_ideal};
use crate::error::Error;
use crate::ideal::StaircaseIdeal;
use crate::search::{min_mu_square_with, two_degree_scan, write_scan_csv, SearchOptions};

#[derive(Debug, Parser)]
#[command(
    name = "staircase",
    version,
    about = "Monomial ideals in two variables: squares, powers and bounded searches"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for searches (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the m-generator ideal whose square has nine generators, or its k-th power.
    Construct {
        /// Number of generators (at least 5).
        #[arg(long)]
        m: usize,
        /// Print the k-th power instead.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Check the five divisibility conditions on the m-generator construction.
    Verify {
        /// Number of generators (at least 5).
        #[arg(long)]
        m: usize,
    },
    /// Number of minimal generators of I^k for an ideal file ("-" reads stdin).
    Mu {
        /// JSON list of [x, y] exponent pairs.
        file: PathBuf,
        /// Power to take before counting.
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// μ(I^k) for k = 1..kmax, for an ideal file or the m-generator construction.
    PowerProfile {
        #[arg(required_unless_present = "m", conflicts_with = "m")]
        file: Option<PathBuf>,
        /// Use the m-generator construction instead of a file.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        kmax: u32,
    },
    /// Least μ(I²) over normalized staircases with m generators and exponents ≤ bound.
    Search {
        #[arg(long)]
        m: usize,
        /// Largest exponent allowed.
        #[arg(long)]
        bound: u64,
    },
    /// Least μ(I²) over two-degree ideals with a fixed degree gap, per m; writes CSV.
    Scan {
        /// Difference between the two generator degrees.
        #[arg(long)]
        gap: u64,
        /// Inclusive range "A..B", or a single value.
        #[arg(long = "m", value_parser = parse_m_range)]
        m_range: RangeInclusive<usize>,
        #[arg(long)]
        bound: u64,
        /// Destination CSV file.
        #[arg(long)]
        output: PathBuf,
    },
}

fn parse_m_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("invalid integer {t:?}: {e}"))
    };
    let range = match s.split_once("..") {
        Some((lo, hi)) => parse(lo)?..=parse(hi.trim_start_matches('='))?,
        None => {
            let v = parse(s)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    /// Human rendering of the payload.
    #[serde(skip)]
    pub text: String,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Value, text: String) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
            text,
            diagnostics: Vec::new(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Failed => 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),

    #[error("parse error in {source_name} at line {line}, column {column}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Usage(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    /// 1 for domain and I/O failures, 2 for usage and parse errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Io { .. } => 1,
            CliError::Parse { .. } | CliError::Usage(_) => 2,
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

fn ideal_text(ideal: &StaircaseIdeal) -> String {
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    gens.join(", ")
}

/// Reads an ideal file; `-` means stdin.
pub fn read_ideal(path: &Path) -> Result<StaircaseIdeal, CliError> {
    let source_name = path.display().to_string();
    let mut text = String::new();
    let read = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)
    } else {
        File::open(path).and_then(|mut f| f.read_to_string(&mut text))
    };
    read.map_err(|e| CliError::Usage(format!("cannot read {source_name}: {e}")))?;
    parse_ideal(&text, &source_name)
}

pub fn parse_ideal(text: &str, source_name: &str) -> Result<StaircaseIdeal, CliError> {
    StaircaseIdeal::from_json(text).map_err(|e| CliError::Parse {
        source_name: source_name.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn cmd_construct(m: usize, k: Option<u32>) -> Result<CommandResult, CliError> {
    let base = tiny_square_ideal(m)?;
    let k = k.unwrap_or(1);
    if k == 0 {
        return Err(CliError::Usage("k must be ≥ 1".into()));
    }
    let ideal = base.power(k)?;
    let name = if k == 1 {
        "I".to_string()
    } else {
        format!("I^{k}")
    };
    let text = format!(
        "{name} = ({})\nμ({name}) = {}\n",
        ideal_text(&ideal),
        ideal.mu()
    );
    Ok(CommandResult::ok(to_value(&ideal), text))
}

pub fn cmd_verify(m: usize) -> Result<CommandResult, CliError> {
    let ideal = tiny_square_ideal(m)?;
    let report = check_conditions(&ideal)?;
    let mut text = String::new();
    let labels = [
        "(1) u_1 u_m | u_2 u_{m-1}",
        "(2) u_1 u_{m-1} | u_2 u_3, u_{m-2}^2",
        "(3) u_2^2 | u_1 u_3, u_1 u_{m-2}",
        "(4) u_2 u_m | u_3 u_{m-1}, u_{m-2} u_{m-1}",
        "(5) u_{m-1}^2 | u_3 u_m, u_{m-2} u_m",
    ];
    writeln!(text, "m = {m}").unwrap();
    for (label, ok) in labels.iter().zip(report.condition_results) {
        writeln!(text, "  {label}: {}", if ok { "holds" } else { "fails" }).unwrap();
    }
    let predicted: Vec<String> = report
        .predicted_generators
        .iter()
        .map(|g| g.to_string())
        .collect();
    writeln!(text, "predicted G(I^2) = ({})", predicted.join(", ")).unwrap();
    writeln!(text, "μ(I^2) = {}", report.mu_square).unwrap();
    writeln!(text, "verified: {}", report.verified).unwrap();

    let mut result = CommandResult::ok(to_value(&report), text);
    if !report.verified {
        result.status = Status::Failed;
        result
            .diagnostics
            .push(format!("m = {m}: conditions not verified"));
    }
    Ok(result)
}

pub fn cmd_mu(ideal: &StaircaseIdeal, k: u32) -> Result<CommandResult, CliError> {
    if k == 0 {
        return Err(CliError::Usage("k must be ≥ 1".into()));
    }
    let mu = ideal.power(k)?.mu();
    Ok(CommandResult::ok(json!(mu), format!("{mu}\n")))
}

pub fn cmd_power_profile(ideal: &StaircaseIdeal, kmax: u32) -> Result<CommandResult, CliError> {
    if kmax == 0 {
        return Err(CliError::Usage("kmax must be ≥ 1".into()));
    }
    let profile = power_mu_profile(ideal, kmax)?;
    let mut text = String::from("k\tμ(I^k)\n");
    for (k, mu) in &profile {
        writeln!(text, "{k}\t{mu}").unwrap();
    }
    let payload = Value::Array(
        profile
            .iter()
            .map(|&(k, mu)| json!({ "k": k, "mu": mu }))
            .collect(),
    );
    Ok(CommandResult::ok(payload, text))
}

pub fn cmd_search(m: usize, bound: u64, workers: Option<usize>) -> Result<CommandResult, CliError> {
    let options = SearchOptions {
        workers,
        ..SearchOptions::default()
    };
    let outcome = min_mu_square_with(m, bound, options)?;
    let banner = format!("verified within exponent bound B = {bound}");
    let text = format!(
        "m = {m}, B = {bound}: minimum μ(I^2) = {} over {} candidates ({banner})\nwitness: ({})\n",
        outcome.minimum_mu_square,
        outcome.candidates_examined,
        ideal_text(&outcome.witness)
    );
    let mut payload = to_value(&outcome);
    payload["banner"] = json!(banner);
    Ok(CommandResult::ok(payload, text))
}

pub fn cmd_scan(
    gap: u64,
    m_range: RangeInclusive<usize>,
    bound: u64,
    output: &Path,
    workers: Option<usize>,
) -> Result<CommandResult, CliError> {
    let rows = two_degree_scan(gap, m_range, bound, workers)?;
    let io_err = |source| CliError::Io {
        path: output.display().to_string(),
        source,
    };
    let file = File::create(output).map_err(io_err)?;
    write_scan_csv(&rows, BufWriter::new(file)).map_err(io_err)?;

    let mut text = format!("gap = {gap}, B = {bound} -> {}\n", output.display());
    for row in &rows {
        let min = row
            .min_mu_square
            .map_or_else(|| "none".to_string(), |v| v.to_string());
        writeln!(
            text,
            "  m = {}: min μ(I^2) = {min} ({} ideals)",
            row.m, row.candidates
        )
        .unwrap();
    }
    Ok(CommandResult::ok(to_value(&rows), text))
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<CommandResult, CliError> {
    let workers = cli.workers.map(|w| w as usize);
    match &cli.command {
        Command::Construct { m, k } => cmd_construct(*m, *k),
        Command::Verify { m } => cmd_verify(*m),
        Command::Mu { file, k } => cmd_mu(&read_ideal(file)?, *k),
        Command::PowerProfile { file, m, kmax } => {
            let ideal = match (file, m) {
                (Some(file), _) => read_ideal(file)?,
                (None, Some(m)) => tiny_square_ideal(*m)?,
                (None, None) => return Err(CliError::Usage("need an ideal file or --m".into())),
            };
            cmd_power_profile(&ideal, *kmax)
        }
        Command::Search { m, bound } => cmd_search(*m, *bound, workers),
        Command::Scan {
            gap,
            m_range,
            bound,
            output,
        } => cmd_scan(*gap, m_range.clone(), *bound, output, workers),
    }
}

/// Renders a result the way the binary prints it on stdout.
pub fn render(result: &CommandResult, json_mode: bool) -> String {
    if json_mode {
        let mut s = serde_json::to_string(&result.payload).expect("payload serializes");
        s.push('\n');
        s
    } else {
        result.text.clone()
    }
}
