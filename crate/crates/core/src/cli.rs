//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Result;
use crate::format::{render_gf, OutputFormat, PolyTable};
use crate::genfunc::{chebyshev_poly, closed_form_gf, second_kind_poly};
use crate::numeric::{poly_dimension_check, verify_first_kind, verify_poly_ratio, VerificationReport, DEFAULT_SEED};
use crate::recurrence::{RecurrenceTable, StepOrder};
use crate::rootsystem::{AlgebraId, RootSystem, Weight};
use crate::{Basis, Kind, Rational};

pub const SEED_ENV: &str = "WEYLCHEB_SEED";
pub const MAX_INDEX: u32 = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Table,
    Genfunc,
    Verify,
    RecurrenceTable,
    Crosscheck,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: Command,
    pub algebra: AlgebraId,
    pub kind: Kind,
    pub max_m: u32,
    pub max_n: u32,
    pub format: OutputFormat,
    pub seed: u64,
    pub samples: usize,
    pub tol: f64,
    pub output_path: Option<PathBuf>,
}

#[derive(Parser)]
#[command(name = "weylcheb", version, about = "Multivariate Chebyshev polynomials of rank-2 Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Polynomial table from the generating function.
    Table(CommonArgs),
    /// Closed-form generating function: denominators and numerator table.
    Genfunc(CommonArgs),
    /// Numerical checks of every table entry.
    Verify(CommonArgs),
    /// Polynomial table from the multiplication-rule recurrence.
    RecurrenceTable(CommonArgs),
    /// Compares the two table constructions byte for byte.
    Crosscheck(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, default_value = "g2", value_parser = parse_algebra)]
    algebra: AlgebraId,
    #[arg(long, default_value = "second", value_parser = parse_kind)]
    kind: Kind,
    #[arg(long, default_value_t = 4)]
    max_m: u32,
    #[arg(long, default_value_t = 4)]
    max_n: u32,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
    /// RNG seed; falls back to the environment, then a fixed default.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_algebra(s: &str) -> std::result::Result<AlgebraId, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

fn parse_kind(s: &str) -> std::result::Result<Kind, String> {
    match s.to_ascii_lowercase().as_str() {
        "first" => Ok(Kind::First),
        "second" => Ok(Kind::Second),
        other => Err(format!("unknown kind {other:?}; expected first or second")),
    }
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

impl CliConfig {
    /// Parses and validates arguments; `Err` carries the message and exit code.
    pub fn from_args<I, T>(args: I) -> std::result::Result<Self, (String, i32)>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            (e.render().to_string(), code)
        })?;
        let (command, a) = match cli.command {
            CliCommand::Table(a) => (Command::Table, a),
            CliCommand::Genfunc(a) => (Command::Genfunc, a),
            CliCommand::Verify(a) => (Command::Verify, a),
            CliCommand::RecurrenceTable(a) => (Command::RecurrenceTable, a),
            CliCommand::Crosscheck(a) => (Command::Crosscheck, a),
        };
        let env_seed = std::env::var(SEED_ENV).ok();
        let seed = match (a.seed, env_seed) {
            (Some(s), _) => s,
            (None, Some(v)) => v
                .trim()
                .parse()
                .map_err(|_| (format!("{SEED_ENV} must be an unsigned integer, got {v:?}"), EXIT_USAGE))?,
            (None, None) => DEFAULT_SEED,
        };
        let config = Self {
            command,
            algebra: a.algebra,
            kind: a.kind,
            max_m: a.max_m,
            max_n: a.max_n,
            format: a.format,
            seed,
            samples: a.samples,
            tol: a.tol,
            output_path: a.output,
        };
        config.validate().map_err(|m| (m, EXIT_USAGE))?;
        Ok(config)
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.max_m > MAX_INDEX || self.max_n > MAX_INDEX {
            return Err(format!("--max-m and --max-n must not exceed {MAX_INDEX}"));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err("--tol must be a positive number".into());
        }
        if self.samples == 0 {
            return Err("--samples must be positive".into());
        }
        if matches!(self.command, Command::RecurrenceTable | Command::Crosscheck) && self.kind != Kind::Second {
            return Err("recurrence tables exist for the second kind only".into());
        }
        Ok(())
    }
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CliConfig::from_args(args) {
        Ok(config) => run(&config),
        Err((msg, code)) => {
            if code == EXIT_OK {
                print!("{msg}");
            } else {
                eprint!("{msg}");
                if !msg.ends_with('\n') {
                    eprintln!();
                }
            }
            code
        }
    }
}

/// Runs a validated configuration, writing to the output path or stdout.
pub fn run(config: &CliConfig) -> i32 {
    if let Err(msg) = config.validate() {
        eprintln!("{msg}");
        return EXIT_USAGE;
    }
    let (text, code) = match execute(config) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAILURE;
        }
    };
    let written = match &config.output_path {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_FAILURE;
    }
    code
}

/// Produces the command's output text and exit code without doing any I/O.
pub fn execute(config: &CliConfig) -> Result<(String, i32)> {
    let rs = RootSystem::new(config.algebra);
    let basis = Basis::new(&rs, config.kind)?;
    match config.command {
        Command::Table => Ok((genfunc_table(config, &basis)?.render(config.format), EXIT_OK)),
        Command::RecurrenceTable => Ok((recurrence_table(config, &basis)?.render(config.format), EXIT_OK)),
        Command::Genfunc => {
            let gf = closed_form_gf(&basis)?;
            Ok((render_gf(config.algebra, &gf, config.format), EXIT_OK))
        }
        Command::Crosscheck => {
            let left = genfunc_table(config, &basis)?.render(config.format);
            let right = recurrence_table(config, &basis)?.render(config.format);
            if left == right {
                let count = PolyTable::<Rational>::indices(config.algebra, config.max_m, config.max_n).len();
                Ok((format!("crosscheck passed: {count} polynomials identical\n"), EXIT_OK))
            } else {
                let line = left
                    .lines()
                    .zip(right.lines())
                    .position(|(a, b)| a != b)
                    .map_or_else(|| "length differs".to_string(), |i| format!("first difference at line {}", i + 1));
                Ok((format!("crosscheck FAILED: {line}\n"), EXIT_FAILURE))
            }
        }
        Command::Verify => verify(config, &basis),
    }
}

fn genfunc_table(config: &CliConfig, basis: &Basis) -> Result<PolyTable<Rational>> {
    let indices = PolyTable::<Rational>::indices(config.algebra, config.max_m, config.max_n);
    let polys = parallel_map(&indices, |&(m, n)| {
        let idx = if basis.rank() == 1 { vec![m] } else { vec![m, n] };
        chebyshev_poly(basis, &idx)
    });
    let entries = indices
        .iter()
        .zip(polys)
        .map(|(&(m, n), p)| Ok((m, n, p?)))
        .collect::<Result<_>>()?;
    Ok(table(config, entries))
}

fn recurrence_table(config: &CliConfig, basis: &Basis) -> Result<PolyTable<Rational>> {
    let indices = PolyTable::<Rational>::indices(config.algebra, config.max_m, config.max_n);
    let weight = |m: u32, n: u32| {
        if basis.rank() == 1 {
            Weight::new(&[i64::from(m)])
        } else {
            Weight::new2(i64::from(m), i64::from(n))
        }
    };
    let targets: Vec<Weight> = indices.iter().map(|&(m, n)| weight(m, n)).collect();
    let rec = RecurrenceTable::build(basis, &targets, StepOrder::XFirst)?;
    let entries = indices
        .iter()
        .map(|&(m, n)| (m, n, rec.get(&weight(m, n)).expect("target inside table")))
        .collect();
    Ok(table(config, entries))
}

fn table(config: &CliConfig, entries: Vec<(u32, u32, crate::Poly)>) -> PolyTable<Rational> {
    PolyTable {
        algebra: config.algebra,
        kind: config.kind,
        max_m: config.max_m,
        max_n: if config.algebra.rank() == 1 { 0 } else { config.max_n },
        entries,
    }
}

#[derive(serde::Serialize)]
struct VerifyEntry {
    m: u32,
    n: u32,
    passed: bool,
    report: VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    dimension: Option<(String, String)>,
}

fn verify(config: &CliConfig, basis: &Basis) -> Result<(String, i32)> {
    let indices = PolyTable::<Rational>::indices(config.algebra, config.max_m, config.max_n);
    let results = parallel_map(&indices, |&(m, n)| -> Result<VerifyEntry> {
        let idx = if basis.rank() == 1 { vec![m] } else { vec![m, n] };
        let (report, dimension) = match config.kind {
            Kind::Second => {
                let poly = second_kind_poly(basis, &idx)?;
                let (left, right) = poly_dimension_check(basis, &poly, &idx);
                (
                    verify_poly_ratio(basis, &poly, &idx, config.samples, config.seed)?,
                    Some((left.to_string(), right.to_string())),
                )
            }
            Kind::First => (verify_first_kind(basis, &idx, config.samples, config.seed)?, None),
        };
        let dims_agree = dimension.as_ref().is_none_or(|(l, r)| l == r);
        Ok(VerifyEntry {
            m,
            n,
            passed: report.within(config.tol) && dims_agree,
            report,
            dimension,
        })
    });
    let entries = results.into_iter().collect::<Result<Vec<_>>>()?;
    let failures = entries.iter().filter(|e| !e.passed).count();
    let text = match config.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "schema": crate::format::SCHEMA_VERSION,
                "algebra": config.algebra,
                "kind": config.kind,
                "seed": config.seed,
                "tol": config.tol,
                "results": entries,
            }))
            .expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Latex | OutputFormat::Plain => {
            let mut s = String::new();
            for e in &entries {
                let dim = e
                    .dimension
                    .as_ref()
                    .map(|(l, r)| format!(", dim {l} vs {r}"))
                    .unwrap_or_default();
                s.push_str(&format!(
                    "({},{}) {} max error {:.3e} over {} samples, {} skipped{dim}\n",
                    e.m,
                    e.n,
                    if e.passed { "ok  " } else { "FAIL" },
                    e.report.max_abs_error,
                    e.report.samples,
                    e.report.skipped,
                ));
            }
            s.push_str(&format!("{} checked, {failures} failed\n", entries.len()));
            s
        }
    };
    Ok((text, if failures == 0 { EXIT_OK } else { EXIT_FAILURE }))
}

/// Maps `f` over `items` on all available cores, keeping input order.
fn parallel_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
    let chunk = items.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}
