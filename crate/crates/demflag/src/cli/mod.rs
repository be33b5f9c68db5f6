//! The `demflag` command line: argument parsing, dispatch and rendering.
//!
//! [`run`] takes the raw arguments and returns what should be printed and the
//! exit code, so the binary stays a thin wrapper and tests can drive every
//! subcommand in-process.

pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::characters::{dim_demazure, graded_character};
use crate::closed_forms::{
    carlitz_closed_a23w, cf_1to2, cf_1to2_weighted, cf_2to3, cf_2to3_weighted, mock_theta, x_pochhammer,
    ClosedFormError,
};
use crate::flag_engine::{graded_engine, mult_table, numeric_engine, FlagError, Module};
use crate::gen_series::{closed_a_1m, closed_a_m_m1, d_poly, series_a, series_a_at_one, GenSeriesError, SeriesSpec};
use crate::qpoly::{QPoly, QPolyError, RatFunX, XSeries};

use output::{integer_series_terms, qpoly_terms, query, xseries_terms, OutputRecord, Term};
use verify::{run_suite, Profile, Suite};

#[derive(Debug, Parser)]
#[command(name = "demflag", version, about = "Graded multiplicities in Demazure flags of type A2(2)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One graded multiplicity [D(m',s) : D(m,n)]_q.
    Mult(MultArgs),
    /// A generating series in x of multiplicities.
    Series(SeriesArgs),
    /// All multiplicities up to a weight.
    Table(TableArgs),
    /// The graded character of D(m,n).
    Char(CharArgs),
    /// The dimension of D(m,n).
    Dim(DimArgs),
    /// A closed form, computed independently of the flag engine.
    Closed(ClosedArgs),
    /// Runs the identity suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Step,
    Partition,
    Both,
}

#[derive(Debug, Args)]
pub struct MultArgs {
    /// Level m' of the flagged module.
    #[arg(long)]
    pub from_level: u32,
    /// Weight s of the flagged module.
    #[arg(long, allow_negative_numbers = true)]
    pub weight: i64,
    /// Level m of the flag.
    #[arg(long)]
    pub to_level: u32,
    /// Weight n of the counted submodule.
    #[arg(long, allow_negative_numbers = true)]
    pub target: i64,
    /// Report q^r * w as the pair (r, w).
    #[arg(long)]
    pub weighted: bool,
    /// Which recursion computes the value.
    #[arg(long, value_enum, default_value_t = EngineChoice::Step)]
    pub engine: EngineChoice,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Level m' of the flagged modules.
    #[arg(long)]
    pub from_level: u32,
    /// Level m of the flag.
    #[arg(long)]
    pub to_level: u32,
    /// Weight n of the counted submodule.
    #[arg(long, allow_negative_numbers = true)]
    pub target: i64,
    /// Number of x coefficients.
    #[arg(long, default_value_t = 10)]
    pub x_order: usize,
    /// Divide each coefficient by its lowest q power.
    #[arg(long)]
    pub weighted: bool,
    /// Evaluate at q = 1.
    #[arg(long)]
    pub q1: bool,
    /// Keep only x powers of this parity.
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub parity: Option<u8>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Level m' of the flagged modules.
    #[arg(long)]
    pub from_level: u32,
    /// Level m of the flag.
    #[arg(long)]
    pub to_level: u32,
    /// Largest weight s.
    #[arg(long, default_value_t = 10)]
    pub s_max: u32,
}

#[derive(Debug, Args)]
pub struct CharArgs {
    /// Level m.
    #[arg(long)]
    pub level: u32,
    /// Weight n.
    #[arg(long)]
    pub weight: u32,
    /// Level of the length-one flag used to assemble the character.
    #[arg(long)]
    pub via: Option<u32>,
}

#[derive(Debug, Args)]
pub struct DimArgs {
    /// Level m.
    #[arg(long)]
    pub level: u32,
    /// Weight n.
    #[arg(long)]
    pub weight: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClosedWhich {
    #[value(name = "1to2")]
    OneToTwo,
    #[value(name = "2to3")]
    TwoToThree,
    Carlitz,
    Mocktheta,
    Phi12,
    Thmgenser1,
    Dpoly,
    #[value(name = "closedA")]
    ClosedA,
}

#[derive(Debug, Args)]
pub struct ClosedArgs {
    /// Closed form to evaluate.
    #[arg(long, value_enum)]
    pub which: ClosedWhich,
    /// Weight s (1to2).
    #[arg(long)]
    pub s: Option<i64>,
    /// Index p (1to2, 2to3).
    #[arg(long)]
    pub p: Option<i64>,
    /// Weight n (2to3, carlitz, phi12, thmgenser1, closedA, dpoly).
    #[arg(long)]
    pub n: Option<i64>,
    /// Parity k of the x powers (carlitz).
    #[arg(long)]
    pub k: Option<u8>,
    /// Level m (thmgenser1, closedA, dpoly).
    #[arg(long)]
    pub level: Option<u32>,
    /// Which mock theta function, 0 or 1.
    #[arg(long)]
    pub index: Option<u8>,
    /// Truncate in q below this power (mocktheta).
    #[arg(long)]
    pub q_order: Option<i64>,
    /// Number of x coefficients for series results.
    #[arg(long, default_value_t = 10)]
    pub x_order: usize,
    /// Use the weight-normalised form (1to2, 2to3).
    #[arg(long)]
    pub weighted: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which criteria to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Scales every bound; 40 reproduces the acceptance ranges.
    #[arg(long, default_value_t = verify::REFERENCE_MAX, value_parser = clap::value_parser!(u32).range(1..))]
    pub max: u32,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Closed(#[from] ClosedFormError),
    #[error(transparent)]
    Series(#[from] GenSeriesError),
    #[error(transparent)]
    Poly(#[from] QPolyError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 for runtime failures.
    pub fn exit_code(&self) -> i32 {
        let flag = |e: &FlagError| match e {
            FlagError::InvalidLevel(_) | FlagError::InvalidShape(_) => 2,
            FlagError::MemoLimitExceeded { .. } | FlagError::Internal(_) => 1,
        };
        match self {
            CliError::Usage(_) => 2,
            CliError::Flag(e) | CliError::Series(GenSeriesError::Flag(e)) => flag(e),
            CliError::Closed(ClosedFormError::OutOfRange(_)) | CliError::Series(GenSeriesError::OutOfRange(_)) => 2,
            CliError::Closed(_) | CliError::Series(_) | CliError::Poly(_) | CliError::Io(_) => 1,
        }
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A computed result in every format it can be rendered in.
struct Rendered {
    record: Value,
    text: String,
    csv: Vec<Vec<String>>,
    failed: bool,
}

impl Rendered {
    fn from_record(record: OutputRecord, csv: Vec<Vec<String>>) -> Self {
        let mut text = record.result.display.clone();
        for (k, v) in &record.result.extra {
            let v = v.as_str().map_or_else(|| v.to_string(), str::to_string);
            text.push_str(&format!("\n{k}: {v}"));
        }
        Rendered { record: serde_json::to_value(&record).expect("records always serialize"), text, csv, failed: false }
    }

    fn render(&self, format: Format) -> Result<String, CliError> {
        Ok(match format {
            Format::Text => format!("{}\n", self.text),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.record).expect("json values serialize")),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(|e| CliError::Io(e.into()))?;
                }
                String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?)
                    .expect("csv output is utf-8")
            }
        })
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Invocation { code, stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok((stdout, failed)) => Invocation { code: i32::from(failed), stdout, stderr: String::new() },
        Err(e) => Invocation { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cli: &Cli) -> Result<(String, bool), CliError> {
    let rendered = match &cli.command {
        Command::Mult(a) => cmd_mult(a)?,
        Command::Series(a) => cmd_series(a)?,
        Command::Table(a) => cmd_table(a)?,
        Command::Char(a) => cmd_char(a)?,
        Command::Dim(a) => cmd_dim(a)?,
        Command::Closed(a) => cmd_closed(a)?,
        Command::Verify(a) => cmd_verify(a),
    };
    let body = rendered.render(cli.format)?;
    match &cli.out {
        Some(path) => {
            std::fs::write(path, body)?;
            Ok((String::new(), rendered.failed))
        }
        None => Ok((body, rendered.failed)),
    }
}

/// Times `f` and records the memo activity of the engine it used.
fn metered<T>(
    name: &str,
    numeric: bool,
    f: impl FnOnce() -> Result<T, CliError>,
) -> Result<(T, output::EngineMeta), CliError> {
    let stats = || {
        if numeric {
            (numeric_engine().memo_hits(), numeric_engine().memo_len())
        } else {
            (graded_engine().memo_hits(), graded_engine().memo_len())
        }
    };
    let (hits0, _) = stats();
    let start = Instant::now();
    let v = f()?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let (hits1, entries) = stats();
    Ok((v, output::EngineMeta { engine: name.into(), memo_hits: hits1 - hits0, memo_entries: entries, elapsed_ms }))
}

fn term_rows(terms: &[Term]) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["x_exp".into(), "q_exp".into(), "coeff".into()]];
    rows.extend(
        terms
            .iter()
            .map(|t| vec![t.x_exp.map(|x| x.to_string()).unwrap_or_default(), t.q_exp.to_string(), t.coeff.clone()]),
    );
    rows
}

fn plain(record: OutputRecord) -> Rendered {
    let rows = term_rows(&record.result.terms);
    Rendered::from_record(record, rows)
}

fn cmd_mult(a: &MultArgs) -> Result<Rendered, CliError> {
    let q = query(json!({
        "from_level": a.from_level, "weight": a.weight, "to_level": a.to_level,
        "target": a.target, "weighted": a.weighted,
    }));
    let engine = graded_engine();
    let by_step = || Ok::<_, CliError>(engine.chain(a.from_level, a.weight, a.to_level, a.target)?);
    let by_partition = || -> Result<QPoly, CliError> {
        if a.from_level == 0 || a.to_level < a.from_level {
            return Err(FlagError::InvalidLevel(format!("need 1 <= {} <= {}", a.from_level, a.to_level)).into());
        }
        let s = u32::try_from(a.weight).map_err(|_| FlagError::InvalidShape(format!("weight {}", a.weight)))?;
        Ok(engine.module(&Module::demazure(a.from_level, s)?, a.to_level, a.target)?)
    };
    let name = match a.engine {
        EngineChoice::Step => "step",
        EngineChoice::Partition => "partition",
        EngineChoice::Both => "both",
    };
    let ((value, other), meta) = metered(name, false, || {
        Ok(match a.engine {
            EngineChoice::Step => (by_step()?, None),
            EngineChoice::Partition => (by_partition()?, None),
            EngineChoice::Both => (by_step()?, Some(by_partition()?)),
        })
    })?;
    let mut record = if a.weighted {
        let (r, w) = value.weight_split();
        OutputRecord::new(q, w.to_string(), qpoly_terms(&w)).with_extra("shift", r)
    } else {
        OutputRecord::new(q, value.to_string(), qpoly_terms(&value))
    };
    if let Some(p) = other {
        record = record.with_extra("partition", p.to_string()).with_extra("match", p == value);
    }
    record.engine = meta;
    Ok(plain(record))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_series(a: &SeriesArgs) -> Result<Rendered, CliError> {
    let q = query(json!({
        "from_level": a.from_level, "to_level": a.to_level, "target": a.target,
        "x_order": a.x_order, "weighted": a.weighted, "q1": a.q1, "parity": a.parity,
    }));
    let mut spec = SeriesSpec::new(a.from_level, a.to_level, a.target, a.x_order);
    if a.weighted {
        spec = spec.weighted();
    }
    if let Some(k) = a.parity {
        spec = spec.parity(k);
    }
    let mut record = if a.q1 && !a.weighted && a.parity.is_none() {
        let (v, meta) = metered("step", true, || Ok(series_a_at_one(a.from_level, a.to_level, a.target, a.x_order)?))?;
        let mut r = OutputRecord::new(q, join(&v), integer_series_terms(&v));
        r.engine = meta;
        r
    } else {
        let (s, meta) = metered("step", false, || Ok(series_a(&spec)?))?;
        let mut r = if a.q1 {
            let v = s.eval_q_one();
            OutputRecord::new(q, join(&v), integer_series_terms(&v))
        } else {
            OutputRecord::new(q, join(s.coeffs()), xseries_terms(&s))
        };
        r.engine = meta;
        r
    };
    record.engine.engine = "step".into();
    Ok(plain(record))
}

fn cmd_table(a: &TableArgs) -> Result<Rendered, CliError> {
    let q = query(json!({ "from_level": a.from_level, "to_level": a.to_level, "s_max": a.s_max }));
    let (table, meta) = metered("step", false, || Ok(mult_table(a.from_level, a.to_level, i64::from(a.s_max))?))?;
    let mut rows = vec![vec!["s".to_string(), "n".to_string(), "multiplicity".to_string()]];
    let mut terms = Vec::new();
    let mut lines = Vec::new();
    for (s, n, v) in table.entries().filter(|(_, _, v)| !v.is_zero()) {
        rows.push(vec![s.to_string(), n.to_string(), v.to_string()]);
        lines.push(format!("s={s} n={n}: {v}"));
        terms.extend(qpoly_terms(v).into_iter().map(|t| Term { s: Some(s), n: Some(n), ..t }));
    }
    let mut record = OutputRecord::new(q, lines.join("\n"), terms);
    record.engine = meta;
    Ok(Rendered::from_record(record, rows))
}

fn cmd_char(a: &CharArgs) -> Result<Rendered, CliError> {
    let via = a.via.unwrap_or(a.level.max(a.weight));
    let q = query(json!({ "level": a.level, "weight": a.weight, "via": via }));
    let (ch, meta) = metered("step", false, || Ok(graded_character(a.level, a.weight, via)?))?;
    let mut rows = vec![vec!["j".to_string(), "grade".to_string(), "multiplicity".to_string()]];
    let mut terms = Vec::new();
    for (j, p, m) in ch.triples() {
        rows.push(vec![j.to_string(), p.to_string(), m.to_string()]);
        terms.push(Term { j: Some(j), ..Term::q(p, &BigInt::from(m)) });
    }
    let mut record =
        OutputRecord::new(q, ch.to_string(), terms).with_extra("dimension", ch.total_dimension().to_string());
    record.engine = meta;
    Ok(Rendered::from_record(record, rows))
}

fn cmd_dim(a: &DimArgs) -> Result<Rendered, CliError> {
    let q = query(json!({ "level": a.level, "weight": a.weight }));
    let d = BigInt::from(dim_demazure(a.level, a.weight)?);
    Ok(plain(OutputRecord::new(q, d.to_string(), vec![Term::q(0, &d)])))
}

fn need<T: Copy>(v: Option<T>, flag: &str, which: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("closed --which {which} needs --{flag}")))
}

fn rational(q: std::collections::BTreeMap<String, Value>, r: &RatFunX, x_order: usize) -> Result<Rendered, CliError> {
    let v = r.expand(x_order)?;
    Ok(plain(OutputRecord::new(q, r.to_string(), integer_series_terms(&v)).with_extra("expansion", join(&v))))
}

fn series_record(q: std::collections::BTreeMap<String, Value>, s: &XSeries) -> Rendered {
    plain(OutputRecord::new(q, join(s.coeffs()), xseries_terms(s)))
}

fn cmd_closed(a: &ClosedArgs) -> Result<Rendered, CliError> {
    let which = ClosedWhich::to_possible_value(&a.which).map(|v| v.get_name().to_string()).unwrap_or_default();
    let w = which.as_str();
    let q = query(json!({
        "which": w, "s": a.s, "p": a.p, "n": a.n, "k": a.k, "level": a.level,
        "index": a.index, "q_order": a.q_order, "x_order": a.x_order, "weighted": a.weighted,
    }));
    let poly = |q, v: QPoly| Ok(plain(OutputRecord::new(q, v.to_string(), qpoly_terms(&v))));
    let nonneg = |v: i64, flag: &str| {
        if v < 0 {
            Err(CliError::Usage(format!("--{flag} must be non-negative")))
        } else {
            Ok(v)
        }
    };
    match a.which {
        ClosedWhich::OneToTwo => {
            let (s, p) = (nonneg(need(a.s, "s", w)?, "s")?, nonneg(need(a.p, "p", w)?, "p")?);
            poly(q, if a.weighted { cf_1to2_weighted(s, p) } else { cf_1to2(s, p) })
        }
        ClosedWhich::TwoToThree => {
            let (n, p) = (nonneg(need(a.n, "n", w)?, "n")?, nonneg(need(a.p, "p", w)?, "p")?);
            poly(q, if a.weighted { cf_2to3_weighted(n, p) } else { cf_2to3(n, p) })
        }
        ClosedWhich::Carlitz => {
            let n = nonneg(need(a.n, "n", w)?, "n")?;
            let s = carlitz_closed_a23w(n, need(a.k, "k", w)?, a.x_order)?;
            Ok(series_record(q, &s))
        }
        ClosedWhich::Mocktheta => poly(q, mock_theta(need(a.index, "index", w)?, need(a.q_order, "q-order", w)?)?),
        ClosedWhich::Phi12 => {
            let n = nonneg(need(a.n, "n", w)?, "n")? as usize;
            let den = x_pochhammer(&QPoly::one(), 1, &QPoly::q_pow(2), n, a.x_order);
            Ok(series_record(q, &den.inverse()?))
        }
        ClosedWhich::Thmgenser1 => {
            let n = nonneg(need(a.n, "n", w)?, "n")? as u64;
            rational(q, &closed_a_1m(need(a.level, "level", w)?, n)?, a.x_order)
        }
        ClosedWhich::ClosedA => {
            let n = nonneg(need(a.n, "n", w)?, "n")? as u64;
            rational(q, &closed_a_m_m1(need(a.level, "level", w)?, n)?, a.x_order)
        }
        ClosedWhich::Dpoly => {
            let n = nonneg(need(a.n, "n", w)?, "n")? as u64;
            let d = d_poly(need(a.level, "level", w)?, n)?;
            let terms = integer_series_terms(d.coeffs());
            Ok(plain(OutputRecord::new(q, d.to_string(), terms)))
        }
    }
}

fn cmd_verify(a: &VerifyArgs) -> Rendered {
    let profile = Profile::scaled(a.max);
    let reports = run_suite(a.suite, &profile);
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
    lines.push(if failed == 0 {
        format!("all {} criteria passed", reports.len())
    } else {
        format!("{failed} of {} criteria failed", reports.len())
    });
    let mut rows = vec![["criterion", "title", "status", "checks", "counterexample"].map(String::from).to_vec()];
    let mut json_reports = Vec::new();
    for r in &reports {
        let status = if r.passed() { "pass" } else { "fail" };
        rows.push(vec![
            r.id.to_string(),
            r.title.to_string(),
            status.to_string(),
            r.checks.to_string(),
            r.failure.clone().unwrap_or_default(),
        ]);
        json_reports.push(json!({
            "criterion": r.id, "title": r.title, "passed": r.passed(), "checks": r.checks,
            "counterexample": r.failure, "elapsed_ms": r.elapsed.as_secs_f64() * 1e3,
        }));
    }
    let suite = Suite::to_possible_value(&a.suite).map(|v| v.get_name().to_string()).unwrap_or_default();
    Rendered {
        record: json!({ "query": { "suite": suite, "max": a.max }, "passed": failed == 0, "criteria": json_reports }),
        text: lines.join("\n"),
        csv: rows,
        failed: failed > 0,
    }
}
