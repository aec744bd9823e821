//! Command-line front end.
//!
//! [`run`] parses arguments, executes one command and returns the rendered
//! output together with the process exit code:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 1    | invalid input                             |
//! | 2    | internal mismatch between two computations|
//! | 3    | negative answer (weight not in the class) |
//!
//! JSON output is an envelope `{backend, command, elapsed_ms, input, result}`
//! with sorted keys. Only `elapsed_ms` varies between identical runs.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::counting::{closed_form_count, table_d, table_f, CountReport, D_TABLE_M2, F_TABLE_M2};
use crate::error::Error;
use crate::scan::{scan, ScanConfig, ScanFilter, ScanRow};
use crate::weights::{
    check_n3_criteria, enumerate_admissible_with, is_in_class, obstruction_set, resonances,
    validate_weight, Backend, Failure, MembershipVerdict, ObstructionSet, ResonanceWitness,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

/// Environment variable holding the default `--format`.
pub const FORMAT_ENV: &str = "QCWEIGHTS_FORMAT";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Brute,
    Sieve,
    Apery,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Brute => Backend::Brute,
            BackendArg::Sieve => Backend::Sieve,
            BackendArg::Apery => Backend::Apery,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    InClass,
    ResonanceFree,
    Both,
    Disagree,
}

impl From<FilterArg> for ScanFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => ScanFilter::All,
            FilterArg::InClass => ScanFilter::InClass,
            FilterArg::ResonanceFree => ScanFilter::ResonanceFree,
            FilterArg::Both => ScanFilter::Both,
            FilterArg::Disagree => ScanFilter::Disagree,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qcweights",
    version,
    about = "Exact analysis of quasi-circular domain weights"
)]
pub struct Cli {
    /// Output format (csv only for scan)
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide class membership of a weight
    Classify {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        weights: Vec<i64>,
    },
    /// Obstruction set of a prefix for window M
    Iset {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        prefix: Vec<i64>,
        #[arg(long = "M", value_name = "M", allow_negative_numbers = true)]
        window: i64,
        #[arg(long, value_enum, default_value_t = BackendArg::Sieve)]
        backend: BackendArg,
    },
    /// All resonances of a weight
    Resonances {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        weights: Vec<i64>,
    },
    /// Admissible next weights in window M
    Enumerate {
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        prefix: Vec<i64>,
        #[arg(long = "M", value_name = "M", allow_negative_numbers = true)]
        window: i64,
        #[arg(long, value_enum, default_value_t = BackendArg::Sieve)]
        backend: BackendArg,
    },
    /// Gap count of window 2 for a pair, closed form against enumeration
    Count {
        #[arg(allow_negative_numbers = true)]
        m1: i64,
        #[arg(allow_negative_numbers = true)]
        m2: i64,
    },
    /// Print a reference table (d-table or f-table)
    Table { name: String },
    /// Sweep all weights of length n with entries up to max
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long = "max")]
        max_weight: u64,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[arg(long, value_enum, default_value_t = BackendArg::Sieve)]
        backend: BackendArg,
        /// Worker threads (0 = one per core)
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failed(code: i32, message: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::OracleMismatch(_) => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome::failed(EXIT_INVALID, rendered)
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}

/// Output of a command before rendering.
struct Report {
    command: &'static str,
    input: Value,
    backend: Option<Backend>,
    result: Value,
    text: String,
    csv: Option<String>,
    code: i32,
}

pub fn execute(cli: &Cli) -> Outcome {
    let started = Instant::now();
    let report = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => return Outcome::failed(exit_code_for(&e), format!("error: {e}\n")),
    };
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;

    let stdout = match cli.format {
        Format::Text => report.text,
        Format::Json => {
            let envelope = json!({
                "command": report.command,
                "input": report.input,
                "backend": report.backend.map(Backend::name),
                "result": report.result,
                "elapsed_ms": elapsed_ms,
            });
            let mut s = serde_json::to_string_pretty(&envelope).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Csv => match report.csv {
            Some(csv) => csv,
            None => {
                return Outcome::failed(
                    EXIT_INVALID,
                    format!(
                        "error: csv output is only available for scan, not {}\n",
                        report.command
                    ),
                )
            }
        },
    };

    let mut stderr = String::new();
    if report.code == EXIT_MISMATCH {
        stderr.push_str("error: internal mismatch detected\n");
    }
    Outcome {
        code: report.code,
        stdout,
        stderr,
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result types serialize")
}

fn positive(raw: &[i64]) -> Result<Vec<u64>, Error> {
    if raw.len() < 2 {
        return Err(Error::TooShort(raw.len()));
    }
    raw.iter()
        .enumerate()
        .map(|(idx, &v)| {
            u64::try_from(v)
                .ok()
                .filter(|&v| v > 0)
                .ok_or(Error::NonPositive {
                    position: idx + 1,
                    value: v,
                })
        })
        .collect()
}

fn window_arg(window: i64) -> Result<u64, Error> {
    u64::try_from(window)
        .ok()
        .filter(|&w| w >= 1)
        .ok_or(Error::InvalidWindow)
}

fn dispatch(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Classify { weights } => classify(weights),
        Command::Iset {
            prefix,
            window,
            backend,
        } => iset(prefix, *window, (*backend).into()),
        Command::Resonances { weights } => resonance_list(weights),
        Command::Enumerate {
            prefix,
            window,
            backend,
        } => enumerate(prefix, *window, (*backend).into()),
        Command::Count { m1, m2 } => count(*m1, *m2),
        Command::Table { name } => table(name),
        Command::Scan {
            n,
            max_weight,
            filter,
            backend,
            threads,
        } => scan_command(ScanConfig {
            n: *n,
            max_weight: *max_weight,
            filter: (*filter).into(),
            backend: (*backend).into(),
            threads: *threads,
        }),
    }
}

pub(crate) fn braces(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

fn tuple(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("({})", inner.join(", "))
}

fn describe_failure(f: &Failure) -> String {
    match f {
        Failure::BaseCaseM1 => "base-case-m1 (m1 must be at least 2)".into(),
        Failure::BaseCaseDivisibility => "base-case-divisibility (m1 divides m2)".into(),
        Failure::NoWindowExists { level, prefix_sum } => {
            format!("no-window-exists (level {level}: m{level} is a multiple of {prefix_sum})")
        }
        Failure::ObstructionSetHit { level, window } => {
            format!("obstruction-set-hit (level {level}, window {window})")
        }
    }
}

fn classify(raw: &[i64]) -> Result<Report, Error> {
    let weight = validate_weight(raw)?;
    let verdict: MembershipVerdict = is_in_class(&weight);
    let criteria = if weight.len() == 3 {
        Some(check_n3_criteria(&weight)?)
    } else {
        None
    };

    let mut text = String::new();
    writeln!(text, "weight: {weight}").unwrap();
    writeln!(text, "in_class: {}", verdict.in_class).unwrap();
    writeln!(text, "witnesses: {:?}", verdict.witnesses).unwrap();
    if let Some(f) = &verdict.failure {
        writeln!(text, "failure: {}", describe_failure(f)).unwrap();
    }
    if let Some(c) = &criteria {
        let tags: Vec<&str> = c.iter().map(|t| t.tag()).collect();
        writeln!(
            text,
            "criteria: {}",
            if tags.is_empty() {
                "none".to_string()
            } else {
                tags.join(", ")
            }
        )
        .unwrap();
    }

    let mut result = to_value(&verdict);
    if let Some(c) = &criteria {
        result["criteria"] = to_value(c);
    }
    Ok(Report {
        command: "classify",
        input: json!({ "weights": raw }),
        backend: None,
        result,
        text,
        csv: None,
        code: if verdict.in_class {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        },
    })
}

fn iset_json(set: &ObstructionSet) -> Value {
    let (lower, upper) = set.interval();
    json!({
        "prefix": set.prefix(),
        "window": set.window(),
        "interval": [lower, upper],
        "elements": set.elements(),
        "size": set.len(),
    })
}

fn iset(raw: &[i64], window: i64, backend: Backend) -> Result<Report, Error> {
    let prefix = positive(raw)?;
    let window = window_arg(window)?;
    let set = obstruction_set(&prefix, window, backend)?;
    let (lower, upper) = set.interval();

    let mut text = String::new();
    writeln!(text, "prefix: {}", tuple(&prefix)).unwrap();
    writeln!(text, "window: {window}").unwrap();
    writeln!(text, "interval: ({lower}, {upper})").unwrap();
    writeln!(text, "backend: {backend}").unwrap();
    writeln!(text, "elements: {}", braces(set.elements())).unwrap();
    writeln!(text, "size: {}", set.len()).unwrap();

    Ok(Report {
        command: "iset",
        input: json!({ "prefix": raw, "M": window }),
        backend: Some(backend),
        result: iset_json(&set),
        text,
        csv: None,
        code: EXIT_OK,
    })
}

fn resonance_list(raw: &[i64]) -> Result<Report, Error> {
    let weight = validate_weight(raw)?;
    let found: Vec<ResonanceWitness> = resonances(&weight);

    let mut text = String::new();
    writeln!(text, "weight: {weight}").unwrap();
    writeln!(text, "count: {}", found.len()).unwrap();
    for w in &found {
        writeln!(text, "i={} j={} k={}", w.i, w.j, tuple(w.k.as_slice())).unwrap();
    }

    Ok(Report {
        command: "resonances",
        input: json!({ "weights": raw }),
        backend: None,
        result: json!({ "resonance_free": found.is_empty(), "witnesses": to_value(&found) }),
        text,
        csv: None,
        code: EXIT_OK,
    })
}

fn enumerate(raw: &[i64], window: i64, backend: Backend) -> Result<Report, Error> {
    let prefix = positive(raw)?;
    let window = window_arg(window)?;
    let admissible = enumerate_admissible_with(&prefix, window, backend)?;
    let (lower, upper) = ObstructionSet::window_bounds(&prefix, window)?;

    let mut text = String::new();
    writeln!(text, "prefix: {}", tuple(&prefix)).unwrap();
    writeln!(text, "window: {window}").unwrap();
    writeln!(text, "interval: ({lower}, {upper})").unwrap();
    writeln!(text, "admissible: {}", braces(&admissible)).unwrap();
    writeln!(text, "count: {}", admissible.len()).unwrap();

    Ok(Report {
        command: "enumerate",
        input: json!({ "prefix": raw, "M": window }),
        backend: Some(backend),
        result: json!({
            "interval": [lower, upper],
            "admissible": admissible,
            "count": admissible.len(),
        }),
        text,
        csv: None,
        code: EXIT_OK,
    })
}

fn count_text(r: &CountReport) -> String {
    let lo = r.m1 + r.m2;
    let mut text = String::new();
    writeln!(text, "pair: ({}, {})", r.m1, r.m2).unwrap();
    writeln!(text, "window: ({lo}, {})", 2 * lo).unwrap();
    writeln!(text, "window_size: {}", r.window_size).unwrap();
    writeln!(text, "i_set_size: {}", r.i_set_size).unwrap();
    writeln!(text, "gaps: {}", braces(&r.gap_set)).unwrap();
    writeln!(text, "gap_count: {}", r.gap_set.len()).unwrap();
    match r.closed_form {
        Some(c) => writeln!(text, "closed_form: {} = {}", c.kind, c.value).unwrap(),
        None => writeln!(text, "closed_form: none (outside hypotheses)").unwrap(),
    }
    match r.matches {
        Some(m) => writeln!(text, "matches: {m}").unwrap(),
        None => writeln!(text, "matches: n/a").unwrap(),
    }
    writeln!(text, "overlap: {}", braces(&r.overlap)).unwrap();
    text
}

fn count(m1: i64, m2: i64) -> Result<Report, Error> {
    let pair = positive(&[m1, m2])?;
    let report = closed_form_count(pair[0], pair[1])?;
    let code = if report.matches == Some(false) {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok(Report {
        command: "count",
        input: json!({ "m1": m1, "m2": m2 }),
        backend: Some(Backend::Sieve),
        result: to_value(&report),
        text: count_text(&report),
        csv: None,
        code,
    })
}

/// Text rendering of the `d` table for `m1 = 5`.
pub fn render_d_table() -> Result<String, Error> {
    let rows = table_d(5, &D_TABLE_M2)?;
    let mut text = String::from("m2 | d | S\n");
    for r in &rows {
        writeln!(text, "{} | {} | {}", r.m2, r.d, braces(&r.gaps)).unwrap();
    }
    Ok(text)
}

/// Text rendering of the `f` table.
pub fn render_f_table() -> Result<String, Error> {
    let rows = table_f(&F_TABLE_M2)?;
    let m2: Vec<String> = rows.iter().map(|r| r.m2.to_string()).collect();
    let f: Vec<String> = rows.iter().map(|r| r.f.to_string()).collect();
    Ok(format!(
        "m2 | {}\nf(m2) | {}\n",
        m2.join(" | "),
        f.join(" | ")
    ))
}

fn table(name: &str) -> Result<Report, Error> {
    let (text, result) = match name {
        "d-table" => (
            render_d_table()?,
            json!({ "name": name, "m1": 5, "rows": to_value(&table_d(5, &D_TABLE_M2)?) }),
        ),
        "f-table" => (
            render_f_table()?,
            json!({ "name": name, "m1": 3, "rows": to_value(&table_f(&F_TABLE_M2)?) }),
        ),
        other => return Err(Error::UnknownTable(other.to_string())),
    };
    Ok(Report {
        command: "table",
        input: json!({ "name": name }),
        backend: Some(Backend::Sieve),
        result,
        text,
        csv: None,
        code: EXIT_OK,
    })
}

fn join_opt(sizes: &[Option<usize>]) -> String {
    sizes
        .iter()
        .map(|s| s.map_or("-".to_string(), |v| v.to_string()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_u64(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn scan_csv(rows: &[ScanRow]) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record([
        "weight",
        "in_class",
        "witnesses",
        "failure",
        "resonances",
        "iset_sizes",
    ])
    .expect("in-memory write");
    for r in rows {
        wtr.write_record([
            join_u64(&r.weight),
            r.in_class.to_string(),
            join_u64(&r.witnesses),
            r.failure
                .as_ref()
                .map_or(String::new(), |f| f.tag().to_string()),
            r.resonances.to_string(),
            join_opt(&r.iset_sizes),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(wtr.into_inner().expect("flush")).expect("utf-8 csv")
}

fn scan_command(config: ScanConfig) -> Result<Report, Error> {
    let rows = scan(&config)?;

    let mut text = String::new();
    for r in &rows {
        write!(
            text,
            "{} in_class={} witnesses={:?} resonances={} iset_sizes=[{}]",
            tuple(&r.weight),
            r.in_class,
            r.witnesses,
            r.resonances,
            join_opt(&r.iset_sizes)
        )
        .unwrap();
        if let Some(f) = &r.failure {
            write!(text, " failure={}", f.tag()).unwrap();
        }
        text.push('\n');
    }
    writeln!(text, "rows: {}", rows.len()).unwrap();

    let code = if config.filter == ScanFilter::Disagree && !rows.is_empty() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok(Report {
        command: "scan",
        input: json!({
            "n": config.n,
            "max": config.max_weight,
            "filter": config.filter.name(),
        }),
        backend: Some(config.backend),
        result: json!({ "count": rows.len(), "rows": to_value(&rows) }),
        text,
        csv: Some(scan_csv(&rows)),
        code,
    })
}
