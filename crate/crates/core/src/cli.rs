//! The `foxkh` command line.
//!
//! Exit codes: 0 when the analysis ran and found nothing wrong, 1 when a
//! check was refuted or a census expectation did not match, 2 on bad input.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{
    brute_force_colorings, coloring_matrix, coloring_space, crossing_matrix, find_pseudo_coloring,
    knot_det, minor_matrix, transpose_law, verify_kh, KHReport, KHStatus, BRUTE_FORCE_LIMIT,
};
use crate::eulerian::extract_summands;
use crate::knotio::{
    dt_to_gauss, gauss_to_diagram, is_alternating, load_corpus, parse_dt, parse_gauss, Diagram,
};

#[derive(Debug, Parser)]
#[command(
    name = "foxkh",
    version,
    about = "Fox colorings and heterogeneity checks for knot diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the knot determinant.
    Det(InputArgs),
    /// Check that every nontrivial coloring is heterogeneous; prints a JSON report.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Also write the report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run `verify` over every entry of a JSON-lines corpus.
    Census {
        #[arg(long)]
        corpus: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long, env = "FOXKH_JOBS")]
        jobs: Option<usize>,
        /// Cross-check the coloring space against exhaustive search where feasible.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Look for pseudo-colorings column by column and split any found.
    Pseudo {
        #[command(flatten)]
        input: InputArgs,
        /// Repeat for every starting arc.
        #[arg(long)]
        sweep: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the crossing matrix, or a matrix derived from it.
    Matrix {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, group = "which")]
        minor: bool,
        #[arg(long, group = "which")]
        coloring_matrix: bool,
        /// Compare the mirror's crossing matrix with the transpose.
        #[arg(long, group = "which")]
        transpose_check: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Dowker-Thistlethwaite code, e.g. "4 6 2".
    #[arg(long)]
    pub dt: Option<String>,
    /// Gauss code, e.g. "O1 U2 O3 U1 O2 U3".
    #[arg(long)]
    pub gauss: Option<String>,
}

/// Census output. Field order is the JSON key order.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub entries: Vec<KHReport>,
    pub summary: CensusSummary,
    pub tool_version: String,
    pub corpus_path: String,
    /// Determinant or oracle disagreements, one line each.
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub total: usize,
    pub verified: usize,
    pub not_prime_determinant: usize,
    pub not_alternating: usize,
    pub not_reduced: usize,
    pub refuted: usize,
    pub oracle_checked: usize,
}

impl CensusSummary {
    fn count(&mut self, status: KHStatus) {
        self.total += 1;
        let slot = match status {
            KHStatus::Verified => &mut self.verified,
            KHStatus::NotPrimeDeterminant => &mut self.not_prime_determinant,
            KHStatus::NotAlternating => &mut self.not_alternating,
            KHStatus::NotReduced => &mut self.not_reduced,
            KHStatus::Refuted => &mut self.refuted,
        };
        *slot += 1;
    }
}

/// One column of a pseudo-coloring sweep. `j`, crossings and arcs are
/// 1-based; `rotation` is the offset of the starting arc.
#[derive(Debug, Clone, Serialize)]
pub struct PseudoOutcome {
    pub rotation: usize,
    pub j: usize,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<serde_json::Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plus_crossing: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minus_crossing: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_arcs: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_arcs: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PseudoReport {
    pub name: Option<String>,
    pub n: usize,
    pub determinant: serde_json::Value,
    pub found: usize,
    pub columns: Vec<PseudoOutcome>,
}

enum Failure {
    Input(String),
    Refuted,
}

fn input_err(e: impl Display) -> Failure {
    Failure::Input(e.to_string())
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Refuted) => 1,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Det(input) => {
            let d = read_diagram(&input)?;
            let det = knot_det(&d).map_err(input_err)?;
            emit(out, format_args!("{det}\n"))
        }
        Command::Verify { input, json } => {
            let report = verify_kh(&read_diagram(&input)?);
            let text = to_json(&report)?;
            if let Some(path) = json {
                write_file(&path, &text)?;
            }
            emit(out, format_args!("{text}"))?;
            if report.status == KHStatus::Refuted {
                return Err(Failure::Refuted);
            }
            Ok(())
        }
        Command::Census {
            corpus,
            jobs,
            oracle,
            json,
        } => census(&corpus, jobs, oracle, json.as_deref(), out, err),
        Command::Pseudo { input, sweep, json } => {
            let report = pseudo(&read_diagram(&input)?, sweep)?;
            let text = to_json(&report)?;
            if let Some(path) = json {
                write_file(&path, &text)?;
            }
            emit(out, format_args!("{text}"))?;
            if report.columns.iter().any(|c| c.outcome == "invalid") {
                return Err(Failure::Refuted);
            }
            Ok(())
        }
        Command::Matrix {
            input,
            minor,
            coloring_matrix: want_l,
            transpose_check,
        } => {
            let d = read_diagram(&input)?;
            if transpose_check {
                let law = transpose_law(&d).map_err(input_err)?;
                let holds = law.holds();
                emit(
                    out,
                    format_args!("{}\n", if holds { "pass" } else { "fail" }),
                )?;
                return if holds { Ok(()) } else { Err(Failure::Refuted) };
            }
            let m = if want_l {
                coloring_matrix(&d).map_err(input_err)?
            } else if minor {
                minor_matrix(&crossing_matrix(&d, 0)).map_err(input_err)?
            } else {
                crossing_matrix(&d, 0).matrix
            };
            emit(out, format_args!("{m}"))
        }
    }
}

fn read_diagram(input: &InputArgs) -> std::result::Result<Diagram, Failure> {
    let code = match (&input.dt, &input.gauss) {
        (Some(dt), _) => dt_to_gauss(&parse_dt(dt).map_err(input_err)?),
        (None, Some(g)) => parse_gauss(g).map_err(input_err)?,
        (None, None) => return Err(Failure::Input("one of --dt or --gauss is required".into())),
    };
    gauss_to_diagram(&code).map_err(input_err)
}

fn emit(out: &mut dyn Write, text: std::fmt::Arguments<'_>) -> CmdResult {
    out.write_fmt(text).map_err(input_err)
}

fn to_json<T: Serialize>(value: &T) -> std::result::Result<String, Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(input_err)?;
    text.push('\n');
    Ok(text)
}

fn write_file(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

struct CensusItem {
    report: KHReport,
    mismatches: Vec<String>,
    oracle_checked: bool,
}

fn census_item(name: &str, d: &Diagram, expected: Option<u64>, oracle: bool) -> CensusItem {
    let report = verify_kh(d);
    let mut mismatches = Vec::new();
    if let Some(want) = expected {
        if report.determinant != Some(BigInt::from(want)) {
            let got = report
                .determinant
                .as_ref()
                .map_or_else(|| "none".to_string(), ToString::to_string);
            mismatches.push(format!("{name}: expected determinant {want}, got {got}"));
        }
    }
    let mut oracle_checked = false;
    if oracle && report.status == KHStatus::Verified {
        match oracle_agrees(d) {
            Some(true) => oracle_checked = true,
            Some(false) => {
                oracle_checked = true;
                mismatches.push(format!("{name}: exhaustive colorings differ from the span"));
            }
            None => {}
        }
    }
    CensusItem {
        report,
        mismatches,
        oracle_checked,
    }
}

/// `None` when exhaustive search is out of reach.
fn oracle_agrees(d: &Diagram) -> Option<bool> {
    let space = coloring_space(d).ok()?;
    let feasible = space
        .p
        .checked_pow(d.n() as u32)
        .is_some_and(|t| t <= BRUTE_FORCE_LIMIT);
    if !feasible {
        return None;
    }
    let brute: BTreeSet<_> = brute_force_colorings(d, space.p)
        .ok()?
        .into_iter()
        .collect();
    let span: BTreeSet<_> = space.span_colorings().into_iter().collect();
    Some(brute == span)
}

/// Verifies every corpus entry, in parallel but reported in input order.
pub fn run_census(
    corpus_path: &Path,
    jobs: Option<usize>,
    oracle: bool,
) -> std::result::Result<CensusReport, String> {
    let corpus = load_corpus(corpus_path).map_err(|e| e.to_string())?;
    let mut diagrams = Vec::with_capacity(corpus.len());
    for entry in &corpus {
        let d = gauss_to_diagram(&dt_to_gauss(&entry.dt))
            .map_err(|e| format!("{}: {e}", entry.name))?
            .with_name(entry.name.clone());
        diagrams.push(d);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| e.to_string())?;
    let items: Vec<CensusItem> = pool.install(|| {
        corpus
            .par_iter()
            .zip(diagrams.par_iter())
            .map(|(entry, d)| census_item(&entry.name, d, entry.expected_det, oracle))
            .collect()
    });

    let mut summary = CensusSummary::default();
    let mut mismatches = Vec::new();
    let mut entries = Vec::with_capacity(items.len());
    for item in items {
        summary.count(item.report.status);
        summary.oracle_checked += usize::from(item.oracle_checked);
        mismatches.extend(item.mismatches);
        entries.push(item.report);
    }
    Ok(CensusReport {
        entries,
        summary,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        corpus_path: corpus_path.display().to_string(),
        mismatches,
    })
}

fn census(
    corpus: &Path,
    jobs: Option<usize>,
    oracle: bool,
    json: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let report = run_census(corpus, jobs, oracle).map_err(Failure::Input)?;
    if let Some(path) = json {
        write_file(path, &to_json(&report)?)?;
    }
    emit(out, format_args!("{}", census_table(&report)))?;
    for m in &report.mismatches {
        let _ = writeln!(err, "mismatch: {m}");
    }
    if report.summary.refuted > 0 || !report.mismatches.is_empty() {
        return Err(Failure::Refuted);
    }
    Ok(())
}

pub fn census_table(report: &CensusReport) -> String {
    let mut s = format!(
        "{:<12} {:>3} {:>12} {:>6}  {}\n",
        "name", "n", "det", "colors", "status"
    );
    for r in &report.entries {
        let det = r
            .determinant
            .as_ref()
            .map_or_else(|| "-".to_string(), ToString::to_string);
        s += &format!(
            "{:<12} {:>3} {:>12} {:>6}  {:?}\n",
            r.name.as_deref().unwrap_or("-"),
            r.n,
            det,
            r.colors_used,
            r.status
        );
    }
    let t = &report.summary;
    s += &format!(
        "total {} verified {} not-prime {} not-alternating {} not-reduced {} refuted {}",
        t.total, t.verified, t.not_prime_determinant, t.not_alternating, t.not_reduced, t.refuted
    );
    if t.oracle_checked > 0 {
        s += &format!(" oracle {}", t.oracle_checked);
    }
    s.push('\n');
    s
}

/// A JSON number when it fits in an `i64`, a decimal string otherwise.
fn big_json(v: &BigInt) -> serde_json::Value {
    i64::try_from(v).map_or_else(|_| v.to_string().into(), Into::into)
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

/// Tries every column `j` of `C^-1` (for every starting arc with `sweep`).
/// Found pseudo-colorings are split into summands before being reported.
pub fn pseudo_report(d: &Diagram, sweep: bool) -> std::result::Result<PseudoReport, String> {
    let det = knot_det(d).map_err(|e| e.to_string())?;
    let rotations = if sweep { d.n() } else { 1 };
    let mut columns = Vec::new();
    for r in 0..rotations {
        let rd = d.rotated(r);
        for j in 0..rd.n() - 1 {
            let mut o = PseudoOutcome {
                rotation: r,
                j: j + 1,
                outcome: "none",
                values: None,
                plus_crossing: None,
                minus_crossing: None,
                h_arcs: None,
                l_arcs: None,
                error: None,
            };
            match find_pseudo_coloring(&rd, j) {
                Ok(None) => {}
                Ok(Some(pc)) => {
                    o.outcome = "found";
                    o.plus_crossing = Some(pc.plus_crossing + 1);
                    o.minus_crossing = Some(pc.minus_crossing + 1);
                    if is_alternating(&rd) {
                        match extract_summands(&rd, &pc) {
                            Ok(split) => {
                                o.h_arcs = Some(one_based(&split.h_arcs));
                                o.l_arcs = Some(one_based(&split.l_arcs));
                            }
                            Err(e) => {
                                o.outcome = "invalid";
                                o.error = Some(e.to_string());
                            }
                        }
                    }
                    o.values = Some(pc.values.iter().map(big_json).collect());
                }
                Err(e) => {
                    o.outcome = "invalid";
                    o.error = Some(e.to_string());
                }
            }
            columns.push(o);
        }
    }
    Ok(PseudoReport {
        name: d.name().map(str::to_owned),
        n: d.n(),
        determinant: big_json(&det),
        found: columns.iter().filter(|c| c.outcome == "found").count(),
        columns,
    })
}

fn pseudo(d: &Diagram, sweep: bool) -> std::result::Result<PseudoReport, Failure> {
    pseudo_report(d, sweep).map_err(Failure::Input)
}
