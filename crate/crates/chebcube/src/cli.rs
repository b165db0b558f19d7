//! The `chebcube` command-line interface.
//!
//! Four subcommands cover the library's surface:
//!
//! - `nodes`: emit one cubature rule as a JSON document or a CSV table;
//! - `verify`: run the named check suites and emit a line-delimited JSON
//!   report (one check per line), exiting nonzero on unexpected failures;
//! - `interp`: build the algebraic interpolant from a CSV sample file keyed
//!   by the octant multi-indices and evaluate it at probe points;
//! - `lebesgue`: tabulate operator-norm estimates over a scale list.
//!
//! File formats: rule JSON carries the exact rational normalization and
//! weights as `"p/q"` strings, node coordinates as 17-significant-digit
//! decimals, and the integer multi-indices from which the nodes regenerate
//! exactly.  CSV files put one node per row, weight column last, with `#`
//! metadata comment lines.  Sample files have columns `k1..kd,value`; probe
//! files are header-driven (`k1..kd` for integer node indices, `t1..td` for
//! decimal coordinates in `[-1, 1]`).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::cubature::{build_rule, CubatureRule, WeightKind};
use crate::error::{Error, Result};
use crate::interp::AlgebraicInterpolant;
use crate::lattice::IndexVector;
use crate::lebesgue::{lebesgue_estimate, LebesgueReport};
use crate::transform::{cos_pi, CubePoint};
use crate::verify::{all_passed, run_suite, CheckRecord, SuiteKind, VerifyOptions};

/// Formats a node coordinate or decimal weight with 17 significant digits,
/// enough to reproduce the `f64` bit pattern on reparse.
fn decimal(v: f64) -> String {
    format!("{v:.16e}")
}

/// Formats a rational as the exact `"p/q"` string.
fn rational(r: Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

// ---------------------------------------------------------------------------
// Rule documents
// ---------------------------------------------------------------------------

/// Serialized form of a cubature rule.  The integer `indices` regenerate the
/// nodes exactly; the decimal `nodes` are a convenience rendering.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuleDocument {
    /// Document schema revision.
    pub schema_version: String,
    /// Dimension, 2 or 3.
    pub dim: usize,
    /// Scale parameter.
    pub n: i64,
    /// Rule family token: `trig-equal`, `trig-sym`, `w0`, or `w1`.
    pub weight_kind: String,
    /// Exact rational scalar applied to the weighted sum, as `"p/q"`.
    pub normalization: String,
    /// Integer multi-index of each node.
    pub indices: Vec<Vec<i64>>,
    /// Node coordinates (17 significant digits), aligned with `indices`.
    pub nodes: Vec<Vec<String>>,
    /// Node weights: exact `"p/q"` strings when the family has rational
    /// weights, 17-significant-digit decimals otherwise.
    pub weights: Vec<String>,
    /// Human-readable description of the exactness class.
    pub exactness: String,
}

/// Current rule-document schema revision.
pub const SCHEMA_VERSION: &str = "1";

impl RuleDocument {
    /// Builds the document for a rule.
    pub fn from_rule(rule: &CubatureRule) -> RuleDocument {
        let count = rule.node_count();
        let indices = rule.indices().iter().map(|k| k.coords().to_vec()).collect();
        let nodes = (0..count)
            .map(|i| rule.node(i).iter().map(|&c| decimal(c)).collect())
            .collect();
        let weights = match rule.rational_weights() {
            Some(ws) => ws.iter().map(|&w| rational(w)).collect(),
            None => rule.weights().iter().map(|&w| decimal(w)).collect(),
        };
        RuleDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            dim: rule.dim(),
            n: rule.scale(),
            weight_kind: rule.weight_kind().token().to_string(),
            normalization: rational(rule.normalization()),
            indices,
            nodes,
            weights,
            exactness: rule.exactness().describe(),
        }
    }

    /// Rebuilds the rule the document describes and validates every field
    /// against the canonical regeneration: rational fields must match
    /// exactly, decimal fields to the last emitted digit.
    pub fn to_rule(&self) -> Result<CubatureRule> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Malformed {
                kind: "rule document",
                detail: format!(
                    "schema_version '{}' (this build reads '{SCHEMA_VERSION}')",
                    self.schema_version
                ),
            });
        }
        let kind = WeightKind::parse(&self.weight_kind)?;
        let rule = build_rule(self.dim, self.n, kind)?;
        let canon = RuleDocument::from_rule(&rule);
        for (field, got, want) in [
            ("normalization", &self.normalization, &canon.normalization),
            ("exactness", &self.exactness, &canon.exactness),
        ] {
            if got != want {
                return Err(Error::Malformed {
                    kind: "rule document",
                    detail: format!("{field} is '{got}', expected '{want}'"),
                });
            }
        }
        for (name, got, want) in [
            ("indices", self.indices.len(), canon.indices.len()),
            ("nodes", self.nodes.len(), canon.nodes.len()),
            ("weights", self.weights.len(), canon.weights.len()),
        ] {
            if got != want {
                return Err(Error::Malformed {
                    kind: "rule document",
                    detail: format!("{name} has {got} entries, expected {want}"),
                });
            }
        }
        if self.indices != canon.indices {
            return Err(Error::Malformed {
                kind: "rule document",
                detail: "node indices do not match the canonical enumeration".to_string(),
            });
        }
        if self.nodes != canon.nodes || self.weights != canon.weights {
            return Err(Error::Malformed {
                kind: "rule document",
                detail: "node coordinates or weights differ from the regenerated rule".to_string(),
            });
        }
        Ok(rule)
    }
}

/// Renders a rule as a pretty-printed JSON document.
pub fn rule_json(rule: &CubatureRule) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&RuleDocument::from_rule(rule))?;
    s.push('\n');
    Ok(s)
}

/// Parses a JSON document and rebuilds (and validates) its rule.
pub fn parse_rule_json(text: &str) -> Result<(RuleDocument, CubatureRule)> {
    let doc: RuleDocument = serde_json::from_str(text)?;
    let rule = doc.to_rule()?;
    Ok((doc, rule))
}

/// Renders a rule as a CSV table: `#`-prefixed metadata lines, a header,
/// then one node per row with the weight column last.
pub fn rule_csv(rule: &CubatureRule) -> Result<String> {
    let doc = RuleDocument::from_rule(rule);
    let dim = doc.dim;
    let mut out = String::new();
    for (key, value) in [
        ("schema_version", doc.schema_version.as_str()),
        ("weight_kind", doc.weight_kind.as_str()),
        ("normalization", doc.normalization.as_str()),
        ("exactness", doc.exactness.as_str()),
    ] {
        out.push_str(&format!("# {key}: {value}\n"));
    }
    out.push_str(&format!("# dim: {dim}\n# n: {}\n", doc.n));
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = (1..=dim).map(|i| format!("k{i}")).collect();
    header.extend((1..=dim).map(|i| format!("x{i}")));
    header.push("weight".to_string());
    writer.write_record(&header)?;
    for i in 0..doc.indices.len() {
        let mut row: Vec<String> = doc.indices[i].iter().map(|c| c.to_string()).collect();
        row.extend(doc.nodes[i].iter().cloned());
        row.push(doc.weights[i].clone());
        writer.write_record(&row)?;
    }
    let body = writer.into_inner().map_err(|e| Error::Malformed {
        kind: "csv table",
        detail: e.to_string(),
    })?;
    out.push_str(&String::from_utf8(body).expect("csv output is utf-8"));
    Ok(out)
}

/// Parses a CSV rule table back into a document (metadata comments plus the
/// node rows), for cross-checking against the JSON emission.
pub fn parse_rule_csv(text: &str) -> Result<RuleDocument> {
    let mut meta = BTreeMap::new();
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        if let Some((key, value)) = line.trim_start_matches('#').trim().split_once(':') {
            meta.insert(key.trim().to_string(), value.trim().to_string());
        }
    }
    let field = |key: &str| {
        meta.get(key).cloned().ok_or(Error::Malformed {
            kind: "csv table",
            detail: format!("missing metadata line '# {key}: ...'"),
        })
    };
    let dim: usize = field("dim")?.parse().map_err(|_| Error::Malformed {
        kind: "csv table",
        detail: "dim is not an integer".to_string(),
    })?;
    let n: i64 = field("n")?.parse().map_err(|_| Error::Malformed {
        kind: "csv table",
        detail: "n is not an integer".to_string(),
    })?;
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut indices = Vec::new();
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    for record in reader.records() {
        let record = record?;
        if record.len() != 2 * dim + 1 {
            return Err(Error::Malformed {
                kind: "csv table",
                detail: format!("row has {} fields, expected {}", record.len(), 2 * dim + 1),
            });
        }
        let index: Vec<i64> = record
            .iter()
            .take(dim)
            .map(|c| {
                c.parse().map_err(|_| Error::Malformed {
                    kind: "csv table",
                    detail: format!("index entry '{c}' is not an integer"),
                })
            })
            .collect::<Result<_>>()?;
        indices.push(index);
        nodes.push(
            record
                .iter()
                .skip(dim)
                .take(dim)
                .map(String::from)
                .collect(),
        );
        weights.push(record[2 * dim].to_string());
    }
    Ok(RuleDocument {
        schema_version: field("schema_version")?,
        dim,
        n,
        weight_kind: field("weight_kind")?,
        normalization: field("normalization")?,
        indices,
        nodes,
        weights,
        exactness: field("exactness")?,
    })
}

// ---------------------------------------------------------------------------
// Sample and probe files
// ---------------------------------------------------------------------------

/// Parses an interpolation sample file: header `k1..kd,value`, one octant
/// multi-index and sample value per row.
pub fn parse_samples_csv(dim: usize, text: &str) -> Result<BTreeMap<IndexVector, f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut expected: Vec<String> = (1..=dim).map(|i| format!("k{i}")).collect();
    expected.push("value".to_string());
    let headers: Vec<String> = reader.headers()?.iter().map(String::from).collect();
    if headers != expected {
        return Err(Error::Malformed {
            kind: "sample file",
            detail: format!("header is {headers:?}, expected {expected:?} for dim = {dim}"),
        });
    }
    let mut samples = BTreeMap::new();
    for record in reader.records() {
        let record = record?;
        let mut coords = [0i64; 3];
        for (i, c) in coords.iter_mut().enumerate().take(dim) {
            *c = record[i].parse().map_err(|_| Error::Malformed {
                kind: "sample file",
                detail: format!("index entry '{}' is not an integer", &record[i]),
            })?;
        }
        let value: f64 = record[dim].parse().map_err(|_| Error::Malformed {
            kind: "sample file",
            detail: format!("sample value '{}' is not a number", &record[dim]),
        })?;
        let key = IndexVector::new(&coords[..dim])?;
        if samples.insert(key, value).is_some() {
            return Err(Error::Malformed {
                kind: "sample file",
                detail: format!("duplicate sample key {key}"),
            });
        }
    }
    Ok(samples)
}

/// One parsed probe: the echoed key cells and the evaluation point.
struct Probe {
    key: Vec<String>,
    point: CubePoint,
}

/// Probe files are header-driven: `k1..kd` rows hold integer node indices
/// (the probe is the node `z_k`), `t1..td` rows hold decimal coordinates.
fn parse_probes_csv(dim: usize, n: i64, text: &str) -> Result<(Vec<String>, Vec<Probe>)> {
    if text.trim().is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers: Vec<String> = reader.headers()?.iter().map(String::from).collect();
    let node_header: Vec<String> = (1..=dim).map(|i| format!("k{i}")).collect();
    let point_header: Vec<String> = (1..=dim).map(|i| format!("t{i}")).collect();
    let by_index = if headers == node_header {
        true
    } else if headers == point_header {
        false
    } else {
        return Err(Error::Malformed {
            kind: "probe file",
            detail: format!(
                "header is {headers:?}, expected {node_header:?} or {point_header:?} for dim = {dim}"
            ),
        });
    };
    let mut probes = Vec::new();
    for record in reader.records() {
        let record = record?;
        if record.len() != dim {
            return Err(Error::Malformed {
                kind: "probe file",
                detail: format!("row has {} fields, expected {dim}", record.len()),
            });
        }
        let key: Vec<String> = record.iter().map(String::from).collect();
        let point = if by_index {
            let mut coords = [0.0f64; 3];
            for (c, cell) in coords.iter_mut().zip(record.iter()) {
                let k: i64 = cell.parse().map_err(|_| Error::Malformed {
                    kind: "probe file",
                    detail: format!("node index '{cell}' is not an integer"),
                })?;
                *c = cos_pi(k as f64 / n as f64);
            }
            CubePoint::algebraic(&coords[..dim])?
        } else {
            let mut coords = [0.0f64; 3];
            for (c, cell) in coords.iter_mut().zip(record.iter()) {
                *c = cell.parse().map_err(|_| Error::Malformed {
                    kind: "probe file",
                    detail: format!("coordinate '{cell}' is not a number"),
                })?;
            }
            CubePoint::algebraic(&coords[..dim])?
        };
        probes.push(Probe { key, point });
    }
    Ok((headers, probes))
}

/// Builds the algebraic interpolant from sample-file text and evaluates it
/// at every probe, returning the output table (echoed keys, value last).
/// An empty probe file yields empty output.
pub fn interp_table(dim: usize, n: i64, samples: &str, probes: &str) -> Result<String> {
    let sample_map = parse_samples_csv(dim, samples)?;
    let interp = AlgebraicInterpolant::new(dim, n, &sample_map)?;
    let (headers, probes) = parse_probes_csv(dim, n, probes)?;
    if headers.is_empty() {
        return Ok(String::new());
    }
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut out_header = headers;
    out_header.push("value".to_string());
    writer.write_record(&out_header)?;
    for probe in probes {
        let value = interp.eval(&probe.point)?;
        let mut row = probe.key;
        row.push(decimal(value));
        writer.write_record(&row)?;
    }
    let body = writer.into_inner().map_err(|e| Error::Malformed {
        kind: "csv table",
        detail: e.to_string(),
    })?;
    Ok(String::from_utf8(body).expect("csv output is utf-8"))
}

// ---------------------------------------------------------------------------
// Reports and tables
// ---------------------------------------------------------------------------

/// Runs the suite for each dimension and renders one JSON record per line.
/// Returns the report text and whether every check passed.
pub fn verify_report(
    dims: &[usize],
    ns: &[i64],
    suite: SuiteKind,
    opts: &VerifyOptions,
) -> Result<(String, bool)> {
    let mut records: Vec<CheckRecord> = Vec::new();
    for &dim in dims {
        records.extend(run_suite(suite, dim, ns, opts)?);
    }
    let mut out = String::new();
    for record in &records {
        out.push_str(&serde_json::to_string(record)?);
        out.push('\n');
    }
    Ok((out, all_passed(&records)))
}

/// Renders the Lebesgue-estimate table for a scale list.  `grid` probes per
/// axis (at least `4 * max(ns)`); scales must be at least 2 so the
/// `(log n)^3` normalization is meaningful.
pub fn lebesgue_table(
    dim: usize,
    ns: &[i64],
    grid: usize,
    format: Option<OutputFormat>,
) -> Result<String> {
    if ns.is_empty() {
        return Err(Error::InvalidArgument(
            "the scale list is empty".to_string(),
        ));
    }
    if let Some(&bad) = ns.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidArgument(format!(
            "Lebesgue tabulation needs n >= 2 (log-power normalization), got {bad}"
        )));
    }
    let max_n = *ns.iter().max().expect("nonempty");
    if (grid as i64) < 4 * max_n {
        return Err(Error::InvalidArgument(format!(
            "grid must be at least 4 * max(n) = {}, got {grid}",
            4 * max_n
        )));
    }
    let reports: Vec<LebesgueReport> = ns
        .iter()
        .map(|&n| lebesgue_estimate(dim, n, grid))
        .collect::<Result<_>>()?;
    let mut out = String::new();
    match format {
        Some(OutputFormat::Json) => {
            for report in &reports {
                out.push_str(&serde_json::to_string(report)?);
                out.push('\n');
            }
        }
        Some(OutputFormat::Csv) => {
            out.push_str("n,node_count,estimate,normalized\n");
            for r in &reports {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.n,
                    r.node_count,
                    decimal(r.estimate),
                    decimal(r.normalized)
                ));
            }
        }
        None => {
            out.push_str(&format!(
                "{:>6} {:>10} {:>16} {:>18}\n",
                "n", "nodes", "estimate", "estimate/log^3(n)"
            ));
            for r in &reports {
                out.push_str(&format!(
                    "{:>6} {:>10} {:>16.9} {:>18.9}\n",
                    r.n, r.node_count, r.estimate, r.normalized
                ));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

/// Emission format for rule documents and tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Structured JSON (a document for `nodes`, one record per line
    /// elsewhere).
    Json,
    /// Comma-separated table.
    Csv,
}

/// Parses a scale list: a single value (`8`), an inclusive range (`2..8` or
/// `2..=8`), or a comma-separated mix (`4,8,16`).
pub fn parse_scale_list(text: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let bad = |part: &str| {
        Error::InvalidArgument(format!(
            "cannot parse scale '{part}' (expected N, A..B, or a comma-separated list)"
        ))
    };
    for part in text.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let b = b.trim_start_matches('=');
            let lo: i64 = a.trim().parse().map_err(|_| bad(part))?;
            let hi: i64 = b.trim().parse().map_err(|_| bad(part))?;
            if lo > hi {
                return Err(bad(part));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| bad(part))?);
        }
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(Error::InvalidArgument("empty scale list".to_string()));
    }
    Ok(out)
}

fn parse_dim(s: &str) -> std::result::Result<usize, String> {
    match s {
        "2" => Ok(2),
        "3" => Ok(3),
        _ => Err(format!("dimension must be 2 or 3, got '{s}'")),
    }
}

fn parse_suite(s: &str) -> std::result::Result<SuiteKind, String> {
    SuiteKind::parse(s).map_err(|e| e.to_string())
}

fn parse_rule_kind(s: &str) -> std::result::Result<WeightKind, String> {
    WeightKind::parse(s).map_err(|e| e.to_string())
}

/// Cubature rules and interpolation for product Chebyshev weights on the
/// square and cube.
#[derive(Debug, Parser)]
#[command(name = "chebcube", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit the nodes and weights of one cubature rule.
    Nodes(NodesArgs),
    /// Run verification suites and emit a line-delimited JSON report.
    Verify(VerifyArgs),
    /// Interpolate sampled data and evaluate at probe points.
    Interp(InterpArgs),
    /// Tabulate Lebesgue-constant estimates over a scale list.
    Lebesgue(LebesgueArgs),
}

#[derive(Debug, Args)]
struct NodesArgs {
    /// Dimension (2 or 3).
    #[arg(long, value_parser = parse_dim)]
    dim: usize,
    /// Scale parameter.
    #[arg(long)]
    n: i64,
    /// Rule family.
    #[arg(long, value_parser = parse_rule_kind)]
    rule: WeightKind,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Dimension (2 or 3); both when omitted.
    #[arg(long, value_parser = parse_dim)]
    dim: Option<usize>,
    /// Scales: N, A..B, or a comma-separated list (default 2..6).
    #[arg(long)]
    n: Option<String>,
    /// Alias for --n taking an inclusive range.
    #[arg(long, conflicts_with = "n")]
    n_range: Option<String>,
    /// Which battery to run.
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    suite: SuiteKind,
    /// Seed for the randomized probes.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Multiplier on every pass tolerance.
    #[arg(long, default_value_t = 1.0)]
    tolerance_scale: f64,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct InterpArgs {
    /// Dimension (2 or 3).
    #[arg(long, value_parser = parse_dim)]
    dim: usize,
    /// Scale parameter.
    #[arg(long)]
    n: i64,
    /// CSV sample file keyed by the octant multi-indices (`k1..kd,value`).
    #[arg(long)]
    samples: PathBuf,
    /// CSV probe file (`k1..kd` node indices or `t1..td` coordinates).
    #[arg(long)]
    probes: PathBuf,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LebesgueArgs {
    /// Dimension (2 or 3).
    #[arg(long, value_parser = parse_dim)]
    dim: usize,
    /// Scales: N, A..B, or a comma-separated list.
    #[arg(long)]
    n: Option<String>,
    /// Alias for --n taking an inclusive range.
    #[arg(long, conflicts_with = "n")]
    n_range: Option<String>,
    /// Probes per axis (default and minimum: 4 * max scale).
    #[arg(long)]
    grid: Option<usize>,
    /// Structured output format (aligned text table when omitted).
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn scale_list(n: &Option<String>, n_range: &Option<String>) -> Result<Option<Vec<i64>>> {
    match n.as_deref().or(n_range.as_deref()) {
        Some(text) => Ok(Some(parse_scale_list(text)?)),
        None => Ok(None),
    }
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Nodes(args) => {
            let rule = build_rule(args.dim, args.n, args.rule)?;
            let text = match args.format {
                OutputFormat::Json => rule_json(&rule)?,
                OutputFormat::Csv => rule_csv(&rule)?,
            };
            write_output(&args.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let dims: Vec<usize> = match args.dim {
                Some(d) => vec![d],
                None => vec![2, 3],
            };
            let ns = scale_list(&args.n, &args.n_range)?.unwrap_or_else(|| (2..=6).collect());
            let opts = VerifyOptions {
                seed: args.seed,
                tolerance_scale: args.tolerance_scale,
            };
            let (report, passed) = verify_report(&dims, &ns, args.suite, &opts)?;
            write_output(&args.out, &report)?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Interp(args) => {
            let samples = std::fs::read_to_string(&args.samples)?;
            let probes = std::fs::read_to_string(&args.probes)?;
            let table = interp_table(args.dim, args.n, &samples, &probes)?;
            write_output(&args.out, &table)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lebesgue(args) => {
            let ns = scale_list(&args.n, &args.n_range)?.ok_or_else(|| {
                Error::InvalidArgument("lebesgue needs --n or --n-range".to_string())
            })?;
            let grid = args
                .grid
                .unwrap_or_else(|| 4 * *ns.iter().max().expect("nonempty") as usize);
            let table = lebesgue_table(args.dim, &ns, grid, args.format)?;
            write_output(&args.out, &table)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Entry point for the `chebcube` binary: parses arguments, dispatches, and
/// maps errors to a nonzero exit with a message on the diagnostic stream.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
