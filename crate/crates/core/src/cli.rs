//! The `ricci` command line: load or generate a graph, pick vertex pairs,
//! and emit exact curvature tables, profiles or reproduction reports.
//!
//! Output is deterministic: rows are sorted by pair and idleness, and every
//! number is a canonical `num/den` string.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::curvature::{
    critical_points, idleness_profile, kappa_lly, kappa_p, reconstruct_by_sampling, CurvatureError,
    PiecewiseLinear,
};
use crate::generators::{self, BasicKind};
use crate::graph::{Graph, GraphError};
use crate::io::{self, IoError};
use crate::rational::{self, format_rational, parse_rational, Rational};
use crate::verify::{self, Suite, SuiteReport, VerifyError};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "ricci",
    version,
    about = "Exact Ollivier-Ricci idleness functions on graphs"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// kappa_p for the selected pairs and idleness values.
    Curvature {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        pairs: PairSelection,
        /// Idleness values as integers or num/den, comma separated.
        #[arg(long = "p", required = true, value_delimiter = ',', value_parser = parse_idleness)]
        p: Vec<Rational>,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// The full idleness function per pair: c_j, critical points and pieces.
    Idleness {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        pairs: PairSelection,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Lin-Lu-Yau curvature for the selected pairs.
    Lly {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        pairs: PairSelection,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Run a reproduction suite and report every check.
    Verify {
        #[arg(value_enum)]
        suite: SuiteName,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Seed for random graphs and random product pairs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random graphs in the bounds suite.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated graph as JSON.
    Gen {
        /// Generator spec, e.g. cycle:6, family:1,1,0, hex:20,20, cycle:6*complete:3.
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Generator spec, e.g. cycle:6, figure3, family:1,1,1, tree:3,4, hex:20,20.
    #[arg(long = "gen")]
    pub generator: Option<String>,
    /// Graph JSON file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct PairSelection {
    /// A pair as two labels or indices, e.g. x,y or 0,3. Repeatable.
    #[arg(long)]
    pub pair: Vec<String>,
    /// Every pair in a common component.
    #[arg(long)]
    pub all_pairs: bool,
    /// Every pair at this distance.
    #[arg(long)]
    pub distance: Option<u32>,
    /// Every edge.
    #[arg(long)]
    pub edges: bool,
}

#[derive(Debug, Clone, Args)]
pub struct OutputOptions {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Add a 12-digit decimal column next to each rational (CSV only).
    #[arg(long)]
    pub decimal_hint: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Family,
    Hexagon,
    Tree,
    Product,
    Bounds,
    Figure3,
}

impl From<SuiteName> for Suite {
    fn from(s: SuiteName) -> Self {
        match s {
            SuiteName::Family => Suite::Family,
            SuiteName::Hexagon => Suite::Hexagon,
            SuiteName::Tree => Suite::Tree,
            SuiteName::Product => Suite::Product,
            SuiteName::Bounds => Suite::Bounds,
            SuiteName::Figure3 => Suite::Figure3,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("--gen: {0}")]
    GenSpec(String),
    #[error("--pair {0:?}: {1}")]
    Pair(String, String),
    #[error("{0}")]
    Io(#[from] IoError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl CliError {
    /// Failures in the inputs are usage errors; everything else is a
    /// failed computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::GenSpec(_) | CliError::Pair(..) | CliError::Io(_) | CliError::Graph(_) => 2,
            CliError::Curvature(_) | CliError::Verify(_) => 1,
        }
    }
}

/// The result of a successful run: the artifact and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub out: Option<PathBuf>,
    pub exit_code: i32,
}

fn parse_idleness(text: &str) -> Result<Rational, String> {
    let p = parse_rational(text).map_err(|e| e.to_string())?;
    if p.is_negative() || p > Rational::one() {
        return Err(format!("idleness {} outside [0, 1]", format_rational(&p)));
    }
    Ok(p)
}

fn numbers(args: &str, expected: usize, spec: &str) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',').collect()
    };
    if parts.len() != expected {
        return Err(CliError::GenSpec(format!(
            "{spec:?} needs {expected} comma-separated integers"
        )));
    }
    parts
        .iter()
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::GenSpec(format!("{s:?} in {spec:?} is not an integer")))
        })
        .collect()
}

/// Builds a graph from a generator spec. Factors joined by `*` form a
/// Cartesian product. Returns the graph and, for generators that mark one,
/// its distinguished pair.
pub fn generate(spec: &str) -> Result<(Graph, Option<(usize, usize)>), CliError> {
    let factors: Vec<&str> = spec.split('*').collect();
    if factors.len() > 1 {
        let mut graph: Option<Graph> = None;
        for f in factors {
            let (g, _) = generate(f)?;
            graph = Some(match graph {
                Some(acc) => generators::cartesian_product(&acc, &g),
                None => g,
            });
        }
        return Ok((graph.expect("at least two factors"), None));
    }
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let basic = |kind: BasicKind| -> Result<(Graph, Option<(usize, usize)>), CliError> {
        let n = numbers(args, 1, spec)?[0];
        Ok((generators::basic(kind, n)?, None))
    };
    match name.trim() {
        "path" => basic(BasicKind::Path),
        "cycle" => basic(BasicKind::Cycle),
        "complete" => basic(BasicKind::Complete),
        "star" => basic(BasicKind::Star),
        "figure3" => {
            numbers(args, 0, spec)?;
            let pair = generators::figure3();
            Ok((pair.graph, Some((pair.x, pair.y))))
        }
        "family" => {
            let v = numbers(args, 3, spec)?;
            let pair = generators::family(v[0], v[1], v[2])?;
            Ok((pair.graph, Some((pair.x, pair.y))))
        }
        "tree" => {
            let v = numbers(args, 2, spec)?;
            Ok((generators::tree_ball(v[0], v[1])?.graph, None))
        }
        "hex" => {
            let v = numbers(args, 2, spec)?;
            Ok((generators::hex_torus(v[0], v[1])?, None))
        }
        other => Err(CliError::GenSpec(format!(
            "unknown generator {other:?} (expected path, cycle, complete, star, figure3, family, tree or hex)"
        ))),
    }
}

fn load(source: &GraphSource) -> Result<Graph, CliError> {
    match (&source.generator, &source.graph) {
        (Some(spec), None) => Ok(generate(spec)?.0),
        (None, Some(path)) => Ok(io::read_graph(path)?),
        _ => unreachable!("clap enforces exactly one graph source"),
    }
}

fn resolve_vertex(g: &Graph, token: &str, pair: &str) -> Result<usize, CliError> {
    let token = token.trim();
    if let Some(v) = g.vertex_by_label(token) {
        return Ok(v);
    }
    let v: usize = token.parse().map_err(|_| {
        CliError::Pair(
            pair.to_string(),
            format!("{token:?} is neither a label nor an index"),
        )
    })?;
    g.check_index(v)
        .map_err(|e| CliError::Pair(pair.to_string(), e.to_string()))?;
    Ok(v)
}

/// Resolves the selection to a sorted, duplicate-free list of pairs.
pub fn select_pairs(g: &Graph, sel: &PairSelection) -> Result<Vec<(usize, usize)>, CliError> {
    let n = g.vertex_count();
    let all = || (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)));
    let mut pairs: Vec<(usize, usize)> = if !sel.pair.is_empty() {
        let mut out = Vec::new();
        for text in &sel.pair {
            let (a, b) = text
                .split_once(',')
                .ok_or_else(|| CliError::Pair(text.clone(), "expected two vertices a,b".into()))?;
            let (x, y) = (resolve_vertex(g, a, text)?, resolve_vertex(g, b, text)?);
            if x == y {
                return Err(CliError::Pair(
                    text.clone(),
                    "the two vertices coincide".into(),
                ));
            }
            if g.dist(x, y).is_none() {
                return Err(CliError::Pair(
                    text.clone(),
                    "the vertices are not connected".into(),
                ));
            }
            out.push((x, y));
        }
        out
    } else if sel.all_pairs {
        all().filter(|&(x, y)| g.dist(x, y).is_some()).collect()
    } else if let Some(d) = sel.distance {
        all().filter(|&(x, y)| g.dist(x, y) == Some(d)).collect()
    } else {
        g.edges().collect()
    };
    pairs.sort_unstable();
    pairs.dedup();
    Ok(pairs)
}

fn name(g: &Graph, v: usize) -> String {
    g.label(v).map_or_else(|| v.to_string(), str::to_string)
}

fn csv_cell(r: &Rational, hint: bool) -> String {
    if hint {
        format!("{},{}", format_rational(r), rational::decimal_hint(r, 12))
    } else {
        format_rational(r)
    }
}

fn csv_header(columns: &[&str], rational_columns: &[&str], hint: bool) -> String {
    let mut out: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
    for c in rational_columns {
        out.push(c.to_string());
        if hint {
            out.push(format!("{c}_decimal"));
        }
    }
    out.join(",")
}

fn render_json(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json value");
    s.push('\n');
    s
}

fn curvature_table(
    g: &Graph,
    pairs: &[(usize, usize)],
    ps: &[Rational],
    output: &OutputOptions,
) -> Result<String, CliError> {
    let mut ps = ps.to_vec();
    ps.sort();
    ps.dedup();
    let jobs: Vec<(usize, usize, &Rational)> = pairs
        .iter()
        .flat_map(|&(x, y)| ps.iter().map(move |p| (x, y, p)))
        .collect();
    let values: Vec<Rational> = jobs
        .par_iter()
        .map(|&(x, y, p)| kappa_p(g, x, y, p))
        .collect::<Result<_, _>>()?;
    Ok(match output.format {
        Format::Json => render_json(Value::Array(
            jobs.iter()
                .zip(&values)
                .map(|(&(x, y, p), k)| {
                    json!({"x": name(g, x), "y": name(g, y), "p": format_rational(p), "kappa": format_rational(k)})
                })
                .collect(),
        )),
        Format::Csv | Format::Text => {
            let mut out = csv_header(&["x", "y", "p"], &["kappa"], output.decimal_hint);
            out.push('\n');
            for (&(x, y, p), k) in jobs.iter().zip(&values) {
                let _ = writeln!(out, "{},{},{},{}", name(g, x), name(g, y), format_rational(p), csv_cell(k, output.decimal_hint));
            }
            out
        }
    })
}

fn lly_table(
    g: &Graph,
    pairs: &[(usize, usize)],
    output: &OutputOptions,
) -> Result<String, CliError> {
    let values: Vec<Rational> = pairs
        .par_iter()
        .map(|&(x, y)| kappa_lly(g, x, y))
        .collect::<Result<_, _>>()?;
    Ok(match output.format {
        Format::Json => render_json(Value::Array(
            pairs
                .iter()
                .zip(&values)
                .map(|(&(x, y), k)| json!({"x": name(g, x), "y": name(g, y), "kappa_lly": format_rational(k)}))
                .collect(),
        )),
        Format::Csv | Format::Text => {
            let mut out = csv_header(&["x", "y"], &["kappa_lly"], output.decimal_hint);
            out.push('\n');
            for (&(x, y), k) in pairs.iter().zip(&values) {
                let _ = writeln!(out, "{},{},{}", name(g, x), name(g, y), csv_cell(k, output.decimal_hint));
            }
            out
        }
    })
}

/// One row of the `idleness` table.
struct ProfileRow {
    delta: u32,
    method: &'static str,
    c: Option<[Rational; 3]>,
    critical: Vec<Rational>,
    function: PiecewiseLinear,
}

fn profile_row(g: &Graph, x: usize, y: usize) -> Result<ProfileRow, CurvatureError> {
    let delta = g.dist(x, y).ok_or(CurvatureError::Disconnected(x, y))?;
    if delta >= 2 {
        let profile = idleness_profile(g, x, y)?;
        Ok(ProfileRow {
            delta,
            method: "profile",
            c: Some([
                profile.c_lo.clone(),
                profile.c_mid.clone(),
                profile.c_hi.clone(),
            ]),
            critical: critical_points(&profile),
            function: profile.to_piecewise(),
        })
    } else {
        let function = reconstruct_by_sampling(g, x, y)?;
        let n = function.breakpoints.len();
        let critical = function.breakpoints[1..n - 1].to_vec();
        Ok(ProfileRow {
            delta,
            method: "sampling",
            c: None,
            critical,
            function,
        })
    }
}

fn idleness_table(
    g: &Graph,
    pairs: &[(usize, usize)],
    output: &OutputOptions,
) -> Result<String, CliError> {
    let rows: Vec<ProfileRow> = pairs
        .par_iter()
        .map(|&(x, y)| profile_row(g, x, y))
        .collect::<Result<_, _>>()?;
    let strings = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
    Ok(match output.format {
        Format::Json => render_json(Value::Array(
            pairs
                .iter()
                .zip(&rows)
                .map(|(&(x, y), row)| {
                    let pieces: Vec<Value> = row
                        .function
                        .pieces()
                        .iter()
                        .map(|p| {
                            json!({
                                "from": format_rational(&p.from),
                                "to": format_rational(&p.to),
                                "slope": format_rational(&p.slope),
                                "intercept": format_rational(&p.intercept),
                            })
                        })
                        .collect();
                    json!({
                        "x": name(g, x),
                        "y": name(g, y),
                        "delta": row.delta,
                        "method": row.method,
                        "c": row.c.as_ref().map(|c| strings(c)),
                        "critical_points": strings(&row.critical),
                        "pieces": pieces,
                    })
                })
                .collect(),
        )),
        Format::Csv | Format::Text => {
            let mut out = String::from("x,y,delta,method,c_lo,c_mid,c_hi,critical_points,pieces\n");
            for (&(x, y), row) in pairs.iter().zip(&rows) {
                let c = row
                    .c
                    .as_ref()
                    .map_or(",,".to_string(), |c| strings(c).join(","));
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    name(g, x),
                    name(g, y),
                    row.delta,
                    row.method,
                    c,
                    strings(&row.critical).join(";"),
                    row.function.piece_count()
                );
            }
            out
        }
    })
}

fn verify_report(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => render_json(json!({
            "suite": report.suite.name(),
            "passed": report.passed(),
            "checks": report.checks.iter().map(|c| json!({
                "name": c.name,
                "expected": c.expected,
                "computed": c.computed,
                "passed": c.passed,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("check,expected,computed,status\n");
            for c in &report.checks {
                let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{},{},{},{status}",
                    quote(&c.name),
                    quote(&c.expected),
                    quote(&c.computed)
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let _ = writeln!(out, "{c}");
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            let verdict = if failed == 0 { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{verdict} {}: {} checks, {failed} failed",
                report.suite.name(),
                report.checks.len()
            );
            out
        }
    }
}

/// Executes a parsed command.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let ok = |output: String, out: &Option<PathBuf>| Outcome {
        output,
        out: out.clone(),
        exit_code: 0,
    };
    match &config.command {
        Command::Curvature {
            source,
            pairs,
            p,
            output,
        } => {
            let g = load(source)?;
            let pairs = select_pairs(&g, pairs)?;
            Ok(ok(curvature_table(&g, &pairs, p, output)?, &output.out))
        }
        Command::Idleness {
            source,
            pairs,
            output,
        } => {
            let g = load(source)?;
            let pairs = select_pairs(&g, pairs)?;
            Ok(ok(idleness_table(&g, &pairs, output)?, &output.out))
        }
        Command::Lly {
            source,
            pairs,
            output,
        } => {
            let g = load(source)?;
            let pairs = select_pairs(&g, pairs)?;
            Ok(ok(lly_table(&g, &pairs, output)?, &output.out))
        }
        Command::Verify {
            suite,
            m,
            n,
            k,
            seed,
            count,
            format,
            out,
        } => {
            let report = match Suite::from(*suite) {
                Suite::Family => verify::family_suite(*m, *n, *k)?,
                Suite::Hexagon => verify::hexagon_suite()?,
                Suite::Tree => verify::tree_suite()?,
                Suite::Product => verify::product_suite(*seed)?,
                Suite::Bounds => verify::bounds_suite(*seed, *count)?,
                Suite::Figure3 => verify::figure3_suite()?,
            };
            Ok(Outcome {
                output: verify_report(&report, format.unwrap_or(Format::Text)),
                out: out.clone(),
                exit_code: if report.passed() { 0 } else { 1 },
            })
        }
        Command::Gen { spec, out } => {
            let (g, _) = generate(spec)?;
            let mut text = io::graph_to_json(&g);
            text.push('\n');
            Ok(ok(text, out))
        }
    }
}

/// Parses arguments, runs, writes the artifact, and returns the process
/// exit code: 0 pass, 1 verification failure, 2 usage error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&config) {
        Ok(outcome) => {
            match &outcome.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.output) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return 2;
                    }
                }
                None => print!("{}", outcome.output),
            }
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
