//! Command dispatch for the `dla-lab` binary. Every command renders its
//! report to a string so the binary and the tests share one code path.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use dla_lab::closure::RankArithmetic;
use dla_lab::graph::{dimension_bounds, kn_formulas, random_corpus};
use dla_lab::linalg::DEFAULT_BUDGET;
use dla_lab::purity;
use dla_lab::suite::{self, Check, GraphReport};
use dla_lab::{Error, Family, Graph};

pub const SCHEMA: &str = "dla-lab/1";
pub const DEFAULT_SEED: u64 = 20240917;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Raw closure switches to modular rank decisions above this `n` under
/// `--arithmetic auto`.
pub const AUTO_EXACT_MAX_N: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "dla-lab", version, about = "Dynamical Lie algebras of QAOA-MaxCut circuits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closure, ideal and center of one graph.
    Compute(ComputeArgs),
    /// Closed-form checks for the cycle graph.
    VerifyCycle(VerifyArgs),
    /// Closed-form checks for the complete graph.
    VerifyComplete(VerifyArgs),
    /// Expectation, variance and purities of the cut observable.
    Variance(VarianceArgs),
    /// Dimension bounds of one graph.
    Bounds(BoundsArgs),
    /// Tabulates `compute` over a family or a random corpus.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Arithmetic {
    Exact,
    Modular,
    /// Exact unless raw closure runs on more than five qubits.
    Auto,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// `cycle:N`, `complete:N`, `path:N` or `file:PATH`.
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub orbit_compress: bool,
    /// Cap on stored nonzero entries.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = positive_usize)]
    pub budget: usize,
    #[arg(long, value_enum, default_value_t = Arithmetic::Auto)]
    pub arithmetic: Arithmetic,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE, value_parser = positive_f64)]
    pub tolerance: f64,
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = positive_usize)]
    pub budget: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VarianceArgs {
    #[arg(long, default_value = "cycle")]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub graph: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// `cycle`, `complete`, `path` or `random`.
    #[arg(long)]
    pub family: String,
    #[arg(long, default_value_t = 3)]
    pub min_n: usize,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    /// Number of graphs for the random family.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub orbit_compress: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = positive_usize)]
    pub budget: usize,
    #[arg(long, value_enum, default_value_t = Arithmetic::Auto)]
    pub arithmetic: Arithmetic,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Rendered report and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    VerificationFailed = 1,
    Usage = 2,
    Resource = 3,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

/// A command that could not produce a report.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BudgetExceeded { .. } | Error::GroupTooLarge { .. } => Status::Resource,
            Error::Inconsistent(_) => Status::VerificationFailed,
            _ => Status::Usage,
        };
        Self { status, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { status: Status::Usage, message: message.into() }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Compute(a) => compute(a),
        Command::VerifyCycle(a) => verify(a, "verify-cycle", |n| suite::verify_cycle(n, a.tolerance, a.budget)),
        Command::VerifyComplete(a) => verify(a, "verify-complete", |n| suite::verify_complete(n, a.budget)),
        Command::Variance(a) => variance(a),
        Command::Bounds(a) => bounds(a),
        Command::Sweep(a) => sweep(a),
    }
}

/// `family:N` designators plus `file:PATH` edge lists.
pub fn load_graph(source: &str) -> Result<Graph, Failure> {
    match source.strip_prefix("file:") {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            Ok(Graph::parse_edge_list(&text)?)
        }
        None => Ok(Graph::from_designator(source)?),
    }
}

fn resolve(arithmetic: Arithmetic, g: &Graph, orbit_compress: bool) -> RankArithmetic {
    match arithmetic {
        Arithmetic::Exact => RankArithmetic::Exact,
        Arithmetic::Modular => RankArithmetic::Modular,
        Arithmetic::Auto if orbit_compress || g.n() <= AUTO_EXACT_MAX_N => RankArithmetic::Exact,
        Arithmetic::Auto => RankArithmetic::Modular,
    }
}

fn arithmetic_name(a: RankArithmetic) -> &'static str {
    match a {
        RankArithmetic::Exact => "exact",
        RankArithmetic::Modular => "modular",
    }
}

/// Rounds to 12 significant digits; the JSON writer then prints the
/// shortest representation, which re-parses to the same value.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    json!(rounded)
}

fn big(x: &BigUint) -> Value {
    match x.to_u64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn document(command: &str, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("command".into(), json!(command));
    if let Value::Object(fields) = body {
        map.extend(fields);
    }
    Value::Object(map)
}

/// Pretty JSON with a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn text_lines(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, val) in map {
            let shown = match val {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "{k}: {shown}");
        }
    }
    out
}

fn render(v: &Value, format: Format, command: &str) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(render_json(v)),
        Format::Text => Ok(text_lines(v)),
        Format::Csv => Err(usage(format!("{command} has no csv output"))),
    }
}

fn report_json(r: &GraphReport, source: &str, connected: bool, arithmetic: RankArithmetic) -> Value {
    json!({
        "graph": source,
        "n": r.n,
        "dim": r.dimension,
        "degree": r.degree,
        "center_dim": r.center_dim,
        "ideal_dim": r.ideal_dim,
        "aut_bound": big(&r.aut_bound),
        "yz_even_ok": r.yz_even_ok,
        "connected": connected,
        "orbit_compressed": r.orbit_compressed,
        "arithmetic": arithmetic_name(arithmetic),
        "runtime_ms": r.runtime_ms as u64,
    })
}

fn compute(a: &ComputeArgs) -> Result<Outcome, Failure> {
    let g = load_graph(&a.graph)?;
    let arithmetic = resolve(a.arithmetic, &g, a.orbit_compress);
    let r = suite::analyze_graph(&g, a.orbit_compress, arithmetic, a.budget)?;
    let doc = document("compute", report_json(&r, &a.graph, g.is_connected(), arithmetic));
    Ok(Outcome { output: render(&doc, a.format, "compute")?, status: Status::Ok })
}

fn check_json(c: &Check) -> Value {
    json!({
        "tag": c.tag,
        "passed": c.passed,
        "residual": c.residual.map(float).unwrap_or(Value::Null),
        "detail": c.detail,
    })
}

fn verify(
    a: &VerifyArgs,
    command: &str,
    suite: impl Fn(usize) -> dla_lab::Result<Vec<Check>>,
) -> Result<Outcome, Failure> {
    if a.n < 3 {
        return Err(usage(format!("{command}: n >= 3 required, got {}", a.n)));
    }
    let checks = suite(a.n)?;
    let passed = suite::all_passed(&checks);
    let status = if passed { Status::Ok } else { Status::VerificationFailed };
    let output = match a.format {
        Format::Json => render_json(&document(
            command,
            json!({
                "n": a.n,
                "passed": passed,
                "checks": checks.iter().map(check_json).collect::<Vec<_>>(),
            }),
        )),
        Format::Text => {
            let width = checks.iter().map(|c| c.tag.len()).max().unwrap_or(0);
            let mut out = String::new();
            for c in &checks {
                let residual = c.residual.map(|r| format!("{r:.3e}")).unwrap_or_else(|| "exact".into());
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{:<width$}  {verdict}  {residual:<9}  {}", c.tag, c.detail);
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            let _ = writeln!(out, "{command} n={}: {} checks, {failed} failed", a.n, checks.len());
            out
        }
        Format::Csv => return Err(usage(format!("{command} has no csv output"))),
    };
    Ok(Outcome { output, status })
}

fn variance(a: &VarianceArgs) -> Result<Outcome, Failure> {
    if a.family != "cycle" {
        return Err(usage(format!(
            "variance: unsupported family {:?}; only the cycle has a proven decomposition into simple components",
            a.family
        )));
    }
    let report = purity::cycle_spectral_report(a.n)?;
    let c = &report.closed;
    let components: Vec<Value> = c
        .purity_per_component
        .iter()
        .map(|&(k, rho, obs)| json!({ "k": k, "rho": float(rho), "observable": float(obs) }))
        .collect();
    let doc = document(
        "variance",
        json!({
            "family": "cycle",
            "n": a.n,
            "expectation": float(c.expectation),
            "variance": float(c.variance),
            "variance_exact": purity::cycle_variance_exact(a.n)?.to_string(),
            "purity_whole": { "rho": float(c.purity_whole.0), "observable": float(c.purity_whole.1) },
            "purity_center": { "rho": float(c.purity_center.0), "observable": float(c.purity_center.1) },
            "per_component_purities": components,
            "recomputed_max_deviation": report.max_deviation().map(float).unwrap_or(Value::Null),
        }),
    );
    Ok(Outcome { output: render(&doc, a.format, "variance")?, status: Status::Ok })
}

fn bounds(a: &BoundsArgs) -> Result<Outcome, Failure> {
    let g = load_graph(&a.graph)?;
    let b = dimension_bounds(&g)?;
    let mut body = json!({
        "graph": a.graph,
        "n": g.n(),
        "connected": g.is_connected(),
        "aut_bound": big(&b.aut_bound),
        "center_bound": b.center_bound,
    });
    if g.family() == Some(Family::Complete) {
        let f = kn_formulas(g.n())?;
        body["complete"] = json!({
            "dim": f.dim,
            "ideal_dim": f.ideal_dim,
            "center_dim": f.center_dim,
            "yz_even_bound": f.yz_bound,
            "binomial_bound": f.binom_bound,
            "ordering_holds": suite::kn_bounds_hold(g.n(), f.dim, f.yz_bound, f.binom_bound),
        });
    }
    Ok(Outcome { output: render(&document("bounds", body), a.format, "bounds")?, status: Status::Ok })
}

#[derive(Debug, Serialize)]
struct SweepRow {
    index: usize,
    family: String,
    n: usize,
    edges: usize,
    dim: usize,
    degree: usize,
    center_dim: usize,
    ideal_dim: usize,
    aut_bound: String,
    yz_even_ok: bool,
    arithmetic: &'static str,
    runtime_ms: u128,
}

fn sweep_graphs(a: &SweepArgs) -> Result<Vec<(String, Graph)>, Failure> {
    if a.min_n > a.max_n {
        return Err(usage(format!("sweep: min-n {} exceeds max-n {}", a.min_n, a.max_n)));
    }
    let family = match a.family.as_str() {
        "random" => {
            let corpus = random_corpus(a.count, a.min_n.max(2), a.max_n, a.seed)?;
            return Ok(corpus.into_iter().map(|g| ("random".to_string(), g)).collect());
        }
        "cycle" => Family::Cycle,
        "complete" => Family::Complete,
        "path" => Family::Path,
        other => return Err(usage(format!("sweep: unknown family {other:?}"))),
    };
    (a.min_n..=a.max_n).map(|n| Ok((family.to_string(), Graph::family_member(family, n)?))).collect()
}

fn sweep(a: &SweepArgs) -> Result<Outcome, Failure> {
    let graphs = sweep_graphs(a)?;
    // independent graphs run on the pool; collecting keeps the input order
    let rows = graphs
        .par_iter()
        .enumerate()
        .map(|(index, (family, g))| {
            let arithmetic = resolve(a.arithmetic, g, a.orbit_compress);
            let r = suite::analyze_graph(g, a.orbit_compress, arithmetic, a.budget)?;
            Ok(SweepRow {
                index,
                family: family.clone(),
                n: r.n,
                edges: g.edges().len(),
                dim: r.dimension,
                degree: r.degree,
                center_dim: r.center_dim,
                ideal_dim: r.ideal_dim,
                aut_bound: r.aut_bound.to_string(),
                yz_even_ok: r.yz_even_ok,
                arithmetic: arithmetic_name(arithmetic),
                runtime_ms: r.runtime_ms,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let output = match a.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).map_err(|e| usage(format!("csv: {e}")))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| usage(format!("csv: {e}")))?).expect("csv is UTF-8")
        }
        Format::Json => {
            render_json(&document("sweep", json!({ "rows": serde_json::to_value(&rows).expect("rows serialize") })))
        }
        Format::Text => return Err(usage("sweep has no text output")),
    };
    Ok(Outcome { output, status: Status::Ok })
}
