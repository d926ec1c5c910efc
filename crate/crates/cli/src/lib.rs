//! Command-line front end for `dcl-core`: argument parsing, config merging,
//! and the subcommands behind the `dcl` binary.
//!
//! Everything runs in-process through [`run`], which returns the exit code
//! and both output streams instead of printing, so tests can drive the CLI
//! without spawning it.
//!
//! Exit codes: 0 ok, 2 bad parameters, 3 infeasible, 4 overflow or search
//! budget exhausted, 5 violation, 6 non-unit label, 7 incomplete
//! factorization.

pub mod config;
pub mod dot;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dcl_core::evolution::{evolve_snapshots, verify_run_in, DEFAULT_HORIZON};
use dcl_core::number_theory::{
    carmichael_lambda, carmichael_numbers_up_to, gcd, korselt_check, KorseltCertificate,
};
use dcl_core::serde_util::decimal;
use dcl_core::{
    canonical_initial_labeling, find_generating_labels, graph_period, sample_coprime_preservation,
    solve_coprime_labeling, verify_modular_period, DclRun, Error, EvolveOptions, Family, Frame, Graph,
    Labeling, MapVerdict, PeriodReport, Preservation, Representation, SolveLimits, SolveResult,
    SolveStatus, TransformSpec,
};
use num_bigint::BigUint;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

pub use config::{Config, CONFIG_ENV};

pub mod exit {
    pub const OK: i32 = 0;
    pub const PARAMS: i32 = 2;
    pub const INFEASIBLE: i32 = 3;
    pub const OVERFLOW: i32 = 4;
    pub const VIOLATION: i32 = 5;
    pub const NON_UNIT: i32 = 6;
    pub const FACTORIZATION: i32 = 7;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "dcl", version, about = "Construct, evolve and verify dynamic coprime labelings")]
pub struct Cli {
    /// Output format [default: json]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family graph with its canonical labeling, or search for one.
    Construct(ConstructArgs),
    /// Compute the labeling at one or more time steps.
    Evolve(EvolveArgs),
    /// Check every frame up to a horizon; exit 5 on the first violation.
    Verify(VerifyArgs),
    /// Search for a coprime labeling with labels in 1..=budget.
    Solve(SolveArgs),
    /// Vertex orders and graph period modulo n.
    Period(PeriodArgs),
    /// Korselt certificate for n, or all Carmichael numbers up to a bound.
    Carmichael(CarmichaelArgs),
    /// List the available maps, or test one for coprime preservation.
    Maps(MapsArgs),
}

/// Where the graph and initial labeling come from.
#[derive(Debug, Clone, Default, Args)]
pub struct Source {
    /// Graph family: path, cycle, wheel, hypercube, complete
    #[arg(long)]
    pub family: Option<Family>,
    /// Family size parameter
    #[arg(long)]
    pub n: Option<usize>,
    /// Graph JSON, or the output of `construct`
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Labeling JSON
    #[arg(long, value_name = "FILE")]
    pub labels: Option<PathBuf>,
    /// Labels by vertex id, comma separated
    #[arg(long, value_name = "A,B,...", conflicts_with = "labels")]
    pub label_values: Option<String>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Search for a labeling with labels in 1..=budget instead of the canonical one
    #[arg(long, requires = "budget")]
    pub solve: bool,
    #[arg(long)]
    pub budget: Option<u64>,
    /// Node limit for the search
    #[arg(long)]
    pub max_nodes: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub budget: u64,
    #[arg(long)]
    pub max_nodes: Option<u64>,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub source: Source,
    /// power:K, prime-index, modpow:K:M, affine:P or shift:C
    #[arg(long = "map")]
    pub map: TransformSpec,
    #[arg(long, default_value_t = 0)]
    pub t: u64,
    /// Several time steps, comma separated; overrides --t
    #[arg(long, value_delimiter = ',')]
    pub snapshots: Option<Vec<u64>>,
    /// exact (default), power-form, prime-tower or modular:N
    #[arg(long)]
    pub representation: Option<Representation>,
    #[arg(long)]
    pub exact_bits_cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long = "map")]
    pub map: TransformSpec,
    #[arg(long)]
    pub horizon: Option<u64>,
    #[arg(long)]
    pub representation: Option<Representation>,
    /// Report residue collisions in modular frames as warnings
    #[arg(long)]
    pub allow_modular_collisions: bool,
    /// Attach a period report for the initial labels modulo this number
    #[arg(long)]
    pub modulus: Option<u64>,
    #[arg(long)]
    pub exact_bits_cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct PeriodArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub modulus: Option<u64>,
    /// Use prime labels that generate the unit group (on a path)
    #[arg(long)]
    pub generating: bool,
    /// Candidate periods to test, comma separated
    #[arg(long, value_delimiter = ',')]
    pub check: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct CarmichaelArgs {
    /// Number to certify
    #[arg(required_unless_present = "scan_upto", conflicts_with = "scan_upto")]
    pub number: Option<String>,
    /// List every Carmichael number up to this bound
    #[arg(long)]
    pub scan_upto: Option<u64>,
}

#[derive(Debug, Args)]
pub struct MapsArgs {
    /// Test this map on every coprime pair up to --bound
    #[arg(long = "map")]
    pub map: Option<TransformSpec>,
    #[arg(long, default_value_t = 30)]
    pub bound: u64,
    /// Extra random coprime pairs to test
    #[arg(long, default_value_t = 0)]
    pub samples: u64,
    /// Upper end of the random pair range
    #[arg(long, default_value_t = 10_000)]
    pub sample_max: u64,
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Exit code plus captured output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn params(message: impl Into<String>) -> Self {
        Failure { code: exit::PARAMS, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = exit_code_for(&e);
        let mut message = e.to_string();
        if let Error::SieveBudget { .. } = e {
            message.push_str("; use --representation prime-tower");
        }
        Failure { code, message }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ExactSizeExceeded { .. } | Error::SieveBudget { .. } => exit::OVERFLOW,
        Error::NotAUnit { .. } => exit::NON_UNIT,
        Error::FactorizationIncomplete { .. } => exit::FACTORIZATION,
        _ => exit::PARAMS,
    }
}

/// Output of `construct` and `solve`; also accepted by `--graph`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub graph: Graph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Labeling>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvolveDoc {
    pub transform: TransformSpec,
    pub frames: Vec<Frame>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodCheck {
    pub period: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodDoc {
    pub labeling: Labeling,
    pub report: PeriodReport,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<PeriodCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarmichaelDoc {
    pub certificate: KorseltCertificate,
    #[serde(with = "decimal")]
    pub lambda: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanDoc {
    pub limit: u64,
    pub numbers: Vec<u64>,
    pub certificates: Vec<KorseltCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapInfo {
    pub kind: String,
    pub syntax: String,
    pub preservation: Preservation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomPairs {
    pub seed: u64,
    pub samples: u64,
    pub max: u64,
    /// First failing pair `(a, b)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapCheckDoc {
    pub transform: TransformSpec,
    pub preservation: Preservation,
    pub exhaustive: MapVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random: Option<RandomPairs>,
}

/// Flags, then config file, then defaults.
struct Settings {
    format: Format,
    config: Config,
}

impl Settings {
    fn options(&self, bits_cap: Option<u64>, allow_collisions: bool) -> EvolveOptions {
        let mut opts = EvolveOptions::default();
        if let Some(cap) = bits_cap.or(self.config.exact_bits_cap) {
            opts.exact_bits_cap = cap;
        }
        opts.allow_modular_collisions =
            allow_collisions || self.config.allow_modular_collisions.unwrap_or(false);
        opts
    }

    fn representation(&self, flag: Option<Representation>) -> Result<Option<Representation>, Failure> {
        match flag {
            Some(r) => Ok(Some(r)),
            None => match &self.config.representation {
                Some(s) => s.parse().map(Some).map_err(Failure::from),
                None => Ok(None),
            },
        }
    }

    fn limits(&self, max_nodes: Option<u64>) -> SolveLimits {
        let mut limits = SolveLimits::default();
        if let Some(m) = max_nodes.or(self.config.solve_max_nodes) {
            limits.max_nodes = Some(m);
        }
        limits
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, config: &Config) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: exit::PARAMS, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: exit::OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let settings = Settings {
        format: cli.format.or(config.format).unwrap_or(Format::Json),
        config: config.clone(),
    };
    match dispatch(cli.command, &settings) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

fn dispatch(command: Command, s: &Settings) -> Result<(i32, String), Failure> {
    match command {
        Command::Construct(a) => construct(a, s),
        Command::Evolve(a) => evolve(a, s),
        Command::Verify(a) => verify(a, s),
        Command::Solve(a) => solve(a, s),
        Command::Period(a) => period(a, s),
        Command::Carmichael(a) => carmichael(a, s),
        Command::Maps(a) => maps(a, s),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn no_dot(s: &Settings, what: &str) -> Result<(), Failure> {
    if s.format == Format::Dot {
        return Err(Failure::params(format!("dot output is not available for {what}; use json or table")));
    }
    Ok(())
}

fn parse_values(list: &str) -> Result<Labeling, Failure> {
    let values = list
        .split(',')
        .map(|x| decimal::parse(x.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::params(format!("--label-values: {e}")))?;
    Ok(Labeling::from_values(values)?)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::params(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::params(format!("{}: {e}", path.display())))
}

fn load_graph(src: &Source) -> Result<(Graph, Option<Labeling>), Failure> {
    if let Some(path) = &src.graph {
        if src.family.is_some() {
            return Err(Failure::params("give either --graph or --family, not both"));
        }
        let value: serde_json::Value = read_json(path)?;
        if value.get("graph").is_some() {
            let doc: ConstructDoc = serde_json::from_value(value)
                .map_err(|e| Failure::params(format!("{}: {e}", path.display())))?;
            return Ok((doc.graph, doc.labeling));
        }
        let g: Graph = serde_json::from_value(value)
            .map_err(|e| Failure::params(format!("{}: {e}", path.display())))?;
        return Ok((g, None));
    }
    match (src.family, src.n) {
        (Some(family), Some(n)) => {
            let g = Graph::family(family, n)?;
            let f = canonical_initial_labeling(family, n)?;
            Ok((g, Some(f)))
        }
        (Some(_), None) => Err(Failure::params("--family needs --n")),
        _ => Err(Failure::params("no graph given; use --family and --n, or --graph FILE")),
    }
}

fn load(src: &Source) -> Result<(Graph, Labeling), Failure> {
    let (g, builtin) = load_graph(src)?;
    let f = if let Some(path) = &src.labels {
        read_json(path)?
    } else if let Some(list) = &src.label_values {
        parse_values(list)?
    } else {
        builtin.ok_or_else(|| Failure::params("no labeling given; use --labels or --label-values"))?
    };
    f.check_total(&g)?;
    Ok((g, f))
}

fn labeling_table(f: &Labeling) -> String {
    let mut out = String::from("vertex\tlabel\n");
    for (v, x) in f.iter() {
        writeln!(out, "{v}\t{x}").unwrap();
    }
    out
}

fn solve_exit(r: &SolveResult) -> i32 {
    match r.status {
        SolveStatus::Feasible { .. } => exit::OK,
        SolveStatus::Infeasible => exit::INFEASIBLE,
        SolveStatus::Timeout => exit::OVERFLOW,
    }
}

fn emit_construct(doc: &ConstructDoc, s: &Settings) -> String {
    match (s.format, &doc.labeling) {
        (Format::Json, _) => json(doc),
        (Format::Dot, Some(f)) => dot::labeling(&doc.graph, f),
        (Format::Dot, None) => dot::unlabeled(&doc.graph),
        (Format::Table, Some(f)) => labeling_table(f),
        (Format::Table, None) => match &doc.solve {
            Some(r) => format!("status\t{}\n", status_name(&r.status)),
            None => String::new(),
        },
    }
}

fn status_name(s: &SolveStatus) -> &'static str {
    match s {
        SolveStatus::Feasible { .. } => "feasible",
        SolveStatus::Infeasible => "infeasible",
        SolveStatus::Timeout => "timeout",
    }
}

fn construct(a: ConstructArgs, s: &Settings) -> Result<(i32, String), Failure> {
    let g = Graph::family(a.family, a.n)?;
    let mut doc = ConstructDoc {
        family: Some(a.family),
        n: Some(a.n),
        graph: g,
        labeling: None,
        solve: None,
        note: None,
    };
    let code = if a.solve {
        let budget = a.budget.expect("clap enforces --budget with --solve");
        let r = solve_coprime_labeling(&doc.graph, budget, s.limits(a.max_nodes))?;
        doc.labeling = r.labeling().cloned();
        let code = solve_exit(&r);
        doc.solve = Some(r);
        code
    } else {
        doc.labeling = Some(canonical_initial_labeling(a.family, a.n)?);
        doc.note = dcl_core::labeling::canonical_scope_note(a.family, a.n).map(str::to_string);
        exit::OK
    };
    Ok((code, emit_construct(&doc, s)))
}

fn solve(a: SolveArgs, s: &Settings) -> Result<(i32, String), Failure> {
    let (g, _) = load_graph(&a.source)?;
    let r = solve_coprime_labeling(&g, a.budget, s.limits(a.max_nodes))?;
    let code = solve_exit(&r);
    let doc = ConstructDoc {
        family: a.source.family,
        n: a.source.family.and(a.source.n),
        graph: g,
        labeling: r.labeling().cloned(),
        solve: Some(r),
        note: None,
    };
    Ok((code, emit_construct(&doc, s)))
}

fn evolve(a: EvolveArgs, s: &Settings) -> Result<(i32, String), Failure> {
    let (g, f0) = load(&a.source)?;
    let repr = s.representation(a.representation)?.unwrap_or(Representation::Exact);
    let times = a.snapshots.clone().unwrap_or_else(|| vec![a.t]);
    let frames = evolve_snapshots(&g, &f0, &a.map, &times, repr, &s.options(a.exact_bits_cap, false))?;
    let out = match s.format {
        Format::Json => json(&EvolveDoc { transform: a.map, frames }),
        Format::Dot => dot::frames(&g, &frames),
        Format::Table => {
            let mut out = String::from("t\tvertex\tlabel\n");
            for frame in &frames {
                for (v, l) in &frame.labels {
                    writeln!(out, "{}\t{v}\t{l}", frame.t).unwrap();
                }
            }
            out
        }
    };
    Ok((exit::OK, out))
}

fn verify(a: VerifyArgs, s: &Settings) -> Result<(i32, String), Failure> {
    no_dot(s, "verify")?;
    let (g, f0) = load(&a.source)?;
    let horizon = a.horizon.or(s.config.horizon).unwrap_or(DEFAULT_HORIZON);
    let repr = s.representation(a.representation)?.unwrap_or_else(|| Representation::natural_for(&a.map));
    let opts = s.options(a.exact_bits_cap, a.allow_modular_collisions);
    let mut run: DclRun = verify_run_in(&g, &f0, &a.map, horizon, repr, &opts)?;
    if let Some(n) = a.modulus {
        run.period_report = Some(graph_period(&f0, n)?);
    }
    let code = if run.verified() { exit::OK } else { exit::VIOLATION };
    let out = match s.format {
        Format::Table => {
            let mut out = format!("status\t{}\n", if run.verified() { "verified" } else { "violation" });
            for v in &run.violations {
                writeln!(out, "t={}\tedge=({}, {})\tgcd={}", v.t, v.edge.0, v.edge.1, v.gcd).unwrap();
            }
            for v in &run.injectivity_violations {
                writeln!(out, "t={}\tduplicate=({}, {})", v.t, v.u, v.v).unwrap();
            }
            out
        }
        _ => json(&run),
    };
    Ok((code, out))
}

fn period(a: PeriodArgs, s: &Settings) -> Result<(i32, String), Failure> {
    no_dot(s, "period")?;
    let n = a
        .modulus
        .or(s.config.modulus)
        .ok_or_else(|| Failure::params("period needs --modulus"))?;
    let (g, f0) = if a.generating {
        let f = find_generating_labels(n)?;
        let g = Graph::family(Family::Path, f.len())?;
        (g, f)
    } else {
        load(&a.source)?
    };
    let report = graph_period(&f0, n)?;
    let checks = a
        .check
        .iter()
        .map(|&period| Ok(PeriodCheck { period, holds: verify_modular_period(&g, &f0, n, period)? }))
        .collect::<Result<Vec<_>, Failure>>()?;
    let out = match s.format {
        Format::Table => {
            let mut out = String::from("vertex\tlabel\torder\n");
            for (v, x) in f0.iter() {
                writeln!(out, "{v}\t{x}\t{}", report.vertex_orders[&v]).unwrap();
            }
            writeln!(out, "lambda_G\t{}\nlambda\t{}", report.lambda_g, report.lambda).unwrap();
            for c in &checks {
                writeln!(out, "period {}\t{}", c.period, c.holds).unwrap();
            }
            out
        }
        _ => json(&PeriodDoc { labeling: f0, report, checks }),
    };
    Ok((exit::OK, out))
}

fn carmichael(a: CarmichaelArgs, s: &Settings) -> Result<(i32, String), Failure> {
    no_dot(s, "carmichael")?;
    if let Some(limit) = a.scan_upto {
        let numbers = carmichael_numbers_up_to(limit)?;
        let certificates = numbers
            .iter()
            .map(|&n| korselt_check(&n.into()))
            .collect::<Result<Vec<_>, _>>()?;
        let out = match s.format {
            Format::Table => numbers.iter().map(|n| format!("{n}\n")).collect(),
            _ => json(&ScanDoc { limit, numbers, certificates }),
        };
        return Ok((exit::OK, out));
    }
    let raw = a.number.expect("clap requires a number without --scan-upto");
    let n = decimal::parse(&raw).map_err(Failure::params)?;
    let certificate = korselt_check(&n)?;
    let lambda = carmichael_lambda(&n)?;
    let out = match s.format {
        Format::Table => format!(
            "n\t{}\ncarmichael\t{}\nlambda\t{}\n{}",
            certificate.n,
            certificate.is_carmichael,
            lambda,
            certificate.reason.as_ref().map(|r| format!("reason\t{r}\n")).unwrap_or_default()
        ),
        _ => json(&CarmichaelDoc { certificate, lambda }),
    };
    Ok((exit::OK, out))
}

fn map_catalogue() -> Vec<MapInfo> {
    [
        ("power", "power:K", TransformSpec::Power { k: 2 }),
        ("prime_index", "prime-index", TransformSpec::PrimeIndex),
        ("modular_power", "modpow:K:M", TransformSpec::ModularPower { k: 2, m: 7 }),
        ("affine", "affine:P", TransformSpec::Affine { p: 2 }),
        ("additive_shift", "shift:C", TransformSpec::AdditiveShift { c: 1 }),
    ]
    .into_iter()
    .map(|(kind, syntax, spec)| MapInfo {
        kind: kind.into(),
        syntax: syntax.into(),
        preservation: spec.preservation(),
    })
    .collect()
}

fn random_pairs(spec: &TransformSpec, seed: u64, samples: u64, max: u64) -> Result<RandomPairs, Failure> {
    if max < 3 {
        return Err(Failure::params("--sample-max must be at least 3"));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut counterexample = None;
    let mut drawn = 0;
    while drawn < samples {
        let a = rng.gen_range(1..max);
        let b = rng.gen_range(a + 1..=max);
        if !gcd(&a.into(), &b.into()).is_one() {
            continue;
        }
        drawn += 1;
        let (fa, fb) = (spec.apply(&a.into())?, spec.apply(&b.into())?);
        if !gcd(&fa, &fb).is_one() {
            counterexample = Some((a, b));
            break;
        }
    }
    Ok(RandomPairs { seed, samples, max, counterexample })
}

fn maps(a: MapsArgs, s: &Settings) -> Result<(i32, String), Failure> {
    no_dot(s, "maps")?;
    let Some(spec) = a.map else {
        let list = map_catalogue();
        let out = match s.format {
            Format::Table => list
                .iter()
                .map(|m| format!("{}\t{}\t{}\n", m.kind, m.syntax, serde_json::to_value(m.preservation).unwrap().as_str().unwrap()))
                .collect(),
            _ => json(&list),
        };
        return Ok((exit::OK, out));
    };
    let exhaustive = sample_coprime_preservation(&spec, a.bound)?;
    let random = if a.samples > 0 {
        let seed = a.seed.or(s.config.seed).unwrap_or(0);
        Some(random_pairs(&spec, seed, a.samples, a.sample_max)?)
    } else {
        None
    };
    let doc = MapCheckDoc { preservation: spec.preservation(), transform: spec, exhaustive, random };
    let out = match s.format {
        Format::Table => {
            let mut out = format!("map\t{}\npreserved\t{}\n", doc.transform, doc.exhaustive.preserved);
            if let Some(c) = &doc.exhaustive.counterexample {
                writeln!(out, "counterexample\t({}, {}) -> gcd({}, {}) = {}", c.a, c.b, c.image_a, c.image_b, c.gcd).unwrap();
            }
            out
        }
        _ => json(&doc),
    };
    Ok((exit::OK, out))
}
