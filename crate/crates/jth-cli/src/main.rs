//! `jth` — classification, spectra, determinants, varieties, censuses, and
//! the cross-oracle verification for diagonal perturbations of the
//! half-line Jacobi operator.
//!
//! Potentials are entered as comma-separated μ values; `p/q` and decimal
//! literals are parsed exactly in exact mode. Exit codes: 0 success,
//! 1 verification/computation failure, 2 usage error.

mod output;

use std::fs::File;
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use jth_core::classifier::{classify_g, classify_spectral, PolyFamily};
use jth_core::oracle::{
    perturbation_det, spectral_report_inertia, spectral_report_linsys_check,
    spectral_report_sturm, threshold_scaled_det, Edge,
};
use jth_core::potential::Potential;
use jth_core::recurrence::c_n;
use jth_core::sampler::{
    region_census, sample_variety, write_census_csv, write_variety_csv, GridAxis,
};
use jth_core::scalar::{parse_rat, Rat, Scalar, DEFAULT_TOL};
use jth_core::theta::z_of_theta;
use jth_core::verify::{run_all, run_suite, SuiteOutcome, VerifyConfig, SUITE_NAMES};
use jth_core::{jost, Error};

#[derive(Parser)]
#[command(
    name = "jth",
    version,
    about = "Threshold Jost functions and critical varieties of perturbed Jacobi operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Arithmetic mode (exact rationals or IEEE doubles) [env: JTH_MODE]
    #[arg(long, global = true, value_enum)]
    mode: Option<Mode>,

    /// Float-mode zero tolerance τ [env: JTH_TOL]
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Truncation size N for the matrix oracle [env: JTH_N]
    #[arg(long, global = true)]
    trunc: Option<usize>,

    /// Counting margin δ (counts taken at −δ and 4 + δ)
    #[arg(long, global = true)]
    delta: Option<f64>,

    /// Seed for the sampling commands [env: JTH_SEED]
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output format (default: json; variety/census default: csv)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Sturm,
    Inertia,
    LinsysCheck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EdgeArg {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Q,
    C,
}

#[derive(Subcommand)]
enum Command {
    /// Region and spectral classification of a potential
    Classify(ClassifyArgs),
    /// Discrete spectrum through one of the oracle routes
    Spectrum(SpectrumArgs),
    /// Perturbation determinant values and threshold ladders
    Det(DetArgs),
    /// Sample the nodal variety V(Q_n) or V(C_n) as CSV
    Variety(VarietyArgs),
    /// Classify uniform samples of a box into the G-components
    Census(CensusArgs),
    /// Run the cross-oracle verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Comma-separated μ values (rationals `p/q` or decimals)
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, value_enum, default_value = "sturm")]
    method: MethodArg,
}

#[derive(Args)]
struct DetArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    /// Evaluation point in the local parameter
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Evaluation point in the spectral parameter (implies float evaluation)
    #[arg(long, allow_hyphen_values = true)]
    z: Option<f64>,
    /// Emit the scaled threshold ladder z = edge ∓ 10⁻², …, 10⁻¹⁰ instead
    #[arg(long, value_enum)]
    scaled_limit: Option<EdgeArg>,
}

#[derive(Args)]
struct VarietyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Per-axis grid `min:max:steps`, comma-separated; one spec broadcasts
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    /// Per-axis box `min:max`, comma-separated; one spec broadcasts
    #[arg(long, allow_hyphen_values = true)]
    r#box: String,
    #[arg(long)]
    samples: usize,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single suite instead of all of them
    #[arg(long)]
    suite: Option<String>,
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

struct RunConfig {
    mode: Mode,
    tol: f64,
    trunc: usize,
    delta: f64,
    seed: u64,
    format: Option<Format>,
}

fn env_parsed<T: FromStr>(var: &str) -> Result<Option<T>, CliError> {
    match std::env::var(var) {
        Ok(raw) => raw
            .parse()
            .map(Some)
            .map_err(|_| CliError::usage(format!("cannot parse {var}={raw}"))),
        Err(_) => Ok(None),
    }
}

impl RunConfig {
    fn resolve(cli: &Cli) -> Result<Self, CliError> {
        let mode = match &cli.mode {
            Some(m) => *m,
            None => match std::env::var("JTH_MODE").ok().as_deref() {
                Some("exact") | None => Mode::Exact,
                Some("float") => Mode::Float,
                Some(other) => {
                    return Err(CliError::usage(format!(
                        "JTH_MODE={other} is not exact|float"
                    )))
                }
            },
        };
        let tol = match cli.tol {
            Some(t) => t,
            None => env_parsed("JTH_TOL")?.unwrap_or(DEFAULT_TOL),
        };
        let trunc = match cli.trunc {
            Some(n) => n,
            None => env_parsed("JTH_N")?.unwrap_or(3000),
        };
        let seed = match cli.seed {
            Some(s) => s,
            None => env_parsed("JTH_SEED")?.unwrap_or(0),
        };
        let delta = cli.delta.unwrap_or(1e-8);
        if tol <= 0.0 {
            return Err(CliError::usage("τ must be positive"));
        }
        if trunc < 500 {
            return Err(CliError::usage("truncation N must be at least 500"));
        }
        if delta <= 0.0 {
            return Err(CliError::usage("margin δ must be positive"));
        }
        Ok(Self {
            mode,
            tol,
            trunc,
            delta,
            seed,
            format: cli.format,
        })
    }

    fn mode_name(&self) -> &'static str {
        match self.mode {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }

    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

/// Potential carried in whichever arithmetic the run selected.
enum AnyPotential {
    Exact(Potential<Rat>),
    Float(Potential<f64>),
}

impl AnyPotential {
    fn parse(list: &str, mode: Mode) -> Result<Self, CliError> {
        let entries: Vec<&str> = list.split(',').map(str::trim).collect();
        if entries.iter().any(|s| s.is_empty()) {
            return Err(CliError::usage(format!("empty entry in --mu '{list}'")));
        }
        match mode {
            Mode::Exact => {
                let mu = entries
                    .iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| CliError::usage(e.to_string()))?;
                Ok(AnyPotential::Exact(Potential::new(mu)))
            }
            Mode::Float => {
                let mu = entries
                    .iter()
                    .map(|s| {
                        parse_rat(s)
                            .map(|r| r.to_f64_lossy())
                            .or_else(|_| s.parse::<f64>())
                            .ok()
                            .filter(|x| x.is_finite())
                            .ok_or_else(|| {
                                CliError::usage(format!("cannot parse '{s}' as a finite number"))
                            })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AnyPotential::Float(Potential::new(mu)))
            }
        }
    }

    fn n(&self) -> usize {
        match self {
            AnyPotential::Exact(p) => p.n(),
            AnyPotential::Float(p) => p.n(),
        }
    }

    fn to_f64(&self) -> Potential<f64> {
        match self {
            AnyPotential::Exact(p) => p.to_f64(),
            AnyPotential::Float(p) => p.clone(),
        }
    }

    /// Every f64 is a rational, so the exact view is always available.
    fn to_exact(&self) -> Potential<Rat> {
        match self {
            AnyPotential::Exact(p) => p.clone(),
            AnyPotential::Float(p) => Potential::new(
                p.mu()
                    .iter()
                    .map(|&x| Rat::from_float(x).expect("finite potential entry"))
                    .collect(),
            ),
        }
    }

    fn mu_strings(&self) -> Vec<String> {
        match self {
            AnyPotential::Exact(p) => p.mu().iter().map(|x| x.to_string()).collect(),
            AnyPotential::Float(p) => p.mu().iter().map(|x| x.to_string()).collect(),
        }
    }

    fn mu_display(&self) -> String {
        format!("({})", self.mu_strings().join(", "))
    }
}

fn write_out(path: &Option<String>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut f =
                File::create(p).map_err(|e| CliError::Failed(format!("cannot write {p}: {e}")))?;
            f.write_all(content.as_bytes())
                .map_err(|e| CliError::Failed(format!("cannot write {p}: {e}")))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    let cfg = RunConfig::resolve(cli)?;
    match &cli.command {
        Command::Classify(args) => cmd_classify(args, &cfg),
        Command::Spectrum(args) => cmd_spectrum(args, &cfg),
        Command::Det(args) => cmd_det(args, &cfg),
        Command::Variety(args) => cmd_variety(args, &cfg),
        Command::Census(args) => cmd_census(args, &cfg),
        Command::Verify(args) => cmd_verify(args, &cfg),
    }
}

fn cmd_classify(args: &ClassifyArgs, cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let pot = AnyPotential::parse(&args.mu, cfg.mode)?;
    if pot.n() == 0 {
        return Err(CliError::usage("--mu must be nonempty"));
    }
    let (sc, left, right) = match &pot {
        AnyPotential::Exact(p) => (
            classify_spectral(p, cfg.tol)?,
            classify_g(p, cfg.tol)?,
            classify_g(&p.reflect(), cfg.tol)?,
        ),
        AnyPotential::Float(p) => (
            classify_spectral(p, cfg.tol)?,
            classify_g(p, cfg.tol)?,
            classify_g(&p.reflect(), cfg.tol)?,
        ),
    };
    match cfg.format_or(Format::Json) {
        Format::Json => {
            let doc = json!({
                "mu": pot.mu_strings(),
                "n": pot.n(),
                "mode": cfg.mode_name(),
                "spectral": sc,
                "region_left": left,
                "region_right": right,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        Format::Plain => print!(
            "{}",
            output::classify_plain(
                &pot.mu_display(),
                pot.n(),
                cfg.mode_name(),
                &sc,
                &left,
                &right
            )
        ),
        Format::Csv => return Err(CliError::usage("classify emits json or plain, not csv")),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_spectrum(args: &SpectrumArgs, cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let pot = AnyPotential::parse(&args.mu, cfg.mode)?;
    if pot.n() == 0 {
        return Err(CliError::usage("--mu must be nonempty"));
    }
    let report = match args.method {
        MethodArg::Sturm => spectral_report_sturm(&pot.to_exact())?,
        MethodArg::Inertia => spectral_report_inertia(&pot.to_f64(), cfg.trunc, cfg.delta)?,
        MethodArg::LinsysCheck => spectral_report_linsys_check(&pot.to_exact())?,
    };
    match cfg.format_or(Format::Json) {
        Format::Json => {
            let doc = json!({
                "mu": pot.mu_strings(),
                "mode": cfg.mode_name(),
                "report": report,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        Format::Plain => print!("{}", output::spectrum_plain(&report)),
        Format::Csv => return Err(CliError::usage("spectrum emits json or plain, not csv")),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_det(args: &DetArgs, cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let pot = AnyPotential::parse(&args.mu, cfg.mode)?;
    if pot.n() == 0 {
        return Err(CliError::usage("--mu must be nonempty"));
    }
    if let Some(edge) = args.scaled_limit {
        return det_ladder(&pot, edge, cfg);
    }
    let (doc, plain) = match (&args.theta, args.z) {
        (Some(_), Some(_)) | (None, None) => {
            return Err(CliError::usage("give exactly one of --theta or --z"))
        }
        (Some(theta_raw), None) => match &pot {
            AnyPotential::Exact(p) => {
                let theta = parse_rat(theta_raw).map_err(|e| CliError::usage(e.to_string()))?;
                let det = perturbation_det(p, &theta, cfg.tol)?;
                let z = z_of_theta(&theta)?;
                (
                    json!({
                        "mu": pot.mu_strings(),
                        "mode": "exact",
                        "theta": theta.to_string(),
                        "z": z.to_string(),
                        "det": det.to_string(),
                        "det_approx": det.to_f64_lossy(),
                    }),
                    format!("det = {det} ≈ {:.15}\n", det.to_f64_lossy()),
                )
            }
            AnyPotential::Float(p) => {
                let theta: f64 = parse_rat(theta_raw)
                    .map(|r| r.to_f64_lossy())
                    .or_else(|_| theta_raw.parse::<f64>())
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| CliError::usage(format!("cannot parse Θ '{theta_raw}'")))?;
                let det = perturbation_det(p, &theta, cfg.tol)?;
                let z = z_of_theta(&theta)?;
                (
                    json!({
                        "mu": pot.mu_strings(),
                        "mode": "float",
                        "theta": theta,
                        "z": z,
                        "det": det,
                    }),
                    format!("det = {det:.15}\n"),
                )
            }
        },
        (None, Some(z)) => {
            if !z.is_finite() {
                return Err(CliError::usage("--z must be finite"));
            }
            // z → Θ crosses a square root, so this path evaluates in floats.
            let theta = jth_core::theta::theta_of_z(z)?;
            let det = perturbation_det(&pot.to_f64(), &theta, cfg.tol)?;
            (
                json!({
                    "mu": pot.mu_strings(),
                    "mode": cfg.mode_name(),
                    "theta": theta,
                    "z": z,
                    "det": det,
                }),
                format!("det = {det:.15}  (Θ = {theta:.15})\n"),
            )
        }
    };
    match cfg.format_or(Format::Json) {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("json")),
        Format::Plain => print!("{plain}"),
        Format::Csv => return Err(CliError::usage("det emits json or plain, not csv")),
    }
    Ok(ExitCode::SUCCESS)
}

fn det_ladder(pot: &AnyPotential, edge: EdgeArg, cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let exact = pot.to_exact();
    let float = pot.to_f64();
    let (edge, target) = match edge {
        EdgeArg::Left => (Edge::Left, c_n(&exact)?.to_f64_lossy()),
        EdgeArg::Right => (
            Edge::Right,
            jost::jost_eval(&exact, &jth_core::scalar::rat_i(-1)).to_f64_lossy(),
        ),
    };
    let mut rungs = Vec::new();
    for m in 1..=5u32 {
        let h = 10f64.powi(-(2 * m as i32));
        let z = match edge {
            Edge::Left => -h,
            Edge::Right => 4.0 + h,
        };
        let value = threshold_scaled_det(&float, z, edge)?;
        rungs.push(json!({
            "z": z,
            "scaled_det": value,
            "error": (value - target).abs(),
        }));
    }
    let doc = json!({
        "mu": pot.mu_strings(),
        "edge": match edge { Edge::Left => "left", Edge::Right => "right" },
        "threshold_jost_value": target,
        "ladder": rungs,
    });
    match cfg.format_or(Format::Json) {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc).expect("json")),
        Format::Plain => {
            println!("threshold Jost value = {target:.15}");
            for r in doc["ladder"].as_array().expect("array") {
                println!(
                    "z = {:>12.3e}  scaled det = {:>18.15}  error = {:.3e}",
                    r["z"].as_f64().expect("z"),
                    r["scaled_det"].as_f64().expect("v"),
                    r["error"].as_f64().expect("e"),
                );
            }
        }
        Format::Csv => return Err(CliError::usage("det emits json or plain, not csv")),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_axis_list<T>(
    raw: &str,
    n_axes: usize,
    parse_one: impl Fn(&str) -> Result<T, CliError>,
) -> Result<Vec<T>, CliError>
where
    T: Clone,
{
    let specs = raw
        .split(',')
        .map(|s| parse_one(s.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    if specs.len() == n_axes {
        Ok(specs)
    } else if specs.len() == 1 && n_axes > 0 {
        Ok(vec![specs[0].clone(); n_axes])
    } else {
        Err(CliError::usage(format!(
            "expected {n_axes} axis specs (or one to broadcast), got {}",
            specs.len()
        )))
    }
}

fn cmd_variety(args: &VarietyArgs, cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let family = match args.family {
        FamilyArg::Q => PolyFamily::Q,
        FamilyArg::C => PolyFamily::C,
    };
    let n_axes = args.n.saturating_sub(1);
    let grid = match (&args.grid, n_axes) {
        (None, 0) => Vec::new(),
        (None, _) => {
            // Default grids: 512 steps per axis for n = 2, 128 for n ≥ 3.
            let steps = if args.n == 2 { 512 } else { 128 };
            vec![
                GridAxis {
                    min: -4.0,
                    max: 4.0,
                    steps
                };
                n_axes
            ]
        }
        (Some(raw), _) => parse_axis_list(raw, n_axes, |s| {
            let parts: Vec<&str> = s.split(':').collect();
            if parts.len() != 3 {
                return Err(CliError::usage(format!(
                    "grid axis '{s}' is not min:max:steps"
                )));
            }
            let min: f64 = parts[0]
                .parse()
                .map_err(|_| CliError::usage(format!("bad grid min '{}'", parts[0])))?;
            let max: f64 = parts[1]
                .parse()
                .map_err(|_| CliError::usage(format!("bad grid max '{}'", parts[1])))?;
            let steps: usize = parts[2]
                .parse()
                .map_err(|_| CliError::usage(format!("bad step count '{}'", parts[2])))?;
            Ok(GridAxis { min, max, steps })
        })?,
    };
    let sweep = sample_variety(args.n, family, &grid, cfg.tol)?;
    let mut buf = Vec::new();
    write_variety_csv(&mut buf, &sweep).expect("in-memory write");
    write_out(&args.out, &String::from_utf8(buf).expect("utf8"))?;
    if sweep.skipped > 0 {
        eprintln!(
            "note: {} grid prefixes skipped inside the lower-variety band",
            sweep.skipped
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(args: &CensusArgs, cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let bounds = parse_axis_list(&args.r#box, args.n, |s| {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 2 {
            return Err(CliError::usage(format!("box axis '{s}' is not min:max")));
        }
        let lo: f64 = parts[0]
            .parse()
            .map_err(|_| CliError::usage(format!("bad box min '{}'", parts[0])))?;
        let hi: f64 = parts[1]
            .parse()
            .map_err(|_| CliError::usage(format!("bad box max '{}'", parts[1])))?;
        Ok((lo, hi))
    })?;
    let report = region_census(args.n, &bounds, args.samples, cfg.seed, cfg.tol)?;
    let content = match cfg.format_or(Format::Csv) {
        Format::Csv => {
            let mut buf = Vec::new();
            write_census_csv(&mut buf, &report).expect("in-memory write");
            String::from_utf8(buf).expect("utf8")
        }
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("json")),
        Format::Plain => return Err(CliError::usage("census emits csv or json")),
    };
    write_out(&args.out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs, cfg: &RunConfig) -> Result<ExitCode, CliError> {
    let vcfg = VerifyConfig {
        seed: cfg.seed,
        truncation: cfg.trunc,
        margin: cfg.delta,
        tol: cfg.tol,
    };
    let outcomes: Vec<SuiteOutcome> = match &args.suite {
        Some(name) => {
            let outcome = run_suite(name, &vcfg).ok_or_else(|| {
                CliError::usage(format!(
                    "unknown suite '{name}'; available: {}",
                    SUITE_NAMES.join(", ")
                ))
            })?;
            vec![outcome]
        }
        None => run_all(&vcfg),
    };
    let all_passed = outcomes.iter().all(|o| o.passed());
    match cfg.format_or(Format::Json) {
        Format::Json => {
            for o in &outcomes {
                eprintln!("{}", o.summary_line());
            }
            let doc = json!({
                "config": vcfg,
                "suites": outcomes,
                "all_passed": all_passed,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        Format::Plain => print!("{}", output::suites_plain(&outcomes)),
        Format::Csv => return Err(CliError::usage("verify emits json or plain, not csv")),
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
