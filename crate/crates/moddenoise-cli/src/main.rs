//! Command-line front end: spectra, denoising, Monte-Carlo sweeps, bound
//! curves and condition checks.
//!
//! Exit codes: 0 ok, 1 condition set not satisfied, 2 validation error,
//! 3 null-space degeneracy, 4 numerical failure, 5 trial failure.

mod svg;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use moddenoise::bounds::{
    check_denoising_conditions, evaluate_curve, gamma_rule, BoundQuery, GammaRule, TheoremId,
};
use moddenoise::error::Error;
use moddenoise::experiment::{configure_thread_cap, sweep_sigma, SweepResult};
use moddenoise::graph::{Family, Graph};
use moddenoise::io;
use moddenoise::signal::{mse, TorusSignal};
use moddenoise::solver::{denoise_with, Method};
use moddenoise::spectral::SpectralDecomposition;

#[derive(Parser)]
#[command(
    name = "moddenoise",
    version,
    about = "Denoise noisy modulo-1 samples of smooth signals on graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Laplacian spectrum of a graph as `j,lambda_j` CSV
    Spectrum(SpectrumArgs),
    /// Denoise a torus signal and write the projected estimate
    Denoise(DenoiseArgs),
    /// Run a Monte-Carlo sigma sweep from a JSON config
    Sweep(SweepArgs),
    /// Evaluate a bound over a sigma grid as CSV
    Bounds(BoundsArgs),
    /// Check the conditions of a denoising guarantee
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Complete,
    Star,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Complete => Family::Complete,
            FamilyArg::Star => Family::Star,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Ucqp,
    Trs,
    Both,
}

#[derive(Args)]
struct GraphSource {
    /// Graph family (with --n)
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Vertex count for --family
    #[arg(long)]
    n: Option<usize>,
    /// Edge-list file: first line `n`, then 1-based `i j` lines
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl GraphSource {
    fn build(&self) -> Result<Graph, Error> {
        match (&self.family, self.n, &self.edges) {
            (Some(f), Some(n), None) => Graph::from_family((*f).into(), n),
            (None, None, Some(path)) => io::parse_edge_list(&std::fs::read_to_string(path)?),
            _ => Err(Error::Validation(
                "give either --family with --n, or --edges FILE".into(),
            )),
        }
    }
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    graph: GraphSource,
    /// Write the CSV here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DenoiseArgs {
    /// Input signal CSV with columns `i,re,im`
    #[arg(long)]
    signal: PathBuf,
    #[command(flatten)]
    graph: GraphSource,
    /// Fixed regularization strength
    #[arg(long)]
    gamma: Option<f64>,
    /// Regularization rule: lemma2 | path-lipschitz | linear:C
    #[arg(long, value_name = "RULE")]
    gamma_rule: Option<String>,
    /// Noise level consumed by --gamma-rule
    #[arg(long)]
    sigma: Option<f64>,
    /// Lipschitz constant for the path-lipschitz rule (omitted: M-free form)
    #[arg(long)]
    lipschitz: Option<f64>,
    /// Spectral cutoff for the lemma2 rule
    #[arg(long)]
    lambda_bar: Option<f64>,
    /// Smoothness budget for the lemma2 rule
    #[arg(long)]
    b_n: Option<f64>,
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Write the estimate CSV here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Accept raw complex input off the torus
    #[arg(long)]
    allow_raw: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep configuration JSON
    #[arg(long)]
    config: PathBuf,
    /// Output base path; writes BASE.csv and BASE.replay.json
    #[arg(long, default_value = "sweep")]
    out: PathBuf,
    /// Also write a BASE.svg log-log plot
    #[arg(long)]
    svg: bool,
}

#[derive(Args)]
struct BoundsArgs {
    /// Bound-curve request JSON
    #[arg(long)]
    query: PathBuf,
    /// Write the CSV here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Condition set: thm2 | thm3 | thm4 | thm6 | thm8 | cor1 | cor2 |
    /// cor3 | cor5 | cor6 | cor7
    #[arg(long)]
    theorem: String,
    /// Bound-query JSON
    #[arg(long)]
    query: PathBuf,
    /// Order-level constant for the corollary sets
    #[arg(long, default_value_t = 1.0)]
    constant: f64,
}

fn main() {
    if let Ok(v) = std::env::var("MODDENOISE_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = configure_thread_cap(k);
            }
            _ => eprintln!("ignoring MODDENOISE_THREADS={v}: not a positive integer"),
        }
    }
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    };
    std::process::exit(code);
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NullSpaceDegenerate { .. } => 3,
        Error::NonConvergence { .. } | Error::Numerical(_) => 4,
        Error::TrialFailure { .. } => 5,
        _ => 2,
    }
}

fn write_out(path: Option<&Path>, content: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(Error::from),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Denoise(args) => cmd_denoise(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Check(args) => cmd_check(args),
    }
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<i32, Error> {
    let graph = args.graph.build()?;
    let spec = SpectralDecomposition::compute(&graph)?;
    let csv = io::write_spectrum_csv(spec.eigenvalues());
    write_out(args.out.as_deref(), &csv)?;
    println!(
        "# n={} family={} max_degree={} lambda_min={} lambda_1={}",
        graph.n(),
        graph.family(),
        graph.max_degree(),
        io::format_float(spec.lambda_min()),
        io::format_float(spec.lambda_1())
    );
    Ok(0)
}

/// Tolerance for the on-torus validation of CLI signal input; looser than
/// the library's own, since files have been through decimal formatting.
const CLI_TORUS_TOL: f64 = 1e-9;

fn parse_rule_token(token: &str, lipschitz: Option<f64>) -> Result<GammaRule, Error> {
    if token == "lemma2" {
        return Ok(GammaRule::Lemma2);
    }
    if token == "path-lipschitz" {
        return Ok(GammaRule::PathLipschitz {
            use_m: lipschitz.is_some(),
        });
    }
    if let Some(c) = token.strip_prefix("linear:") {
        let c: f64 = c
            .parse()
            .map_err(|_| Error::Validation(format!("bad linear rule constant `{c}`")))?;
        return Ok(GammaRule::Linear { c });
    }
    Err(Error::Validation(format!(
        "unknown gamma rule `{token}`; expected lemma2, path-lipschitz or linear:C"
    )))
}

fn cmd_denoise(args: DenoiseArgs) -> Result<i32, Error> {
    let graph = args.graph.build()?;
    let values = io::parse_signal_csv(&std::fs::read_to_string(&args.signal)?)?;
    if values.len() != graph.n() {
        return Err(Error::SizeMismatch(format!(
            "signal has {} entries, graph has {} vertices",
            values.len(),
            graph.n()
        )));
    }
    let z = if args.allow_raw {
        TorusSignal::raw(values)
    } else {
        TorusSignal::with_tolerance(values, CLI_TORUS_TOL)?
    };
    let spec = SpectralDecomposition::compute(&graph)?;

    let gamma = match (args.gamma, &args.gamma_rule) {
        (Some(g), None) => g,
        (None, Some(token)) => {
            let rule = parse_rule_token(token, args.lipschitz)?;
            let sigma = args
                .sigma
                .ok_or_else(|| Error::Validation("--gamma-rule needs --sigma".into()))?;
            let (b_n, lambda_bar) = match rule {
                GammaRule::Lemma2 => (
                    args.b_n
                        .ok_or_else(|| Error::Validation("the lemma2 rule needs --b-n".into()))?,
                    args.lambda_bar.ok_or_else(|| {
                        Error::Validation("the lemma2 rule needs --lambda-bar".into())
                    })?,
                ),
                _ => (
                    args.b_n.unwrap_or(1.0),
                    args.lambda_bar.unwrap_or(spec.lambda_1()),
                ),
            };
            let q = BoundQuery {
                n: graph.n(),
                delta: graph.max_degree(),
                b_n,
                sigma,
                lambda_bar,
                lambda_min: spec.lambda_min(),
                lambda_1: spec.lambda_1(),
                low_size: 0,
                epsilon: None,
                k: None,
                lambda_n_minus_k: None,
                lambda_n_minus_k_plus_1: None,
                m: args.lipschitz,
                theta: None,
                family: Some(graph.family()),
            };
            gamma_rule(rule, &q)?
        }
        (None, None) => return Err(Error::Validation("give --gamma or --gamma-rule".into())),
        (Some(_), Some(_)) => {
            return Err(Error::Validation(
                "give either --gamma or --gamma-rule, not both".into(),
            ))
        }
    };

    let method = match args.method {
        MethodArg::Ucqp => Method::Ucqp,
        MethodArg::Trs => Method::Trs,
        MethodArg::Both => {
            return Err(Error::Validation(
                "denoise writes one estimate; pick --method ucqp or trs".into(),
            ))
        }
    };
    let out = denoise_with(&z, &spec, gamma, method)?;
    write_out(
        args.out.as_deref(),
        &io::write_signal_csv(out.estimate.values()),
    )?;
    eprintln!("gamma={}", io::format_float(gamma));
    if let Some(mu) = out.mu_star {
        eprintln!("mu_star={}", io::format_float(mu));
    }
    if let Some(kkt) = out.kkt_residual {
        eprintln!("kkt_residual={}", io::format_float(kkt));
    }
    eprintln!("mse_vs_input={}", io::format_float(mse(&out.estimate, &z)?));
    Ok(0)
}

fn write_sweep_outputs(base: &Path, result: &SweepResult, with_svg: bool) -> Result<(), Error> {
    std::fs::write(base.with_extension("csv"), io::write_sweep_csv(result))?;
    std::fs::write(
        base.with_extension("replay.json"),
        io::write_experiment_config(&result.config)?,
    )?;
    if with_svg {
        std::fs::write(base.with_extension("svg"), svg::render_sweep(result))?;
    }
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<i32, Error> {
    let cfg = io::parse_experiment_config(&std::fs::read_to_string(&args.config)?)?;
    match sweep_sigma(&cfg) {
        Ok(result) => {
            write_sweep_outputs(&args.out, &result, args.svg)?;
            println!(
                "wrote {} rows to {}",
                result.rows.len(),
                args.out.with_extension("csv").display()
            );
            Ok(0)
        }
        Err(failure) => {
            if let Some(partial) = &failure.partial {
                write_sweep_outputs(&args.out, partial, false)?;
                eprintln!(
                    "partial results ({} rows) flushed to {}",
                    partial.rows.len(),
                    args.out.with_extension("csv").display()
                );
            }
            eprintln!("error: {failure}");
            Ok(5)
        }
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<i32, Error> {
    let req = io::parse_bound_curve_request(&std::fs::read_to_string(&args.query)?)?;
    let rows = evaluate_curve(&req)?;
    write_out(args.out.as_deref(), &io::write_bounds_csv(&rows))?;
    Ok(0)
}

fn cmd_check(args: CheckArgs) -> Result<i32, Error> {
    let theorem: TheoremId = args.theorem.parse()?;
    let query = io::parse_bound_query(&std::fs::read_to_string(&args.query)?)?;
    let report = check_denoising_conditions(theorem, &query, args.constant)?;
    println!(
        "condition report: {} ({})",
        report.theorem,
        if report.order_level {
            format!("order-level, constant {}", report.order_constant)
        } else {
            "exact constants".to_string()
        }
    );
    for check in &report.checks {
        println!(
            "  [{}] {}: {:.6e} <= {:.6e}  ({})",
            if check.satisfied { "ok  " } else { "FAIL" },
            check.name,
            check.lhs,
            check.rhs,
            check.tag
        );
    }
    if report.satisfied() {
        println!("result: satisfied");
        Ok(0)
    } else {
        println!("result: NOT satisfied");
        Ok(1)
    }
}
