//! Deterministic Monte-Carlo harness: single trials, sigma sweeps, and
//! empirical verification of the expectation identities and event bounds.
//!
//! The whole sweep is a pure function of its configuration: per-trial noise
//! streams are derived from (base seed, sigma index, trial index), trials
//! may run concurrently, and aggregation uses pairwise summation over an
//! index-ordered buffer so results do not depend on execution order.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    concentration_event_mean, concentration_rhs, gamma_rule, mu_star_lower_bound, BoundQuery,
    ConcentrationItem, GammaRule,
};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::rng::{derive_stream_seed, splitmix64, GaussianSource};
use crate::signal::{
    add_modulo_noise_from, lift_to_torus, mse, smoothness, uniform_grid, FunctionKind,
    FunctionSpec, TorusSignal,
};
use crate::solver::{denoise_with, Method};
use crate::spectral::SpectralDecomposition;

/// Sweep configuration; see the repository README for the JSON schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub function: FunctionKind,
    pub graph_family: Family,
    pub sigma_grid: Vec<f64>,
    pub trials: usize,
    pub gamma_rule: GammaRule,
    /// Spectral cutoff consumed by the lemma2 rule; ignored by the others.
    #[serde(default)]
    pub lambda_bar: Option<f64>,
    pub base_seed: u64,
    pub methods: Vec<Method>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Validation(format!("n must be at least 2, got {}", self.n)));
        }
        if self.trials < 1 {
            return Err(Error::Validation("trials must be at least 1".into()));
        }
        if self.sigma_grid.is_empty() {
            return Err(Error::Validation("sigma_grid must not be empty".into()));
        }
        if self
            .sigma_grid
            .iter()
            .any(|s| !(s.is_finite() && *s > 0.0))
        {
            return Err(Error::Validation("sigma_grid entries must be positive".into()));
        }
        if self.sigma_grid.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Validation("sigma_grid must be sorted ascending".into()));
        }
        if self.methods.is_empty() {
            return Err(Error::Validation("at least one method is required".into()));
        }
        if self.graph_family == Family::Custom {
            return Err(Error::Validation(
                "sweep configs support the path, complete and star families".into(),
            ));
        }
        Ok(())
    }
}

/// Caps the global worker pool. Returns an error if a pool was already
/// built; trials simply run on however many workers the pool has.
pub fn configure_thread_cap(threads: usize) -> Result<()> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::Validation(format!("could not set worker cap: {e}")))
}

/// Log-spaced grid from `lo` to `hi` with the given density; both endpoints
/// are included.
pub fn log_spaced_grid(lo: f64, hi: f64, points_per_decade: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo && points_per_decade > 0) {
        return Err(Error::Parameter(format!(
            "need 0 < lo < hi and a positive density, got lo = {lo}, hi = {hi}"
        )));
    }
    let step = 1.0 / points_per_decade as f64;
    let mut grid = Vec::new();
    let mut exp = lo.log10();
    let top = hi.log10();
    while exp < top - 1e-12 {
        grid.push(10f64.powf(exp));
        exp += step;
    }
    grid.push(hi);
    Ok(grid)
}

/// Immutable per-config state shared by all trials.
pub struct TrialContext {
    pub graph: Graph,
    pub spectral: SpectralDecomposition,
    pub h: TorusSignal,
    pub b_n: f64,
    pub function: FunctionSpec,
}

/// Builds the ground truth and spectral decomposition once per config.
pub fn prepare(cfg: &ExperimentConfig) -> Result<TrialContext> {
    cfg.validate()?;
    let graph = Graph::from_family(cfg.graph_family, cfg.n)?;
    let spectral = SpectralDecomposition::compute(&graph)?;
    let grid = uniform_grid(cfg.n)?;
    let h = lift_to_torus(&cfg.function.sample(&grid))?;
    let b_n = smoothness(&h, &graph)?;
    let function = match cfg.function {
        FunctionKind::F1 => FunctionSpec::f1(),
        FunctionKind::F2 => FunctionSpec::f2(),
    };
    Ok(TrialContext {
        graph,
        spectral,
        h,
        b_n,
        function,
    })
}

/// Regularization strength for one grid point.
pub fn gamma_at(cfg: &ExperimentConfig, ctx: &TrialContext, sigma: f64) -> Result<f64> {
    let lambda_bar = match cfg.gamma_rule {
        GammaRule::Lemma2 => cfg.lambda_bar.ok_or_else(|| {
            Error::Validation("the lemma2 rule needs `lambda_bar` in the config".into())
        })?,
        _ => cfg.lambda_bar.unwrap_or(ctx.spectral.lambda_1()),
    };
    let q = BoundQuery {
        n: cfg.n,
        delta: ctx.graph.max_degree(),
        b_n: ctx.b_n,
        sigma,
        lambda_bar,
        lambda_min: ctx.spectral.lambda_min(),
        lambda_1: ctx.spectral.lambda_1(),
        low_size: 0,
        epsilon: None,
        k: None,
        lambda_n_minus_k: None,
        lambda_n_minus_k_plus_1: None,
        m: Some(ctx.function.lipschitz),
        theta: None,
        family: Some(cfg.graph_family),
    };
    gamma_rule(cfg.gamma_rule, &q)
}

/// Result of one (sigma, trial) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord {
    pub sigma: f64,
    pub sigma_index: usize,
    pub trial_index: usize,
    pub gamma: f64,
    pub mse_input: f64,
    pub per_method: Vec<MethodRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MethodRecord {
    pub method: Method,
    pub mse: f64,
    pub mu_star: Option<f64>,
}

/// Runs one seeded trial: draw z, solve each method at the rule's gamma,
/// record squared errors against the cached ground truth.
pub fn run_trial(
    cfg: &ExperimentConfig,
    ctx: &TrialContext,
    sigma_index: usize,
    trial_index: usize,
) -> Result<TrialRecord> {
    let sigma = *cfg.sigma_grid.get(sigma_index).ok_or_else(|| {
        Error::Parameter(format!("sigma index {sigma_index} out of range"))
    })?;
    let gamma = gamma_at(cfg, ctx, sigma)?;
    let mut gauss = GaussianSource::new(derive_stream_seed(
        cfg.base_seed,
        sigma_index as u64,
        trial_index as u64,
    ));
    let z = add_modulo_noise_from(&ctx.h, sigma, &mut gauss);
    let mse_input = mse(&z, &ctx.h)?;
    let mut per_method = Vec::with_capacity(cfg.methods.len());
    for &method in &cfg.methods {
        let out = denoise_with(&z, &ctx.spectral, gamma, method)?;
        per_method.push(MethodRecord {
            method,
            mse: mse(&out.estimate, &ctx.h)?,
            mu_star: out.mu_star,
        });
    }
    Ok(TrialRecord {
        sigma,
        sigma_index,
        trial_index,
        gamma,
        mse_input,
        per_method,
    })
}

/// Series labels of the sweep table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesLabel {
    Input,
    Ucqp,
    Trs,
}

impl std::fmt::Display for SeriesLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SeriesLabel::Input => "input",
            SeriesLabel::Ucqp => "ucqp",
            SeriesLabel::Trs => "trs",
        })
    }
}

impl From<Method> for SeriesLabel {
    fn from(m: Method) -> Self {
        match m {
            Method::Ucqp => SeriesLabel::Ucqp,
            Method::Trs => SeriesLabel::Trs,
        }
    }
}

/// One aggregated (sigma, series) cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub sigma: f64,
    pub method: SeriesLabel,
    pub mean_mse: f64,
    pub stderr_mse: f64,
    pub mean_mu_star: Option<f64>,
    pub trials: usize,
    pub gamma: f64,
}

/// Aggregated sweep table plus the config that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub config: ExperimentConfig,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Rows for one series, sorted by the grid order.
    pub fn series(&self, label: SeriesLabel) -> Vec<&SweepRow> {
        self.rows.iter().filter(|r| r.method == label).collect()
    }
}

/// A sweep failure, carrying whatever rows aggregated cleanly.
#[derive(Debug)]
pub struct SweepError {
    pub source: Error,
    pub sigma: Option<f64>,
    pub trial_index: Option<usize>,
    pub partial: Option<SweepResult>,
}

impl std::fmt::Display for SweepError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.sigma, self.trial_index) {
            (Some(s), Some(t)) => write!(f, "sweep failed at sigma = {s}, trial {t}: {}", self.source),
            _ => write!(f, "sweep failed: {}", self.source),
        }
    }
}

impl std::error::Error for SweepError {}

impl From<SweepError> for Error {
    fn from(e: SweepError) -> Self {
        match (e.sigma, e.trial_index) {
            (Some(sigma), Some(trial_index)) => Error::TrialFailure {
                sigma,
                trial_index,
                source: Box::new(e.source),
            },
            _ => e.source,
        }
    }
}

/// Summation over a fixed-order buffer that is independent of how the
/// buffer was filled: splits in halves recursively.
fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => pairwise_sum(&xs[..n / 2]) + pairwise_sum(&xs[n / 2..]),
    }
}

fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len();
    let mean = pairwise_sum(xs) / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let sq: Vec<f64> = xs.iter().map(|x| (x - mean) * (x - mean)).collect();
    let var = pairwise_sum(&sq) / (n - 1) as f64;
    (mean, (var / n as f64).sqrt())
}

/// Runs the full grid of trials, in parallel, and aggregates per
/// (sigma, series) means and standard errors.
pub fn sweep_sigma(cfg: &ExperimentConfig) -> std::result::Result<SweepResult, SweepError> {
    let ctx = prepare(cfg).map_err(|source| SweepError {
        source,
        sigma: None,
        trial_index: None,
        partial: None,
    })?;
    let cells: Vec<(usize, usize)> = (0..cfg.sigma_grid.len())
        .flat_map(|si| (0..cfg.trials).map(move |ti| (si, ti)))
        .collect();
    let outcomes: Vec<Result<TrialRecord>> = cells
        .par_iter()
        .map(|&(si, ti)| run_trial(cfg, &ctx, si, ti))
        .collect();

    let mut records: Vec<&TrialRecord> = Vec::with_capacity(outcomes.len());
    let mut first_failure: Option<(usize, usize, &Error)> = None;
    for (idx, outcome) in outcomes.iter().enumerate() {
        match outcome {
            Ok(rec) => records.push(rec),
            Err(err) => {
                let (si, ti) = cells[idx];
                if first_failure.is_none() {
                    first_failure = Some((si, ti, err));
                }
            }
        }
    }

    let result = aggregate(cfg, &ctx, &records);
    match first_failure {
        None => Ok(result),
        Some((si, ti, err)) => Err(SweepError {
            source: Error::Validation(err.to_string()),
            sigma: Some(cfg.sigma_grid[si]),
            trial_index: Some(ti),
            partial: Some(result),
        }),
    }
}

fn aggregate(cfg: &ExperimentConfig, ctx: &TrialContext, records: &[&TrialRecord]) -> SweepResult {
    let mut rows = Vec::new();
    for (si, &sigma) in cfg.sigma_grid.iter().enumerate() {
        let mut cell: Vec<&TrialRecord> = records
            .iter()
            .copied()
            .filter(|r| r.sigma_index == si)
            .collect();
        cell.sort_by_key(|r| r.trial_index);
        if cell.is_empty() {
            continue;
        }
        let gamma = gamma_at(cfg, ctx, sigma).unwrap_or(f64::NAN);
        let inputs: Vec<f64> = cell.iter().map(|r| r.mse_input).collect();
        let (mean, stderr) = mean_and_stderr(&inputs);
        rows.push(SweepRow {
            sigma,
            method: SeriesLabel::Input,
            mean_mse: mean,
            stderr_mse: stderr,
            mean_mu_star: None,
            trials: cell.len(),
            gamma,
        });
        for (mi, &method) in cfg.methods.iter().enumerate() {
            let mses: Vec<f64> = cell.iter().map(|r| r.per_method[mi].mse).collect();
            let (mean, stderr) = mean_and_stderr(&mses);
            let mean_mu_star = if method == Method::Trs {
                let mus: Vec<f64> = cell
                    .iter()
                    .filter_map(|r| r.per_method[mi].mu_star)
                    .collect();
                (!mus.is_empty()).then(|| pairwise_sum(&mus) / mus.len() as f64)
            } else {
                None
            };
            rows.push(SweepRow {
                sigma,
                method: method.into(),
                mean_mse: mean,
                stderr_mse: stderr,
                mean_mu_star,
                trials: cell.len(),
                gamma,
            });
        }
    }
    SweepResult {
        config: cfg.clone(),
        rows,
    }
}

/// Expectation identities of the phase-noise model that can be verified by
/// Monte-Carlo averaging.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// E[Re<z, h>] / n = exp(-2 pi^2 sigma^2).
    MeanShrinkage,
    /// E |<z - E z, u>|^2 = 1 - exp(-4 pi^2 sigma^2) for a real unit u.
    DirectionalVariance,
    /// E |<z, u>|^2 = exp(-4 pi^2 s^2) |<h, u>|^2 + (1 - exp(-4 pi^2 s^2)).
    DirectionalPower,
    /// E ||z - E z||^2 = n (1 - exp(-4 pi^2 sigma^2)).
    CenteredEnergy,
    /// E ||z - h||^2 = 2n (1 - exp(-2 pi^2 sigma^2)).
    InputMse,
    /// 2 pi^2 s^2 n <= E ||z - h||^2 <= 4 pi^2 s^2 n for s <= 1/(pi sqrt 2).
    InputMseRange,
}

/// Monte-Carlo verdict for one identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityOutcome {
    pub empirical: f64,
    /// For point identities lo == hi; for range identities the interval.
    pub theoretical_lo: f64,
    pub theoretical_hi: f64,
    pub stderr: f64,
    /// Standardized discrepancy: distance to the theoretical value (or to
    /// the nearest interval endpoint, zero inside) in standard errors.
    pub z_score: f64,
}

/// Estimates one identity with `trials` independent draws at size n.
/// The ground truth is the smooth built-in f2 lifted to the torus; the
/// identities hold for any torus-valued truth.
pub fn verify_identity(
    identity: Identity,
    n: usize,
    sigma: f64,
    trials: usize,
    seed: u64,
) -> Result<IdentityOutcome> {
    if trials < 30 {
        return Err(Error::Parameter(format!(
            "need at least 30 trials for a meaningful standard error, got {trials}"
        )));
    }
    let grid = uniform_grid(n)?;
    let h = lift_to_torus(&FunctionKind::F2.sample(&grid))?;
    let damp2 = (-2.0 * std::f64::consts::PI.powi(2) * sigma * sigma).exp();
    let damp4 = damp2 * damp2;

    // A fixed random real unit direction for the directional identities.
    let u: Vec<f64> = {
        let mut src = GaussianSource::new(splitmix64(seed ^ 0x5DEE_CE66));
        let mut v: Vec<f64> = (0..n).map(|_| src.next_standard_normal()).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
        v
    };

    let stats: Vec<f64> = (0..trials)
        .map(|t| {
            let mut gauss = GaussianSource::new(derive_stream_seed(seed, 0, t as u64));
            let z = add_modulo_noise_from(&h, sigma, &mut gauss);
            statistic(identity, &z, &h, &u, damp2)
        })
        .collect();
    let (empirical, stderr) = mean_and_stderr(&stats);

    let nf = n as f64;
    let pi2 = std::f64::consts::PI.powi(2);
    let (lo, hi) = match identity {
        Identity::MeanShrinkage => (damp2, damp2),
        Identity::DirectionalVariance => (1.0 - damp4, 1.0 - damp4),
        Identity::DirectionalPower => {
            let hu = h
                .values()
                .iter()
                .zip(&u)
                .fold(Complex64::new(0.0, 0.0), |acc, (hv, uv)| acc + hv * uv);
            let v = damp4 * hu.norm_sqr() + (1.0 - damp4);
            (v, v)
        }
        Identity::CenteredEnergy => (nf * (1.0 - damp4), nf * (1.0 - damp4)),
        Identity::InputMse => (2.0 * nf * (1.0 - damp2), 2.0 * nf * (1.0 - damp2)),
        Identity::InputMseRange => (2.0 * pi2 * sigma * sigma * nf, 4.0 * pi2 * sigma * sigma * nf),
    };
    let z_score = if stderr == 0.0 {
        if empirical >= lo && empirical <= hi {
            0.0
        } else {
            f64::INFINITY
        }
    } else if empirical < lo {
        (lo - empirical) / stderr
    } else if empirical > hi {
        (empirical - hi) / stderr
    } else {
        0.0
    };
    Ok(IdentityOutcome {
        empirical,
        theoretical_lo: lo,
        theoretical_hi: hi,
        stderr,
        z_score,
    })
}

fn statistic(identity: Identity, z: &TorusSignal, h: &TorusSignal, u: &[f64], damp2: f64) -> f64 {
    match identity {
        Identity::MeanShrinkage => {
            let dot: Complex64 = z
                .values()
                .iter()
                .zip(h.values())
                .map(|(zv, hv)| hv.conj() * zv)
                .sum();
            dot.re / z.len() as f64
        }
        Identity::DirectionalVariance => {
            let dot: Complex64 = z
                .values()
                .iter()
                .zip(h.values())
                .zip(u)
                .map(|((zv, hv), uv)| (zv - damp2 * hv) * uv)
                .sum();
            dot.norm_sqr()
        }
        Identity::DirectionalPower => {
            let dot: Complex64 = z
                .values()
                .iter()
                .zip(u)
                .map(|(zv, uv)| zv * uv)
                .sum();
            dot.norm_sqr()
        }
        Identity::CenteredEnergy => z
            .values()
            .iter()
            .zip(h.values())
            .map(|(zv, hv)| (zv - damp2 * hv).norm_sqr())
            .sum(),
        Identity::InputMse | Identity::InputMseRange => z
            .values()
            .iter()
            .zip(h.values())
            .map(|(zv, hv)| (zv - hv).norm_sqr())
            .sum(),
    }
}

/// High-probability events whose empirical violation frequency can be
/// compared against the stated failure budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Event {
    /// Upper tail of the centered quadratic form over the k bottom
    /// eigenvectors; budget 2/n^2.
    CenteredSpectralEnergy,
    /// Upper deviation of ||z - h||^2; budget 2/n^2.
    InputMseDeviation,
    /// Upper deviation of ||z - E z||^2; budget 2/n^2.
    CenteredMseDeviation,
    /// Solved multiplier below its high-probability lower bound;
    /// budget 4/n^2.
    MuStarLowerBound,
}

/// Inputs of one event-frequency experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EventParams {
    pub family: Family,
    pub n: usize,
    pub sigma: f64,
    /// Bottom-eigenvector count for the quadratic-form event, and the gap
    /// index for the multiplier event.
    pub k: usize,
    /// Regularization for the multiplier event; unused elsewhere.
    pub gamma: f64,
    pub function: FunctionKind,
    /// The ground truth is amplitude * f lifted to the torus; small
    /// amplitudes construct smoother truths.
    pub amplitude: f64,
}

/// Frequency verdict for one event.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EventOutcome {
    pub violations: usize,
    pub trials: usize,
    pub violation_frequency: f64,
    /// The failure budget the frequency is compared against.
    pub paper_probability: f64,
}

/// Binomial standard error of a frequency estimate at success probability
/// p over the given trial count: sqrt(p (1 - p) / trials).
pub fn binomial_stderr(p: f64, trials: usize) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}

/// Counts how often the selected event's inequality fails across seeded
/// trials.
pub fn verify_event_bound(
    event: Event,
    params: &EventParams,
    trials: usize,
    seed: u64,
) -> Result<EventOutcome> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be positive".into()));
    }
    let n = params.n;
    let graph = Graph::from_family(params.family, n)?;
    let spectral = SpectralDecomposition::compute(&graph)?;
    let grid = uniform_grid(n)?;
    let samples: Vec<f64> = params
        .function
        .sample(&grid)
        .into_iter()
        .map(|v| v * params.amplitude)
        .collect();
    let h = lift_to_torus(&samples)?;
    let damp2 = (-2.0 * std::f64::consts::PI.powi(2) * params.sigma * params.sigma).exp();

    if !(1..n).contains(&params.k) {
        return Err(Error::Parameter(format!(
            "invalid gap index: k = {} not in [1, {}]",
            params.k,
            n - 1
        )));
    }

    // Bottom-k eigenvectors, flattened column-major for the quadratic form.
    let bottom: Vec<Vec<f64>> = (n - params.k + 1..=n)
        .map(|j| spectral.eigenvector(j).iter().copied().collect())
        .collect();

    let (threshold, paper_probability): (f64, f64) = match event {
        Event::CenteredSpectralEnergy => (
            concentration_event_mean(
                ConcentrationItem::CenteredSpectralEnergy,
                n,
                params.sigma,
                params.k,
                0.0,
            ) + concentration_rhs(
                ConcentrationItem::CenteredSpectralEnergy,
                n,
                params.sigma,
                params.k,
                0.0,
                0.0,
            ),
            2.0 / (n as f64 * n as f64),
        ),
        Event::InputMseDeviation => (
            concentration_event_mean(ConcentrationItem::InputMseDeviation, n, params.sigma, 0, 0.0)
                + concentration_rhs(
                    ConcentrationItem::InputMseDeviation,
                    n,
                    params.sigma,
                    0,
                    0.0,
                    0.0,
                ),
            2.0 / (n as f64 * n as f64),
        ),
        Event::CenteredMseDeviation => (
            concentration_event_mean(ConcentrationItem::CenteredMseDeviation, n, params.sigma, 0, 0.0)
                + concentration_rhs(
                    ConcentrationItem::CenteredMseDeviation,
                    n,
                    params.sigma,
                    0,
                    0.0,
                    0.0,
                ),
            2.0 / (n as f64 * n as f64),
        ),
        Event::MuStarLowerBound => {
            let b_n = smoothness(&h, &graph)?;
            let q = BoundQuery {
                n,
                delta: graph.max_degree(),
                b_n,
                sigma: params.sigma,
                lambda_bar: spectral.lambda_1(),
                lambda_min: spectral.lambda_min(),
                lambda_1: spectral.lambda_1(),
                low_size: 0,
                epsilon: None,
                k: Some(params.k),
                lambda_n_minus_k: Some(spectral.lambda(n - params.k)),
                lambda_n_minus_k_plus_1: Some(spectral.lambda(n - params.k + 1)),
                m: None,
                theta: None,
                family: Some(params.family),
            };
            (
                mu_star_lower_bound(&q, params.gamma)?.value,
                4.0 / (n as f64 * n as f64),
            )
        }
    };

    let violations: usize = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut gauss = GaussianSource::new(derive_stream_seed(seed, 0, t as u64));
            let z = add_modulo_noise_from(&h, params.sigma, &mut gauss);
            let violated = match event {
                Event::CenteredSpectralEnergy => {
                    let mut quad = 0.0;
                    for col in &bottom {
                        let mut dot = Complex64::new(0.0, 0.0);
                        for ((zv, hv), uv) in z.values().iter().zip(h.values()).zip(col) {
                            dot += (zv - damp2 * hv) * uv;
                        }
                        quad += dot.norm_sqr();
                    }
                    quad > threshold
                }
                Event::InputMseDeviation => {
                    mse(&z, &h).expect("equal lengths") > threshold
                }
                Event::CenteredMseDeviation => {
                    let e: f64 = z
                        .values()
                        .iter()
                        .zip(h.values())
                        .map(|(zv, hv)| (zv - damp2 * hv).norm_sqr())
                        .sum();
                    e > threshold
                }
                Event::MuStarLowerBound => {
                    let sol = crate::solver::solve_trs(
                        &z,
                        &spectral,
                        params.gamma,
                        crate::solver::TRS_DEFAULT_TOL,
                    )
                    .expect("noise-model draws are not null-space degenerate");
                    sol.mu_star < threshold
                }
            };
            usize::from(violated)
        })
        .sum();

    Ok(EventOutcome {
        violations,
        trials,
        violation_frequency: violations as f64 / trials as f64,
        paper_probability,
    })
}
