//! Closed-form evaluators for the theoretical guarantees: regularization
//! rules, expected and high-probability error bounds, the multiplier lower
//! bound, concentration right-hand sides and denoising-condition checks.
//!
//! Everything here is evaluated literally, loose constants included; the
//! point is faithful overlay curves and condition reports, not sharper
//! theory. Logarithms are natural throughout.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::spectral::{spectral_sets, SpectralDecomposition};

/// Constants of the sphere-constrained tail bound.
pub const TRS_TAIL_C1: f64 = 288.0 * PI;
pub const TRS_TAIL_C2: f64 = 396_160.0;
pub const TRS_TAIL_C3: f64 = 230_400.0;
pub const TRS_TAIL_C4: f64 = 262_144.0;
pub const TRS_TAIL_C5: f64 = 144.0;

/// Scalar inputs shared by the bound evaluators and condition checkers.
///
/// The spectral scalars mirror a decomposition; use
/// [`BoundQuery::from_decomposition`] to fill them consistently.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundQuery {
    pub n: usize,
    /// Maximum degree of the graph.
    pub delta: usize,
    /// Smoothness budget h* L h.
    pub b_n: f64,
    pub sigma: f64,
    /// Spectral cutoff, in [lambda_min, lambda_1].
    pub lambda_bar: f64,
    /// Fiedler value lambda_{n-1}.
    pub lambda_min: f64,
    pub lambda_1: f64,
    /// Number of spectral indices j in [n-1] with lambda_j < lambda_bar.
    pub low_size: usize,
    /// Target denoising ratio in (0, 1).
    #[serde(default)]
    pub epsilon: Option<f64>,
    /// Spectral gap index: k in [n-1] with lambda_{n-k+1} < lambda_{n-k}.
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default)]
    pub lambda_n_minus_k: Option<f64>,
    #[serde(default)]
    pub lambda_n_minus_k_plus_1: Option<f64>,
    /// Lipschitz constant of the sampled function, where applicable.
    #[serde(default)]
    pub m: Option<f64>,
    /// Path-graph cutoff exponent in [0, 1).
    #[serde(default)]
    pub theta: Option<f64>,
    /// Graph family, needed by the family-specific condition sets.
    #[serde(default)]
    pub family: Option<Family>,
}

impl BoundQuery {
    /// Builds a query whose spectral scalars are taken from a decomposition,
    /// so they cannot drift out of sync with the graph.
    pub fn from_decomposition(
        spec: &SpectralDecomposition,
        graph: &Graph,
        b_n: f64,
        sigma: f64,
        lambda_bar: f64,
        k: Option<usize>,
    ) -> Result<Self> {
        let n = spec.n();
        let sets = spectral_sets(spec, lambda_bar)?;
        let (lam_k, lam_k1) = match k {
            None => (None, None),
            Some(k) => {
                if k < 1 || k > n - 1 {
                    return Err(Error::Parameter(format!(
                        "invalid gap index: k = {k} not in [1, {}]",
                        n - 1
                    )));
                }
                (Some(spec.lambda(n - k)), Some(spec.lambda(n - k + 1)))
            }
        };
        let q = Self {
            n,
            delta: graph.max_degree(),
            b_n,
            sigma,
            lambda_bar,
            lambda_min: spec.lambda_min(),
            lambda_1: spec.lambda_1(),
            low_size: sets.low_size(),
            epsilon: None,
            k,
            lambda_n_minus_k: lam_k,
            lambda_n_minus_k_plus_1: lam_k1,
            m: None,
            theta: None,
            family: Some(graph.family()),
        };
        q.validate()?;
        Ok(q)
    }

    /// Basic coherence checks on the scalar fields.
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Parameter(format!("n must be at least 2, got {}", self.n)));
        }
        if self.delta == 0 {
            return Err(Error::Parameter("delta must be positive".into()));
        }
        for (name, v) in [
            ("b_n", self.b_n),
            ("sigma", self.sigma),
            ("lambda_bar", self.lambda_bar),
            ("lambda_min", self.lambda_min),
            ("lambda_1", self.lambda_1),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Parameter(format!(
                    "{name} must be finite and nonnegative, got {v}"
                )));
            }
        }
        if self.lambda_bar < self.lambda_min || self.lambda_bar > self.lambda_1 {
            return Err(Error::OutOfRange {
                what: "lambda_bar".into(),
                value: self.lambda_bar,
                lo: self.lambda_min,
                hi: self.lambda_1,
            });
        }
        if self.low_size > self.n - 1 {
            return Err(Error::Parameter(format!(
                "low_size = {} exceeds n - 1 = {}",
                self.low_size,
                self.n - 1
            )));
        }
        if let Some(eps) = self.epsilon {
            if !(eps > 0.0 && eps < 1.0) {
                return Err(Error::Parameter(format!(
                    "epsilon must lie in (0, 1), got {eps}"
                )));
            }
        }
        if let Some(k) = self.k {
            if k < 1 || k > self.n - 1 {
                return Err(Error::Parameter(format!(
                    "invalid gap index: k = {k} not in [1, {}]",
                    self.n - 1
                )));
            }
            if let (Some(a), Some(b)) = (self.lambda_n_minus_k_plus_1, self.lambda_n_minus_k) {
                if !(a < b) {
                    return Err(Error::Parameter(format!(
                        "invalid gap index: lambda_(n-k+1) = {a} is not below lambda_(n-k) = {b}"
                    )));
                }
            }
        }
        if let Some(t) = self.theta {
            if !(0.0..1.0).contains(&t) {
                return Err(Error::Parameter(format!(
                    "theta must lie in [0, 1), got {t}"
                )));
            }
        }
        Ok(())
    }

    fn require_epsilon(&self, theorem: TheoremId) -> Result<f64> {
        self.epsilon
            .ok_or_else(|| Error::Parameter(format!("missing field `epsilon` for {theorem}")))
    }

    fn require_gap(&self, what: &str) -> Result<(usize, f64, f64)> {
        let k = self
            .k
            .ok_or_else(|| Error::Parameter(format!("missing field `k` for {what}")))?;
        let lam_k = self.lambda_n_minus_k.ok_or_else(|| {
            Error::Parameter(format!("missing field `lambda_n_minus_k` for {what}"))
        })?;
        let lam_k1 = self.lambda_n_minus_k_plus_1.ok_or_else(|| {
            Error::Parameter(format!("missing field `lambda_n_minus_k_plus_1` for {what}"))
        })?;
        if !(lam_k1 < lam_k) {
            return Err(Error::Parameter(format!(
                "invalid gap index: lambda_(n-k+1) = {lam_k1} is not below lambda_(n-k) = {lam_k}"
            )));
        }
        Ok((k, lam_k, lam_k1))
    }
}

/// exp(-c pi^2 sigma^2).
fn phase_damping(c: f64, sigma: f64) -> f64 {
    (-c * PI * PI * sigma * sigma).exp()
}

/// Regularization-strength rules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum GammaRule {
    /// `(4 pi^2 sigma^2 n / (delta B_n lambda_bar^2))^{1/4}`, the choice
    /// that balances bias against variance in the expected-error bound.
    Lemma2,
    /// `(sigma^2 n^{10/3} / M^2)^{1/4}` with `use_m`, or the M-free variant
    /// `(sigma^2 n^{10/3})^{1/4}`; the path-graph rule for Lipschitz inputs.
    PathLipschitz { use_m: bool },
    /// `c * sigma`.
    Linear { c: f64 },
}

/// Evaluates a regularization rule on the query's scalars.
pub fn gamma_rule(rule: GammaRule, q: &BoundQuery) -> Result<f64> {
    q.validate()?;
    match rule {
        GammaRule::Lemma2 => {
            if q.b_n <= 0.0 {
                return Err(Error::Parameter(
                    "b_n must be positive for the lemma2 rule".into(),
                ));
            }
            if q.lambda_bar <= 0.0 {
                return Err(Error::Parameter(
                    "lambda_bar must be positive for the lemma2 rule".into(),
                ));
            }
            let num = 4.0 * PI * PI * q.sigma * q.sigma * q.n as f64;
            let den = q.delta as f64 * q.b_n * q.lambda_bar * q.lambda_bar;
            Ok((num / den).powf(0.25))
        }
        GammaRule::PathLipschitz { use_m } => {
            let base = q.sigma * q.sigma * (q.n as f64).powf(10.0 / 3.0);
            if use_m {
                let m = q.m.ok_or_else(|| {
                    Error::Parameter("missing field `m` for the path_lipschitz rule".into())
                })?;
                if m <= 0.0 {
                    return Err(Error::Parameter(format!("m must be positive, got {m}")));
                }
                Ok((base / (m * m)).powf(0.25))
            } else {
                Ok(base.powf(0.25))
            }
        }
        GammaRule::Linear { c } => {
            if !(c > 0.0 && c.is_finite()) {
                return Err(Error::Parameter(format!(
                    "linear rule constant must be positive, got {c}"
                )));
            }
            Ok(c * q.sigma)
        }
    }
}

fn gamma_matches_lemma2(q: &BoundQuery, gamma: f64) -> bool {
    match gamma_rule(GammaRule::Lemma2, q) {
        Ok(rule) => {
            let scale = rule.abs().max(gamma.abs());
            scale == 0.0 || (gamma - rule).abs() <= 1e-9 * scale
        }
        Err(_) => false,
    }
}

/// Expected squared error of the projected smoothing estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UcqpExpectedBound {
    /// `16 delta gamma^2 B_n / (1 + gamma lambda_min)^2
    ///  + 64 pi^2 sigma^2 (1 + |low| / (1 + gamma lambda_min)^2
    ///  + n / (1 + gamma lambda_bar)^2)`, valid for any gamma >= 0.
    pub general: f64,
    /// `64 pi (sigma sqrt(delta B_n n) / lambda_bar
    ///  + pi sigma^2 (1 + |low|))`; present only when gamma matches the
    /// lemma2 rule, which is the choice the simplification assumes.
    pub simplified: Option<f64>,
    /// Whether sigma <= 1/(2 pi), the stated domain.
    pub sigma_in_domain: bool,
}

pub fn ucqp_expected_bound(q: &BoundQuery, gamma: f64) -> Result<UcqpExpectedBound> {
    q.validate()?;
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(Error::Parameter(format!(
            "gamma must be finite and nonnegative, got {gamma}"
        )));
    }
    let (n, delta, l) = (q.n as f64, q.delta as f64, q.low_size as f64);
    let dmin = 1.0 + gamma * q.lambda_min;
    let dbar = 1.0 + gamma * q.lambda_bar;
    let general = 16.0 * delta * gamma * gamma * q.b_n / (dmin * dmin)
        + 64.0 * PI * PI * q.sigma * q.sigma * (1.0 + l / (dmin * dmin) + n / (dbar * dbar));
    let simplified = gamma_matches_lemma2(q, gamma).then(|| {
        64.0 * PI
            * (q.sigma * (delta * q.b_n * n).sqrt() / q.lambda_bar
                + PI * q.sigma * q.sigma * (1.0 + l))
    });
    Ok(UcqpExpectedBound {
        general,
        simplified,
        sigma_in_domain: q.sigma <= 1.0 / (2.0 * PI),
    })
}

/// High-probability tail bound for the projected smoothing estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UcqpTailBound {
    /// `72 pi sigma sqrt(delta B_n n) / lambda_bar
    ///  + 99040 sigma^2 (1 + |low| + sqrt((1 + |low|) log n))
    ///  + 65536 log n`.
    pub value: f64,
    /// Whether `72 log n / (pi sqrt n) <= sigma <= 1 / (2 sqrt 2 pi)`.
    pub sigma_in_domain: bool,
    /// Whether the supplied gamma equals the lemma2 rule the bound assumes.
    pub gamma_matches_rule: bool,
}

pub fn ucqp_highprob_bound(q: &BoundQuery, gamma: f64) -> Result<UcqpTailBound> {
    q.validate()?;
    let (n, delta, l) = (q.n as f64, q.delta as f64, q.low_size as f64);
    let log_n = n.ln();
    let value = 72.0 * PI * q.sigma * (delta * q.b_n * n).sqrt() / q.lambda_bar
        + 99_040.0 * q.sigma * q.sigma * (1.0 + l + ((1.0 + l) * log_n).sqrt())
        + 65_536.0 * log_n;
    let sigma_in_domain =
        q.sigma >= 72.0 * log_n / (PI * n.sqrt()) && q.sigma <= 1.0 / (2.0 * 2f64.sqrt() * PI);
    Ok(UcqpTailBound {
        value,
        sigma_in_domain,
        gamma_matches_rule: gamma_matches_lemma2(q, gamma),
    })
}

/// High-probability tail bound for the projected sphere-constrained
/// estimate, at a spectral gap index k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrsTailBound {
    pub value: f64,
    /// Whether sigma lies in the stated window for the bound.
    pub sigma_in_domain: bool,
    /// Whether `B_n <= min(n lambda_{n-k} / 12, n lambda_bar / 2)`.
    pub smoothness_in_domain: bool,
    pub gamma_matches_rule: bool,
}

pub fn trs_highprob_bound(q: &BoundQuery, gamma: f64) -> Result<TrsTailBound> {
    q.validate()?;
    let (k, lam_k, lam_k1) = q.require_gap("the sphere-constrained tail bound")?;
    let _ = k;
    if q.b_n <= 0.0 {
        return Err(Error::Parameter(
            "b_n must be positive for the sphere-constrained tail bound".into(),
        ));
    }
    let (n, delta, l) = (q.n as f64, q.delta as f64, q.low_size as f64);
    let log_n = n.ln();
    // lambda_{n-k+1} = 0 silences its terms even when b_n -> 0.
    let gap_term = if lam_k1 == 0.0 {
        0.0
    } else {
        n.powf(1.5) * lam_k1 * lam_k1 / (delta * q.b_n).sqrt()
    };
    let value = TRS_TAIL_C1 * (q.sigma / q.lambda_bar) * ((delta * q.b_n * n).sqrt() + gap_term)
        + TRS_TAIL_C2 * q.sigma * q.sigma * (1.0 + l + ((1.0 + l) * log_n).sqrt())
        + TRS_TAIL_C3 * q.sigma.powi(4) * n
        + TRS_TAIL_C4 * log_n
        + TRS_TAIL_C5 * q.b_n * q.b_n / (n * lam_k * lam_k);

    let sigma_hi_gap = if lam_k1 == 0.0 {
        f64::INFINITY
    } else {
        q.lambda_bar / (16.0 * lam_k1 * lam_k1) * (delta * q.b_n / (4.0 * PI * PI * n)).sqrt()
    };
    let sigma_in_domain = q.sigma >= 286.0 * (log_n / n.sqrt()).sqrt()
        && q.sigma <= (1.0 / (4.0 * 3f64.sqrt() * PI)).min(sigma_hi_gap);
    let smoothness_in_domain = q.b_n <= (n * lam_k / 12.0).min(n * q.lambda_bar / 2.0);
    Ok(TrsTailBound {
        value,
        sigma_in_domain,
        smoothness_in_domain,
        gamma_matches_rule: gamma_matches_lemma2(q, gamma),
    })
}

/// The k = 1 simplification of the sphere-constrained tail bound, written
/// directly in terms of the Fiedler value. Kept as an independent algebraic
/// route for consistency checks against [`trs_highprob_bound`].
pub fn trs_highprob_bound_k1(q: &BoundQuery) -> Result<f64> {
    q.validate()?;
    if q.b_n <= 0.0 {
        return Err(Error::Parameter(
            "b_n must be positive for the sphere-constrained tail bound".into(),
        ));
    }
    let (n, delta, l) = (q.n as f64, q.delta as f64, q.low_size as f64);
    let log_n = n.ln();
    Ok(
        TRS_TAIL_C1 * q.sigma * (delta * q.b_n * n).sqrt() / q.lambda_bar
            + TRS_TAIL_C2 * q.sigma * q.sigma * (1.0 + l + ((1.0 + l) * log_n).sqrt())
            + TRS_TAIL_C3 * q.sigma.powi(4) * n
            + TRS_TAIL_C4 * log_n
            + TRS_TAIL_C5 * q.b_n * q.b_n / (n * q.lambda_min * q.lambda_min),
    )
}

/// High-probability lower bound on the sphere-constraint multiplier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuStarLowerBound {
    /// `2 (1 - (B_n / (n lambda_{n-k}) + 4 pi^2 sigma^2
    ///        + 24760 log n / sqrt n + gamma lambda_{n-k+1}))`.
    pub value: f64,
    /// Whether all four smallness conditions hold; when they do the bound
    /// is at least 1.
    pub conditions_hold: bool,
}

pub fn mu_star_lower_bound(q: &BoundQuery, gamma: f64) -> Result<MuStarLowerBound> {
    q.validate()?;
    let (_, lam_k, lam_k1) = q.require_gap("the multiplier lower bound")?;
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(Error::Parameter(format!(
            "gamma must be finite and nonnegative, got {gamma}"
        )));
    }
    let n = q.n as f64;
    let log_term = 24_760.0 * n.ln() / n.sqrt();
    let deficit = q.b_n / (n * lam_k) + 4.0 * PI * PI * q.sigma * q.sigma + log_term
        + gamma * lam_k1;
    let conditions_hold = q.b_n / lam_k <= n / 12.0
        && q.sigma * q.sigma <= 1.0 / (48.0 * PI * PI)
        && log_term <= 1.0 / 12.0
        && gamma * lam_k1 <= 0.25;
    Ok(MuStarLowerBound {
        value: 2.0 * (1.0 - deficit),
        conditions_hold,
    })
}

/// Which concentration right-hand side to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConcentrationItem {
    /// Lower tail of the raw quadratic form z* U U^T z; the only item that
    /// involves the projected ground truth.
    SpectralEnergyLower,
    /// Upper tail of the centered quadratic form.
    CenteredSpectralEnergy,
    /// Upper deviation of ||z - h||^2 around its mean.
    InputMseDeviation,
    /// Upper deviation of ||z - E z||^2 around its mean.
    CenteredMseDeviation,
}

/// Literal right-hand side of the selected concentration inequality.
///
/// For the quadratic-form items, `k` is the number of orthonormal columns;
/// `h_proj_inf` and `h_proj_2` are the sup and l2 norms of the projected
/// ground truth (only the first item uses them). The two deviation items
/// return the offset around the means given by [`concentration_event_mean`].
pub fn concentration_rhs(
    item: ConcentrationItem,
    n: usize,
    sigma: f64,
    k: usize,
    h_proj_inf: f64,
    h_proj_2: f64,
) -> f64 {
    let nf = n as f64;
    let log_n = nf.ln();
    let d4 = 1.0 - phase_damping(4.0, sigma);
    let d8 = 1.0 - phase_damping(8.0, sigma);
    let kf = k as f64;
    match item {
        ConcentrationItem::SpectralEnergyLower => {
            4096.0 * log_n
                + 32.0 * (6.0 * kf).sqrt() * d8 * log_n.sqrt()
                + 11.0 * log_n * (h_proj_inf + d8.sqrt() * h_proj_2)
        }
        ConcentrationItem::CenteredSpectralEnergy => {
            kf * d4 + 4096.0 * log_n + 32.0 * (6.0 * kf).sqrt() * d8 * log_n.sqrt()
        }
        ConcentrationItem::InputMseDeviation | ConcentrationItem::CenteredMseDeviation => {
            3.0 * log_n * (2.0 + (4.0 + 9.0 * d8 * nf).sqrt())
        }
    }
}

/// Mean around which each concentration event is centered.
pub fn concentration_event_mean(
    item: ConcentrationItem,
    n: usize,
    sigma: f64,
    k: usize,
    h_proj_2: f64,
) -> f64 {
    let nf = n as f64;
    let kf = k as f64;
    match item {
        ConcentrationItem::SpectralEnergyLower => {
            kf * (1.0 - phase_damping(4.0, sigma)) + phase_damping(4.0, sigma) * h_proj_2 * h_proj_2
        }
        ConcentrationItem::CenteredSpectralEnergy => kf * (1.0 - phase_damping(4.0, sigma)),
        ConcentrationItem::InputMseDeviation => 2.0 * nf * (1.0 - phase_damping(2.0, sigma)),
        ConcentrationItem::CenteredMseDeviation => nf * (1.0 - phase_damping(4.0, sigma)),
    }
}

/// Which bound a curve request evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    UcqpExpected,
    UcqpHighprob,
    TrsHighprob,
    MuStarLower,
}

/// A bound evaluated over a sigma grid, for CSV overlay curves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCurveRequest {
    pub bound: BoundKind,
    pub sigma_grid: Vec<f64>,
    /// Fixed regularization; mutually exclusive with `gamma_rule`.
    #[serde(default)]
    pub gamma: Option<f64>,
    /// Per-sigma regularization rule; defaults to the lemma2 rule.
    #[serde(default)]
    pub gamma_rule: Option<GammaRule>,
    /// Scalars of the bound; its `sigma` field is overwritten per grid
    /// point.
    pub query: BoundQuery,
}

/// Evaluates a bound curve; each row is (sigma, value, domain flags all ok).
pub fn evaluate_curve(req: &BoundCurveRequest) -> Result<Vec<(f64, f64, bool)>> {
    if req.sigma_grid.is_empty() {
        return Err(Error::Parameter("sigma_grid must not be empty".into()));
    }
    if req.gamma.is_some() && req.gamma_rule.is_some() {
        return Err(Error::Parameter(
            "give either `gamma` or `gamma_rule`, not both".into(),
        ));
    }
    let mut rows = Vec::with_capacity(req.sigma_grid.len());
    for &sigma in &req.sigma_grid {
        if !(sigma >= 0.0 && sigma.is_finite()) {
            return Err(Error::Parameter(format!(
                "sigma grid entries must be finite and nonnegative, got {sigma}"
            )));
        }
        let mut q = req.query.clone();
        q.sigma = sigma;
        let gamma = match (req.gamma, req.gamma_rule) {
            (Some(g), None) => g,
            (None, rule) => gamma_rule(rule.unwrap_or(GammaRule::Lemma2), &q)?,
            (Some(_), Some(_)) => unreachable!(),
        };
        let (value, ok) = match req.bound {
            BoundKind::UcqpExpected => {
                let b = ucqp_expected_bound(&q, gamma)?;
                (b.general, b.sigma_in_domain)
            }
            BoundKind::UcqpHighprob => {
                let b = ucqp_highprob_bound(&q, gamma)?;
                (b.value, b.sigma_in_domain)
            }
            BoundKind::TrsHighprob => {
                let b = trs_highprob_bound(&q, gamma)?;
                (b.value, b.sigma_in_domain && b.smoothness_in_domain)
            }
            BoundKind::MuStarLower => {
                let b = mu_star_lower_bound(&q, gamma)?;
                (b.value, b.conditions_hold)
            }
        };
        rows.push((sigma, value, ok));
    }
    Ok(rows)
}

/// Identifier of a denoising-guarantee condition set.
///
/// The exact sets carry explicit constants; the corollary sets suppress
/// constants, so their checks take an order-level constant (see
/// [`check_denoising_conditions`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    /// Expected-error guarantee (exact constants).
    Thm2,
    /// High-probability guarantee (exact constants).
    Thm6,
    /// Sphere-constrained high-probability guarantee at gap index k
    /// (exact constants).
    Thm8,
    /// Expected-error guarantee on the named families (order-level).
    Cor1,
    /// High-probability guarantee on the named families (order-level).
    Cor2,
    /// Sphere-constrained guarantee on the named families (order-level).
    Cor3,
    /// Lipschitz samples on the path graph (order-level).
    Cor5,
    /// Sphere-constrained guarantee at k = 1 (exact constants).
    Cor6,
    /// Sphere-constrained guarantee for Lipschitz samples on the path
    /// graph (order-level).
    Cor7,
}

impl TheoremId {
    pub fn is_order_level(self) -> bool {
        matches!(
            self,
            TheoremId::Cor1 | TheoremId::Cor2 | TheoremId::Cor3 | TheoremId::Cor5 | TheoremId::Cor7
        )
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm6 => "thm6",
            TheoremId::Thm8 => "thm8",
            TheoremId::Cor1 => "cor1",
            TheoremId::Cor2 => "cor2",
            TheoremId::Cor3 => "cor3",
            TheoremId::Cor5 => "cor5",
            TheoremId::Cor6 => "cor6",
            TheoremId::Cor7 => "cor7",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "thm2" => Ok(TheoremId::Thm2),
            // thm3 and thm4 are the simplified statements of thm6 and thm8.
            "thm3" | "thm6" => Ok(TheoremId::Thm6),
            "thm4" | "thm8" => Ok(TheoremId::Thm8),
            "cor1" => Ok(TheoremId::Cor1),
            "cor2" => Ok(TheoremId::Cor2),
            "cor3" => Ok(TheoremId::Cor3),
            "cor5" => Ok(TheoremId::Cor5),
            "cor6" => Ok(TheoremId::Cor6),
            "cor7" => Ok(TheoremId::Cor7),
            other => Err(Error::Parameter(format!("unknown theorem id `{other}`"))),
        }
    }
}

/// One evaluated inequality, lhs <= rhs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub satisfied: bool,
    pub tag: String,
}

/// Full report of a condition set.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub theorem: TheoremId,
    /// True for corollary sets where suppressed constants were replaced by
    /// an explicit order-level constant.
    pub order_level: bool,
    pub order_constant: f64,
    pub checks: Vec<ConditionCheck>,
}

impl ConditionReport {
    pub fn satisfied(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied)
    }

    pub fn failed_conditions(&self) -> Vec<&ConditionCheck> {
        self.checks.iter().filter(|c| !c.satisfied).collect()
    }
}

struct Checks {
    theorem: TheoremId,
    list: Vec<ConditionCheck>,
}

impl Checks {
    fn new(theorem: TheoremId) -> Self {
        Self {
            theorem,
            list: Vec::new(),
        }
    }

    fn le(&mut self, name: &str, lhs: f64, rhs: f64) {
        self.list.push(ConditionCheck {
            name: name.to_string(),
            lhs,
            rhs,
            satisfied: lhs <= rhs,
            tag: format!("{}/{}", self.theorem, name.replace(' ', "-")),
        });
    }
}

/// Evaluates every inequality of the selected condition set against the
/// query, with the explicit constants where the set has them.
///
/// For the order-level corollaries each suppressed-constant inequality
/// `x <~ y` is checked as `x <= order_constant * y`; pass 1.0 for the plain
/// reading. The constant is ignored by the exact sets.
pub fn check_denoising_conditions(
    theorem: TheoremId,
    q: &BoundQuery,
    order_constant: f64,
) -> Result<ConditionReport> {
    q.validate()?;
    if !(order_constant > 0.0 && order_constant.is_finite()) {
        return Err(Error::Parameter(format!(
            "order constant must be positive, got {order_constant}"
        )));
    }
    let eps = q.require_epsilon(theorem)?;
    let c = if theorem.is_order_level() {
        order_constant
    } else {
        1.0
    };
    let (n, delta, l) = (q.n as f64, q.delta as f64, q.low_size as f64);
    let log_n = n.ln();
    let sigma = q.sigma;
    let mut out = Checks::new(theorem);

    match theorem {
        TheoremId::Thm2 => {
            out.le("low-set size", 1.0 + l, eps * n / 64.0);
            out.le(
                "noise floor",
                64.0 / (PI * eps * q.lambda_bar) * (delta * q.b_n / n).sqrt(),
                sigma,
            );
            out.le("noise ceiling", sigma, 1.0 / (2.0 * PI));
        }
        TheoremId::Thm6 => {
            out.le(
                "noise floor smoothness",
                69.0 / (eps * q.lambda_bar) * (delta * q.b_n / n).sqrt(),
                sigma,
            );
            out.le("noise floor log", 142.0 * log_n / (eps * n).sqrt(), sigma);
            out.le("noise ceiling", sigma, 1.0 / (2.0 * 2f64.sqrt() * PI));
            out.le(
                "low-set size",
                1.0 + l + ((1.0 + l) * log_n).sqrt(),
                eps * n / 10_035.0,
            );
        }
        TheoremId::Thm8 => {
            let (_, lam_k, lam_k1) = q.require_gap("thm8")?;
            out.le("smoothness budget gap", q.b_n, n * lam_k / 12.0);
            out.le("smoothness budget cutoff", q.b_n, n * q.lambda_bar / 2.0);
            out.le(
                "low-set size",
                1.0 + l + ((1.0 + l) * log_n).sqrt(),
                PI * PI * eps * n / (5.0 * TRS_TAIL_C2),
            );
            out.le(
                "noise ceiling epsilon",
                sigma,
                PI * eps.sqrt() / (5.0 * TRS_TAIL_C3).sqrt(),
            );
            let gap_ceiling = if lam_k1 == 0.0 {
                f64::INFINITY
            } else {
                q.lambda_bar / (16.0 * lam_k1 * lam_k1)
                    * (delta * q.b_n / (4.0 * PI * PI * n)).sqrt()
            };
            out.le("noise ceiling gap", sigma, gap_ceiling);
            out.le("noise floor log a", 286.0 * (log_n / n.sqrt()).sqrt(), sigma);
            out.le(
                "noise floor smoothness",
                (5.0 * TRS_TAIL_C5).sqrt() / PI * q.b_n / (n * lam_k * eps.sqrt()),
                sigma,
            );
            out.le(
                "noise floor log b",
                (5.0 * TRS_TAIL_C4 / (eps * PI * PI) * log_n / n).sqrt(),
                sigma,
            );
            let gap_floor_term = if lam_k1 == 0.0 {
                0.0
            } else {
                lam_k1 * lam_k1 * (n / (delta * q.b_n)).sqrt()
            };
            out.le(
                "noise floor cutoff",
                5.0 * TRS_TAIL_C1 / (PI * PI * eps * q.lambda_bar)
                    * ((delta * q.b_n / n).sqrt() + gap_floor_term),
                sigma,
            );
        }
        TheoremId::Cor6 => {
            out.le("smoothness budget", q.b_n, n * q.lambda_min / 12.0);
            out.le(
                "low-set size",
                1.0 + l + ((1.0 + l) * log_n).sqrt(),
                PI * PI * eps * n / (5.0 * TRS_TAIL_C2),
            );
            out.le("noise floor log a", 286.0 * (log_n / n.sqrt()).sqrt(), sigma);
            out.le(
                "noise floor smoothness",
                (5.0 * TRS_TAIL_C5).sqrt() / PI * q.b_n / (n * q.lambda_min * eps.sqrt()),
                sigma,
            );
            out.le(
                "noise floor log b",
                (5.0 * TRS_TAIL_C4 / (eps * PI * PI) * log_n / n).sqrt(),
                sigma,
            );
            out.le(
                "noise floor cutoff",
                5.0 * TRS_TAIL_C1 / (PI * PI * eps * q.lambda_bar) * (delta * q.b_n / n).sqrt(),
                sigma,
            );
            out.le(
                "noise ceiling epsilon",
                sigma,
                PI * eps.sqrt() / (5.0 * TRS_TAIL_C3).sqrt(),
            );
        }
        TheoremId::Cor1 | TheoremId::Cor2 | TheoremId::Cor3 => {
            let family = q.family.ok_or_else(|| {
                Error::Parameter(format!("missing field `family` for {theorem}"))
            })?;
            family_conditions(&mut out, theorem, family, q, eps, c)?;
        }
        TheoremId::Cor5 => {
            let m = q
                .m
                .ok_or_else(|| Error::Parameter("missing field `m` for cor5".into()))?;
            out.le("grid size", (1.0 / eps).powi(3), c * n);
            out.le("noise floor lipschitz", m / (eps * n.powf(1.0 / 3.0)), c * sigma);
            out.le("noise floor log", log_n / (eps * n).sqrt(), c * sigma);
            out.le("noise ceiling", sigma, c);
        }
        TheoremId::Cor7 => {
            let m = q
                .m
                .ok_or_else(|| Error::Parameter("missing field `m` for cor7".into()))?;
            out.le("grid size", (1.0 / eps).powi(3), c * n);
            out.le("grid size lipschitz", m * m, c * n);
            out.le(
                "noise floor lipschitz",
                (m + 1.0 / m) / (eps * n.powf(1.0 / 3.0)),
                c * sigma,
            );
            out.le("noise floor smoothness", m * m / (n * eps.sqrt()), c * sigma);
            out.le("noise floor log a", (log_n / n.sqrt()).sqrt(), c * sigma);
            out.le("noise floor log b", (log_n / (eps * n)).sqrt(), c * sigma);
            out.le("noise ceiling epsilon", sigma, c * eps.sqrt());
            out.le("noise ceiling lipschitz", sigma, c * n.powf(1.0 / 3.0) * m);
        }
    }

    Ok(ConditionReport {
        theorem,
        order_level: theorem.is_order_level(),
        order_constant: c,
        checks: out.list,
    })
}

/// Family-specific order-level condition sets shared by cor1, cor2, cor3.
fn family_conditions(
    out: &mut Checks,
    theorem: TheoremId,
    family: Family,
    q: &BoundQuery,
    eps: f64,
    c: f64,
) -> Result<()> {
    let n = q.n as f64;
    let log_n = n.ln();
    let sigma = q.sigma;
    let theta = match family {
        Family::Path => Some(q.theta.ok_or_else(|| {
            Error::Parameter(format!("missing field `theta` for {theorem} on the path family"))
        })?),
        Family::Complete | Family::Star => None,
        Family::Custom => {
            return Err(Error::Parameter(format!(
                "{theorem} covers the path, complete and star families only"
            )))
        }
    };

    // sigma floor common to all three sets: the smoothness-driven term.
    let smooth_floor = match family {
        Family::Complete => q.b_n.sqrt() / (n * eps),
        Family::Star => q.b_n.sqrt() / eps,
        Family::Path => {
            let t = theta.unwrap();
            n.powf((3.0 - 4.0 * t) / 2.0) * q.b_n.sqrt() / eps
        }
        Family::Custom => unreachable!(),
    };

    // size condition
    match family {
        Family::Complete | Family::Star => {
            if theorem == TheoremId::Cor1 {
                out.le("grid size", 1.0 / eps, c * n);
            } else {
                out.le("grid size", 1.0 / eps, c * n / log_n.sqrt());
            }
        }
        Family::Path => {
            let t = theta.unwrap();
            if theorem == TheoremId::Cor1 {
                out.le("grid size", (1.0 / eps).powf(1.0 / (1.0 - t)), c * n);
            } else {
                out.le(
                    "low-set size",
                    n.powf(t) + (n.powf(t) * log_n).sqrt(),
                    c * eps * n,
                );
            }
        }
        Family::Custom => unreachable!(),
    }

    out.le("noise floor smoothness", smooth_floor, c * sigma);
    if matches!(theorem, TheoremId::Cor2) {
        out.le("noise floor log", log_n / (eps * n).sqrt(), c * sigma);
    }
    if matches!(theorem, TheoremId::Cor3) {
        let budget_cap = match family {
            Family::Complete => n * n,
            Family::Star => n,
            Family::Path => 1.0 / n,
            Family::Custom => unreachable!(),
        };
        out.le("smoothness budget", q.b_n, c * budget_cap);
        let second_floor = match family {
            Family::Complete => q.b_n / (n * n * eps.sqrt()),
            Family::Star => q.b_n / (n * eps.sqrt()),
            Family::Path => n * q.b_n / eps.sqrt(),
            Family::Custom => unreachable!(),
        };
        out.le("noise floor budget", second_floor, c * sigma);
        out.le("noise floor log a", (log_n / n.sqrt()).sqrt(), c * sigma);
        out.le("noise floor log b", (log_n / (eps * n)).sqrt(), c * sigma);
        out.le("noise ceiling epsilon", sigma, c * eps.sqrt());
    } else {
        out.le("noise ceiling", sigma, c);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_query() -> BoundQuery {
        BoundQuery {
            n: 1000,
            delta: 999,
            b_n: 2.0,
            sigma: 0.05,
            lambda_bar: 1000.0,
            lambda_min: 1000.0,
            lambda_1: 1000.0,
            low_size: 0,
            epsilon: Some(0.5),
            k: Some(1),
            lambda_n_minus_k: Some(1000.0),
            lambda_n_minus_k_plus_1: Some(0.0),
            m: None,
            theta: None,
            family: Some(Family::Complete),
        }
    }

    #[test]
    fn linear_rule_example() {
        let mut q = base_query();
        q.sigma = 0.01;
        let g = gamma_rule(GammaRule::Linear { c: 400.0 }, &q).unwrap();
        assert!((g - 4.0).abs() < 1e-14);
    }

    #[test]
    fn path_lipschitz_rule_without_m() {
        let mut q = base_query();
        q.n = 500;
        q.sigma = 0.01;
        let g = gamma_rule(GammaRule::PathLipschitz { use_m: false }, &q).unwrap();
        let want = (1e-4 * 500f64.powf(10.0 / 3.0)).powf(0.25);
        assert!((g - want).abs() < 1e-12 * want);
        // with m supplied, the value shrinks by sqrt(m)
        q.m = Some(4.0);
        let gm = gamma_rule(GammaRule::PathLipschitz { use_m: true }, &q).unwrap();
        assert!((gm - want / 2.0).abs() < 1e-12 * want);
    }

    #[test]
    fn lemma2_rule_vanishes_with_sigma() {
        let mut q = base_query();
        q.sigma = 0.0;
        assert_eq!(gamma_rule(GammaRule::Lemma2, &q).unwrap(), 0.0);
        q.b_n = 0.0;
        assert!(gamma_rule(GammaRule::Lemma2, &q).is_err());
    }

    #[test]
    fn expected_bound_vanishes_at_zero_noise() {
        let mut q = base_query();
        q.sigma = 0.0;
        let b = ucqp_expected_bound(&q, 0.0).unwrap();
        assert_eq!(b.simplified, Some(0.0));
        assert_eq!(b.general, 0.0);
        assert!(b.sigma_in_domain);
    }

    #[test]
    fn expected_bound_complete_graph_substitution() {
        let q = base_query();
        let gamma = gamma_rule(GammaRule::Lemma2, &q).unwrap();
        let b = ucqp_expected_bound(&q, gamma).unwrap();
        let n = q.n as f64;
        let want = 64.0 * PI
            * (q.sigma * ((n - 1.0) * q.b_n * n).sqrt() / n + PI * q.sigma * q.sigma);
        let got = b.simplified.expect("gamma matches the rule");
        assert!((got - want).abs() < 1e-9 * want);
    }

    #[test]
    fn expected_bound_general_at_gamma_zero() {
        let mut q = base_query();
        q.low_size = 3;
        let b = ucqp_expected_bound(&q, 0.0).unwrap();
        let want =
            64.0 * PI * PI * q.sigma * q.sigma * (1.0 + 3.0 + q.n as f64);
        assert!((b.general - want).abs() < 1e-9 * want);
        assert!(b.simplified.is_none());
    }

    #[test]
    fn tail_bound_at_zero_noise_is_log_term() {
        let mut q = base_query();
        q.sigma = 0.0;
        let b = ucqp_highprob_bound(&q, 0.0).unwrap();
        let want = 65_536.0 * (q.n as f64).ln();
        assert!((b.value - want).abs() < 1e-9 * want);
        assert!(!b.sigma_in_domain);
    }

    #[test]
    fn tail_bound_with_empty_low_set() {
        let q = base_query();
        let b = ucqp_highprob_bound(&q, 0.0).unwrap();
        let n = q.n as f64;
        let log_n = n.ln();
        let want = 72.0 * PI * q.sigma * (999.0 * q.b_n * n).sqrt() / q.lambda_bar
            + 99_040.0 * q.sigma * q.sigma * (1.0 + log_n.sqrt())
            + 65_536.0 * log_n;
        assert!((b.value - want).abs() < 1e-9 * want);
    }

    #[test]
    fn trs_bound_at_zero_noise() {
        let mut q = base_query();
        q.sigma = 0.0;
        let b = trs_highprob_bound(&q, 0.0).unwrap();
        let n = q.n as f64;
        let want = TRS_TAIL_C4 * n.ln() + TRS_TAIL_C5 * q.b_n * q.b_n / (n * 1000.0 * 1000.0);
        assert!((b.value - want).abs() < 1e-9 * want);
    }

    #[test]
    fn trs_bound_k1_matches_direct_formula() {
        let q = base_query();
        let a = trs_highprob_bound(&q, 0.0).unwrap().value;
        let b = trs_highprob_bound_k1(&q).unwrap();
        assert!((a - b).abs() <= 1e-12 * b.max(1.0));
    }

    #[test]
    fn trs_bound_rejects_zero_smoothness_and_bad_gap() {
        let mut q = base_query();
        q.b_n = 0.0;
        assert!(trs_highprob_bound(&q, 0.0).is_err());
        let mut q = base_query();
        q.lambda_n_minus_k_plus_1 = Some(1000.0);
        let err = trs_highprob_bound(&q, 0.0).unwrap_err();
        assert!(err.to_string().contains("invalid gap index"), "{err}");
    }

    #[test]
    fn mu_bound_examples() {
        // all deficit terms zero except the log term, forced to zero by a
        // huge n? use direct arithmetic instead: b_n = 0, sigma = 0,
        // gamma = 0 leaves only the log term.
        let mut q = base_query();
        q.b_n = 0.0;
        q.sigma = 0.0;
        let b = mu_star_lower_bound(&q, 0.0).unwrap();
        let n = q.n as f64;
        let want = 2.0 * (1.0 - 24_760.0 * n.ln() / n.sqrt());
        assert!((b.value - want).abs() < 1e-12 * want.abs());
        assert!(b.value < 2.0);

        // sigma^2 = 1/(48 pi^2) contributes exactly 1/12.
        let deficit_sigma = 4.0 * PI * PI * (1.0 / (48.0 * PI * PI));
        assert!((deficit_sigma - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn mu_bound_is_at_least_one_under_the_smallness_conditions() {
        // constructed at a hypothetical very large n where the log term is
        // small; the complete-graph scalars are closed form.
        let n = 1.0e15_f64;
        let q = BoundQuery {
            n: n as usize,
            delta: (n - 1.0) as usize,
            b_n: 1.0,
            sigma: 0.999 * (1.0 / (48.0 * PI * PI)).sqrt(),
            lambda_bar: n,
            lambda_min: n,
            lambda_1: n,
            low_size: 0,
            epsilon: Some(0.5),
            k: Some(1),
            lambda_n_minus_k: Some(n),
            lambda_n_minus_k_plus_1: Some(0.0),
            m: None,
            theta: None,
            family: Some(Family::Complete),
        };
        let b = mu_star_lower_bound(&q, 0.0).unwrap();
        assert!(b.conditions_hold);
        assert!(b.value >= 1.0, "bound {}", b.value);
        assert!(b.value <= 2.0);
    }

    #[test]
    fn concentration_zero_noise_values() {
        let n = 1000;
        let log_n = (n as f64).ln();
        let ii = concentration_rhs(ConcentrationItem::CenteredSpectralEnergy, n, 0.0, 7, 0.0, 0.0);
        assert!((ii - 4096.0 * log_n).abs() < 1e-9);
        let iii = concentration_rhs(ConcentrationItem::InputMseDeviation, n, 0.0, 0, 0.0, 0.0);
        assert!((iii - 12.0 * log_n).abs() < 1e-9);
        assert_eq!(
            concentration_event_mean(ConcentrationItem::InputMseDeviation, n, 0.0, 0, 0.0),
            0.0
        );
    }

    #[test]
    fn thm2_complete_graph_set_size() {
        let mut q = base_query();
        q.epsilon = Some(0.5);
        // n = 1000 >= 64 / eps = 128, so the set-size condition holds.
        let report = check_denoising_conditions(TheoremId::Thm2, &q, 1.0).unwrap();
        let set_size = report
            .checks
            .iter()
            .find(|c| c.name == "low-set size")
            .unwrap();
        assert!(set_size.satisfied);
        assert_eq!(set_size.lhs, 1.0);
        assert_eq!(set_size.rhs, 0.5 * 1000.0 / 64.0);
    }

    #[test]
    fn thm6_noise_floor_failure() {
        let mut q = base_query();
        let eps = 0.5;
        q.epsilon = Some(eps);
        let n = q.n as f64;
        q.sigma = 142.0 * n.ln() / (eps * n).sqrt() * 0.5; // below the floor
        let report = check_denoising_conditions(TheoremId::Thm6, &q, 1.0).unwrap();
        assert!(!report.satisfied());
        assert!(report
            .failed_conditions()
            .iter()
            .any(|c| c.name == "noise floor log"));
    }

    #[test]
    fn thm8_and_cor6_agree_at_k1() {
        let mut rng_state = 0xDEADBEEFu64;
        let mut next = move || {
            rng_state = crate::rng::splitmix64(rng_state);
            (rng_state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            let n = 100 + (next() * 2000.0) as usize;
            let lambda_min = 0.001 + next() * 2.0;
            let lambda_1 = lambda_min + next() * 50.0;
            let lambda_bar = lambda_min + next() * (lambda_1 - lambda_min);
            let q = BoundQuery {
                n,
                delta: 1 + (next() * 20.0) as usize,
                b_n: next() * 10.0 + 1e-6,
                sigma: next() * 0.2,
                lambda_bar,
                lambda_min,
                lambda_1,
                low_size: (next() * 10.0) as usize,
                epsilon: Some(0.1 + 0.8 * next()),
                k: Some(1),
                lambda_n_minus_k: Some(lambda_min),
                lambda_n_minus_k_plus_1: Some(0.0),
                m: None,
                theta: None,
                family: None,
            };
            let thm = check_denoising_conditions(TheoremId::Thm8, &q, 1.0).unwrap();
            let cor = check_denoising_conditions(TheoremId::Cor6, &q, 1.0).unwrap();
            assert_eq!(thm.satisfied(), cor.satisfied(), "query {q:?}");
        }
    }

    #[test]
    fn thm8_rejects_invalid_gap() {
        let mut q = base_query();
        q.lambda_n_minus_k_plus_1 = Some(q.lambda_n_minus_k.unwrap());
        let err = check_denoising_conditions(TheoremId::Thm8, &q, 1.0).unwrap_err();
        assert!(err.to_string().contains("invalid gap index"));
    }

    #[test]
    fn corollaries_demand_their_fields() {
        let mut q = base_query();
        q.family = None;
        assert!(check_denoising_conditions(TheoremId::Cor1, &q, 1.0).is_err());
        let mut q = base_query();
        q.family = Some(Family::Path);
        q.theta = None;
        assert!(check_denoising_conditions(TheoremId::Cor2, &q, 1.0).is_err());
        let mut q = base_query();
        q.m = None;
        assert!(check_denoising_conditions(TheoremId::Cor5, &q, 1.0).is_err());
    }

    #[test]
    fn missing_epsilon_is_named() {
        let mut q = base_query();
        q.epsilon = None;
        let err = check_denoising_conditions(TheoremId::Thm2, &q, 1.0).unwrap_err();
        assert!(err.to_string().contains("epsilon"));
        assert!(err.to_string().contains("thm2"));
    }

    #[test]
    fn theorem_id_aliases() {
        assert_eq!("thm3".parse::<TheoremId>().unwrap(), TheoremId::Thm6);
        assert_eq!("thm4".parse::<TheoremId>().unwrap(), TheoremId::Thm8);
        assert!("thm9".parse::<TheoremId>().is_err());
    }
}
