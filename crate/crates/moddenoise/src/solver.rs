//! The two estimators and the entrywise torus projection.
//!
//! The smoothing estimator solves `min ||g - z||^2 + gamma g* L g` over all
//! of C^n; its solution is the closed form `(I + gamma L)^{-1} z`, computed
//! either in the Laplacian eigenbasis or by a direct Cholesky solve.
//!
//! The sphere-constrained estimator solves the same objective over
//! `||g||^2 = n`. Its solution is `g = 2 (2 gamma L + mu* I)^{-1} z` where
//! the multiplier mu* is the root of the secular equation phi(mu) = n with
//! `phi(mu) = ||2 (2 gamma L + mu I)^{-1} z||^2`; for torus-valued inputs
//! mu* lies in (0, 2].

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::signal::TorusSignal;
use crate::spectral::SpectralDecomposition;

/// Default relative tolerance on |phi(mu) - n| / n.
pub const TRS_DEFAULT_TOL: f64 = 1e-12;
/// Bisection bracket width at which the root is accepted.
pub const TRS_BRACKET_TOL: f64 = 1e-14;
/// Iteration cap for the safeguarded Newton loop.
pub const TRS_MAX_ITER: usize = 200;
/// |<z, q_n>| below `DEGENERACY_THRESHOLD * sqrt(n)` is rejected: the
/// sphere-constrained solution is no longer unique there, and the noise
/// model hits exact orthogonality with probability zero.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Ucqp,
    Trs,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Ucqp => "ucqp",
            Method::Trs => "trs",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UcqpBackend {
    Spectral,
    Direct,
}

/// Solution of the unconstrained smoothing problem.
#[derive(Debug, Clone)]
pub struct UcqpSolution {
    pub g_hat: Vec<Complex64>,
    pub gamma: f64,
    pub backend: UcqpBackend,
}

/// Solution of the sphere-constrained problem.
#[derive(Debug, Clone)]
pub struct TrsSolution {
    pub g_hat: Vec<Complex64>,
    pub mu_star: f64,
    pub gamma: f64,
    /// ||(2 gamma L + mu* I) g - 2z||_2 / ||z||_2.
    pub kkt_residual: f64,
    /// | ||g||^2 - n |.
    pub norm_gap: f64,
    pub iterations: usize,
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(Error::Parameter(format!(
            "gamma must be finite and nonnegative, got {gamma}"
        )));
    }
    Ok(())
}

/// Smoothing solve in the eigenbasis: `g = sum_j <q_j, z> / (1 + gamma lambda_j) q_j`.
pub fn solve_ucqp(
    z: &TorusSignal,
    spec: &SpectralDecomposition,
    gamma: f64,
) -> Result<UcqpSolution> {
    check_gamma(gamma)?;
    let coeffs = spec.project_coefficients(z.values())?;
    let filtered: Vec<Complex64> = coeffs
        .iter()
        .enumerate()
        .map(|(idx, c)| c / (1.0 + gamma * spec.eigenvalues()[idx]))
        .collect();
    Ok(UcqpSolution {
        g_hat: spec.synthesize(&filtered)?,
        gamma,
        backend: UcqpBackend::Spectral,
    })
}

/// Smoothing solve by Cholesky factorization of `I + gamma L`; serves as an
/// independent cross-check of the spectral backend.
pub fn solve_ucqp_direct(z: &TorusSignal, graph: &Graph, gamma: f64) -> Result<UcqpSolution> {
    check_gamma(gamma)?;
    let n = graph.n();
    if z.len() != n {
        return Err(Error::SizeMismatch(format!(
            "signal has length {}, graph has {n} vertices",
            z.len()
        )));
    }
    let mut a = graph.laplacian();
    a *= gamma;
    for i in 0..n {
        a[(i, i)] += 1.0;
    }
    let chol = nalgebra::Cholesky::new(a).ok_or_else(|| {
        Error::Numerical("Cholesky factorization of I + gamma L failed".into())
    })?;
    let re = chol.solve(&DVector::from_iterator(n, z.values().iter().map(|c| c.re)));
    let im = chol.solve(&DVector::from_iterator(n, z.values().iter().map(|c| c.im)));
    Ok(UcqpSolution {
        g_hat: (0..n).map(|i| Complex64::new(re[i], im[i])).collect(),
        gamma,
        backend: UcqpBackend::Direct,
    })
}

/// The secular function in the eigenbasis, with
/// `a_j = |<q_j, z>|^2` and `d_j = 2 gamma lambda_j`.
struct Secular {
    a: Vec<f64>,
    d: Vec<f64>,
    /// Target squared norm (n).
    target: f64,
}

impl Secular {
    fn phi(&self, mu: f64) -> f64 {
        4.0 * self
            .a
            .iter()
            .zip(&self.d)
            .map(|(a, d)| a / ((d + mu) * (d + mu)))
            .sum::<f64>()
    }

    fn phi_prime(&self, mu: f64) -> f64 {
        -8.0 * self
            .a
            .iter()
            .zip(&self.d)
            .map(|(a, d)| a / ((d + mu) * (d + mu) * (d + mu)))
            .sum::<f64>()
    }

    /// Safeguarded root of phi(mu) = target: bisection bracket
    /// (mu_lo, mu_hi], refined by Newton on 1/sqrt(phi) with bisection
    /// fallback whenever the Newton step leaves the bracket.
    fn solve(&self, tol: f64) -> Result<(f64, usize)> {
        let target = self.target;
        let total: f64 = self.a.iter().sum();
        // phi(mu) <= 4 total / mu^2, so this mu already satisfies
        // phi(mu) <= target up to rounding.
        let mut hi = 2.0 * (total / target).sqrt();
        let mut guard = 0;
        while self.phi(hi) > target {
            hi *= 1.0 + 1e-9;
            guard += 1;
            if guard > 200 {
                return Err(Error::NonConvergence {
                    iterations: guard,
                    lo: 0.0,
                    hi,
                    residual: (self.phi(hi) - target) / target,
                });
            }
        }
        let mut lo = hi / 2.0;
        guard = 0;
        while self.phi(lo) <= target {
            lo /= 2.0;
            guard += 1;
            if guard > 2000 {
                return Err(Error::NonConvergence {
                    iterations: guard,
                    lo,
                    hi,
                    residual: (self.phi(lo) - target) / target,
                });
            }
        }

        let inv_sqrt_target = 1.0 / target.sqrt();
        let mut mu = 0.5 * (lo + hi);
        for iter in 1..=TRS_MAX_ITER {
            let phi = self.phi(mu);
            let residual = (phi - target) / target;
            if residual.abs() <= tol {
                return Ok((mu, iter));
            }
            if phi > target {
                lo = mu;
            } else {
                hi = mu;
            }
            if hi - lo <= TRS_BRACKET_TOL {
                return Ok((0.5 * (lo + hi), iter));
            }
            // Newton on psi(mu) = phi(mu)^{-1/2} - target^{-1/2}, which is
            // close to linear in mu for this rational structure.
            let psi = 1.0 / phi.sqrt() - inv_sqrt_target;
            let psi_prime = -self.phi_prime(mu) / (2.0 * phi.powf(1.5));
            let candidate = mu - psi / psi_prime;
            mu = if candidate.is_finite() && candidate > lo && candidate < hi {
                candidate
            } else {
                0.5 * (lo + hi)
            };
        }
        Err(Error::NonConvergence {
            iterations: TRS_MAX_ITER,
            lo,
            hi,
            residual: (self.phi(mu) - target) / target,
        })
    }
}

/// Evaluates `phi(mu) = 4 sum_j |<q_j, z>|^2 / (2 gamma lambda_j + mu)^2`,
/// the squared norm of the candidate solution at multiplier mu. Strictly
/// decreasing on (0, inf) for z != 0.
pub fn trs_secular(
    mu: f64,
    z: &TorusSignal,
    spec: &SpectralDecomposition,
    gamma: f64,
) -> Result<f64> {
    check_gamma(gamma)?;
    if !(mu > 0.0) {
        return Err(Error::Parameter(format!("mu must be positive, got {mu}")));
    }
    let coeffs = spec.project_coefficients(z.values())?;
    let sec = Secular {
        a: coeffs.iter().map(|c| c.norm_sqr()).collect(),
        d: spec.eigenvalues().iter().map(|l| 2.0 * gamma * l).collect(),
        target: z.len() as f64,
    };
    Ok(sec.phi(mu))
}

/// Solves the sphere-constrained problem by secular root-finding in the
/// Laplacian eigenbasis.
///
/// Requires `<z, q_n> != 0` (checked against [`DEGENERACY_THRESHOLD`]); the
/// orthogonal "hard case" is rejected rather than handled, since the noise
/// model reaches it with probability zero.
pub fn solve_trs(
    z: &TorusSignal,
    spec: &SpectralDecomposition,
    gamma: f64,
    tol: f64,
) -> Result<TrsSolution> {
    check_gamma(gamma)?;
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!("tol must be positive, got {tol}")));
    }
    let n = spec.n();
    let nf = n as f64;
    let coeffs = spec.project_coefficients(z.values())?;

    let null_inner = coeffs[n - 1].norm();
    let threshold = DEGENERACY_THRESHOLD * nf.sqrt();
    if null_inner < threshold {
        return Err(Error::NullSpaceDegenerate {
            inner: null_inner,
            threshold,
        });
    }

    let sec = Secular {
        a: coeffs.iter().map(|c| c.norm_sqr()).collect(),
        d: spec.eigenvalues().iter().map(|l| 2.0 * gamma * l).collect(),
        target: nf,
    };
    let (mut mu_star, iterations) = sec.solve(tol)?;
    // For torus z the multiplier never exceeds 2 exactly; rounding in
    // ||z||^2 can push the computed root a few ulps above.
    if mu_star > 2.0 && mu_star <= 2.0 * (1.0 + 4.0 * crate::signal::TORUS_TOL) {
        mu_star = 2.0;
    }

    let scaled: Vec<Complex64> = coeffs
        .iter()
        .zip(&sec.d)
        .map(|(c, d)| 2.0 * c / (d + mu_star))
        .collect();
    let g_hat = spec.synthesize(&scaled)?;

    let norm_gap = (g_hat.iter().map(|c| c.norm_sqr()).sum::<f64>() - nf).abs();
    let kkt_residual = {
        let re = DVector::from_iterator(n, g_hat.iter().map(|c| c.re));
        let im = DVector::from_iterator(n, g_hat.iter().map(|c| c.im));
        let lre = spec.laplacian() * re;
        let lim = spec.laplacian() * im;
        let mut num = 0.0;
        for i in 0..n {
            let r = Complex64::new(
                2.0 * gamma * lre[i] + mu_star * g_hat[i].re - 2.0 * z.values()[i].re,
                2.0 * gamma * lim[i] + mu_star * g_hat[i].im - 2.0 * z.values()[i].im,
            );
            num += r.norm_sqr();
        }
        num.sqrt() / z.norm_sq().sqrt()
    };

    Ok(TrsSolution {
        g_hat,
        mu_star,
        gamma,
        kkt_residual,
        norm_gap,
        iterations,
    })
}

/// Entrywise projection onto the torus: `g_i / |g_i|` for nonzero entries,
/// 1 for exactly-zero entries. Total function; scale-invariant.
pub fn project_to_torus(g: &[Complex64]) -> TorusSignal {
    let values = g
        .iter()
        .map(|&v| {
            let norm = v.norm();
            if norm == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                v / norm
            }
        })
        .collect();
    TorusSignal::unit_unchecked(values)
}

/// Output of the full denoising pipeline.
#[derive(Debug, Clone)]
pub struct DenoiseResult {
    /// Projected estimate on the torus.
    pub estimate: TorusSignal,
    /// Unprojected solver output.
    pub raw: Vec<Complex64>,
    pub gamma: f64,
    pub method: Method,
    /// Multiplier and KKT residual of the sphere-constrained solve.
    pub mu_star: Option<f64>,
    pub kkt_residual: Option<f64>,
}

/// Decompose, solve, project.
pub fn denoise(z: &TorusSignal, graph: &Graph, gamma: f64, method: Method) -> Result<DenoiseResult> {
    let spec = SpectralDecomposition::compute(graph)?;
    denoise_with(z, &spec, gamma, method)
}

/// Same as [`denoise`] with a precomputed decomposition, so one
/// decomposition can be shared across many solves.
pub fn denoise_with(
    z: &TorusSignal,
    spec: &SpectralDecomposition,
    gamma: f64,
    method: Method,
) -> Result<DenoiseResult> {
    match method {
        Method::Ucqp => {
            let sol = solve_ucqp(z, spec, gamma)?;
            Ok(DenoiseResult {
                estimate: project_to_torus(&sol.g_hat),
                raw: sol.g_hat,
                gamma,
                method,
                mu_star: None,
                kkt_residual: None,
            })
        }
        Method::Trs => {
            let sol = solve_trs(z, spec, gamma, TRS_DEFAULT_TOL)?;
            Ok(DenoiseResult {
                estimate: project_to_torus(&sol.g_hat),
                raw: sol.g_hat,
                gamma,
                method,
                mu_star: Some(sol.mu_star),
                kkt_residual: Some(sol.kkt_residual),
            })
        }
    }
}
