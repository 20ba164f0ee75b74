//! Signals on the product of unit circles, the Gaussian phase-noise model,
//! smoothness functionals and error metrics.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::GaussianSource;

/// How far an entry may deviate from unit modulus and still count as lying
/// on the torus.
pub const TORUS_TOL: f64 = 1e-12;

/// Upper bound on |f1'| over [0, 1] with f1 as in [`FunctionKind::F1`].
/// f1'(x) = 3 cos^2(2 pi x) - 2 pi (3x + 1) sin(4 pi x); its largest grid
/// value on a 2e6-point grid is 24.47216, and |f1''| <= 12 pi + 32 pi^2 < 353
/// caps the between-grid growth at 0.5 * step * 353 < 1e-4, so 24.473 is a
/// certified bound.
pub const F1_LIPSCHITZ: f64 = 24.473;

/// f2(x) = sin(2 pi x) has derivative 2 pi cos(2 pi x), so the Lipschitz
/// constant is exactly 2 pi.
pub const F2_LIPSCHITZ: f64 = std::f64::consts::TAU;

/// A length-n complex vector, optionally certified to lie on the torus
/// (all entries of unit modulus, within [`TORUS_TOL`]).
#[derive(Debug, Clone, PartialEq)]
pub struct TorusSignal {
    values: Vec<Complex64>,
    on_torus: bool,
}

impl TorusSignal {
    /// Wraps a vector that must already lie on the torus.
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(values, TORUS_TOL)
    }

    /// Same as [`TorusSignal::new`] with a caller-chosen modulus tolerance.
    pub fn with_tolerance(values: Vec<Complex64>, tol: f64) -> Result<Self> {
        for (i, v) in values.iter().enumerate() {
            let dev = (v.norm() - 1.0).abs();
            if !dev.is_finite() || dev > tol {
                return Err(Error::Validation(format!(
                    "entry {} has modulus {} (deviation {dev:.3e} > {tol:.3e})",
                    i + 1,
                    v.norm()
                )));
            }
        }
        Ok(Self {
            values,
            on_torus: true,
        })
    }

    /// Wraps an arbitrary complex vector without the unit-modulus claim.
    pub fn raw(values: Vec<Complex64>) -> Self {
        Self {
            values,
            on_torus: false,
        }
    }

    /// For values that are unit modulus by construction (entrywise
    /// normalization, rotations of torus signals).
    pub(crate) fn unit_unchecked(values: Vec<Complex64>) -> Self {
        Self {
            values,
            on_torus: true,
        }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn on_torus(&self) -> bool {
        self.on_torus
    }

    /// Squared l2 norm.
    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }
}

/// Test functions sampled on the unit interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionKind {
    /// f1(x) = 3x cos^2(2 pi x) - sin^2(2 pi x) + 0.7 (many folds mod 1).
    F1,
    /// f2(x) = sin(2 pi x) (a single gentle fold mod 1).
    F2,
}

impl FunctionKind {
    pub fn eval(self, x: f64) -> f64 {
        let t = std::f64::consts::TAU * x;
        match self {
            FunctionKind::F1 => {
                let c = t.cos();
                let s = t.sin();
                3.0 * x * c * c - s * s + 0.7
            }
            FunctionKind::F2 => t.sin(),
        }
    }

    pub fn sample(self, grid: &[f64]) -> Vec<f64> {
        grid.iter().map(|&x| self.eval(x)).collect()
    }
}

/// A function together with a Lipschitz constant usable in the bound
/// evaluators. For the built-in functions the constant is certified;
/// for custom samples the caller declares it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionSpec {
    pub kind: FunctionKind,
    pub lipschitz: f64,
}

impl FunctionSpec {
    pub fn f1() -> Self {
        Self {
            kind: FunctionKind::F1,
            lipschitz: F1_LIPSCHITZ,
        }
    }

    pub fn f2() -> Self {
        Self {
            kind: FunctionKind::F2,
            lipschitz: F2_LIPSCHITZ,
        }
    }
}

/// Gaussian phase-noise model: each sample is rotated by exp(i 2 pi eta)
/// with eta ~ N(0, sigma^2) i.i.d.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseModel {
    pub sigma: f64,
    pub seed: u64,
}

impl NoiseModel {
    pub fn new(sigma: f64, seed: u64) -> Result<Self> {
        if !(sigma >= 0.0 && sigma.is_finite()) {
            return Err(Error::Parameter(format!(
                "sigma must be finite and nonnegative, got {sigma}"
            )));
        }
        Ok(Self { sigma, seed })
    }
}

/// Equispaced grid x_i = (i - 1) / (n - 1) on [0, 1].
pub fn uniform_grid(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidSize(format!(
            "grid needs at least 2 points, got {n}"
        )));
    }
    let step = 1.0 / (n - 1) as f64;
    Ok((0..n).map(|i| i as f64 * step).collect())
}

/// Lifts real samples onto the torus: s_i -> exp(i 2 pi s_i). Invariant
/// to integer shifts of the samples, up to trig rounding.
pub fn lift_to_torus(samples: &[f64]) -> Result<TorusSignal> {
    if let Some((i, &bad)) = samples.iter().enumerate().find(|(_, s)| !s.is_finite()) {
        return Err(Error::Validation(format!(
            "sample {} is not finite: {bad}",
            i + 1
        )));
    }
    let values = samples
        .iter()
        .map(|&s| {
            let (sin, cos) = (std::f64::consts::TAU * s).sin_cos();
            Complex64::new(cos, sin)
        })
        .collect();
    TorusSignal::new(values)
}

/// Draws z_i = h_i exp(i 2 pi eta_i) with eta ~ N(0, sigma^2) from the
/// model's own seed.
pub fn add_modulo_noise(h: &TorusSignal, nm: &NoiseModel) -> TorusSignal {
    let mut gauss = GaussianSource::new(nm.seed);
    add_modulo_noise_from(h, nm.sigma, &mut gauss)
}

/// Same as [`add_modulo_noise`] but draws from an explicit source, so
/// parallel trials can use disjoint streams.
pub fn add_modulo_noise_from(
    h: &TorusSignal,
    sigma: f64,
    gauss: &mut GaussianSource,
) -> TorusSignal {
    let values = h
        .values()
        .iter()
        .map(|&hi| {
            let eta = sigma * gauss.next_standard_normal();
            let (sin, cos) = (std::f64::consts::TAU * eta).sin_cos();
            hi * Complex64::new(cos, sin)
        })
        .collect();
    // Rotating unit-modulus entries keeps them on the torus.
    TorusSignal {
        values,
        on_torus: h.on_torus(),
    }
}

/// Smoothness h* L h evaluated in the edge-sum form
/// `sum_{{i,j} in E} |h_i - h_j|^2`, which avoids the cancellation of the
/// matrix quadratic form.
pub fn smoothness(h: &TorusSignal, graph: &Graph) -> Result<f64> {
    if h.len() != graph.n() {
        return Err(Error::SizeMismatch(format!(
            "signal has length {}, graph has {} vertices",
            h.len(),
            graph.n()
        )));
    }
    let v = h.values();
    Ok(graph
        .edges()
        .iter()
        .map(|&(i, j)| (v[i] - v[j]).norm_sqr())
        .sum())
}

/// Quadratic-variation proxy for the smoothness budget of samples taken
/// along a path: `4 pi^2 sum_i (f_i - f_{i+1})^2`. For an M-Lipschitz f on
/// the uniform grid this is at most 8 pi^2 M^2 / n.
pub fn quadratic_variation_bound(f_samples: &[f64]) -> Result<f64> {
    if f_samples.len() < 2 {
        return Err(Error::InvalidSize(format!(
            "need at least 2 samples, got {}",
            f_samples.len()
        )));
    }
    let sum: f64 = f_samples
        .windows(2)
        .map(|w| {
            let d = w[0] - w[1];
            d * d
        })
        .sum();
    Ok(4.0 * std::f64::consts::PI * std::f64::consts::PI * sum)
}

/// Squared l2 distance ||u - v||_2^2 in C^n.
pub fn mse(u: &TorusSignal, v: &TorusSignal) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch(format!(
            "lengths differ: {} vs {}",
            u.len(),
            v.len()
        )));
    }
    Ok(u.values()
        .iter()
        .zip(v.values())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum())
}
