//! Dense spectral decomposition of the Laplacian.
//!
//! Eigenvalues follow the descending-index convention
//! `lambda_1 >= lambda_2 >= ... >= lambda_{n-1} = lambda_min > lambda_n = 0`,
//! i.e. index j counts down the spectrum and the constant eigenvector sits
//! at j = n. Most linear-algebra libraries sort ascending; this module does
//! the reindexing once so every downstream formula can be written literally.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};

/// Largest n accepted by the dense eigensolver. Everything in this crate is
/// desk scale; a sparse/iterative path is deliberately out of scope.
pub const MAX_DENSE_N: usize = 3000;

/// Absolute tolerance used to snap the bottom eigenvalue to zero and to
/// verify connectivity of the computed spectrum.
const ZERO_EIGENVALUE_TOL: f64 = 1e-9;

/// Orthonormal eigendecomposition L = Q diag(lambda) Q^T of a connected
/// graph Laplacian, in descending-index order.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,      // eigenvalues[j-1] = lambda_j
    eigenvectors: DMatrix<f64>, // column j-1 = q_j
    laplacian: DMatrix<f64>,
    lambda_min: f64,
}

impl SpectralDecomposition {
    /// Computes the decomposition with a dense symmetric eigensolver.
    ///
    /// Deterministic for a fixed input: eigenvalues are sorted descending
    /// and each eigenvector is sign-fixed so its first nonzero coordinate
    /// is positive.
    pub fn compute(graph: &Graph) -> Result<Self> {
        let n = graph.n();
        if n > MAX_DENSE_N {
            return Err(Error::InvalidSize(format!(
                "dense eigensolver limited to n <= {MAX_DENSE_N}, got {n}"
            )));
        }
        let laplacian = graph.laplacian();
        let eigen = SymmetricEigen::try_new(laplacian.clone(), f64::EPSILON, 0).ok_or_else(
            || {
                Error::Numerical(format!(
                    "symmetric eigensolver failed to converge (n = {n}, family = {})",
                    graph.family()
                ))
            },
        )?;

        let mut order: Vec<usize> = (0..n).collect();
        // Descending; ties broken by original index for determinism.
        order.sort_by(|&a, &b| {
            eigen.eigenvalues[b]
                .partial_cmp(&eigen.eigenvalues[a])
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });

        let mut eigenvalues = Vec::with_capacity(n);
        let mut eigenvectors = DMatrix::zeros(n, n);
        for (dst, &src) in order.iter().enumerate() {
            eigenvalues.push(eigen.eigenvalues[src]);
            let mut col = eigen.eigenvectors.column(src).clone_owned();
            if let Some(first) = col.iter().find(|&&x| x != 0.0) {
                if *first < 0.0 {
                    col.neg_mut();
                }
            }
            eigenvectors.set_column(dst, &col);
        }

        let scale = eigenvalues[0].abs().max(1.0);
        if eigenvalues[n - 1].abs() > ZERO_EIGENVALUE_TOL * scale {
            return Err(Error::Numerical(format!(
                "smallest eigenvalue {} is not numerically zero",
                eigenvalues[n - 1]
            )));
        }
        eigenvalues[n - 1] = 0.0;
        let lambda_min = eigenvalues[n - 2];
        if lambda_min <= ZERO_EIGENVALUE_TOL * scale {
            return Err(Error::Numerical(format!(
                "Fiedler value {lambda_min} is not strictly positive; \
                 the graph spectrum looks disconnected"
            )));
        }

        Ok(Self {
            eigenvalues,
            eigenvectors,
            laplacian,
            lambda_min,
        })
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `lambda_j` for 1-based spectral index j.
    pub fn lambda(&self, j: usize) -> f64 {
        self.eigenvalues[j - 1]
    }

    /// All eigenvalues, `eigenvalues()[j-1] = lambda_j`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvector `q_j` for 1-based spectral index j.
    pub fn eigenvector(&self, j: usize) -> nalgebra::DVectorView<'_, f64> {
        self.eigenvectors.column(j - 1)
    }

    pub fn eigenvectors(&self) -> &DMatrix<f64> {
        &self.eigenvectors
    }

    pub fn laplacian(&self) -> &DMatrix<f64> {
        &self.laplacian
    }

    /// Fiedler value `lambda_{n-1}`.
    pub fn lambda_min(&self) -> f64 {
        self.lambda_min
    }

    pub fn lambda_1(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Spectral coefficients `a_j = <q_j, v>` of a complex vector,
    /// returned with `a[j-1] = a_j`.
    pub fn project_coefficients(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.n();
        if v.len() != n {
            return Err(Error::SizeMismatch(format!(
                "vector has length {}, decomposition has n = {n}",
                v.len()
            )));
        }
        let re = DVector::from_iterator(n, v.iter().map(|c| c.re));
        let im = DVector::from_iterator(n, v.iter().map(|c| c.im));
        let are = self.eigenvectors.tr_mul(&re);
        let aim = self.eigenvectors.tr_mul(&im);
        Ok((0..n).map(|j| Complex64::new(are[j], aim[j])).collect())
    }

    /// Reassembles `sum_j c_j q_j` from spectral coefficients.
    pub fn synthesize(&self, coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.n();
        if coeffs.len() != n {
            return Err(Error::SizeMismatch(format!(
                "coefficient vector has length {}, decomposition has n = {n}",
                coeffs.len()
            )));
        }
        let cre = DVector::from_iterator(n, coeffs.iter().map(|c| c.re));
        let cim = DVector::from_iterator(n, coeffs.iter().map(|c| c.im));
        let re = &self.eigenvectors * cre;
        let im = &self.eigenvectors * cim;
        Ok((0..n).map(|i| Complex64::new(re[i], im[i])).collect())
    }

    /// Relative Frobenius reconstruction residual ||L - Q diag(lambda) Q^T|| / ||L||.
    pub fn reconstruction_residual(&self) -> f64 {
        let lam = DVector::from_row_slice(&self.eigenvalues);
        let mut scaled = self.eigenvectors.clone();
        for (j, mut col) in scaled.column_iter_mut().enumerate() {
            col *= lam[j];
        }
        let rebuilt = &scaled * self.eigenvectors.transpose();
        (&self.laplacian - rebuilt).norm() / self.laplacian.norm()
    }

    /// Max-norm orthonormality defect ||Q^T Q - I||_max.
    pub fn orthonormality_error(&self) -> f64 {
        let gram = self.eigenvectors.tr_mul(&self.eigenvectors);
        let n = self.n();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((gram[(i, j)] - want).abs());
            }
        }
        worst
    }
}

/// Closed-form Laplacian spectra for the named families, in descending-index
/// order. Serves as the oracle for the numeric decomposition.
///
/// - path: `lambda_j = 4 sin^2(pi (n - j) / (2n))`
/// - complete: `lambda_1 = ... = lambda_{n-1} = n`, `lambda_n = 0`
/// - star: `lambda_1 = n`, `lambda_2 = ... = lambda_{n-1} = 1`, `lambda_n = 0`
pub fn analytic_spectrum(family: Family, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidSize(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let nf = n as f64;
    match family {
        Family::Path => Ok((1..=n)
            .map(|j| {
                let s = (std::f64::consts::PI / (2.0 * nf) * (n - j) as f64).sin();
                4.0 * s * s
            })
            .collect()),
        Family::Complete => {
            let mut v = vec![nf; n - 1];
            v.push(0.0);
            Ok(v)
        }
        Family::Star => {
            let mut v = vec![1.0; n];
            v[0] = nf;
            v[n - 1] = 0.0;
            Ok(v)
        }
        Family::Custom => Err(Error::Parameter(
            "no closed-form spectrum for custom graphs".into(),
        )),
    }
}

/// Split of the spectral indices [n-1] at a cutoff: `low` holds the indices
/// with `lambda_j < threshold`, `high` the rest. Index n is excluded from
/// both sides.
#[derive(Debug, Clone)]
pub struct SpectralIndexSets {
    pub low: Vec<usize>,  // 1-based spectral indices
    pub high: Vec<usize>, // 1-based spectral indices
    pub threshold: f64,
}

impl SpectralIndexSets {
    pub fn low_size(&self) -> usize {
        self.low.len()
    }
}

/// Partitions `{1, ..., n-1}` into low/high sets at `lambda_bar`, which must
/// lie in `[lambda_min, lambda_1]`.
///
/// The split is `lambda_j < lambda_bar`; numeric eigenvalues within
/// `1e-9 max(lambda_1, 1)` of the cutoff count as high, so an exactly-equal
/// eigenvalue is classified the way its closed form would be.
pub fn spectral_sets(spec: &SpectralDecomposition, lambda_bar: f64) -> Result<SpectralIndexSets> {
    let slack = 1e-9 * spec.lambda_1().max(1.0);
    if lambda_bar < spec.lambda_min() - slack || lambda_bar > spec.lambda_1() + slack {
        return Err(Error::OutOfRange {
            what: "lambda_bar".into(),
            value: lambda_bar,
            lo: spec.lambda_min(),
            hi: spec.lambda_1(),
        });
    }
    let n = spec.n();
    let mut low = Vec::new();
    let mut high = Vec::new();
    for j in 1..n {
        if spec.lambda(j) < lambda_bar - slack {
            low.push(j);
        } else {
            high.push(j);
        }
    }
    Ok(SpectralIndexSets {
        low,
        high,
        threshold: lambda_bar,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_for(family: Family, n: usize) -> SpectralDecomposition {
        SpectralDecomposition::compute(&Graph::from_family(family, n).unwrap()).unwrap()
    }

    #[test]
    fn k3_spectrum() {
        let spec = spec_for(Family::Complete, 3);
        let want = [3.0, 3.0, 0.0];
        for (got, want) in spec.eigenvalues().iter().zip(want) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn p3_spectrum_matches_closed_form() {
        let spec = spec_for(Family::Path, 3);
        let analytic = analytic_spectrum(Family::Path, 3).unwrap();
        // 4 sin^2(pi/3) = 3, 4 sin^2(pi/6) = 1
        assert!((analytic[0] - 3.0).abs() < 1e-14);
        assert!((analytic[1] - 1.0).abs() < 1e-14);
        assert_eq!(analytic[2], 0.0);
        for (got, want) in spec.eigenvalues().iter().zip(analytic) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn s4_spectrum() {
        let spec = spec_for(Family::Star, 4);
        let want = [4.0, 1.0, 1.0, 0.0];
        for (got, want) in spec.eigenvalues().iter().zip(want) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn analytic_complete_and_star() {
        assert_eq!(
            analytic_spectrum(Family::Complete, 5).unwrap(),
            vec![5.0, 5.0, 5.0, 5.0, 0.0]
        );
        assert_eq!(
            analytic_spectrum(Family::Star, 5).unwrap(),
            vec![5.0, 1.0, 1.0, 1.0, 0.0]
        );
        assert!(analytic_spectrum(Family::Custom, 5).is_err());
    }

    #[test]
    fn bottom_eigenvector_is_constant() {
        let spec = spec_for(Family::Path, 7);
        let n = spec.n();
        assert_eq!(spec.lambda(n), 0.0);
        let want = 1.0 / (n as f64).sqrt();
        for &x in spec.eigenvector(n).iter() {
            assert!((x - want).abs() < 1e-10, "{x} vs {want}");
        }
    }

    #[test]
    fn decomposition_is_deterministic() {
        let g = Graph::custom(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let a = SpectralDecomposition::compute(&g).unwrap();
        let b = SpectralDecomposition::compute(&g).unwrap();
        assert_eq!(a.eigenvalues(), b.eigenvalues());
        assert_eq!(a.eigenvectors(), b.eigenvectors());
    }

    #[test]
    fn reconstruction_and_orthonormality() {
        let spec = spec_for(Family::Path, 40);
        assert!(spec.reconstruction_residual() <= 1e-9);
        assert!(spec.orthonormality_error() <= 1e-10);
    }

    #[test]
    fn sets_complete_graph_cutoff_at_n() {
        let spec = spec_for(Family::Complete, 6);
        let sets = spectral_sets(&spec, 6.0).unwrap();
        assert!(sets.low.is_empty());
        assert_eq!(sets.high.len(), 5);
    }

    #[test]
    fn sets_p3() {
        let spec = spec_for(Family::Path, 3);
        // spectrum (3, 1, 0): cutoff 1 keeps both nonzero modes high,
        // cutoff 3 sends index 2 low.
        let at1 = spectral_sets(&spec, 1.0).unwrap();
        assert!(at1.low.is_empty());
        assert_eq!(at1.high, vec![1, 2]);
        let at3 = spectral_sets(&spec, 3.0).unwrap();
        assert_eq!(at3.low, vec![2]);
        assert_eq!(at3.high, vec![1]);
    }

    #[test]
    fn sets_rejects_out_of_range_cutoff() {
        let spec = spec_for(Family::Path, 3);
        assert!(matches!(
            spectral_sets(&spec, 5.0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            spectral_sets(&spec, 1e-6),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_oversized_graphs() {
        // Constructing the graph itself is fine; the dense solver refuses.
        let g = Graph::path(MAX_DENSE_N + 1).unwrap();
        assert!(matches!(
            SpectralDecomposition::compute(&g),
            Err(Error::InvalidSize(_))
        ));
    }

    #[test]
    fn coefficients_round_trip() {
        let spec = spec_for(Family::Path, 12);
        let v: Vec<Complex64> = (0..12)
            .map(|i| Complex64::new((i as f64).cos(), (i as f64 * 0.7).sin()))
            .collect();
        let coeffs = spec.project_coefficients(&v).unwrap();
        let back = spec.synthesize(&coeffs).unwrap();
        for (a, b) in v.iter().zip(back) {
            assert!((a - b).norm() < 1e-12);
        }
    }
}
