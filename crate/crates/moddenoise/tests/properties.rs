//! Property tests for the structural invariants: spectral decomposition
//! quality, energy splits, projection behavior, secular monotonicity and
//! solver optimality.

mod common;

use common::{random_complex_vector, random_connected_graph, random_torus_signal, TestRng};
use moddenoise::graph::{Family, Graph};
use moddenoise::signal::{lift_to_torus, smoothness, TorusSignal};
use moddenoise::solver::{
    project_to_torus, solve_trs, solve_ucqp, solve_ucqp_direct, trs_secular, TRS_DEFAULT_TOL,
};
use moddenoise::spectral::{analytic_spectrum, spectral_sets, SpectralDecomposition};
use num_complex::Complex64;
use proptest::prelude::*;

fn objective(z: &TorusSignal, graph: &Graph, gamma: f64, g: &[Complex64]) -> f64 {
    let n = graph.n();
    let fit: f64 = g
        .iter()
        .zip(z.values())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum();
    let l = graph.laplacian();
    let mut quad = 0.0;
    for i in 0..n {
        for j in 0..n {
            quad += l[(i, j)] * (g[i].conj() * g[j]).re;
        }
    }
    fit + gamma * quad
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eigen_invariants_on_random_graphs(seed in any::<u64>(), n in 2usize..50) {
        let mut rng = TestRng::new(seed);
        let graph = random_connected_graph(&mut rng, n);
        let spec = SpectralDecomposition::compute(&graph).unwrap();
        for j in 1..n {
            prop_assert!(spec.lambda(j) > 0.0);
            prop_assert!(spec.lambda(j) >= spec.lambda(j + 1) - 1e-12);
        }
        prop_assert_eq!(spec.lambda(n), 0.0);
        prop_assert!(spec.lambda_min() > 1e-10);
        prop_assert!(spec.orthonormality_error() <= 1e-10);
        prop_assert!(spec.reconstruction_residual() <= 1e-9);
    }

    #[test]
    fn family_spectra_match_closed_forms(seed in any::<u64>(), n in 2usize..120) {
        let family = [Family::Path, Family::Complete, Family::Star][seed as usize % 3];
        let graph = Graph::from_family(family, n).unwrap();
        let spec = SpectralDecomposition::compute(&graph).unwrap();
        let exact = analytic_spectrum(family, n).unwrap();
        for (got, want) in spec.eigenvalues().iter().zip(exact) {
            prop_assert!((got - want).abs() <= 1e-8);
        }
    }

    #[test]
    fn energy_splits_hold_for_any_torus_signal(seed in any::<u64>(), n in 3usize..40) {
        let mut rng = TestRng::new(seed);
        let graph = random_connected_graph(&mut rng, n);
        let spec = SpectralDecomposition::compute(&graph).unwrap();
        let h = random_torus_signal(&mut rng, n);
        let b = smoothness(&h, &graph).unwrap();
        let coeffs = spec.project_coefficients(h.values()).unwrap();
        let lambda = rng.uniform(spec.lambda_min(), spec.lambda_1());
        let sets = spectral_sets(&spec, lambda).unwrap();

        let high: f64 = sets.high.iter().map(|&j| coeffs[j - 1].norm_sqr()).sum();
        prop_assert!(high <= b / lambda + 1e-9 * n as f64);
        let low: f64 = sets
            .low
            .iter()
            .chain(std::iter::once(&n))
            .map(|&j| coeffs[j - 1].norm_sqr())
            .sum();
        prop_assert!(low >= n as f64 - b / lambda - 1e-9 * n as f64);

        let weighted: f64 = (1..n)
            .map(|j| spec.lambda(j).powi(2) * coeffs[j - 1].norm_sqr())
            .sum();
        prop_assert!(weighted <= 2.0 * graph.max_degree() as f64 * b + 1e-9 * n as f64);
    }

    #[test]
    fn lift_is_invariant_to_integer_shifts(
        samples in proptest::collection::vec(-3.0f64..3.0, 1..24),
        shifts in proptest::collection::vec(-4i32..=4, 24),
    ) {
        let shifted: Vec<f64> = samples
            .iter()
            .zip(&shifts)
            .map(|(s, k)| s + *k as f64)
            .collect();
        let a = lift_to_torus(&samples).unwrap();
        let b = lift_to_torus(&shifted).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            prop_assert!((x - y).norm() <= 1e-11);
        }
    }

    #[test]
    fn projection_contracts_and_ignores_scale(seed in any::<u64>(), n in 1usize..24) {
        let mut rng = TestRng::new(seed);
        let w = random_complex_vector(&mut rng, n);
        let g = random_torus_signal(&mut rng, n);
        let p = project_to_torus(&w);
        let lhs: f64 = p
            .values()
            .iter()
            .zip(g.values())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        let rhs: f64 = w
            .iter()
            .zip(g.values())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        prop_assert!(lhs.sqrt() <= 2.0 * rhs.sqrt() + 1e-12);

        let t = rng.uniform(1e-6, 1e6);
        let scaled: Vec<Complex64> = w.iter().map(|v| v * t).collect();
        for (a, b) in project_to_torus(&scaled).values().iter().zip(p.values()) {
            prop_assert!((a - b).norm() <= 1e-9);
        }
    }

    #[test]
    fn secular_function_is_strictly_decreasing(seed in any::<u64>(), n in 2usize..30) {
        let mut rng = TestRng::new(seed);
        let graph = random_connected_graph(&mut rng, n);
        let spec = SpectralDecomposition::compute(&graph).unwrap();
        let z = random_torus_signal(&mut rng, n);
        let gamma = rng.uniform(0.0, 2.0);
        let mu1 = rng.uniform(1e-3, 1.0);
        let mu2 = mu1 + rng.uniform(1e-3, 2.0);
        let phi1 = trs_secular(mu1, &z, &spec, gamma).unwrap();
        let phi2 = trs_secular(mu2, &z, &spec, gamma).unwrap();
        prop_assert!(phi1 > phi2);
    }

    #[test]
    fn smoothing_backends_agree_on_random_graphs(seed in any::<u64>(), n in 2usize..60) {
        let mut rng = TestRng::new(seed);
        let graph = random_connected_graph(&mut rng, n);
        let spec = SpectralDecomposition::compute(&graph).unwrap();
        let z = random_torus_signal(&mut rng, n);
        let gamma = rng.uniform(0.0, 4.0);
        let a = solve_ucqp(&z, &spec, gamma).unwrap();
        let b = solve_ucqp_direct(&z, &graph, gamma).unwrap();
        let diff: f64 = a
            .g_hat
            .iter()
            .zip(&b.g_hat)
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt();
        prop_assert!(diff / (n as f64).sqrt() <= 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sphere_solution_beats_feasible_points(seed in any::<u64>(), n in 3usize..24) {
        let mut rng = TestRng::new(seed);
        let graph = random_connected_graph(&mut rng, n);
        let spec = SpectralDecomposition::compute(&graph).unwrap();
        let z = random_torus_signal(&mut rng, n);
        let gamma = rng.uniform(0.0, 2.0);
        let sol = solve_trs(&z, &spec, gamma, TRS_DEFAULT_TOL).unwrap();
        let best = objective(&z, &graph, gamma, &sol.g_hat);
        let slack = 1e-8 * (1.0 + best.abs());

        // the input itself is feasible
        prop_assert!(best <= objective(&z, &graph, gamma, z.values()) + slack);
        for _ in 0..20 {
            let w = random_complex_vector(&mut rng, n);
            let norm: f64 = w.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            let feasible: Vec<Complex64> = w
                .iter()
                .map(|v| v * ((n as f64).sqrt() / norm))
                .collect();
            prop_assert!(best <= objective(&z, &graph, gamma, &feasible) + slack);
        }
    }

    #[test]
    fn multiplier_respects_spectral_lower_bounds(seed in any::<u64>(), n in 3usize..40) {
        let mut rng = TestRng::new(seed);
        let graph = random_connected_graph(&mut rng, n);
        let spec = SpectralDecomposition::compute(&graph).unwrap();
        let z = random_torus_signal(&mut rng, n);
        let gamma = rng.uniform(0.0, 1.5);
        let sol = solve_trs(&z, &spec, gamma, TRS_DEFAULT_TOL).unwrap();
        prop_assert!(sol.mu_star > 0.0 && sol.mu_star <= 2.0);

        let coeffs = spec.project_coefficients(z.values()).unwrap();
        // cumulative low-frequency energy, walking up the spectrum
        for j in (1..=n).rev() {
            let lambda_tilde = spec.lambda(j);
            let energy: f64 = (j..=n).map(|i| coeffs[i - 1].norm_sqr()).sum();
            let root = (energy / n as f64).sqrt();
            if root > gamma * lambda_tilde {
                let lower = 2.0 * root - 2.0 * gamma * lambda_tilde;
                prop_assert!(
                    sol.mu_star >= lower - 1e-9,
                    "mu {} below {} at lambda {}",
                    sol.mu_star,
                    lower,
                    lambda_tilde
                );
            }
        }
    }
}
