//! Shared helpers for the integration suites: a tiny deterministic RNG and
//! random instance generators.

use moddenoise::graph::Graph;
use moddenoise::rng::splitmix64;
use moddenoise::signal::TorusSignal;
use num_complex::Complex64;

/// SplitMix64-backed generator; deterministic and independent of the
/// library's own noise streams.
pub struct TestRng {
    state: u64,
}

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self {
            state: splitmix64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = splitmix64(self.state);
        self.state
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next_u64() as usize) % (hi - lo + 1)
    }

    /// Standard normal via Box-Muller on the test stream.
    pub fn normal(&mut self) -> f64 {
        let u1 = 1.0 - self.next_f64();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }
}

/// Connected graph on n vertices: a random attachment tree plus a few
/// random extra edges.
pub fn random_connected_graph(rng: &mut TestRng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.usize_in(0, v - 1);
        edges.push((parent, v));
    }
    let extra = rng.usize_in(0, n.min(12));
    for _ in 0..extra {
        let a = rng.usize_in(0, n - 1);
        let b = rng.usize_in(0, n - 1);
        if a != b && !edges.contains(&(a.min(b), a.max(b))) {
            edges.push((a.min(b), a.max(b)));
        }
    }
    Graph::custom(n, &edges).expect("tree plus extras is connected")
}

/// Uniform random point on the product of unit circles.
pub fn random_torus_signal(rng: &mut TestRng, n: usize) -> TorusSignal {
    let values: Vec<Complex64> = (0..n)
        .map(|_| {
            let angle = std::f64::consts::TAU * rng.next_f64();
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect();
    TorusSignal::new(values).expect("unit modulus by construction")
}

/// Random complex vector with independent standard normal parts.
pub fn random_complex_vector(rng: &mut TestRng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.normal(), rng.normal()))
        .collect()
}
