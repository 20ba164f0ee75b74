//! Deterministic random number generation.
//!
//! All noise draws come from ChaCha12 streams. Stream seeds are derived from
//! a base seed and the (sigma index, trial index) pair with the SplitMix64
//! finalizer, so distinct trials never share a stream and every draw replays
//! bit-identically on any platform. Gaussian variates use the Box-Muller
//! transform of two uniforms rather than a library sampler, so the exact
//! transform is pinned here.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

const SALT_A: u64 = 0x9E37_79B9_7F4A_7C15;
const SALT_B: u64 = 0xD1B5_4A32_D192_ED03;

/// SplitMix64 finalizer (Stafford variant 13).
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the stream seed for one trial: the base seed is XORed with the
/// salted sigma index and trial index, each step passed through SplitMix64.
pub fn derive_stream_seed(base_seed: u64, sigma_index: u64, trial_index: u64) -> u64 {
    let s = splitmix64(base_seed ^ SALT_A.wrapping_mul(sigma_index.wrapping_add(1)));
    splitmix64(s ^ SALT_B.wrapping_mul(trial_index.wrapping_add(1)))
}

/// Standard normal source: ChaCha12 uniforms through Box-Muller.
pub struct GaussianSource {
    rng: ChaCha12Rng,
    spare: Option<f64>,
}

impl GaussianSource {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha12Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    /// Next uniform in [0, 1).
    pub fn next_uniform(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    /// Next standard normal draw.
    ///
    /// Box-Muller: with u1 in (0, 1] and u2 in [0, 1),
    /// r = sqrt(-2 ln u1), then (r cos(2 pi u2), r sin(2 pi u2)) are two
    /// independent N(0, 1) variates; the second is cached.
    pub fn next_standard_normal(&mut self) -> f64 {
        if let Some(s) = self.spare.take() {
            return s;
        }
        let u1 = 1.0 - self.rng.gen::<f64>(); // (0, 1]
        let u2: f64 = self.rng.gen();
        let r = (-2.0 * u1.ln()).sqrt();
        let (sin, cos) = (std::f64::consts::TAU * u2).sin_cos();
        self.spare = Some(r * sin);
        r * cos
    }

    /// Fills `out` with independent N(0, sigma^2) draws.
    pub fn fill_normal(&mut self, sigma: f64, out: &mut [f64]) {
        for v in out.iter_mut() {
            *v = sigma * self.next_standard_normal();
        }
    }
}
