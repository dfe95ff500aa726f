//! Seeded random corpora shared by the test suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform samples in `[-1, 1)` with a random length in `[min_len, max_len]`.
pub fn random_signal<R: Rng>(rng: &mut R, min_len: usize, max_len: usize) -> Vec<f64> {
    let len = rng.gen_range(min_len..=max_len);
    (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

/// Random strictly x-increasing point set with unit mean spacing and
/// `y ∈ (0, 1]`, shaped like the scaled candidates the frontier consumes.
pub fn random_point_set<R: Rng>(rng: &mut R, min_len: usize, max_len: usize) -> Vec<(f64, f64)> {
    let len = rng.gen_range(min_len..=max_len);
    let mut x = 0.0;
    let mut pts = Vec::with_capacity(len);
    for _ in 0..len {
        pts.push((x, rng.gen_range(f64::EPSILON..=1.0)));
        x += rng.gen_range(0.25..1.75);
    }
    pts
}
