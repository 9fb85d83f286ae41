//! Deterministic choice between exhaustive and sampled verification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Groups up to this order are checked element by element.
pub const EXHAUSTIVE_LIMIT: usize = 100_000;
/// Sample size used above the exhaustive limit.
pub const SAMPLE_COUNT: usize = 10_000;
pub const DEFAULT_SEED: u64 = 0x7472_6961_6c69_7479;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` indices drawn uniformly from `0..n` with replacement.
pub fn sample_indices(n: usize, count: usize, seed: u64) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let mut r = rng(seed);
    (0..count).map(|_| r.gen_range(0..n)).collect()
}

/// Every index when `n` is within the exhaustive limit, otherwise a seeded sample.
pub fn coverage(n: usize, seed: u64) -> (Vec<usize>, bool) {
    if n <= EXHAUSTIVE_LIMIT {
        ((0..n).collect(), true)
    } else {
        (sample_indices(n, SAMPLE_COUNT, seed), false)
    }
}

/// All pairs when there are at most `limit` of them, otherwise `count`
/// seeded pairs.
pub fn pair_coverage(n: usize, limit: usize, count: usize, seed: u64) -> (Vec<(usize, usize)>, bool) {
    if n.saturating_mul(n) <= limit {
        ((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(), true)
    } else {
        let a = sample_indices(n, count, seed);
        let b = sample_indices(n, count, seed.wrapping_add(1));
        (a.into_iter().zip(b).collect(), false)
    }
}

/// All triples when there are at most `limit` of them, otherwise `count`
/// seeded triples.
pub fn triple_coverage(n: usize, limit: usize, count: usize, seed: u64) -> (Vec<[usize; 3]>, bool) {
    if n.saturating_mul(n).saturating_mul(n) <= limit {
        let all = (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k]))).collect();
        (all, true)
    } else {
        let a = sample_indices(n, count, seed);
        let b = sample_indices(n, count, seed.wrapping_add(1));
        let c = sample_indices(n, count, seed.wrapping_add(2));
        (a.into_iter().zip(b).zip(c).map(|((x, y), z)| [x, y, z]).collect(), false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_reproducible() {
        assert_eq!(sample_indices(1000, 50, 3), sample_indices(1000, 50, 3));
        assert_ne!(sample_indices(1000, 50, 3), sample_indices(1000, 50, 4));
        assert!(sample_indices(7, 100, 1).iter().all(|&i| i < 7));
    }

    #[test]
    fn small_ranges_are_exhaustive() {
        let (v, ex) = coverage(10, 0);
        assert!(ex && v.len() == 10);
        let (p, ex) = pair_coverage(10, 1000, 5, 0);
        assert!(ex && p.len() == 100);
        let (t, ex) = triple_coverage(100, 1000, 5, 0);
        assert!(!ex && t.len() == 5);
    }
}
