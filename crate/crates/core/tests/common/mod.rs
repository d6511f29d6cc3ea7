#![allow(dead_code)]

use num_bigint::BigInt;
use pellred::polyring::{parse_poly, IntPoly};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn p(text: &str) -> IntPoly {
    parse_poly(text).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Degree drawn uniformly from `0..=max_deg`, coefficients from `-bound..=bound`.
/// The leading coefficient may come out zero, so the true degree can be lower.
pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, bound: i64) -> IntPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<BigInt> = (0..=deg)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntPoly::new(coeffs)
}

pub fn nonzero_ds(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    (lo..=hi).filter(|&d| d != 0)
}
