//! Seeded sampling helpers shared by the CLI and the test suites.
//!
//! Everything is driven by an explicit ChaCha8 stream so that any
//! randomized command or test is reproducible from its seed alone.

use crate::complexity::CoefficientSet;
use crate::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in `[-max_numer, max_numer]` and denominator
/// in `[1, max_denom]`.
pub fn rational(rng: &mut ChaCha8Rng, max_numer: i64, max_denom: i64) -> BigRational {
    let n = rng.gen_range(-max_numer..=max_numer);
    let d = rng.gen_range(1..=max_denom);
    BigRational::new(n.into(), d.into())
}

/// A dyadic rational `n / 2^e` with `n` in `[-max_numer, max_numer]` and
/// `e ≤ max_exp`; `f64` arithmetic on moderate dyadics is exact.
pub fn dyadic(rng: &mut ChaCha8Rng, max_numer: i64, max_exp: u32) -> BigRational {
    let n = rng.gen_range(-max_numer..=max_numer);
    let e = rng.gen_range(0..=max_exp);
    BigRational::new(n.into(), (1i64 << e).into())
}

/// A rational in `[1/2, 2]`, handy for monomial data where products of
/// many entries must stay within floating range.
pub fn unit_range(rng: &mut ChaCha8Rng) -> BigRational {
    let n = rng.gen_range(4..=16i64);
    BigRational::new(n.into(), 8.into())
}

/// A vector of `k` entries drawn uniformly from the coefficient set.
pub fn weights_from_set(rng: &mut ChaCha8Rng, set: &CoefficientSet, k: usize) -> Vec<BigRational> {
    (0..k)
        .map(|_| set.values()[rng.gen_range(0..set.size())].clone())
        .collect()
}

/// A ±1 vector of length `k`.
pub fn pm1_vector(rng: &mut ChaCha8Rng, k: usize) -> Vec<i8> {
    (0..k).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect()
}

/// A coefficient set with `size` distinct rationals, numerators uniform
/// over `[-max_numer, max_numer]`.
pub fn rational_set(
    rng: &mut ChaCha8Rng,
    size: usize,
    max_numer: i64,
    max_denom: i64,
) -> CoefficientSet {
    let mut values: Vec<BigRational> = Vec::with_capacity(size);
    while values.len() < size {
        let v = rational(rng, max_numer, max_denom);
        if !values.contains(&v) {
            values.push(v);
        }
    }
    CoefficientSet::new(values).expect("distinct by construction")
}
