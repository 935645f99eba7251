//! Covering-code storage schemes for low-access quantized linear computation.
//!
//! A data vector `x ∈ ℝᵏ` is encoded into `n ≥ k` scalars, one per virtual
//! server, so that any linear combination `w·xᵀ` whose coefficients come from
//! a finite set `A` can be retrieved by touching only a small number of
//! servers. The smaller the access count, the more redundancy the encoding
//! needs; this crate builds the machinery on both sides of that tradeoff:
//!
//! - [`codes`] — binary covering-code algebra: covering radii, coordinate
//!   norms and normality, amalgamated direct sums, Cartesian extensions,
//!   piecewise-constant codes, generalized covering radii, and the named
//!   code families behind the storage schemes.
//! - [`complexity`] — the additive complexity of a coefficient set (the
//!   smallest number of two-element sets whose sumset covers it), exact
//!   decompositions, structural fast paths, and the almost-Sidon test.
//! - [`protocol`] — encoding schemes and access planners: single ±1 blocks,
//!   arbitrary two-valued queries, multi-valued queries through a
//!   decomposition, joint retrieval over uncoded storage, and plans driven
//!   by generalized covering radii.
//! - [`sim`] — an in-memory storage simulator with exact-rational and `f64`
//!   backends, per-query access accounting, and a multiplicative (monomial)
//!   mode.
//! - [`analysis`] — Pareto fronts, redundancy/access tables, entropy bound
//!   curves, and counting-bound checks.
//!
//! The `covac` binary exposes all of the above as subcommands; see the
//! crate README for examples.

pub mod analysis;
pub mod cli;
pub mod codes;
pub mod complexity;
pub mod protocol;
pub mod sample;
pub mod sim;

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Rational64};

use num_traits::One;

/// Parse a rational written as `p/q` or as a plain integer.
pub fn parse_ratio(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| format!("invalid numerator in '{s}'"))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| format!("invalid denominator in '{s}'"))?;
            if d == BigInt::from(0) {
                return Err(format!("zero denominator in '{s}'"));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| format!("invalid rational '{s}'"))?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Parse a comma- or whitespace-separated list of rationals.
pub fn parse_ratio_list(s: &str) -> Result<Vec<BigRational>, String> {
    let items: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if items.is_empty() {
        return Err("empty rational list".to_string());
    }
    items.into_iter().map(parse_ratio).collect()
}

/// Render a rational as `p/q`, or `p` when the denominator is one.
pub fn render_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
