//! Pareto fronts, redundancy/access tables, and lower-bound curves.
//!
//! [`generate_table`] reproduces the published family table: pairs are
//! rounded half-up to two decimals *first*, then deduplicated (identical
//! cells keep the lexicographically largest label) and swept for weak
//! dominance. Rounding before the sweep matters — a pair can be
//! non-dominated exactly yet collide with a neighbor at display precision.
//! [`pareto_front`] is the exact-arithmetic sibling used everywhere else.
//!
//! [`min_feasible_access`] inverts the entropy bound `H(λ/ν) ≥ m(1-λ)/ν`
//! by bisection: the left side minus the right is increasing in `λ` on
//! `(0, ν/2]`, and past that point the first sign change is scanned before
//! bisecting. [`check_counting_bound`] evaluates the exact big-integer
//! inequality `C(n,ℓ)·|A|^ℓ ≥ |A|^k` that every finite linear-decoding
//! protocol must satisfy.

use crate::codes::{family_pair, CodeFamily, FeasiblePair};
use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

/// One row of the redundancy/access table: exact pair plus its
/// two-decimal rendering (stored in hundredths).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub family: Option<CodeFamily>,
    pub index: Option<u32>,
    pub redundancy: Rational64,
    pub access: Rational64,
    pub redundancy_hundredths: i64,
    pub access_hundredths: i64,
}

impl TableRow {
    pub fn redundancy_string(&self) -> String {
        format_hundredths(self.redundancy_hundredths)
    }

    pub fn access_string(&self) -> String {
        format_hundredths(self.access_hundredths)
    }
}

/// Round a positive rational half-up at two decimals, in hundredths.
pub fn round_hundredths(r: Rational64) -> i64 {
    let scaled = r * Rational64::new(100, 1) + Rational64::new(1, 2);
    scaled.floor().to_integer()
}

/// Render hundredths with trailing zeros trimmed: 300 → "3", 50 → "0.5",
/// 214 → "2.14".
pub fn format_hundredths(h: i64) -> String {
    let int = h / 100;
    let frac = (h % 100).abs();
    if frac == 0 {
        format!("{int}")
    } else if frac % 10 == 0 {
        format!("{int}.{}", frac / 10)
    } else {
        format!("{int}.{frac:02}")
    }
}

/// The exact non-dominated subset (minimizing both coordinates), sorted by
/// redundancy ascending. Identical pairs collapse to the lexicographically
/// largest label. Idempotent and order-independent.
pub fn pareto_front(pairs: &[FeasiblePair]) -> Vec<FeasiblePair> {
    let mut sorted: Vec<FeasiblePair> = pairs.to_vec();
    sorted.sort_by(|a, b| {
        (a.redundancy, a.access)
            .cmp(&(b.redundancy, b.access))
            .then_with(|| b.label.cmp(&a.label))
    });
    sorted.dedup_by(|b, a| {
        // keep `a` (which sorted to carry the larger label on equal pairs)
        a.redundancy == b.redundancy && a.access == b.access
    });
    let mut front: Vec<FeasiblePair> = Vec::new();
    let mut best_access: Option<Rational64> = None;
    for pair in sorted {
        if best_access.map_or(true, |b| pair.access < b) {
            best_access = Some(pair.access);
            front.push(pair);
        }
    }
    front
}

/// Family table: all members with index up to `max_index` (families with a
/// positive minimum index start there), plus the trivial uncoded-plus-ones
/// row at (1, 0.5); pairs whose exact redundancy exceeds `cap` are dropped,
/// the rest are rounded to two decimals, deduplicated, and swept for weak
/// dominance at display precision.
pub fn generate_table(families: &[CodeFamily], max_index: u32, cap: Rational64) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = Vec::new();
    let trivial = FeasiblePair::new(Rational64::one(), Rational64::new(1, 2), "Trivial");
    rows.push(to_row(&trivial, None, None));
    for &family in families {
        for i in family.min_index()..=max_index {
            let Ok(pair) = family_pair(family, i) else {
                continue;
            };
            if pair.redundancy <= cap {
                rows.push(to_row(&pair, Some(family), Some(i)));
            }
        }
    }

    // dedupe identical rounded cells, keeping the lexicographically largest label
    rows.sort_by(|a, b| {
        (a.redundancy_hundredths, a.access_hundredths)
            .cmp(&(b.redundancy_hundredths, b.access_hundredths))
            .then_with(|| b.label.cmp(&a.label))
    });
    rows.dedup_by(|b, a| {
        a.redundancy_hundredths == b.redundancy_hundredths
            && a.access_hundredths == b.access_hundredths
    });

    let mut table: Vec<TableRow> = Vec::new();
    let mut best_access = i64::MAX;
    for row in rows {
        if row.access_hundredths < best_access {
            best_access = row.access_hundredths;
            table.push(row);
        }
    }
    table
}

fn to_row(pair: &FeasiblePair, family: Option<CodeFamily>, index: Option<u32>) -> TableRow {
    TableRow {
        label: pair.label.clone(),
        family,
        index,
        redundancy: pair.redundancy,
        access: pair.access,
        redundancy_hundredths: round_hundredths(pair.redundancy),
        access_hundredths: round_hundredths(pair.access),
    }
}

/// CSV with schema `label,redundancy,access,family,index`; the table flavor
/// prints the two-decimal strings, the exact flavor prints rationals.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("label,redundancy,access,family,index\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.label,
            row.redundancy_string(),
            row.access_string(),
            row.family.map_or(String::new(), |f| f.to_string()),
            row.index.map_or(String::new(), |i| i.to_string()),
        ));
    }
    out
}

pub fn pairs_csv(pairs: &[FeasiblePair]) -> String {
    let mut out = String::from("label,redundancy,access,family,index\n");
    for p in pairs {
        let (family, index) = p
            .label
            .rsplit_once('_')
            .map_or((p.label.as_str(), String::new()), |(f, i)| {
                (f, i.to_string())
            });
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            p.label, p.redundancy, p.access, family, index
        ));
    }
    out
}

/// Binary entropy in bits; 0 at the endpoints.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        0.0
    } else {
        -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
    }
}

fn bound_gap(lambda: f64, nu: f64, m: u32) -> f64 {
    binary_entropy(lambda / nu) - (m as f64) * (1.0 - lambda) / nu
}

/// Smallest `λ ∈ (0, 1]` satisfying `H(λ/ν) ≥ m(1-λ)/ν`, to within 1e-9.
/// Every feasible `(ν, λ)` pair of a linear-decoding protocol over an
/// alphabet of size `2^m` lies on or above this curve.
pub fn min_feasible_access(nu: f64, m: u32) -> f64 {
    assert!(nu >= 1.0 && m >= 1);
    let gap = |l: f64| bound_gap(l, nu, m);
    let mono_hi = (nu / 2.0).min(1.0);
    let (mut lo, mut hi) = if gap(mono_hi) >= 0.0 {
        (0.0, mono_hi)
    } else {
        // past the monotone region: scan for the first sign change
        let mut bracket = None;
        let mut prev = mono_hi;
        let steps = 4096;
        for s in 1..=steps {
            let l = mono_hi + (1.0 - mono_hi) * s as f64 / steps as f64;
            if gap(l) >= 0.0 {
                bracket = Some((prev, l));
                break;
            }
            prev = l;
        }
        match bracket {
            Some(b) => b,
            None => return 1.0,
        }
    };
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-12 {
            break;
        }
    }
    hi
}

/// Evaluate the bound curve on a redundancy grid.
pub fn bound_curve(nus: &[f64], m: u32) -> Vec<(f64, f64)> {
    nus.iter().map(|&nu| (nu, min_feasible_access(nu, m))).collect()
}

pub fn curve_csv(points: &[(f64, f64)], m: u32) -> String {
    let mut out = String::from("nu,lambda_min,m\n");
    for &(nu, lambda) in points {
        out.push_str(&format!("{nu},{lambda:.9},{m}\n"));
    }
    out
}

/// Exact counting bound for linear decoding: `C(n,ℓ)·qℓ ≥ qᵏ` with `q` the
/// alphabet size, all in big integers.
pub fn check_counting_bound(n: u64, k: u64, ell: u64, alphabet: u64) -> bool {
    assert!(ell > 0 && ell <= n && k > 0);
    let q = BigUint::from(alphabet);
    binomial(n, ell) * q.pow(ell as u32) >= q.pow(k as u32)
}

/// Refined bound for systematic binary schemes:
/// `C(n,ℓ) - C(k,ℓ) ≥ 2^(k-ℓ)`. Only meaningful when `ℓ ≤ k`.
pub fn check_counting_bound_systematic(n: u64, k: u64, ell: u64) -> bool {
    assert!(ell > 0 && ell <= k && k <= n);
    let reachable = binomial(n, ell) - binomial(k, ell);
    reachable >= BigUint::from(2u32).pow((k - ell) as u32)
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Vertices of the lower-left convex hull of a pair set: every mixture of
/// two input pairs lies on or above the returned chain.
pub fn convex_hull_front(pairs: &[FeasiblePair]) -> Vec<FeasiblePair> {
    let mut points = pareto_front(pairs);
    if points.len() <= 2 {
        return points;
    }
    points.sort_by(|a, b| (a.redundancy, a.access).cmp(&(b.redundancy, b.access)));
    let mut hull: Vec<FeasiblePair> = Vec::new();
    for p in points {
        while hull.len() >= 2 {
            let o = &hull[hull.len() - 2];
            let a = &hull[hull.len() - 1];
            let cross = (a.redundancy - o.redundancy) * (p.access - o.access)
                - (a.access - o.access) * (p.redundancy - o.redundancy);
            if cross.is_negative() || cross.is_zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}
