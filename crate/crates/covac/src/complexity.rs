//! Additive complexity of finite coefficient sets.
//!
//! The complexity `C(A)` of a finite set `A ⊂ ℚ` is the smallest `θ` such
//! that `A` is contained in a sumset of `θ` two-element sets; equivalently,
//! the smallest `θ` for which some `|A| × (θ+1)` binary matrix with an
//! all-ones column has `vec(A)` in its rational column span. The decision
//! uses exact integer elimination — no floating point touches the search —
//! and certificates come back as [`Decomposition`]s in offset-plus-steps
//! form `A ⊆ ∔ᵢ {zᵢ, 0} + {s}` with every step positive.
//!
//! The matrix search enumerates candidates in row-major integer order
//! (θ ascending from the `⌈log₂|A|⌉` lower bound, first success wins) with
//! two sound prunes: duplicate rows force equal set elements, and zero,
//! all-ones, or duplicate columns would yield a certificate at `θ - 1`.
//! At `θ = |A| - 1` no search is needed — the staircase certificate
//! `s = a₁, zᵢ = aᵢ₊₁ - aᵢ` always works — which keeps the worst case at
//! `2^(|A|·(|A|-2))` matrices; the size limit guards that cost.

use crate::{BigInt, BigRational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Default cap on set size for the exact complexity search.
pub const DEFAULT_SIZE_LIMIT: usize = 6;

#[derive(Debug, Error)]
pub enum ComplexityError {
    #[error("coefficient set must be nonempty")]
    EmptySet,
    #[error("coefficient set has a repeated value {0}")]
    DuplicateValue(String),
    #[error("set size {size} exceeds the search limit {limit}")]
    SizeOverLimit { size: usize, limit: usize },
    #[error("entry {index} has value {value} outside the coefficient set")]
    EntryOutsideSet { index: usize, value: String },
    #[error("internal solver invariant broken: {0}")]
    Internal(&'static str),
}

/// A finite set of exact rationals, kept strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSet {
    values: Vec<BigRational>,
}

impl CoefficientSet {
    pub fn new(mut values: Vec<BigRational>) -> Result<Self, ComplexityError> {
        if values.is_empty() {
            return Err(ComplexityError::EmptySet);
        }
        values.sort();
        for pair in values.windows(2) {
            if pair[0] == pair[1] {
                return Err(ComplexityError::DuplicateValue(crate::render_ratio(&pair[0])));
            }
        }
        Ok(CoefficientSet { values })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self, ComplexityError> {
        CoefficientSet::new(
            values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn index_of(&self, value: &BigRational) -> Option<usize> {
        self.values.binary_search(value).ok()
    }
}

/// `(⌈log₂ m⌉, m-1)` for `m ≥ 2`; sets of size 0 or 1 are assigned `(1, 1)`
/// since a decomposition always has at least one step.
pub fn complexity_bounds(m: usize) -> (u32, u32) {
    if m < 2 {
        (1, 1)
    } else {
        (ceil_log2(m), (m - 1) as u32)
    }
}

/// Closed-form complexity for sets of size at most 4; `None` beyond that.
/// Size ≤ 2 → 1; size 3 → 2; size 4 → 2 exactly when the extremes sum to
/// the same value as the middle pair, else 3.
pub fn complexity_fast_path(a: &CoefficientSet) -> Option<u32> {
    let v = a.values();
    match v.len() {
        1 | 2 => Some(1),
        3 => Some(2),
        4 => Some(if &v[0] + &v[3] == &v[1] + &v[2] { 2 } else { 3 }),
        _ => None,
    }
}

/// True iff all pairwise sums of *distinct* elements are different.
pub fn is_almost_sidon(a: &CoefficientSet) -> bool {
    let v = a.values();
    let mut sums = Vec::with_capacity(v.len() * (v.len() - 1) / 2);
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            sums.push(&v[i] + &v[j]);
        }
    }
    sums.sort();
    sums.windows(2).all(|p| p[0] != p[1])
}

pub fn complexity(a: &CoefficientSet) -> Result<u32, ComplexityError> {
    complexity_with_limit(a, DEFAULT_SIZE_LIMIT)
}

pub fn complexity_with_limit(a: &CoefficientSet, limit: usize) -> Result<u32, ComplexityError> {
    let m = a.size();
    if m > limit {
        return Err(ComplexityError::SizeOverLimit { size: m, limit });
    }
    if m <= 2 {
        return Ok(1);
    }
    let (lower, upper) = complexity_bounds(m);
    let target = scaled_integers(a.values());
    for theta in lower..upper {
        if find_certificate(&target, theta).is_some() {
            return Ok(theta);
        }
    }
    Ok(upper)
}

/// An offset-plus-steps certificate: `aⱼ = s + Σ_{i ∈ Iⱼ} zᵢ` exactly, with
/// all steps positive and `θ` equal to the set's complexity.
#[derive(Debug, Clone)]
pub struct Decomposition {
    set: CoefficientSet,
    offset: BigRational,
    steps: Vec<BigRational>,
    selectors: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn set(&self) -> &CoefficientSet {
        &self.set
    }

    pub fn theta(&self) -> usize {
        self.steps.len()
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn steps(&self) -> &[BigRational] {
        &self.steps
    }

    /// For each set element (in increasing order), the 0-based step indices
    /// that sum to it on top of the offset.
    pub fn selectors(&self) -> &[Vec<usize>] {
        &self.selectors
    }

    fn validate(self) -> Result<Self, ComplexityError> {
        for z in &self.steps {
            if !z.is_positive() {
                return Err(ComplexityError::Internal("nonpositive step"));
            }
        }
        for (value, sel) in self.set.values().iter().zip(&self.selectors) {
            let mut acc = self.offset.clone();
            for &i in sel {
                acc += &self.steps[i];
            }
            if &acc != value {
                return Err(ComplexityError::Internal(
                    "selector does not reproduce element",
                ));
            }
        }
        Ok(self)
    }
}

pub fn decompose(a: &CoefficientSet) -> Result<Decomposition, ComplexityError> {
    decompose_with_limit(a, DEFAULT_SIZE_LIMIT)
}

pub fn decompose_with_limit(
    a: &CoefficientSet,
    limit: usize,
) -> Result<Decomposition, ComplexityError> {
    let m = a.size();
    if m > limit {
        return Err(ComplexityError::SizeOverLimit { size: m, limit });
    }
    if m == 1 {
        return Decomposition {
            set: a.clone(),
            offset: a.values()[0].clone(),
            steps: vec![BigRational::one()],
            selectors: vec![vec![]],
        }
        .validate();
    }
    let (lower, upper) = complexity_bounds(m);
    let target = scaled_integers(a.values());
    for theta in lower..upper {
        if let Some(rows) = find_certificate(&target, theta) {
            return decomposition_from_rows(a, rows, theta as usize);
        }
    }
    staircase(a).validate()
}

/// A query vector re-expressed as ±1 levels: `w = Σᵢ scalesᵢ·ŵ⁽ⁱ⁾ + offset·𝟙`
/// entrywise, exactly.
#[derive(Debug, Clone)]
pub struct WeightSplit {
    pub levels: Vec<Vec<i8>>,
    pub scales: Vec<BigRational>,
    pub offset: BigRational,
}

/// Split a vector over the decomposition's set into `θ` two-valued levels in
/// their ±1 form. Level `i` carries scale `zᵢ/2`; the shared offset is
/// `s + Σᵢ zᵢ/2`.
pub fn split_weights(
    w: &[BigRational],
    d: &Decomposition,
) -> Result<WeightSplit, ComplexityError> {
    let theta = d.theta();
    let mut levels = vec![vec![0i8; w.len()]; theta];
    for (j, value) in w.iter().enumerate() {
        let idx = d
            .set()
            .index_of(value)
            .ok_or_else(|| ComplexityError::EntryOutsideSet {
                index: j,
                value: crate::render_ratio(value),
            })?;
        let sel = &d.selectors()[idx];
        for (i, level) in levels.iter_mut().enumerate() {
            level[j] = if sel.contains(&i) { 1 } else { -1 };
        }
    }
    let two = BigRational::from_integer(2.into());
    let scales: Vec<BigRational> = d.steps().iter().map(|z| z / &two).collect();
    let mut offset = d.offset().clone();
    for s in &scales {
        offset += s;
    }
    Ok(WeightSplit {
        levels,
        scales,
        offset,
    })
}

/// Smallest integer common ratio for which a geometric progression of the
/// given size is guaranteed to have the highest possible complexity: one
/// past the ceiling of the Hadamard determinant bound `t^(t/2) / 2^(t-1)`
/// at `t = m - 1`.
pub fn geometric_ratio_threshold(m: usize) -> u64 {
    let t = (m - 1) as f64;
    let bound = t.powf(t / 2.0) / 2f64.powf(t - 1.0);
    bound.ceil() as u64 + 1
}

// ---------------------------------------------------------------------------
// Search internals
// ---------------------------------------------------------------------------

fn ceil_log2(m: usize) -> u32 {
    usize::BITS - (m - 1).leading_zeros()
}

/// Clear denominators: the complexity of a set is invariant under scaling,
/// so the search runs over integers.
fn scaled_integers(values: &[BigRational]) -> Vec<BigInt> {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

/// Depth-first search over `m × θ` binary matrices in row-major integer
/// order. Rows are packed with column 0 at the most significant bit, so the
/// search order matches enumeration of the matrix bits as one integer.
/// Returns the first row set whose span (with the implicit all-ones column)
/// contains the target.
fn find_certificate(target: &[BigInt], theta: u32) -> Option<Vec<u32>> {
    let mut rows = Vec::with_capacity(target.len());
    dfs_rows(target, theta, &mut rows, 0)
}

fn dfs_rows(target: &[BigInt], theta: u32, rows: &mut Vec<u32>, used: u128) -> Option<Vec<u32>> {
    if rows.len() == target.len() {
        if columns_useful(rows, theta) && target_in_span(rows, theta, target) {
            return Some(rows.clone());
        }
        return None;
    }
    for r in 0..(1u32 << theta) {
        if used & (1 << r) != 0 {
            continue; // duplicate rows force equal set elements
        }
        rows.push(r);
        if let Some(hit) = dfs_rows(target, theta, rows, used | (1 << r)) {
            return Some(hit);
        }
        rows.pop();
    }
    None
}

/// Reject matrices with a zero column, a duplicate of the all-ones column,
/// or two equal columns: any certificate among them reduces to one at θ-1,
/// which either was already ruled out or is impossible below the log bound.
fn columns_useful(rows: &[u32], theta: u32) -> bool {
    let full = (1u64 << rows.len()) - 1;
    let mut masks = Vec::with_capacity(theta as usize);
    for c in 0..theta {
        let bit = 1u32 << (theta - 1 - c);
        let mut mask = 0u64;
        for (j, &row) in rows.iter().enumerate() {
            if row & bit != 0 {
                mask |= 1 << j;
            }
        }
        if mask == 0 || mask == full || masks.contains(&mask) {
            return false;
        }
        masks.push(mask);
    }
    true
}

/// Exact consistency of `[𝟙 | F] · u = target` over ℚ, by fraction-free
/// elimination over ℤ.
fn target_in_span(rows: &[u32], theta: u32, target: &[BigInt]) -> bool {
    let m = rows.len();
    let width = theta as usize + 1;
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|j| {
            let mut row = Vec::with_capacity(width + 1);
            row.push(BigInt::one());
            for c in 0..theta {
                row.push(BigInt::from((rows[j] >> (theta - 1 - c)) & 1));
            }
            row.push(target[j].clone());
            row
        })
        .collect();

    let mut pivot_row = 0usize;
    for col in 0..width {
        let Some(pr) = (pivot_row..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pivot_row, pr);
        for r in pivot_row + 1..m {
            if a[r][col].is_zero() {
                continue;
            }
            let piv = a[pivot_row][col].clone();
            let fac = a[r][col].clone();
            for c2 in col..=width {
                a[r][c2] = &a[r][c2] * &piv - &a[pivot_row][c2] * &fac;
            }
        }
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    a[pivot_row..m].iter().all(|row| row[width].is_zero())
}

/// Solve `[𝟙 | F] · u = target` over ℚ (consistent by construction); free
/// variables are set to zero. Returns `(s, z₁, …, z_θ)`.
fn solve_span(rows: &[u32], theta: usize, target: &[BigRational]) -> Vec<BigRational> {
    let m = rows.len();
    let width = theta + 1;
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|j| {
            let mut row = Vec::with_capacity(width + 1);
            row.push(BigRational::one());
            for c in 0..theta {
                row.push(BigRational::from_integer(
                    ((rows[j] >> (theta - 1 - c)) & 1).into(),
                ));
            }
            row.push(target[j].clone());
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for col in 0..width {
        let Some(r) = (pr..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(pr, r);
        let inv = a[pr][col].clone();
        for c2 in col..=width {
            a[pr][c2] = &a[pr][c2] / &inv;
        }
        for r2 in 0..m {
            if r2 != pr && !a[r2][col].is_zero() {
                let f = a[r2][col].clone();
                for c2 in col..=width {
                    let delta = &f * &a[pr][c2];
                    a[r2][c2] = &a[r2][c2] - &delta;
                }
            }
        }
        pivots.push((pr, col));
        pr += 1;
    }
    let mut sol = vec![BigRational::zero(); width];
    for (r, c) in pivots {
        sol[c] = a[r][width].clone();
    }
    sol
}

/// Flip any column whose solved coefficient is negative, using
/// `z·b = z·𝟙 - z·(𝟙-b)`: the offset absorbs the (negative) step and the
/// column complements, leaving every step positive.
fn repair_steps(
    rows: &mut [u32],
    theta: usize,
    offset: &mut BigRational,
    steps: &mut [BigRational],
) {
    for i in 0..theta {
        if steps[i].is_negative() {
            let bit = 1u32 << (theta - 1 - i);
            for row in rows.iter_mut() {
                *row ^= bit;
            }
            *offset += steps[i].clone();
            steps[i] = -steps[i].clone();
        }
    }
}

fn decomposition_from_rows(
    a: &CoefficientSet,
    mut rows: Vec<u32>,
    theta: usize,
) -> Result<Decomposition, ComplexityError> {
    let sol = solve_span(&rows, theta, a.values());
    let mut offset = sol[0].clone();
    let mut steps = sol[1..].to_vec();
    repair_steps(&mut rows, theta, &mut offset, &mut steps);
    if steps.iter().any(|z| z.is_zero()) {
        return Err(ComplexityError::Internal(
            "zero step in minimal certificate",
        ));
    }
    let selectors = rows
        .iter()
        .map(|&row| {
            (0..theta)
                .filter(|&i| row & (1u32 << (theta - 1 - i)) != 0)
                .collect()
        })
        .collect();
    Decomposition {
        set: a.clone(),
        offset,
        steps,
        selectors,
    }
    .validate()
}

/// The always-valid certificate at `θ = m - 1`: offset `a₁`, steps the
/// consecutive differences, selector `j` picking the first `j` steps.
fn staircase(a: &CoefficientSet) -> Decomposition {
    let v = a.values();
    let steps: Vec<BigRational> = v.windows(2).map(|p| &p[1] - &p[0]).collect();
    let selectors = (0..v.len()).map(|j| (0..j).collect()).collect();
    Decomposition {
        set: a.clone(),
        offset: v[0].clone(),
        steps,
        selectors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(vals: &[i64]) -> CoefficientSet {
        CoefficientSet::from_integers(vals).unwrap()
    }

    #[test]
    fn fast_path_examples() {
        assert_eq!(complexity_fast_path(&set(&[0, 1, 2])), Some(2));
        assert_eq!(complexity_fast_path(&set(&[1, 2, 3, 4])), Some(2));
        assert_eq!(complexity_fast_path(&set(&[1, 2, 3, 5])), Some(3));
        assert_eq!(complexity_fast_path(&set(&[7, 10])), Some(1));
        assert_eq!(complexity_fast_path(&set(&[1, 2, 3, 4, 5])), None);
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity(&set(&[1, 2, 3, 4])).unwrap(), 2);
        assert_eq!(complexity(&set(&[1, 2, 3, 5])).unwrap(), 3);
        assert_eq!(complexity(&set(&[7, 10])).unwrap(), 1);
        assert_eq!(complexity(&set(&[42])).unwrap(), 1);
        let ap8: Vec<i64> = (0..8).map(|i| 3 + 5 * i).collect();
        assert_eq!(complexity_with_limit(&set(&ap8), 8).unwrap(), 3);
    }

    #[test]
    fn size_limit_is_enforced() {
        let big = set(&[1, 2, 4, 8, 16, 32, 64]);
        assert!(matches!(
            complexity(&big),
            Err(ComplexityError::SizeOverLimit { size: 7, limit: 6 })
        ));
        assert!(complexity_with_limit(&set(&[0, 1, 2, 4]), 4).is_ok());
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(complexity_bounds(4), (2, 3));
        assert_eq!(complexity_bounds(2), (1, 1));
        assert_eq!(complexity_bounds(8), (3, 7));
        assert_eq!(complexity_bounds(1), (1, 1));
    }

    #[test]
    fn almost_sidon_examples() {
        assert!(is_almost_sidon(&set(&[0, 1, 2])));
        assert!(is_almost_sidon(&set(&[0, 1, 3])));
        assert!(!is_almost_sidon(&set(&[1, 2, 3, 4])));
    }

    #[test]
    fn decompose_low_complexity_four_set() {
        let d = decompose(&set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(d.theta(), 2);
        assert_eq!(d.offset(), &BigRational::from_integer(1.into()));
        let steps: Vec<BigRational> = vec![
            BigRational::from_integer(2.into()),
            BigRational::from_integer(1.into()),
        ];
        assert_eq!(d.steps(), &steps[..]);
        assert_eq!(d.selectors(), &[vec![], vec![1], vec![0], vec![0, 1]]);
    }

    #[test]
    fn decompose_high_complexity_four_set() {
        let d = decompose(&set(&[1, 2, 3, 5])).unwrap();
        assert_eq!(d.theta(), 3);
        assert!(d.steps().iter().all(|z| z.is_positive()));
        // sumset coverage: every element is offset + a subset of steps
        for (v, sel) in d.set().values().iter().zip(d.selectors()) {
            let mut acc = d.offset().clone();
            for &i in sel {
                acc += &d.steps()[i];
            }
            assert_eq!(&acc, v);
        }
    }

    #[test]
    fn decompose_singleton() {
        let d = decompose(&set(&[9])).unwrap();
        assert_eq!(d.theta(), 1);
        assert_eq!(d.offset(), &BigRational::from_integer(9.into()));
        assert_eq!(d.selectors(), &[Vec::<usize>::new()]);
    }

    #[test]
    fn repair_flips_negative_steps() {
        // one column, solved as s=1, z=-1 for the set {0, 1}
        let mut rows = vec![0b1u32, 0b0];
        let mut offset = BigRational::from_integer(1.into());
        let mut steps = vec![-BigRational::one()];
        repair_steps(&mut rows, 1, &mut offset, &mut steps);
        assert_eq!(rows, vec![0b0, 0b1]);
        assert!(offset.is_zero());
        assert_eq!(steps, vec![BigRational::one()]);
    }

    #[test]
    fn geometric_progressions_hit_the_upper_bound() {
        assert_eq!(geometric_ratio_threshold(4), 3);
        assert_eq!(geometric_ratio_threshold(5), 3);
        let g4: Vec<i64> = (0..4).map(|i| 3i64.pow(i)).collect();
        assert_eq!(complexity(&set(&g4)).unwrap(), 3);
        let g5: Vec<i64> = (0..5).map(|i| 3i64.pow(i)).collect();
        assert_eq!(complexity(&set(&g5)).unwrap(), 4);
    }

    #[test]
    fn matrix_search_matches_fast_path_on_small_subsets() {
        // all subsets of {0..7} of size 2..=4
        let universe: Vec<i64> = (0..8).collect();
        let mut checked = 0;
        for mask in 1u32..(1 << 8) {
            let size = mask.count_ones();
            if !(2..=4).contains(&size) {
                continue;
            }
            let vals: Vec<i64> = universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            let s = set(&vals);
            assert_eq!(
                complexity(&s).unwrap(),
                complexity_fast_path(&s).unwrap(),
                "subset {vals:?}"
            );
            checked += 1;
        }
        assert_eq!(checked, 28 + 56 + 70);
    }

    #[test]
    fn split_weights_reconstructs_exactly() {
        let a = set(&[1, 2, 3, 4]);
        let d = decompose(&a).unwrap();
        let w: Vec<BigRational> = [4i64, 1, 2, 3]
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        let split = split_weights(&w, &d).unwrap();
        for j in 0..w.len() {
            let mut acc = split.offset.clone();
            for (level, scale) in split.levels.iter().zip(&split.scales) {
                acc += scale * BigRational::from_integer(level[j].into());
            }
            assert_eq!(acc, w[j]);
        }
    }

    #[test]
    fn split_weights_constant_vector_is_constant_levels() {
        let a = set(&[1, 2, 3, 5]);
        let d = decompose(&a).unwrap();
        let w = vec![BigRational::from_integer(3.into()); 6];
        let split = split_weights(&w, &d).unwrap();
        for level in &split.levels {
            assert!(level.iter().all(|&s| s == level[0]));
        }
    }

    #[test]
    fn split_weights_pm1_is_identity() {
        let a = set(&[-1, 1]);
        let d = decompose(&a).unwrap();
        assert_eq!(d.theta(), 1);
        let w: Vec<BigRational> = [1i64, -1, -1, 1]
            .iter()
            .map(|&v| BigRational::from_integer(v.into()))
            .collect();
        let split = split_weights(&w, &d).unwrap();
        assert_eq!(split.scales, vec![BigRational::one()]);
        assert!(split.offset.is_zero());
        let as_ratio: Vec<BigRational> = split.levels[0]
            .iter()
            .map(|&s| BigRational::from_integer(s.into()))
            .collect();
        assert_eq!(as_ratio, w);
    }

    #[test]
    fn split_weights_rejects_foreign_entries() {
        let a = set(&[1, 2]);
        let d = decompose(&a).unwrap();
        let w = vec![BigRational::from_integer(7.into())];
        match split_weights(&w, &d) {
            Err(ComplexityError::EntryOutsideSet { index: 0, value }) => {
                assert_eq!(value, "7")
            }
            other => panic!("expected entry error, got {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn complexity_is_shift_and_scale_invariant(
            vals in proptest::collection::btree_set(-50i64..50, 2..=4),
            shift in -20i64..20,
            scale in prop_oneof![-9i64..=-1, 1i64..=9],
        ) {
            let vals: Vec<i64> = vals.iter().copied().collect();
            let base = set(&vals);
            let shifted = set(&vals.iter().map(|v| v + shift).collect::<Vec<_>>());
            let scaled = set(&vals.iter().map(|v| v * scale).collect::<Vec<_>>());
            let c = complexity(&base).unwrap();
            prop_assert_eq!(c, complexity(&shifted).unwrap());
            prop_assert_eq!(c, complexity(&scaled).unwrap());
        }

        #[test]
        fn decompositions_cover_their_sets(
            vals in proptest::collection::btree_set(-100i64..100, 1..=5),
        ) {
            let vals: Vec<i64> = vals.iter().copied().collect();
            let s = set(&vals);
            let d = decompose(&s).unwrap();
            let c = if s.size() == 1 { 1 } else { complexity(&s).unwrap() };
            prop_assert_eq!(d.theta() as u32, c);
            prop_assert!(d.steps().iter().all(|z| z.is_positive()));
        }

        #[test]
        fn highest_complexity_sets_are_almost_sidon(
            vals in proptest::collection::btree_set(-60i64..60, 4..=4),
        ) {
            let vals: Vec<i64> = vals.iter().copied().collect();
            let s = set(&vals);
            if complexity(&s).unwrap() == 3 {
                prop_assert!(is_almost_sidon(&s));
            }
        }
    }
}
