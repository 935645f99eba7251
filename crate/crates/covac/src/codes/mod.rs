//! Binary covering-code algebra.
//!
//! Words of length `p ≤ 30` are bit-packed into `u32`s with coordinate `j`
//! stored at bit `p - 1 - j`, so integer order on packed words equals
//! lexicographic order on their bit strings (with `0 < 1`) and Hamming
//! distance is one XOR plus a popcount. All radius/norm searches are
//! exhaustive and exact; [`Limits`] guards against runaway enumeration and
//! exceeding a limit is an error, never a silent approximation.

mod families;
mod io;

pub use families::{
    family_code, family_pair, family_radius, hamming_7_4, joint_length9, repetition, CodeFamily,
    ALL_FAMILIES,
};
pub use io::{parse_code, read_code_file, render_code, write_code_file};

use num_rational::Rational64;
use std::fmt;
use thiserror::Error;

/// Hard cap on word length imposed by the `u32` packing.
pub const MAX_WORD_LEN: u32 = 30;

/// Enumeration budgets for exhaustive searches.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum word length for full-space scans (radius, norms).
    pub max_enumeration_len: u32,
    /// Maximum number of ball evaluations `2^(t·p) · |C|^t` allowed when
    /// computing a generalized covering radius.
    pub max_gcr_evaluations: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration_len: 24,
            max_gcr_evaluations: 1 << 30,
        }
    }
}

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("empty code has no radius")]
    EmptyCode,
    #[error("word length {len} exceeds the enumeration limit {limit}")]
    LengthOverLimit { len: u32, limit: u32 },
    #[error("word length {len} exceeds the representation cap {cap}")]
    LengthOverCap { len: u32, cap: u32 },
    #[error("word '{word}' does not have length {expected}")]
    BadWordLength { word: String, expected: u32 },
    #[error("generalized covering radius needs {needed} ball evaluations, over the limit {limit}")]
    GcrBudget { needed: u128, limit: u128 },
    #[error("generalized covering radius order must be at least 1")]
    ZeroOrder,
    #[error("coordinate index {index} out of range for length {len}")]
    CoordinateOutOfRange { index: u32, len: u32 },
    #[error("{side} operand has no codeword with symbol {symbol} at the shared coordinate")]
    MissingSymbol { side: &'static str, symbol: u8 },
    #[error("{side} operand's shared coordinate is not acceptable (norm {norm:?}, needs ≤ {bound})")]
    NotAcceptable {
        side: &'static str,
        norm: Option<u32>,
        bound: u32,
    },
    #[error("generator dimension {dim} exceeds the span-enumeration limit 20")]
    GeneratorTooLarge { dim: usize },
    #[error("generator span does not match the stated word set")]
    GeneratorMismatch,
    #[error("partition must be nonempty with positive parts")]
    BadPartition,
    #[error("center {center:?} is outside the weight array")]
    BadCenter { center: Vec<u32> },
    #[error("Manhattan balls of radius {radius} leave array cell {cell:?} uncovered")]
    UncoveredCell { radius: u32, cell: Vec<u32> },
    #[error("unknown code family '{0}'")]
    UnknownFamily(String),
    #[error("family {family} requires index in [{min}, {max}], got {index}")]
    BadFamilyIndex {
        family: &'static str,
        index: u32,
        min: u32,
        max: u32,
    },
    #[error("invalid code file: {0}")]
    Parse(String),
    #[error("composed radius {got} exceeds the guaranteed bound {bound}")]
    CompositionBound { got: u32, bound: u32 },
}

/// An asymptotic (redundancy, access) ratio pair attained by a protocol
/// family, with the family label that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasiblePair {
    /// Redundancy ratio ν = n/k, exact.
    pub redundancy: Rational64,
    /// Access ratio λ = ℓ/k, exact.
    pub access: Rational64,
    pub label: String,
}

impl FeasiblePair {
    pub fn new(redundancy: Rational64, access: Rational64, label: impl Into<String>) -> Self {
        let pair = FeasiblePair {
            redundancy,
            access,
            label: label.into(),
        };
        debug_assert!(pair.redundancy >= Rational64::new(1, 1));
        debug_assert!(pair.access > Rational64::new(0, 1));
        pair
    }
}

impl fmt::Display for FeasiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ({}, {})", self.label, self.redundancy, self.access)
    }
}

/// A set of distinct binary words of a common length, optionally linear with
/// a generator whose row span equals the word set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    length: u32,
    words: Vec<u32>,
    generator: Option<Vec<u32>>,
}

impl BinaryCode {
    /// Build a (not necessarily linear) code from explicit words.
    /// Duplicates collapse; words are kept sorted.
    pub fn from_words(length: u32, words: impl IntoIterator<Item = u32>) -> Result<Self, CodeError> {
        if length == 0 || length > MAX_WORD_LEN {
            return Err(CodeError::LengthOverCap {
                len: length,
                cap: MAX_WORD_LEN,
            });
        }
        let mask = mask(length);
        let mut words: Vec<u32> = words.into_iter().collect();
        for &w in &words {
            if w & !mask != 0 {
                return Err(CodeError::BadWordLength {
                    word: format!("{w:b}"),
                    expected: length,
                });
            }
        }
        words.sort_unstable();
        words.dedup();
        Ok(BinaryCode {
            length,
            words,
            generator: None,
        })
    }

    /// Build a linear code from generator rows; the word set is the GF(2)
    /// row span (dimension ≤ 20 enforced).
    pub fn linear(length: u32, rows: Vec<u32>) -> Result<Self, CodeError> {
        if rows.len() > 20 {
            return Err(CodeError::GeneratorTooLarge { dim: rows.len() });
        }
        let mut code = BinaryCode::from_words(length, span(&rows))?;
        let mask = mask(length);
        if rows.iter().any(|&r| r & !mask != 0) {
            return Err(CodeError::BadWordLength {
                word: String::new(),
                expected: length,
            });
        }
        code.generator = Some(rows);
        Ok(code)
    }

    /// Attach a generator to an explicit word list, verifying span equality.
    pub fn with_generator(length: u32, words: Vec<u32>, rows: Vec<u32>) -> Result<Self, CodeError> {
        let code = BinaryCode::from_words(length, words)?;
        let linear = BinaryCode::linear(length, rows.clone())?;
        if linear.words != code.words {
            return Err(CodeError::GeneratorMismatch);
        }
        Ok(BinaryCode {
            generator: Some(rows),
            ..code
        })
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn generator(&self) -> Option<&[u32]> {
        self.generator.as_deref()
    }

    pub fn contains(&self, word: u32) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    /// All-ones mask for this length.
    pub fn ones(&self) -> u32 {
        mask(self.length)
    }

    /// Render a packed word as its bit string.
    pub fn word_string(&self, word: u32) -> String {
        word_string(word, self.length)
    }

    /// True iff `c ∈ C ⇔ c ⊕ 1 ∈ C`.
    pub fn is_closed_under_complement(&self) -> bool {
        let ones = self.ones();
        self.words.iter().all(|&w| self.contains(w ^ ones))
    }

    /// One representative from each complement pair: the lexicographically
    /// smaller word is kept; words whose complement is absent are kept as-is.
    pub fn hat_subcode(&self) -> HatSubcode {
        let ones = self.ones();
        let words = self
            .words
            .iter()
            .copied()
            .filter(|&w| {
                let c = w ^ ones;
                !self.contains(c) || w < c
            })
            .collect();
        HatSubcode {
            parent: self.clone(),
            words,
        }
    }

    /// Nearest codeword to `v` and its Hamming distance; ties resolve to the
    /// lexicographically smallest codeword.
    pub fn nearest_codeword(&self, v: u32) -> Option<(u32, u32)> {
        let mut best: Option<(u32, u32)> = None;
        for &c in &self.words {
            let d = (v ^ c).count_ones();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((c, d));
                if d == 0 {
                    break;
                }
            }
        }
        best
    }

    /// Smallest `r` such that Hamming balls of radius `r` around the
    /// codewords cover the whole length-`p` space.
    pub fn covering_radius(&self) -> Result<u32, CodeError> {
        self.covering_radius_with(&Limits::default())
    }

    pub fn covering_radius_with(&self, limits: &Limits) -> Result<u32, CodeError> {
        if self.is_empty() {
            return Err(CodeError::EmptyCode);
        }
        self.check_enumerable(limits)?;
        let mut radius = 0u32;
        for v in 0..=self.ones() {
            let mut best = self.length;
            for &c in &self.words {
                let d = (v ^ c).count_ones();
                if d < best {
                    best = d;
                    if best <= radius {
                        break;
                    }
                }
            }
            if best > radius {
                radius = best;
            }
        }
        Ok(radius)
    }

    /// The norm `N⁽ⁱ⁾ = max_w Σ_a d_H(w, C_a⁽ⁱ⁾)`; `None` when some symbol
    /// never occurs at coordinate `i` (infinite norm).
    pub fn coordinate_norm(&self, i: u32) -> Result<Option<u32>, CodeError> {
        self.coordinate_norm_with(i, &Limits::default())
    }

    pub fn coordinate_norm_with(&self, i: u32, limits: &Limits) -> Result<Option<u32>, CodeError> {
        if self.is_empty() {
            return Err(CodeError::EmptyCode);
        }
        if i >= self.length {
            return Err(CodeError::CoordinateOutOfRange {
                index: i,
                len: self.length,
            });
        }
        self.check_enumerable(limits)?;
        let bit = 1u32 << (self.length - 1 - i);
        let zeros: Vec<u32> = self.words.iter().copied().filter(|w| w & bit == 0).collect();
        let ones: Vec<u32> = self.words.iter().copied().filter(|w| w & bit != 0).collect();
        if zeros.is_empty() || ones.is_empty() {
            return Ok(None);
        }
        let mut norm = 0u32;
        for v in 0..=self.ones() {
            let d0 = zeros.iter().map(|&c| (v ^ c).count_ones()).min().unwrap();
            let d1 = ones.iter().map(|&c| (v ^ c).count_ones()).min().unwrap();
            norm = norm.max(d0 + d1);
        }
        Ok(Some(norm))
    }

    /// A coordinate is acceptable when its norm is finite and at most
    /// `2(r+1) - 1` for the binary alphabet.
    pub fn is_acceptable(&self, i: u32) -> Result<bool, CodeError> {
        let r = self.covering_radius()?;
        let bound = 2 * (r + 1) - 1;
        Ok(matches!(self.coordinate_norm(i)?, Some(n) if n <= bound))
    }

    /// Normal iff some coordinate is acceptable.
    pub fn is_normal(&self) -> Result<bool, CodeError> {
        let r = self.covering_radius()?;
        let bound = 2 * (r + 1) - 1;
        for i in 0..self.length {
            if matches!(self.coordinate_norm(i)?, Some(n) if n <= bound) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Cartesian extension `C × F₂ⁱ`: length `p + i`, size `|C|·2ⁱ`, same
    /// covering radius; a generator gains `i` identity rows.
    pub fn cartesian_extend(&self, i: u32) -> Result<BinaryCode, CodeError> {
        if i == 0 {
            return Ok(self.clone());
        }
        let length = self.length + i;
        if length > MAX_WORD_LEN {
            return Err(CodeError::LengthOverCap {
                len: length,
                cap: MAX_WORD_LEN,
            });
        }
        let mut words = Vec::with_capacity(self.words.len() << i);
        for &w in &self.words {
            for tail in 0..(1u32 << i) {
                words.push((w << i) | tail);
            }
        }
        let generator = self.generator.as_ref().map(|rows| {
            let mut g: Vec<u32> = rows.iter().map(|&r| r << i).collect();
            g.extend((0..i).map(|j| 1u32 << (i - 1 - j)));
            g
        });
        let mut code = BinaryCode::from_words(length, words)?;
        code.generator = generator;
        Ok(code)
    }

    /// Generalized covering radius `R_t`: the smallest `s` such that any `t`
    /// words can be simultaneously approximated by `t` codewords whose
    /// disagreement supports union to at most `s` coordinates.
    ///
    /// Cost is `2^(t·p) · |C|^t` ball evaluations, checked against
    /// [`Limits::max_gcr_evaluations`] before starting. Linear codes are
    /// searched per coset representative, which does not change the result.
    pub fn generalized_covering_radius(&self, t: u32) -> Result<u32, CodeError> {
        self.generalized_covering_radius_with(t, &Limits::default())
    }

    pub fn generalized_covering_radius_with(
        &self,
        t: u32,
        limits: &Limits,
    ) -> Result<u32, CodeError> {
        if t == 0 {
            return Err(CodeError::ZeroOrder);
        }
        if self.is_empty() {
            return Err(CodeError::EmptyCode);
        }
        let needed = gcr_budget(self.length, self.size(), t)
            .ok_or(CodeError::GcrBudget {
                needed: u128::MAX,
                limit: limits.max_gcr_evaluations,
            })?;
        if needed > limits.max_gcr_evaluations {
            return Err(CodeError::GcrBudget {
                needed,
                limit: limits.max_gcr_evaluations,
            });
        }
        let reps = if self.generator.is_some() {
            self.coset_representatives()
        } else {
            (0..=self.ones()).collect()
        };
        let t = t as usize;
        let mut radius = 0u32;
        let mut idx = vec![0usize; t];
        let mut vs = vec![0u32; t];
        loop {
            for (slot, &i) in idx.iter().enumerate() {
                vs[slot] = reps[i];
            }
            let m = self.min_union_support(&vs, radius);
            if m > radius {
                radius = m;
            }
            // odometer over rep tuples
            let mut pos = t;
            loop {
                if pos == 0 {
                    return Ok(radius);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < reps.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// Smallest `|∪ supp(vᵢ ⊕ cᵢ)|` over codeword tuples, allowed to stop
    /// early once a value ≤ `cap` is found (the caller only raises a max).
    fn min_union_support(&self, vs: &[u32], cap: u32) -> u32 {
        fn descend(words: &[u32], vs: &[u32], level: usize, acc: u32, best: &mut u32, cap: u32) {
            if acc.count_ones() >= *best {
                return;
            }
            if level == vs.len() {
                *best = acc.count_ones();
                return;
            }
            for &c in words {
                descend(words, vs, level + 1, acc | (vs[level] ^ c), best, cap);
                if *best <= cap {
                    return;
                }
            }
        }
        let mut best = self.length + 1;
        descend(&self.words, vs, 0, 0, &mut best, cap);
        best
    }

    /// Lexicographically-smallest representative of each coset of a linear
    /// code in `F₂ᵖ`.
    fn coset_representatives(&self) -> Vec<u32> {
        let size = 1usize << self.length;
        let mut seen = vec![false; size];
        let mut reps = Vec::with_capacity(size / self.size().max(1));
        for v in 0..size as u32 {
            if !seen[v as usize] {
                reps.push(v);
                for &c in &self.words {
                    seen[(v ^ c) as usize] = true;
                }
            }
        }
        reps
    }

    fn check_enumerable(&self, limits: &Limits) -> Result<(), CodeError> {
        if self.length > limits.max_enumeration_len {
            return Err(CodeError::LengthOverLimit {
                len: self.length,
                limit: limits.max_enumeration_len,
            });
        }
        Ok(())
    }
}

// Display lists the words one per line, matching the file format body.
impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &w in &self.words {
            writeln!(f, "{}", self.word_string(w))?;
        }
        Ok(())
    }
}

/// One representative per complement pair of a parent code's words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatSubcode {
    parent: BinaryCode,
    words: Vec<u32>,
}

impl HatSubcode {
    pub fn parent(&self) -> &BinaryCode {
        &self.parent
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Index of a hat word in the stored (sorted) order.
    pub fn index_of(&self, word: u32) -> Option<usize> {
        self.words.binary_search(&word).ok()
    }

    pub fn contains(&self, word: u32) -> bool {
        self.index_of(word).is_some()
    }
}

/// Amalgamated direct sum: glue `a` and `b` on one shared coordinate (last
/// of `a`, first of `b`). Both shared coordinates must be acceptable and
/// carry both symbols. The result has length `p_a + p_b - 1` and covering
/// radius at most `r_a + r_b`, verified by brute force when the length is
/// enumerable.
pub fn amalgamated_direct_sum(a: &BinaryCode, b: &BinaryCode) -> Result<BinaryCode, CodeError> {
    amalgamated_direct_sum_with(a, b, &Limits::default())
}

pub fn amalgamated_direct_sum_with(
    a: &BinaryCode,
    b: &BinaryCode,
    limits: &Limits,
) -> Result<BinaryCode, CodeError> {
    let pa = a.length();
    let pb = b.length();
    let length = pa + pb - 1;
    if length > MAX_WORD_LEN {
        return Err(CodeError::LengthOverCap {
            len: length,
            cap: MAX_WORD_LEN,
        });
    }

    let a_last_bit = 1u32; // coordinate p_a - 1
    let b_first_bit = 1u32 << (pb - 1); // coordinate 0
    let (a0, a1): (Vec<u32>, Vec<u32>) = split_by_bit(a.words(), a_last_bit);
    let (b0, b1): (Vec<u32>, Vec<u32>) = split_by_bit(b.words(), b_first_bit);
    for (side, zeros, ones) in [("left", &a0, &a1), ("right", &b0, &b1)] {
        if zeros.is_empty() {
            return Err(CodeError::MissingSymbol { side, symbol: 0 });
        }
        if ones.is_empty() {
            return Err(CodeError::MissingSymbol { side, symbol: 1 });
        }
    }

    let ra = a.covering_radius_with(limits)?;
    let rb = b.covering_radius_with(limits)?;
    for (side, code, coord, r) in [("left", a, pa - 1, ra), ("right", b, 0, rb)] {
        let bound = 2 * (r + 1) - 1;
        let norm = code.coordinate_norm_with(coord, limits)?;
        if !matches!(norm, Some(n) if n <= bound) {
            return Err(CodeError::NotAcceptable { side, norm, bound });
        }
    }

    let mut words = Vec::new();
    for (av, bv) in [(&a0, &b0), (&a1, &b1)] {
        for &x in av.iter() {
            for &y in bv.iter() {
                words.push((x << (pb - 1)) | y);
            }
        }
    }
    let mut out = BinaryCode::from_words(length, words)?;

    // Generator: corner overlap of [P | I]-shaped left rows with
    // [I | P']-shaped right rows, attached only when the span checks out.
    if let (Some(ga), Some(gb)) = (a.generator(), b.generator()) {
        let left_ok = ga
            .iter()
            .enumerate()
            .all(|(j, &row)| (row & a_last_bit != 0) == (j == ga.len() - 1));
        let right_ok = gb
            .iter()
            .enumerate()
            .all(|(j, &row)| (row & b_first_bit != 0) == (j == 0));
        if left_ok && right_ok && ga.len() + gb.len() - 1 <= 20 {
            let mut rows: Vec<u32> = ga[..ga.len() - 1]
                .iter()
                .map(|&r| r << (pb - 1))
                .collect();
            rows.push((ga[ga.len() - 1] << (pb - 1)) | gb[0]);
            rows.extend_from_slice(&gb[1..]);
            if let Ok(lin) = BinaryCode::linear(length, rows.clone()) {
                if lin.words() == out.words() {
                    out.generator = Some(rows);
                }
            }
        }
    }

    if length <= limits.max_enumeration_len {
        let r = out.covering_radius_with(limits)?;
        if r > ra + rb {
            return Err(CodeError::CompositionBound {
                got: r,
                bound: ra + rb,
            });
        }
    }
    Ok(out)
}

/// A piecewise-constant code specification: a partition of the length, the
/// per-part weight profiles to include, and the Manhattan radius the
/// profiles must cover the weight array with.
#[derive(Debug, Clone)]
pub struct PiecewiseSpec {
    pub partition: Vec<u32>,
    pub centers: Vec<Vec<u32>>,
    pub radius: u32,
}

/// Build the piecewise-constant code of a spec: all words whose per-part
/// Hamming weights equal one of the centers. Fails if the Manhattan balls
/// around the centers do not cover the full weight array, naming an
/// uncovered cell; the resulting covering radius is brute-force checked
/// against `spec.radius` when the length is enumerable.
pub fn piecewise_constant_code(spec: &PiecewiseSpec) -> Result<BinaryCode, CodeError> {
    piecewise_constant_code_with(spec, &Limits::default())
}

pub fn piecewise_constant_code_with(
    spec: &PiecewiseSpec,
    limits: &Limits,
) -> Result<BinaryCode, CodeError> {
    if spec.partition.is_empty() || spec.partition.iter().any(|&p| p == 0) {
        return Err(CodeError::BadPartition);
    }
    let p: u32 = spec.partition.iter().sum();
    if p > MAX_WORD_LEN {
        return Err(CodeError::LengthOverCap {
            len: p,
            cap: MAX_WORD_LEN,
        });
    }
    let t = spec.partition.len();
    for c in &spec.centers {
        if c.len() != t || c.iter().zip(&spec.partition).any(|(&w, &pi)| w > pi) {
            return Err(CodeError::BadCenter { center: c.clone() });
        }
    }
    if spec.centers.is_empty() {
        return Err(CodeError::BadCenter { center: vec![] });
    }

    // Manhattan covering check over the whole weight array.
    let mut cell = vec![0u32; t];
    loop {
        let covered = spec.centers.iter().any(|c| {
            cell.iter()
                .zip(c)
                .map(|(&w, &cw)| w.abs_diff(cw))
                .sum::<u32>()
                <= spec.radius
        });
        if !covered {
            return Err(CodeError::UncoveredCell {
                radius: spec.radius,
                cell,
            });
        }
        let mut pos = t;
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            if cell[pos] < spec.partition[pos] {
                cell[pos] += 1;
                done = false;
                break;
            }
            cell[pos] = 0;
        }
        if done {
            break;
        }
    }

    // Expand each center profile into its full word set.
    let mut words: Vec<u32> = Vec::new();
    let shifts: Vec<u32> = {
        let mut acc = p;
        spec.partition
            .iter()
            .map(|&pi| {
                acc -= pi;
                acc
            })
            .collect()
    };
    for center in &spec.centers {
        let mut partial: Vec<u32> = vec![0];
        for (i, (&w, &pi)) in center.iter().zip(&spec.partition).enumerate() {
            let masks = weight_masks(pi, w);
            let mut next = Vec::with_capacity(partial.len() * masks.len());
            for &head in &partial {
                for &m in &masks {
                    next.push(head | (m << shifts[i]));
                }
            }
            partial = next;
        }
        words.extend(partial);
    }
    let code = BinaryCode::from_words(p, words)?;

    if p <= limits.max_enumeration_len {
        let r = code.covering_radius_with(limits)?;
        if r > spec.radius {
            return Err(CodeError::CompositionBound {
                got: r,
                bound: spec.radius,
            });
        }
    }
    Ok(code)
}

/// All masks of `width` bits with exactly `weight` ones.
fn weight_masks(width: u32, weight: u32) -> Vec<u32> {
    if weight == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let top = 1u32 << width;
    let mut v = (1u32 << weight) - 1;
    while v < top {
        out.push(v);
        // Gosper's hack: next mask with the same popcount.
        let c = v & v.wrapping_neg();
        let r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
        if c == 0 {
            break;
        }
    }
    out
}

fn split_by_bit(words: &[u32], bit: u32) -> (Vec<u32>, Vec<u32>) {
    words.iter().partition(|&&w| w & bit == 0)
}

fn mask(length: u32) -> u32 {
    if length >= 32 {
        u32::MAX
    } else {
        (1u32 << length) - 1
    }
}

fn word_string(word: u32, length: u32) -> String {
    format!("{word:0length$b}", length = length as usize)
}

/// GF(2) row span of a set of generator rows.
fn span(rows: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32];
    for &r in rows {
        let take: Vec<u32> = out.iter().map(|&w| w ^ r).collect();
        out.extend(take);
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn gcr_budget(p: u32, size: usize, t: u32) -> Option<u128> {
    let tp = (t as u64).checked_mul(p as u64)?;
    if tp >= 127 {
        return None;
    }
    let space = 1u128.checked_shl(tp as u32)?;
    let mut tuples = 1u128;
    for _ in 0..t {
        tuples = tuples.checked_mul(size as u128)?;
    }
    space.checked_mul(tuples)
}
