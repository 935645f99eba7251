//! Storage schemes and access planners.
//!
//! A [`Scheme`] fixes one block of the encoding: a covering code of length
//! `p`, its hat subcode of size `ĉ`, and the block encoding matrix
//! `M = (B | I)` over `{-1, 0, +1}`, where the columns of `B` are the hat
//! words in their ±1 representation (Boolean 0 ↦ +1, Boolean 1 ↦ -1) and
//! `I` is present exactly when the scheme is systematic. A data vector of
//! length `k = t·p` is encoded block by block, with one extra node holding
//! `𝟙·xᵀ` at the very end.
//!
//! Node layout: blocks are contiguous, coded nodes before systematic nodes
//! within a block, and the all-ones node last — so plans are portable
//! across backends. The all-ones node is always materialized, but planners
//! only count it when the query class actually needs it (its class-level
//! coefficient is nonzero), which keeps a ±1 query through the universal
//! planner byte-identical to the direct ±1 plan.
//!
//! Every planner returns an [`AccessPlan`] — server indices plus exact
//! rational decode coefficients — whose linear replay equals `w·xᵀ`
//! exactly. Zero coefficients are dropped before access is counted.

use crate::codes::{BinaryCode, CodeError, FeasiblePair, HatSubcode};
use crate::complexity::{split_weights, ComplexityError, Decomposition};
use crate::BigRational;
use num_rational::Rational64;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Complexity(#[from] ComplexityError),
    #[error("degenerate coefficient pair: a = b")]
    DegeneratePair,
    #[error("vector length {len} is not a multiple of the block length {p}")]
    DimensionMismatch { len: usize, p: usize },
    #[error("entry {index} has value {value}, not in the query alphabet")]
    OutOfAlphabet { index: usize, value: String },
    #[error("entry {index} is {value}, expected ±1")]
    NotPlusMinusOne { index: usize, value: i8 },
    #[error("scheme is non-systematic but the plan needs coordinate corrections")]
    MissingSystematicNodes,
    #[error("block tuple needs {got} corrections, over the stated generalized radius {bound}")]
    GcrRadiusExceeded { got: u32, bound: u32 },
    #[error("internal consistency: {0}")]
    Internal(&'static str),
}

/// One block of the encoding: covering code, hat subcode, and bookkeeping.
#[derive(Debug, Clone)]
pub struct Scheme {
    hat: HatSubcode,
    radius: u32,
    systematic: bool,
}

impl Scheme {
    /// Systematic scheme over a covering code: per-block parameters
    /// `(k, n, ℓ) = (p, p + ĉ, r + 1)`.
    pub fn build(code: BinaryCode) -> Result<Self, ProtocolError> {
        let radius = code.covering_radius()?;
        Ok(Scheme {
            hat: code.hat_subcode(),
            radius,
            systematic: true,
        })
    }

    /// Systematic scheme over a code whose covering radius is already
    /// known — for family members given in closed form whose length is
    /// past the enumeration limit. The radius is verified when the length
    /// permits; beyond that the caller vouches for it, and planning still
    /// fails loudly if any query lands farther from the code than stated.
    pub fn with_known_radius(code: BinaryCode, radius: u32) -> Result<Self, ProtocolError> {
        match code.covering_radius() {
            Ok(brute) if brute != radius => {
                return Err(ProtocolError::Internal("stated covering radius is wrong"));
            }
            Err(CodeError::EmptyCode) => return Err(CodeError::EmptyCode.into()),
            _ => {}
        }
        Ok(Scheme {
            hat: code.hat_subcode(),
            radius,
            systematic: true,
        })
    }

    /// Non-systematic scheme over the full space `F₂ⁱ` (radius 0, so plans
    /// never need coordinate corrections): per-block `(i, 2^(i-1), 1)`.
    pub fn nonsystematic_halfspace(i: u32) -> Result<Self, ProtocolError> {
        let code = crate::codes::family_code(crate::codes::CodeFamily::HalfSpace, i)?;
        Ok(Scheme {
            hat: code.hat_subcode(),
            radius: 0,
            systematic: false,
        })
    }

    pub fn code(&self) -> &BinaryCode {
        self.hat.parent()
    }

    pub fn hat(&self) -> &HatSubcode {
        &self.hat
    }

    pub fn block_len(&self) -> usize {
        self.code().length() as usize
    }

    pub fn hat_size(&self) -> usize {
        self.hat.size()
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn is_systematic(&self) -> bool {
        self.systematic
    }

    /// Per-block access bound for a single ±1 query: `r + 1`.
    pub fn access_bound(&self) -> usize {
        self.radius as usize + 1
    }

    /// Per-block `(k, n, ℓ)`.
    pub fn per_block(&self) -> (u64, u64, u64) {
        let p = self.block_len() as u64;
        let coded = self.hat_size() as u64;
        let n = coded + if self.systematic { p } else { 0 };
        (p, n, self.radius as u64 + 1)
    }

    /// Asymptotic (redundancy, access) pair of the underlying block.
    pub fn asymptotic_pair(&self, label: impl Into<String>) -> FeasiblePair {
        let (k, n, l) = self.per_block();
        FeasiblePair::new(
            Rational64::new(n as i64, k as i64),
            Rational64::new(l as i64, k as i64),
            label,
        )
    }

    /// Nodes in one block.
    pub fn block_width(&self) -> usize {
        self.hat_size() + if self.systematic { self.block_len() } else { 0 }
    }

    /// Total nodes for `t` blocks, including the all-ones node.
    pub fn node_count(&self, t: usize) -> usize {
        t * self.block_width() + 1
    }

    pub fn coded_node(&self, block: usize, hat_index: usize) -> usize {
        block * self.block_width() + hat_index
    }

    /// Node holding raw coordinate `j` of a block (systematic schemes only).
    pub fn systematic_node(&self, block: usize, coord: usize) -> usize {
        debug_assert!(self.systematic);
        block * self.block_width() + self.hat_size() + coord
    }

    pub fn all_ones_node(&self, t: usize) -> usize {
        t * self.block_width()
    }

    /// The block encoding matrix `M = (B | I)` over `{-1, 0, +1}`, rows
    /// indexed by block coordinate.
    pub fn encoding_matrix(&self) -> Vec<Vec<i8>> {
        let p = self.block_len();
        let mut m = vec![vec![0i8; self.block_width()]; p];
        for (h, &word) in self.hat.words().iter().enumerate() {
            for (j, row) in m.iter_mut().enumerate() {
                row[h] = pm1(word, p, j);
            }
        }
        if self.systematic {
            let chat = self.hat_size();
            for (j, row) in m.iter_mut().enumerate() {
                row[chat + j] = 1;
            }
        }
        m
    }

    /// Number of blocks for a query of length `len`.
    fn blocks_for(&self, len: usize) -> Result<usize, ProtocolError> {
        let p = self.block_len();
        if len == 0 || len % p != 0 {
            return Err(ProtocolError::DimensionMismatch { len, p });
        }
        Ok(len / p)
    }
}

/// ±1 value of coordinate `j` of a packed word: Boolean 0 ↦ +1, 1 ↦ -1.
fn pm1(word: u32, p: usize, j: usize) -> i8 {
    if word & (1u32 << (p - 1 - j)) != 0 {
        -1
    } else {
        1
    }
}

/// Pack a ±1 vector into the Boolean word it represents.
fn pack_pm1(w: &[i8]) -> Result<u32, ProtocolError> {
    let p = w.len();
    let mut bits = 0u32;
    for (j, &s) in w.iter().enumerate() {
        match s {
            1 => {}
            -1 => bits |= 1u32 << (p - 1 - j),
            other => return Err(ProtocolError::NotPlusMinusOne { index: j, value: other }),
        }
    }
    Ok(bits)
}

/// Server indices plus decode coefficients; replaying the plan against the
/// stored symbols yields the query value exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccessPlan {
    server_ids: Vec<usize>,
    coefficients: Vec<BigRational>,
    expected_access: usize,
}

impl AccessPlan {
    /// Build from accumulated per-node coefficients, dropping zeros. The
    /// resulting access count must respect the advertised bound.
    fn from_map(
        map: BTreeMap<usize, BigRational>,
        expected_access: usize,
    ) -> Result<Self, ProtocolError> {
        let mut server_ids = Vec::new();
        let mut coefficients = Vec::new();
        for (id, mu) in map {
            if !mu.is_zero() {
                server_ids.push(id);
                coefficients.push(mu);
            }
        }
        if server_ids.len() > expected_access {
            return Err(ProtocolError::Internal("plan exceeds its access bound"));
        }
        Ok(AccessPlan {
            server_ids,
            coefficients,
            expected_access,
        })
    }

    pub fn server_ids(&self) -> &[usize] {
        &self.server_ids
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn access(&self) -> usize {
        self.server_ids.len()
    }

    /// The bound advertised for the plan's query class.
    pub fn expected_access(&self) -> usize {
        self.expected_access
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.server_ids.iter().copied().zip(&self.coefficients)
    }

    /// Assemble a plan directly from node coefficients, bypassing the
    /// planners. Test support only: negative controls need plans a planner
    /// would never emit.
    #[cfg(test)]
    pub(crate) fn from_parts_for_tests(
        map: BTreeMap<usize, BigRational>,
        expected_access: usize,
    ) -> AccessPlan {
        let (server_ids, coefficients) = map.into_iter().unzip();
        AccessPlan {
            server_ids,
            coefficients,
            expected_access,
        }
    }
}

/// Accumulate one ±1 block plan into the coefficient map, scaled by `scale`.
/// The nearest codeword (lexicographically smallest on ties) is read through
/// the hat subcode: its own node with `+scale` if present, its complement's
/// node with `-scale` otherwise; each disagreeing coordinate contributes
/// `2·wⱼ·scale` on the raw node.
fn accumulate_pm1_block(
    scheme: &Scheme,
    w: &[i8],
    block: usize,
    scale: &BigRational,
    map: &mut BTreeMap<usize, BigRational>,
) -> Result<(), ProtocolError> {
    let bits = pack_pm1(w)?;
    let (c, dist) = scheme
        .code()
        .nearest_codeword(bits)
        .ok_or(ProtocolError::Internal("empty code in scheme"))?;
    if dist > scheme.radius() {
        return Err(ProtocolError::Internal("codeword outside covering radius"));
    }
    let (node, sign) = match scheme.hat().index_of(c) {
        Some(h) => (scheme.coded_node(block, h), 1i8),
        None => {
            let comp = c ^ scheme.code().ones();
            let h = scheme
                .hat()
                .index_of(comp)
                .ok_or(ProtocolError::Internal("hat subcode misses complement pair"))?;
            (scheme.coded_node(block, h), -1i8)
        }
    };
    add_to(map, node, scale * BigRational::from_integer(sign.into()));

    let diff = bits ^ c;
    if diff != 0 && !scheme.is_systematic() {
        return Err(ProtocolError::MissingSystematicNodes);
    }
    let p = scheme.block_len();
    for j in 0..p {
        if diff & (1u32 << (p - 1 - j)) != 0 {
            let mu = scale * BigRational::from_integer((2 * w[j]).into());
            add_to(map, scheme.systematic_node(block, j), mu);
        }
    }
    Ok(())
}

fn add_to(map: &mut BTreeMap<usize, BigRational>, node: usize, mu: BigRational) {
    let slot = map.entry(node).or_insert_with(BigRational::zero);
    *slot += mu;
}

/// Plan one ±1 block query: at most `r + 1` nodes.
pub fn plan_pm1(scheme: &Scheme, w: &[i8], block: usize) -> Result<AccessPlan, ProtocolError> {
    if w.len() != scheme.block_len() {
        return Err(ProtocolError::DimensionMismatch {
            len: w.len(),
            p: scheme.block_len(),
        });
    }
    let mut map = BTreeMap::new();
    accumulate_pm1_block(scheme, w, block, &BigRational::one(), &mut map)?;
    AccessPlan::from_map(map, scheme.access_bound())
}

/// Plan a two-valued query `w ∈ {a, b}^k`: the ±1 plan of the image vector
/// scaled by `(a-b)/2`, plus `(a+b)/2` on the all-ones node. At most
/// `t(r+1) + 1` nodes, one fewer when `a = -b`.
pub fn plan_two_valued(
    scheme: &Scheme,
    w: &[BigRational],
    a: &BigRational,
    b: &BigRational,
) -> Result<AccessPlan, ProtocolError> {
    if a == b {
        return Err(ProtocolError::DegeneratePair);
    }
    let t = scheme.blocks_for(w.len())?;
    let p = scheme.block_len();
    let mut image = vec![0i8; w.len()];
    for (j, v) in w.iter().enumerate() {
        image[j] = if v == a {
            1
        } else if v == b {
            -1
        } else {
            return Err(ProtocolError::OutOfAlphabet {
                index: j,
                value: crate::render_ratio(v),
            });
        };
    }
    let two = BigRational::from_integer(2.into());
    let scale = (a - b) / &two;
    let ones_mu = (a + b) / &two;
    let mut map = BTreeMap::new();
    for block in 0..t {
        accumulate_pm1_block(scheme, &image[block * p..(block + 1) * p], block, &scale, &mut map)?;
    }
    add_to(&mut map, scheme.all_ones_node(t), ones_mu.clone());
    let bound = t * scheme.access_bound() + usize::from(!ones_mu.is_zero());
    AccessPlan::from_map(map, bound)
}

/// Plan a query with coefficients in an arbitrary finite set, through its
/// decomposition: one scaled ±1 plan per level and block, merged, plus the
/// decomposition offset on the all-ones node. At most `θ·(r+1)·t` nodes,
/// plus one when the offset is nonzero.
pub fn plan_universal(
    scheme: &Scheme,
    w: &[BigRational],
    d: &Decomposition,
) -> Result<AccessPlan, ProtocolError> {
    let t = scheme.blocks_for(w.len())?;
    let p = scheme.block_len();
    let split = split_weights(w, d)?;
    let mut map = BTreeMap::new();
    for (level, scale) in split.levels.iter().zip(&split.scales) {
        for block in 0..t {
            accumulate_pm1_block(scheme, &level[block * p..(block + 1) * p], block, scale, &mut map)?;
        }
    }
    add_to(&mut map, scheme.all_ones_node(t), split.offset.clone());
    let bound =
        split.levels.len() * scheme.access_bound() * t + usize::from(!split.offset.is_zero());
    AccessPlan::from_map(map, bound)
}

/// Plan a multi-valued query by retrieving all `θ` levels of each block
/// jointly: per block, `θ` coded nodes for the codeword tuple minimizing the
/// union of disagreement supports (ties broken lexicographically over the
/// tuple), plus at most `R_θ` raw nodes. Total at most `t(R_θ + θ)`, plus
/// one for a nonzero offset.
pub fn plan_gcr(
    scheme: &Scheme,
    w: &[BigRational],
    d: &Decomposition,
    r_theta: u32,
) -> Result<AccessPlan, ProtocolError> {
    let t = scheme.blocks_for(w.len())?;
    let p = scheme.block_len();
    let split = split_weights(w, d)?;
    let theta = split.levels.len();
    let mut map = BTreeMap::new();
    for block in 0..t {
        let vs: Vec<u32> = split
            .levels
            .iter()
            .map(|level| pack_pm1(&level[block * p..(block + 1) * p]))
            .collect::<Result<_, _>>()?;
        let tuple = best_codeword_tuple(scheme.code(), &vs);
        let union: u32 = vs
            .iter()
            .zip(&tuple)
            .fold(0u32, |acc, (&v, &c)| acc | (v ^ c));
        if union.count_ones() > r_theta {
            return Err(ProtocolError::GcrRadiusExceeded {
                got: union.count_ones(),
                bound: r_theta,
            });
        }
        if union != 0 && !scheme.is_systematic() {
            return Err(ProtocolError::MissingSystematicNodes);
        }
        for ((level, scale), &c) in split.levels.iter().zip(&split.scales).zip(&tuple) {
            let v = pack_pm1(&level[block * p..(block + 1) * p])?;
            let (node, sign) = match scheme.hat().index_of(c) {
                Some(h) => (scheme.coded_node(block, h), 1i8),
                None => {
                    let comp = c ^ scheme.code().ones();
                    let h = scheme
                        .hat()
                        .index_of(comp)
                        .ok_or(ProtocolError::Internal("hat subcode misses complement pair"))?;
                    (scheme.coded_node(block, h), -1i8)
                }
            };
            add_to(&mut map, node, scale * BigRational::from_integer(sign.into()));
            let diff = v ^ c;
            for j in 0..p {
                if diff & (1u32 << (p - 1 - j)) != 0 {
                    let wj = level[block * p + j];
                    let mu = scale * BigRational::from_integer((2 * wj).into());
                    add_to(&mut map, scheme.systematic_node(block, j), mu);
                }
            }
        }
    }
    add_to(&mut map, scheme.all_ones_node(t), split.offset.clone());
    let bound = t * (r_theta as usize + theta) + usize::from(!split.offset.is_zero());
    AccessPlan::from_map(map, bound)
}

/// Lexicographically-first codeword tuple minimizing `|∪ supp(vᵢ ⊕ cᵢ)|`.
fn best_codeword_tuple(code: &BinaryCode, vs: &[u32]) -> Vec<u32> {
    fn descend(
        words: &[u32],
        vs: &[u32],
        level: usize,
        acc: u32,
        picked: &mut Vec<u32>,
        best: &mut (u32, Vec<u32>),
    ) {
        if acc.count_ones() >= best.0 {
            return;
        }
        if level == vs.len() {
            *best = (acc.count_ones(), picked.clone());
            return;
        }
        for &c in words {
            picked.push(c);
            descend(words, vs, level + 1, acc | (vs[level] ^ c), picked, best);
            picked.pop();
        }
    }
    let mut best = (u32::MAX, Vec::new());
    let mut picked = Vec::with_capacity(vs.len());
    descend(code.words(), vs, 0, 0, &mut picked, &mut best);
    best.1
}

/// Signs and index set on which all levels agree: `sᵢ·wⱼ⁽ⁱ⁾ = 1` for every
/// level `i` and index `j` in the set, with the set at least `k/2^θ` large.
/// Computed by repeated halving, keeping the larger side each time (ties
/// take the `+1` side).
pub fn find_agreement(levels: &[Vec<i8>]) -> (Vec<i8>, Vec<usize>) {
    let k = levels.first().map_or(0, Vec::len);
    let mut agreement: Vec<usize> = (0..k).collect();
    let mut signs = Vec::with_capacity(levels.len());
    for level in levels {
        let (plus, minus): (Vec<usize>, Vec<usize>) =
            agreement.iter().partition(|&&j| level[j] == 1);
        if plus.len() >= minus.len() {
            signs.push(1);
            agreement = plus;
        } else {
            signs.push(-1);
            agreement = minus;
        }
    }
    (signs, agreement)
}

/// Plan a multi-valued query against uncoded-plus-all-ones storage
/// (`n = k + 1`): the all-ones node substitutes for the whole agreement
/// set, so at most `k - ⌈k/2^θ⌉ + 1` nodes are touched.
pub fn plan_joint_trivial(
    w: &[BigRational],
    d: &Decomposition,
) -> Result<AccessPlan, ProtocolError> {
    let k = w.len();
    if k == 0 {
        return Err(ProtocolError::DimensionMismatch { len: 0, p: 1 });
    }
    let split = split_weights(w, d)?;
    let (signs, agreement) = find_agreement(&split.levels);
    let theta = split.levels.len();

    let mut in_agreement = vec![false; k];
    for &j in &agreement {
        in_agreement[j] = true;
    }
    let mut map = BTreeMap::new();
    for j in 0..k {
        if in_agreement[j] {
            continue;
        }
        let mut mu = BigRational::zero();
        for ((level, scale), &s) in split.levels.iter().zip(&split.scales).zip(&signs) {
            mu += scale * BigRational::from_integer((level[j] - s).into());
        }
        add_to(&mut map, j, mu);
    }
    let mut ones_mu = split.offset.clone();
    for (scale, &s) in split.scales.iter().zip(&signs) {
        ones_mu += scale * BigRational::from_integer(s.into());
    }
    add_to(&mut map, k, ones_mu);

    let guaranteed = if theta >= usize::BITS as usize {
        1
    } else {
        k.div_ceil(1 << theta)
    };
    let bound = k - guaranteed + 1;
    AccessPlan::from_map(map, bound)
}

/// Interleave two block protocols `u : v`; the combined ratios are the
/// weighted mediants of the originals.
pub fn combine_protocols(
    p1: (u64, u64, u64),
    p2: (u64, u64, u64),
    u: u64,
    v: u64,
) -> FeasiblePair {
    let (k1, n1, l1) = p1;
    let (k2, n2, l2) = p2;
    let k = (u * k1 + v * k2) as i64;
    FeasiblePair::new(
        Rational64::new((u * n1 + v * n2) as i64, k),
        Rational64::new((u * l1 + v * l2) as i64, k),
        format!("mix_{u}_{v}"),
    )
}
