//! Named covering-code families and their closed-form ratio pairs.
//!
//! Each family is an infinite sequence of codes indexed by `i`. The amalgam
//! families extend a fixed base code on its last coordinate with `0^{2i}` or
//! `1^{2i}` according to the last bit of each base word — exactly the word
//! lists the composition with a length-`2i+1` repetition code produces.

use super::{BinaryCode, CodeError, FeasiblePair, MAX_WORD_LEN};
use num_rational::Rational64;
use std::fmt;
use std::str::FromStr;

/// The five code families behind the systematic storage schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeFamily {
    /// [7,4] Hamming code amalgamated with a length-`2i+1` repetition code:
    /// length `7+2i`, 16 words, radius `1+i`, ĉ = 8.
    HamAmal,
    /// [7,4] Hamming code × F₂ⁱ: length `7+i`, radius 1, ĉ = `2^(i+3)`.
    HamExp,
    /// The full space F₂ⁱ: radius 0, ĉ = `2^(i-1)`; defined for `i ≥ 1`.
    HalfSpace,
    /// A 12-word nonlinear length-6 code amalgamated with repetition:
    /// length `6+2i`, radius `1+i`, ĉ = 6.
    NonlinAmal,
    /// An 8-word piecewise-constant length-5 code amalgamated with
    /// repetition: length `5+2i`, radius `1+i`, ĉ = 4.
    PiecewiseAmal,
}

pub const ALL_FAMILIES: [CodeFamily; 5] = [
    CodeFamily::HamAmal,
    CodeFamily::HamExp,
    CodeFamily::HalfSpace,
    CodeFamily::NonlinAmal,
    CodeFamily::PiecewiseAmal,
];

impl CodeFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CodeFamily::HamAmal => "HamAmal",
            CodeFamily::HamExp => "HamExp",
            CodeFamily::HalfSpace => "HalfSpace",
            CodeFamily::NonlinAmal => "NonlinAmal",
            CodeFamily::PiecewiseAmal => "PiecewiseAmal",
        }
    }

    /// Smallest valid index for the family.
    pub fn min_index(&self) -> u32 {
        match self {
            CodeFamily::HalfSpace => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CodeFamily {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, CodeError> {
        ALL_FAMILIES
            .iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| CodeError::UnknownFamily(s.to_string()))
    }
}

const HAMMING_ROWS: [&str; 4] = ["1101000", "1010100", "0110010", "1110001"];

const NONLIN_BASE: [&str; 12] = [
    "000100", "000010", "000001", "100111", "010111", "001111", "111011", "111101", "111110",
    "011000", "101000", "110000",
];

const PIECEWISE_BASE: [&str; 8] = [
    "00100", "00010", "00001", "00111", "11011", "11101", "11110", "11000",
];

const JOINT9_ROWS: [&str; 4] = ["111111111", "001001101", "000101011", "000010111"];

fn bits(s: &str) -> u32 {
    u32::from_str_radix(s, 2).expect("valid bit literal")
}

/// The [7,4] Hamming code in the systematic layout used throughout.
pub fn hamming_7_4() -> BinaryCode {
    BinaryCode::linear(7, HAMMING_ROWS.iter().map(|s| bits(s)).collect()).expect("hamming")
}

/// The repetition code {0ᵐ, 1ᵐ} with its one-row generator.
pub fn repetition(m: u32) -> BinaryCode {
    let ones = if m >= 32 { u32::MAX } else { (1u32 << m) - 1 };
    BinaryCode::linear(m, vec![ones]).expect("repetition")
}

/// The length-9 dimension-4 code whose second generalized covering radius
/// is 3, used by the joint-retrieval scheme.
pub fn joint_length9() -> BinaryCode {
    BinaryCode::linear(9, JOINT9_ROWS.iter().map(|s| bits(s)).collect()).expect("joint9")
}

/// Extend a word by `2i` copies of its own last bit.
fn stretch(word: u32, i: u32) -> u32 {
    let pad = if word & 1 == 1 { (1u32 << (2 * i)) - 1 } else { 0 };
    (word << (2 * i)) | pad
}

fn check_index(family: CodeFamily, i: u32, max: u32) -> Result<(), CodeError> {
    let min = family.min_index();
    if i < min || i > max {
        return Err(CodeError::BadFamilyIndex {
            family: family.name(),
            index: i,
            min,
            max,
        });
    }
    Ok(())
}

/// Construct the `i`-th member of a family, exactly as printed: generator
/// rows or word lists padded with `0^{2i}` / `1^{2i}`.
pub fn family_code(family: CodeFamily, i: u32) -> Result<BinaryCode, CodeError> {
    match family {
        CodeFamily::HamAmal => {
            check_index(family, i, (MAX_WORD_LEN - 7) / 2)?;
            let rows = HAMMING_ROWS.iter().map(|s| stretch(bits(s), i)).collect();
            BinaryCode::linear(7 + 2 * i, rows)
        }
        CodeFamily::HamExp => {
            // words: 16·2^i; cap the index so the word list stays small
            check_index(family, i, 13)?;
            hamming_7_4().cartesian_extend(i)
        }
        CodeFamily::HalfSpace => {
            check_index(family, i, 20)?;
            let rows = (0..i).map(|j| 1u32 << (i - 1 - j)).collect();
            BinaryCode::linear(i, rows)
        }
        CodeFamily::NonlinAmal => {
            check_index(family, i, (MAX_WORD_LEN - 6) / 2)?;
            let words = NONLIN_BASE.iter().map(|s| stretch(bits(s), i));
            BinaryCode::from_words(6 + 2 * i, words)
        }
        CodeFamily::PiecewiseAmal => {
            check_index(family, i, (MAX_WORD_LEN - 5) / 2)?;
            let words = PIECEWISE_BASE.iter().map(|s| stretch(bits(s), i));
            BinaryCode::from_words(5 + 2 * i, words)
        }
    }
}

/// Closed-form covering radius of the `i`-th family member.
pub fn family_radius(family: CodeFamily, i: u32) -> Result<u32, CodeError> {
    check_index(family, i, u32::MAX)?;
    Ok(match family {
        CodeFamily::HamAmal | CodeFamily::NonlinAmal | CodeFamily::PiecewiseAmal => 1 + i,
        CodeFamily::HamExp => 1,
        CodeFamily::HalfSpace => 0,
    })
}

/// Closed-form asymptotic (redundancy, access) pair of the `i`-th member.
pub fn family_pair(family: CodeFamily, i: u32) -> Result<FeasiblePair, CodeError> {
    let label = format!("{}_{i}", family.name());
    let i = i as i64;
    let pair = match family {
        CodeFamily::HamAmal => {
            check_index(family, i as u32, 1 << 20)?;
            (
                Rational64::new(15 + 2 * i, 7 + 2 * i),
                Rational64::new(2 + i, 7 + 2 * i),
            )
        }
        CodeFamily::HamExp => {
            check_index(family, i as u32, 55)?;
            (
                Rational64::new((1i64 << (i + 3)) + i + 7, i + 7),
                Rational64::new(2, i + 7),
            )
        }
        CodeFamily::HalfSpace => {
            check_index(family, i as u32, 60)?;
            (
                Rational64::new(i + (1i64 << (i - 1)), i),
                Rational64::new(1, i),
            )
        }
        CodeFamily::NonlinAmal => {
            check_index(family, i as u32, 1 << 20)?;
            (
                Rational64::new(12 + 2 * i, 6 + 2 * i),
                Rational64::new(2 + i, 6 + 2 * i),
            )
        }
        CodeFamily::PiecewiseAmal => {
            check_index(family, i as u32, 1 << 20)?;
            (
                Rational64::new(9 + 2 * i, 5 + 2 * i),
                Rational64::new(2 + i, 5 + 2 * i),
            )
        }
    };
    Ok(FeasiblePair::new(pair.0, pair.1, label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_examples() {
        let p = family_pair(CodeFamily::HamAmal, 4).unwrap();
        assert_eq!(p.redundancy, Rational64::new(23, 15));
        assert_eq!(p.access, Rational64::new(2, 5));

        let p = family_pair(CodeFamily::HalfSpace, 5).unwrap();
        assert_eq!(p.redundancy, Rational64::new(21, 5));
        assert_eq!(p.access, Rational64::new(1, 5));

        let p = family_pair(CodeFamily::PiecewiseAmal, 7).unwrap();
        assert_eq!(p.redundancy, Rational64::new(23, 19));
        assert_eq!(p.access, Rational64::new(9, 19));

        let p = family_pair(CodeFamily::HamExp, 1).unwrap();
        assert_eq!(p.redundancy, Rational64::new(3, 1));
        assert_eq!(p.access, Rational64::new(1, 4));
    }

    #[test]
    fn family_shapes() {
        for (family, base_len, size, chat) in [
            (CodeFamily::HamAmal, 7, 16, 8),
            (CodeFamily::NonlinAmal, 6, 12, 6),
            (CodeFamily::PiecewiseAmal, 5, 8, 4),
        ] {
            for i in 0..=3u32 {
                let c = family_code(family, i).unwrap();
                assert_eq!(c.length(), base_len + 2 * i);
                assert_eq!(c.size(), size);
                assert!(c.is_closed_under_complement(), "{family} i={i}");
                assert_eq!(c.hat_subcode().size(), chat);
            }
        }
        for i in 0..=3u32 {
            let c = family_code(CodeFamily::HamExp, i).unwrap();
            assert_eq!(c.length(), 7 + i);
            assert_eq!(c.size(), 16 << i);
            assert!(c.is_closed_under_complement());
            assert_eq!(c.hat_subcode().size(), 8 << i);
        }
        for i in 1..=4u32 {
            let c = family_code(CodeFamily::HalfSpace, i).unwrap();
            assert_eq!(c.size(), 1 << i);
            assert_eq!(c.hat_subcode().size(), 1 << (i - 1));
        }
    }

    #[test]
    fn family_radii_match_brute_force_small() {
        for family in [
            CodeFamily::HamAmal,
            CodeFamily::NonlinAmal,
            CodeFamily::PiecewiseAmal,
        ] {
            for i in 0..=2u32 {
                let c = family_code(family, i).unwrap();
                assert_eq!(
                    c.covering_radius().unwrap(),
                    family_radius(family, i).unwrap(),
                    "{family} i={i}"
                );
            }
        }
        for i in 0..=2u32 {
            let c = family_code(CodeFamily::HamExp, i).unwrap();
            assert_eq!(c.covering_radius().unwrap(), 1);
        }
        for i in 1..=3u32 {
            let c = family_code(CodeFamily::HalfSpace, i).unwrap();
            assert_eq!(c.covering_radius().unwrap(), 0);
        }
    }

    #[test]
    fn index_validation() {
        assert!(matches!(
            family_code(CodeFamily::HalfSpace, 0),
            Err(CodeError::BadFamilyIndex { .. })
        ));
        assert!(family_pair(CodeFamily::HalfSpace, 1).is_ok());
        assert!("NoSuchFamily".parse::<CodeFamily>().is_err());
        assert_eq!(
            "hamamal".parse::<CodeFamily>().unwrap(),
            CodeFamily::HamAmal
        );
    }

    #[test]
    fn joint_code_shape() {
        let c = joint_length9();
        assert_eq!(c.length(), 9);
        assert_eq!(c.size(), 16);
        assert!(c.is_closed_under_complement());
        assert_eq!(c.hat_subcode().size(), 8);
    }
}
