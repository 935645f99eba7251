//! Plain-text code files.
//!
//! A word-list file starts with `p=<len>` followed by one `0`/`1` string per
//! line. A generator file starts with `g=<rows>x<cols>` followed by the
//! generator rows; its word set is the row span. A word-list file may also
//! carry a trailing generator block, which is verified against the words.

use super::{BinaryCode, CodeError};
use std::fs;
use std::path::Path;

pub fn read_code_file(path: impl AsRef<Path>) -> Result<BinaryCode, CodeError> {
    let text = fs::read_to_string(path.as_ref())
        .map_err(|e| CodeError::Parse(format!("{}: {e}", path.as_ref().display())))?;
    parse_code(&text)
}

pub fn write_code_file(path: impl AsRef<Path>, code: &BinaryCode) -> Result<(), CodeError> {
    fs::write(path.as_ref(), render_code(code))
        .map_err(|e| CodeError::Parse(format!("{}: {e}", path.as_ref().display())))
}

pub fn parse_code(text: &str) -> Result<BinaryCode, CodeError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| CodeError::Parse("empty file".into()))?;

    if let Some(spec) = header.strip_prefix("g=") {
        let (rows, cols) = parse_dims(spec)?;
        let row_words = read_rows(&mut lines, rows, cols)?;
        return BinaryCode::linear(cols, row_words);
    }

    let p: u32 = header
        .strip_prefix("p=")
        .ok_or_else(|| CodeError::Parse(format!("expected 'p=<len>' or 'g=<r>x<c>', got '{header}'")))?
        .trim()
        .parse()
        .map_err(|_| CodeError::Parse(format!("bad length in '{header}'")))?;

    let mut words = Vec::new();
    let mut generator: Option<Vec<u32>> = None;
    while let Some(line) = lines.next() {
        if let Some(spec) = line.strip_prefix("g=") {
            let (rows, cols) = parse_dims(spec)?;
            if cols != p {
                return Err(CodeError::Parse(format!(
                    "generator width {cols} does not match p={p}"
                )));
            }
            generator = Some(read_rows(&mut lines, rows, cols)?);
            break;
        }
        words.push(parse_word(line, p)?);
    }

    match generator {
        Some(rows) => BinaryCode::with_generator(p, words, rows),
        None => BinaryCode::from_words(p, words),
    }
}

pub fn render_code(code: &BinaryCode) -> String {
    let mut out = format!("p={}\n", code.length());
    for &w in code.words() {
        out.push_str(&code.word_string(w));
        out.push('\n');
    }
    if let Some(rows) = code.generator() {
        out.push_str(&format!("g={}x{}\n", rows.len(), code.length()));
        for &r in rows {
            out.push_str(&code.word_string(r));
            out.push('\n');
        }
    }
    out
}

fn parse_dims(spec: &str) -> Result<(usize, u32), CodeError> {
    let (r, c) = spec
        .split_once('x')
        .ok_or_else(|| CodeError::Parse(format!("bad generator header 'g={spec}'")))?;
    let rows = r
        .trim()
        .parse()
        .map_err(|_| CodeError::Parse(format!("bad row count in 'g={spec}'")))?;
    let cols = c
        .trim()
        .parse()
        .map_err(|_| CodeError::Parse(format!("bad column count in 'g={spec}'")))?;
    Ok((rows, cols))
}

fn read_rows<'a>(
    lines: &mut impl Iterator<Item = &'a str>,
    rows: usize,
    cols: u32,
) -> Result<Vec<u32>, CodeError> {
    let mut out = Vec::with_capacity(rows);
    for _ in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| CodeError::Parse("generator rows truncated".into()))?;
        out.push(parse_word(line, cols)?);
    }
    Ok(out)
}

fn parse_word(line: &str, p: u32) -> Result<u32, CodeError> {
    if line.len() != p as usize || !line.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(CodeError::BadWordLength {
            word: line.to_string(),
            expected: p,
        });
    }
    Ok(u32::from_str_radix(line, 2).expect("validated bits"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::hamming_7_4;

    #[test]
    fn word_list_round_trip() {
        let code = BinaryCode::from_words(5, [0b00100, 0b110_11]).unwrap();
        let parsed = parse_code(&render_code(&code)).unwrap();
        assert_eq!(parsed, code);
    }

    #[test]
    fn generator_file_expands_span() {
        let text = "g=4x7\n1101000\n1010100\n0110010\n1110001\n";
        let parsed = parse_code(text).unwrap();
        assert_eq!(parsed.words(), hamming_7_4().words());
        assert!(parsed.generator().is_some());
    }

    #[test]
    fn word_list_with_generator_is_verified() {
        let good = render_code(&hamming_7_4());
        assert!(parse_code(&good).is_ok());

        let bad = "p=2\n00\n01\ng=1x2\n11\n";
        assert!(matches!(
            parse_code(bad),
            Err(CodeError::GeneratorMismatch)
        ));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_code("").is_err());
        assert!(parse_code("q=3\n").is_err());
        assert!(parse_code("p=3\n0012\n").is_err());
    }
}
