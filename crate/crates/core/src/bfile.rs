//! OEIS b-file reading, writing and comparison.
//!
//! A b-file has one `index value` pair per line, separated by whitespace.
//! Blank lines and lines starting with `#` are skipped; indices must be
//! consecutive.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub offset: i64,
    pub values: Vec<i128>,
}

pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut offset = None;
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::BFileParse {
            line: lineno + 1,
            reason,
        };
        let mut fields = line.split_whitespace();
        let (Some(i), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected two fields, got {line:?}")));
        };
        let index: i64 = i.parse().map_err(|_| err(format!("bad index {i:?}")))?;
        let value: i128 = v.parse().map_err(|_| err(format!("bad value {v:?}")))?;
        let start = *offset.get_or_insert(index);
        let expected = start + values.len() as i64;
        if index != expected {
            return Err(err(format!("index {index} follows {}", expected - 1)));
        }
        values.push(value);
    }
    Ok(BFile {
        offset: offset.unwrap_or(1),
        values,
    })
}

pub fn read_bfile(path: impl AsRef<Path>) -> Result<BFile> {
    let path = path.as_ref();
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_bfile(&text)
}

/// Writes `seq` as a b-file whose first index is `offset`.
pub fn write_bfile<W: Write>(mut out: W, seq: &[u64], offset: i64) -> Result<()> {
    for (i, v) in seq.iter().enumerate() {
        writeln!(out, "{} {}", offset + i as i64, v)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub expected: i128,
    pub found: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    /// Number of terms present in both.
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `seq` term by term with the b-file, the first term of `seq`
/// against the b-file's first index.
pub fn compare(seq: &[u64], bfile: &BFile) -> Comparison {
    let compared = seq.len().min(bfile.values.len());
    let first_mismatch = seq
        .iter()
        .zip(&bfile.values)
        .position(|(&a, &b)| i128::from(a) != b)
        .map(|i| Mismatch {
            index: bfile.offset + i as i64,
            expected: bfile.values[i],
            found: seq[i],
        });
    Comparison {
        compared,
        first_mismatch,
    }
}

pub fn compare_bfile(seq: &[u64], path: impl AsRef<Path>) -> Result<Comparison> {
    Ok(compare(seq, &read_bfile(path)?))
}
