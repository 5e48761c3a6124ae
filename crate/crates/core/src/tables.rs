//! Rendering of the standard tables as CSV or aligned text.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::experiments::first_primitives_by_rank;
use crate::greedy::{GreedyTable, Part};
use crate::matrix::ColumnSieve;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    TernaryParts,
    TernaryPrimitives,
    Length3Parts,
    Length3Primitives,
    Length4Matrix,
    Length4Primitives,
    FirstOfRank,
}

impl TableName {
    pub const ALL: [TableName; 7] = [
        TableName::TernaryParts,
        TableName::TernaryPrimitives,
        TableName::Length3Parts,
        TableName::Length3Primitives,
        TableName::Length4Matrix,
        TableName::Length4Primitives,
        TableName::FirstOfRank,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TableName::TernaryParts => "ternary_parts",
            TableName::TernaryPrimitives => "ternary_primitives",
            TableName::Length3Parts => "d3_parts",
            TableName::Length3Primitives => "d3_primitives",
            TableName::Length4Matrix => "d4_matrix",
            TableName::Length4Primitives => "d4_primitives",
            TableName::FirstOfRank => "first_of_rank",
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TableName::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown table {s:?}")))
    }
}

/// Size knobs. `None` picks the published size.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TableParams {
    /// Parts, primitives per rank, or matrix columns.
    pub count: Option<usize>,
    /// Largest integer the underlying partition may be built to. When the
    /// requested count does not fit, the call fails.
    pub bound: Option<u64>,
    /// `first_of_rank` only: largest part length.
    pub max_length: Option<usize>,
    /// `first_of_rank` only: search bound for leaders.
    pub search_bound: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let line = |cells: &[String]| {
            cells
                .iter()
                .map(|c| {
                    if c.contains([',', '"', '\n']) {
                        format!("\"{}\"", c.replace('"', "\"\""))
                    } else {
                        c.clone()
                    }
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let ncols = self
            .rows
            .iter()
            .map(Vec::len)
            .chain([self.header.len()])
            .max()
            .unwrap_or(0);
        let mut widths = vec![0; ncols];
        for row in self.rows.iter().chain([&self.header]) {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for row in [&self.header].into_iter().chain(&self.rows) {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// `(1, 2, 3)`, with a trailing comma for singletons: `(6,)`.
pub fn format_part(part: &Part) -> String {
    let elems: Vec<String> = part.elements().map(|e| e.to_string()).collect();
    if elems.len() == 1 {
        format!("({},)", elems[0])
    } else {
        format!("({})", elems.join(", "))
    }
}

const GROWTH_START: u64 = 256;

/// Builds successively larger tables until `enough` is satisfied or the
/// bound is hit.
fn grow<T>(
    length: usize,
    bound: Option<u64>,
    mut attempt: impl FnMut(&GreedyTable) -> Option<T>,
) -> Result<T> {
    let mut n = GROWTH_START;
    loop {
        let capped = bound.map_or(n, |b| n.min(b));
        let table = GreedyTable::build(length, capped)?;
        if let Some(found) = attempt(&table) {
            return Ok(found);
        }
        if bound.is_some_and(|b| capped >= b) {
            return Err(Error::InvalidArgument(format!(
                "bound {capped} is too small for the requested table"
            )));
        }
        n *= 4;
    }
}

/// The first `count` parts of the length-`length` partition.
pub fn first_parts(length: usize, count: usize, bound: Option<u64>) -> Result<Vec<Part>> {
    grow(length, bound, |t| {
        // Sizes are final only for leaders within the certified bound.
        let parts: Vec<Part> = t
            .parts()
            .take_while(|p| p.leader <= t.certified_bound())
            .take(count)
            .collect();
        (parts.len() == count).then_some(parts)
    })
}

/// The first `count` primitives, of a given certified rank if requested.
pub fn first_primitives(
    length: usize,
    rank: Option<usize>,
    count: usize,
    bound: Option<u64>,
) -> Result<Vec<u64>> {
    grow(length, bound, |t| {
        let found: Vec<u64> = t.primitives(rank).take(count).collect();
        (found.len() == count).then_some(found)
    })
}

/// First `count` nonzero columns of the column sieve.
pub fn first_columns(length: usize, count: usize) -> Result<Vec<Vec<u64>>> {
    let mut n = 64;
    loop {
        let sieve = ColumnSieve::build(length, n)?;
        let cols: Vec<Vec<u64>> = sieve
            .nonzero_columns()
            .take(count)
            .map(<[u64]>::to_vec)
            .collect();
        if cols.len() == count {
            return Ok(cols);
        }
        n *= 4;
    }
}

fn parts_table(parts: &[Part]) -> Table {
    Table {
        header: vec!["part".into(), "elements".into()],
        rows: parts
            .iter()
            .enumerate()
            .map(|(i, p)| vec![(i + 1).to_string(), format_part(p)])
            .collect(),
    }
}

fn ranked_table(blocks: &[(usize, Vec<u64>)]) -> Table {
    let mut rows = Vec::new();
    for (rank, list) in blocks {
        for (i, m) in list.iter().enumerate() {
            rows.push(vec![rank.to_string(), (i + 1).to_string(), m.to_string()]);
        }
    }
    Table {
        header: vec!["rank".into(), "index".into(), "primitive".into()],
        rows,
    }
}

pub fn table_emit(name: TableName, params: &TableParams) -> Result<Table> {
    let count = |default: usize| params.count.unwrap_or(default);
    match name {
        TableName::TernaryParts => Ok(parts_table(&first_parts(2, count(8), params.bound)?)),
        TableName::Length3Parts => Ok(parts_table(&first_parts(3, count(60), params.bound)?)),
        TableName::TernaryPrimitives => {
            let prims = first_primitives(2, None, count(20), params.bound)?;
            Ok(Table {
                header: vec!["index".into(), "primitive".into()],
                rows: prims
                    .iter()
                    .enumerate()
                    .map(|(i, m)| vec![(i + 1).to_string(), m.to_string()])
                    .collect(),
            })
        }
        TableName::Length3Primitives => {
            let (a, b) = params.count.map_or((60, 30), |c| (c, c));
            Ok(ranked_table(&[
                (3, first_primitives(3, Some(3), a, params.bound)?),
                (1, first_primitives(3, Some(1), b, params.bound)?),
            ]))
        }
        TableName::Length4Primitives => {
            let (a, b, c) = params.count.map_or((240, 15, 30), |c| (c, c, c));
            Ok(ranked_table(&[
                (4, first_primitives(4, Some(4), a, params.bound)?),
                (1, first_primitives(4, Some(1), b, params.bound)?),
                (2, first_primitives(4, Some(2), c, params.bound)?),
            ]))
        }
        TableName::Length4Matrix => {
            let cols = first_columns(4, count(15))?;
            let mut header = vec!["row".to_string()];
            header.extend((1..=cols.len()).map(|c| c.to_string()));
            let rows = (0..4)
                .map(|r| {
                    let mut row = vec![(r + 1).to_string()];
                    row.extend(cols.iter().map(|c| c[r].to_string()));
                    row
                })
                .collect();
            Ok(Table { header, rows })
        }
        TableName::FirstOfRank => {
            let max_length = params.max_length.unwrap_or(16);
            let bound = params.search_bound.unwrap_or(10_000);
            if max_length < 2 {
                return Err(Error::InvalidArgument(
                    "max_length must be at least 2".into(),
                ));
            }
            let mut header = vec!["length".to_string()];
            header.extend((1..=max_length).map(|r| r.to_string()));
            let mut rows = Vec::new();
            for d in 2..=max_length {
                let firsts = first_primitives_by_rank(d, bound)?;
                let mut row = vec![d.to_string()];
                row.extend((1..=max_length).map(|r| match firsts.get(r - 1) {
                    Some(Some(m)) => m.to_string(),
                    Some(None) => "0".to_string(),
                    None => String::new(),
                }));
                rows.push(row);
            }
            Ok(Table { header, rows })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_parts_layout() {
        let t = table_emit(TableName::TernaryParts, &TableParams::default()).unwrap();
        let parts: Vec<&str> = t.rows.iter().map(|r| r[1].as_str()).collect();
        assert_eq!(
            parts,
            [
                "(1, 2)", "(3, 6)", "(4, 8)", "(5, 10)", "(7, 14)", "(9, 18)", "(11, 22)",
                "(12, 24)"
            ]
        );
        assert!(t.to_csv().starts_with("part,elements\n1,\"(1, 2)\"\n"));
    }

    #[test]
    fn singleton_format() {
        assert_eq!(format_part(&Part { leader: 6, size: 1 }), "(6,)");
    }

    #[test]
    fn matrix_columns() {
        let t = table_emit(
            TableName::Length4Matrix,
            &TableParams {
                count: Some(15),
                ..Default::default()
            },
        )
        .unwrap();
        let col = |c: usize| -> Vec<&str> { t.rows.iter().map(|r| r[c].as_str()).collect() };
        assert_eq!(col(1), ["1", "2", "3", "4"]);
        assert_eq!(col(6), ["9", "0", "0", "0"]);
    }

    #[test]
    fn insufficient_bound() {
        let p = TableParams {
            count: Some(60),
            bound: Some(50),
            ..Default::default()
        };
        assert!(table_emit(TableName::Length3Parts, &p).is_err());
    }

    #[test]
    fn names_round_trip() {
        for t in TableName::ALL {
            assert_eq!(t.as_str().parse::<TableName>().unwrap(), t);
        }
        assert!("table9".parse::<TableName>().is_err());
    }

    #[test]
    fn text_alignment() {
        let t = Table {
            header: vec!["a".into(), "bb".into()],
            rows: vec![vec!["100".into(), "2".into()]],
        };
        assert_eq!(t.to_text(), "  a  bb\n100   2\n");
    }
}
