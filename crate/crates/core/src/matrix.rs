//! Column-sieve construction of the greedy partition.
//!
//! Start from the `d x N` multiplication matrix `a[r][c] = r * c` and walk
//! the columns left to right. Going down column `c`, the first value already
//! claimed by an earlier column zeroes that entry and everything below it.
//! Surviving columns are exactly the parts whose leader is at most `N`.
//!
//! This route shares no code with [`crate::greedy`] and is used to
//! cross-check it.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSieve {
    length: usize,
    // column-major, `length` entries per column, 0 = cut
    cells: Vec<u64>,
}

impl ColumnSieve {
    pub fn build(length: usize, columns: u64) -> Result<Self> {
        if length == 0 || length > crate::greedy::MAX_LENGTH {
            return Err(Error::InvalidLength(length));
        }
        if columns == 0 {
            return Err(Error::EmptyRange);
        }
        let n = columns as usize;
        let mut claimed = vec![false; length * n + 1];
        let mut cells = vec![0u64; length * n];
        for c in 1..=n {
            let col = &mut cells[(c - 1) * length..c * length];
            for r in 1..=length {
                let v = r * c;
                if claimed[v] {
                    break;
                }
                claimed[v] = true;
                col[r - 1] = v as u64;
            }
        }
        Ok(ColumnSieve { length, cells })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn columns(&self) -> u64 {
        (self.cells.len() / self.length) as u64
    }

    /// Column `c` (1-based), zeros included.
    pub fn column(&self, c: u64) -> &[u64] {
        let c = c as usize;
        &self.cells[(c - 1) * self.length..c * self.length]
    }

    /// Columns that are not entirely zero, in order.
    pub fn nonzero_columns(&self) -> impl Iterator<Item = &[u64]> + '_ {
        self.cells.chunks(self.length).filter(|col| col[0] != 0)
    }

    /// `(leader, height)` for every `n` in `1..=columns`, index `n - 1`.
    pub fn assignments(&self) -> Vec<(u64, usize)> {
        let n_max = self.columns() as usize;
        let mut out = vec![(0u64, 0usize); n_max];
        for col in self.nonzero_columns() {
            let leader = col[0];
            for (r, &v) in col.iter().enumerate() {
                if v == 0 {
                    break;
                }
                if (v as usize) <= n_max {
                    out[v as usize - 1] = (leader, r + 1);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_four_columns() {
        let m = ColumnSieve::build(4, 20).unwrap();
        assert_eq!(m.column(1), &[1, 2, 3, 4]);
        assert_eq!(m.column(2), &[0, 0, 0, 0]);
        assert_eq!(m.column(6), &[6, 12, 18, 24]);
        assert_eq!(m.column(8), &[8, 16, 0, 0]);
        assert_eq!(m.column(9), &[9, 0, 0, 0]);
        assert_eq!(m.column(19), &[19, 38, 57, 76]);
    }

    #[test]
    fn length_three_columns() {
        let m = ColumnSieve::build(3, 20).unwrap();
        assert_eq!(m.column(6), &[6, 0, 0]);
        assert_eq!(m.column(16), &[16, 32, 48]);
        assert_eq!(m.column(20), &[20, 40, 60]);
        assert_eq!(m.column(15), &[0, 0, 0]);
    }

    #[test]
    fn every_integer_is_assigned() {
        let m = ColumnSieve::build(5, 500).unwrap();
        for (i, &(leader, h)) in m.assignments().iter().enumerate() {
            assert_eq!(leader * h as u64, i as u64 + 1);
        }
    }
}
