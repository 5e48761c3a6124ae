//! Greedy partition of the positive integers into arithmetic progressions
//! `{m, 2m, ..., rm}` with `r <= d`.
//!
//! Integers are placed in increasing order. Each `n` extends the part with
//! the smallest leader `m` whose current last element is `n - m` and which
//! still has room; otherwise `n` opens a new part. The leader of a part is
//! its smallest element (the *type* of every member), its size is the
//! *rank* of the leader, and `n = k * leader` has *height* `k`.

use crate::error::{Error, Result};

/// Default cap on the number of table entries.
pub const DEFAULT_MAX_ENTRIES: u64 = 1 << 31;

/// Largest supported part length; heights are stored in one byte.
pub const MAX_LENGTH: usize = u8::MAX as usize;

/// One part of the partition: `{leader, 2*leader, ..., size*leader}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part {
    pub leader: u64,
    pub size: usize,
}

impl Part {
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        (1..=self.size as u64).map(move |k| k * self.leader)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankReport {
    pub leader: u64,
    pub rank: usize,
    /// The part can no longer grow: the table reaches `d * leader`.
    pub certified: bool,
}

/// The greedy partition of `1..=n_max` for part length `d`.
///
/// Only heights and per-leader sizes are stored; the leader of `n` is
/// `n / height(n)`. A finished table is immutable and `Sync`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTable {
    length: usize,
    // index 0 unused
    heights: Vec<u8>,
    // nonzero exactly at leaders
    sizes: Vec<u8>,
}

impl GreedyTable {
    pub fn build(length: usize, n_max: u64) -> Result<Self> {
        Self::build_with_cap(length, n_max, DEFAULT_MAX_ENTRIES)
    }

    pub fn build_with_cap(length: usize, n_max: u64, cap: u64) -> Result<Self> {
        if length == 0 || length > MAX_LENGTH {
            return Err(Error::InvalidLength(length));
        }
        if n_max == 0 {
            return Err(Error::EmptyRange);
        }
        if n_max > cap {
            return Err(Error::TooLarge {
                requested: n_max,
                cap,
            });
        }
        let n_max = usize::try_from(n_max).map_err(|_| Error::TooLarge {
            requested: n_max,
            cap,
        })?;

        let mut heights = vec![0u8; n_max + 1];
        let mut sizes = vec![0u8; n_max + 1];
        for n in 1..=n_max {
            // Largest quotient first, i.e. smallest candidate leader.
            let slot = (2..=length)
                .rev()
                .find(|&k| n % k == 0 && usize::from(sizes[n / k]) == k - 1);
            match slot {
                Some(k) => {
                    heights[n] = k as u8;
                    sizes[n / k] = k as u8;
                }
                None => {
                    heights[n] = 1;
                    sizes[n] = 1;
                }
            }
        }
        Ok(GreedyTable {
            length,
            heights,
            sizes,
        })
    }

    /// Maximum part length `d`.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn n_max(&self) -> u64 {
        (self.heights.len() - 1) as u64
    }

    /// Leaders up to this bound have final ranks.
    pub fn certified_bound(&self) -> u64 {
        self.n_max() / self.length as u64
    }

    fn index(&self, n: u64) -> Result<usize> {
        if n == 0 || n > self.n_max() {
            return Err(Error::OutOfRange {
                n,
                n_max: self.n_max(),
            });
        }
        Ok(n as usize)
    }

    pub fn height(&self, n: u64) -> Result<usize> {
        Ok(usize::from(self.heights[self.index(n)?]))
    }

    /// The leader of the part containing `n`.
    pub fn type_of(&self, n: u64) -> Result<u64> {
        Ok(n / self.height(n)? as u64)
    }

    pub fn is_primitive(&self, n: u64) -> Result<bool> {
        Ok(self.height(n)? == 1)
    }

    pub fn rank_of(&self, leader: u64) -> Result<RankReport> {
        let i = self.index(leader)?;
        if self.heights[i] != 1 {
            return Err(Error::NotPrimitive(leader));
        }
        Ok(RankReport {
            leader,
            rank: usize::from(self.sizes[i]),
            certified: leader <= self.certified_bound(),
        })
    }

    /// Leaders in increasing order with their current part sizes.
    pub fn parts(&self) -> impl Iterator<Item = Part> + '_ {
        self.sizes
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &s)| s != 0)
            .map(|(m, &s)| Part {
                leader: m as u64,
                size: usize::from(s),
            })
    }

    /// Primitive leaders in increasing order. With a rank filter only
    /// leaders whose rank is certified are considered.
    pub fn primitives(&self, rank: Option<usize>) -> impl Iterator<Item = u64> + '_ {
        let bound = match rank {
            Some(_) => self.certified_bound(),
            None => self.n_max(),
        };
        self.parts()
            .take_while(move |p| p.leader <= bound)
            .filter(move |p| rank.is_none_or(|r| p.size == r))
            .map(|p| p.leader)
    }

    /// Raw heights, index `n` for `n` in `1..=n_max` (index 0 is unused).
    pub fn heights(&self) -> &[u8] {
        &self.heights
    }

    /// Membership bitmap of the primitives, index `n - 1` for `n`.
    pub fn primitive_bitmap(&self) -> Vec<bool> {
        self.heights[1..].iter().map(|&h| h == 1).collect()
    }

    /// Bitmap over `1..=bound` of leaders with certified rank `rank`.
    pub fn rank_bitmap(&self, rank: usize, bound: u64) -> Result<Vec<bool>> {
        if bound > self.certified_bound() {
            return Err(Error::InvalidArgument(format!(
                "ranks are certified only up to {}, requested {}",
                self.certified_bound(),
                bound
            )));
        }
        Ok((1..=bound as usize)
            .map(|m| self.heights[m] == 1 && usize::from(self.sizes[m]) == rank)
            .collect())
    }
}
