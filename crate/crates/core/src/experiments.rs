//! Computations over greedy partitions: sifting-set search for length 4,
//! first primitive of each rank, gap and height series.

use std::collections::BTreeMap;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::greedy::GreedyTable;
use crate::sift::ssift;

/// Outcome of the greedy search for a sifting set that reproduces the
/// rank-4 primitives `M` of length 4 on `1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiftSearchReport {
    pub n_max: u64,
    pub initial_set: Vec<u64>,
    /// Final set, in insertion order.
    pub sift_set: Vec<u64>,
    /// Elements of `M` that the final sifting does not keep.
    pub sporadic: Vec<u64>,
    /// Survivors outside `M`; empty whenever the search ran to completion.
    pub extra: Vec<u64>,
}

impl SiftSearchReport {
    /// Each sporadic element with `Some(p)` when it equals `256 p` for an
    /// odd prime `p`.
    pub fn sporadic_forms(&self) -> Vec<(u64, Option<u64>)> {
        self.sporadic
            .iter()
            .map(|&s| {
                let p = (s % 256 == 0)
                    .then_some(s / 256)
                    .filter(|&p| p % 2 == 1 && is_prime(p));
                (s, p)
            })
            .collect()
    }
}

pub const INITIAL_SIFT_SET: [u64; 3] = [2, 3, 4];

/// Starting from `{2, 3, 4}`, repeatedly add to the sifting set the
/// smallest survivor `<= n_max` that is not a rank-4 primitive, until every
/// survivor is one. Each step sifts out the added element itself, so the
/// loop ends after at most `n_max` steps.
pub fn run_sift_search_d4(n_max: u64) -> Result<SiftSearchReport> {
    if n_max < 100 {
        return Err(Error::InvalidArgument(format!(
            "sifting search needs n_max >= 100, got {n_max}"
        )));
    }
    let table = GreedyTable::build(4, 4 * n_max)?;
    let target = table.rank_bitmap(4, n_max)?;
    let n = n_max as usize;

    let mut set = INITIAL_SIFT_SET.to_vec();
    let mut current = ssift(&set, n_max)?;
    while let Some(i) = (0..n).find(|&i| current.bitmap()[i] && !target[i]) {
        set.push(i as u64 + 1);
        current = ssift(&set, n_max)?;
    }

    let member = current.bitmap();
    let collect = |keep: &dyn Fn(usize) -> bool| -> Vec<u64> {
        (0..n).filter(|&i| keep(i)).map(|i| i as u64 + 1).collect()
    };
    Ok(SiftSearchReport {
        n_max,
        initial_set: INITIAL_SIFT_SET.to_vec(),
        sporadic: collect(&|i| target[i] && !member[i]),
        extra: collect(&|i| member[i] && !target[i]),
        sift_set: set,
    })
}

/// Smallest leader `<= search_bound` whose certified rank is `rank`.
pub fn first_primitive_of_rank(
    length: usize,
    rank: usize,
    search_bound: u64,
) -> Result<Option<u64>> {
    let table = GreedyTable::build(length, length as u64 * search_bound)?;
    let first = table.primitives(Some(rank)).find(|&m| m <= search_bound);
    Ok(first)
}

/// First primitive of every rank `1..=length`, from a single table.
pub fn first_primitives_by_rank(length: usize, search_bound: u64) -> Result<Vec<Option<u64>>> {
    let table = GreedyTable::build(length, length as u64 * search_bound)?;
    let mut first = vec![None; length];
    for part in table.parts().take_while(|p| p.leader <= search_bound) {
        first[part.size - 1].get_or_insert(part.leader);
    }
    Ok(first)
}

/// Number of leaders `<= bound` of each certified rank.
pub fn rank_census(table: &GreedyTable, bound: u64) -> Result<BTreeMap<usize, u64>> {
    if bound > table.certified_bound() {
        return Err(Error::InvalidArgument(format!(
            "ranks are certified only up to {}",
            table.certified_bound()
        )));
    }
    let mut counts = BTreeMap::new();
    for part in table.parts().take_while(|p| p.leader <= bound) {
        *counts.entry(part.size).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Status of the low-rank conjecture for length 4 up to some bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowRankReport {
    pub bound: u64,
    pub census: BTreeMap<usize, u64>,
    /// Rank-1 or rank-2 leaders divisible by neither 8 nor 9.
    pub not_divisible: Vec<u64>,
    pub rank_three: Vec<u64>,
}

impl LowRankReport {
    pub fn holds(&self) -> bool {
        self.not_divisible.is_empty() && self.rank_three.is_empty()
    }
}

pub fn low_rank_report_d4(bound: u64) -> Result<LowRankReport> {
    let table = GreedyTable::build(4, 4 * bound)?;
    let census = rank_census(&table, bound)?;
    let mut not_divisible = Vec::new();
    let mut rank_three = Vec::new();
    for part in table.parts().take_while(|p| p.leader <= bound) {
        match part.size {
            1 | 2 if part.leader % 8 != 0 && part.leader % 9 != 0 => {
                not_divisible.push(part.leader)
            }
            3 => rank_three.push(part.leader),
            _ => {}
        }
    }
    Ok(LowRankReport {
        bound,
        census,
        not_divisible,
        rank_three,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapPoint {
    /// 1-based index of the later primitive.
    pub index: usize,
    pub leader: u64,
    pub gap: u64,
    /// Mean of the gaps so far.
    pub mean: f64,
}

/// Distances between consecutive primitives `<= n_max`, optionally only
/// those of a given certified rank.
pub fn primitive_gap_series(
    length: usize,
    n_max: u64,
    rank: Option<usize>,
) -> Result<Vec<GapPoint>> {
    let build_to = match rank {
        Some(_) => length as u64 * n_max,
        None => n_max,
    };
    let table = GreedyTable::build(length, build_to)?;
    let leaders: Vec<u64> = table.primitives(rank).take_while(|&m| m <= n_max).collect();
    let Some(&first) = leaders.first() else {
        return Ok(Vec::new());
    };
    Ok(leaders
        .windows(2)
        .enumerate()
        .map(|(i, w)| GapPoint {
            index: i + 2,
            leader: w[1],
            gap: w[1] - w[0],
            mean: (w[1] - first) as f64 / (i + 1) as f64,
        })
        .collect())
}

/// `(n, height)` for `n` in `1..=n_max`.
pub fn height_series(length: usize, n_max: u64) -> Result<Vec<(u64, usize)>> {
    let table = GreedyTable::build(length, n_max)?;
    Ok(table.heights()[1..]
        .iter()
        .enumerate()
        .map(|(i, &h)| (i as u64 + 1, usize::from(h)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_of_rank() {
        assert_eq!(first_primitive_of_rank(5, 3, 10_000).unwrap(), Some(40));
        assert_eq!(first_primitive_of_rank(6, 3, 10_000).unwrap(), Some(10));
        assert_eq!(first_primitive_of_rank(2, 1, 10_000).unwrap(), None);
        let all = first_primitives_by_rank(5, 1000).unwrap();
        assert_eq!(all, [Some(9), Some(8), Some(40), None, Some(1)]);
    }

    #[test]
    fn heights() {
        let h4 = height_series(4, 10).unwrap();
        assert_eq!(&h4[..4], &[(1, 1), (2, 2), (3, 3), (4, 4)]);
        assert_eq!(height_series(3, 15).unwrap()[14], (15, 3));
        assert_eq!(height_series(2, 22).unwrap()[21], (22, 2));
    }

    #[test]
    fn ternary_gaps_are_one_or_two() {
        let gaps = primitive_gap_series(2, 10_000, None).unwrap();
        assert!(gaps.iter().all(|g| g.gap == 1 || g.gap == 2));
        assert_eq!(
            gaps[0],
            GapPoint {
                index: 2,
                leader: 3,
                gap: 2,
                mean: 2.0
            }
        );
    }

    #[test]
    fn small_search() {
        let r = run_sift_search_d4(100).unwrap();
        assert!(r.extra.is_empty());
        assert_eq!(r.sift_set, [2, 3, 4, 8, 9, 16, 36, 72]);
        assert!(r.sporadic.is_empty());
        assert!(run_sift_search_d4(99).is_err());
    }

    #[test]
    fn sporadic_forms() {
        let r = SiftSearchReport {
            n_max: 0,
            initial_set: vec![],
            sift_set: vec![],
            sporadic: vec![256, 1280, 2304],
            extra: vec![],
        };
        assert_eq!(
            r.sporadic_forms(),
            [(256, None), (1280, Some(5)), (2304, None)]
        );
    }
}
