//! Selective sifting.
//!
//! Given a set `S` of integers `>= 2`, `1` survives and `n > 1` is sifted
//! out exactly when `n = a * b` with `a` in `S` and `b < n` a survivor.
//! The cofactor `b = 1` is admissible, so every element of `S` is itself
//! sifted out.
//!
//! The closed-form oracles below characterize the sifted set for a few
//! families of `S` purely through prime valuations.

use crate::arith::{is_prime, valuation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiftResult {
    set: Vec<u64>,
    // index n - 1
    member: Vec<bool>,
}

/// Survivors of selective sifting by `set` within `1..=n_max`.
///
/// Runs in `O(n_max * |set|)`. Elements larger than `n_max` are kept in the
/// recorded set but never divide anything in range.
pub fn ssift(set: &[u64], n_max: u64) -> Result<SiftResult> {
    if let Some(&bad) = set.iter().find(|&&a| a < 2) {
        return Err(Error::InvalidSiftElement(bad));
    }
    if n_max == 0 {
        return Err(Error::EmptyRange);
    }
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();

    let n_max = n_max as usize;
    let active: Vec<usize> = set
        .iter()
        .filter(|&&a| a as usize <= n_max)
        .map(|&a| a as usize)
        .collect();
    let mut member = vec![false; n_max];
    member[0] = true;
    for n in 2..=n_max {
        member[n - 1] = !active.iter().any(|&a| n % a == 0 && member[n / a - 1]);
    }
    Ok(SiftResult { set, member })
}

impl SiftResult {
    pub fn set(&self) -> &[u64] {
        &self.set
    }

    pub fn n_max(&self) -> u64 {
        self.member.len() as u64
    }

    /// `false` outside `1..=n_max`.
    pub fn contains(&self, n: u64) -> bool {
        n >= 1 && n <= self.n_max() && self.member[n as usize - 1]
    }

    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i as u64 + 1)
    }

    /// Index `n - 1` holds membership of `n`.
    pub fn bitmap(&self) -> &[bool] {
        &self.member
    }
}

/// Which two-prime sifting set an [`oracle_pq`] call models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSet {
    /// `S = {p, q}`: survivors have `val_p(n) = val_q(n) (mod 2)`.
    Primes,
    /// `S = {p, q, pq}`: survivors have both valuations even.
    PrimesAndProduct,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn check_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("n must be positive".into()))
    } else {
        Ok(())
    }
}

/// Membership in `ssift({p})`: `val_p(n)` is even.
pub fn oracle_valuation_parity(p: u64, n: u64) -> Result<bool> {
    check_prime(p)?;
    check_positive(n)?;
    Ok(valuation(p, n) % 2 == 0)
}

pub fn oracle_pq(p: u64, q: u64, model: PairSet, n: u64) -> Result<bool> {
    check_prime(p)?;
    check_prime(q)?;
    if p == q {
        return Err(Error::SamePrime(p));
    }
    check_positive(n)?;
    let (a, b) = (valuation(p, n), valuation(q, n));
    Ok(match model {
        PairSet::Primes => a % 2 == b % 2,
        PairSet::PrimesAndProduct => a % 2 == 0 && b % 2 == 0,
    })
}

/// Membership in `ssift({p^k})`: `val_p(n) mod 2k` lies in `0..k`.
pub fn oracle_pk(p: u64, k: u32, n: u64) -> Result<bool> {
    check_prime(p)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    check_positive(n)?;
    Ok(valuation(p, n) % (2 * k) < k)
}

/// Membership in `ssift({p, p^k})`.
///
/// Odd `k`: `val_p(n)` even. Even `k`: `val_p(n) mod (k + 1)` is one of
/// `0, 2, ..., k - 2`.
pub fn oracle_p_pk(p: u64, k: u32, n: u64) -> Result<bool> {
    check_prime(p)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    check_positive(n)?;
    let v = valuation(p, n);
    Ok(if k % 2 == 1 {
        v % 2 == 0
    } else {
        let r = v % (k + 1);
        r % 2 == 0 && r <= k - 2
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Literal reading of the recursive definition: scan every cofactor
    /// `b < n` rather than every set element.
    fn brute_force(set: &[u64], n_max: usize) -> Vec<bool> {
        let mut member = vec![false; n_max + 1];
        member[1] = true;
        for n in 2..=n_max {
            let sifted = (1..n).any(|b| n % b == 0 && member[b] && set.contains(&((n / b) as u64)));
            member[n] = !sifted;
        }
        member[1..].to_vec()
    }

    #[test]
    fn sift_by_two() {
        let r = ssift(&[2], 12).unwrap();
        assert_eq!(r.members().collect::<Vec<_>>(), [1, 3, 4, 5, 7, 9, 11, 12]);
    }

    #[test]
    fn empty_set_keeps_everything() {
        let r = ssift(&[], 10).unwrap();
        assert_eq!(
            r.members().collect::<Vec<_>>(),
            (1..=10).collect::<Vec<_>>()
        );
    }

    #[test]
    fn sift_by_two_three_six() {
        let r = ssift(&[2, 3, 6], 37).unwrap();
        assert_eq!(
            r.members().collect::<Vec<_>>(),
            [1, 4, 5, 7, 9, 11, 13, 16, 17, 19, 20, 23, 25, 28, 29, 31, 35, 36, 37]
        );
    }

    #[test]
    fn agrees_with_brute_force() {
        for set in [
            &[2, 3][..],
            &[2, 4],
            &[2, 3, 6],
            &[6],
            &[4, 6, 9],
            &[2, 8, 12],
        ] {
            let fast = ssift(set, 2000).unwrap();
            assert_eq!(fast.bitmap(), &brute_force(set, 2000)[..], "set {set:?}");
        }
    }

    #[test]
    fn pair_oracle_from_brute_force() {
        // Brute force first, then the closed forms.
        let bf23 = brute_force(&[2, 3], 10_000);
        let bf24 = brute_force(&[2, 4], 10_000);
        assert!(bf23[6 - 1]);
        assert!(bf24[8 - 1]);
        assert!(!bf24[2 - 1]);
        for n in 1..=10_000u64 {
            let i = n as usize - 1;
            assert_eq!(
                oracle_pq(2, 3, PairSet::Primes, n).unwrap(),
                bf23[i],
                "n = {n}"
            );
            assert_eq!(oracle_p_pk(2, 2, n).unwrap(), bf24[i], "n = {n}");
        }
    }

    #[test]
    fn oracle_examples() {
        assert!(oracle_valuation_parity(2, 12).unwrap());
        assert!(!oracle_valuation_parity(2, 8).unwrap());
        assert!(oracle_valuation_parity(5, 1).unwrap());
        assert!(oracle_pq(2, 3, PairSet::PrimesAndProduct, 36).unwrap());
        assert!(!oracle_pq(2, 3, PairSet::PrimesAndProduct, 6).unwrap());
        assert!(oracle_pq(2, 3, PairSet::Primes, 6).unwrap());
        assert!(oracle_pk(2, 3, 64).unwrap());
        assert!(!oracle_pk(2, 3, 8).unwrap());
        assert!(oracle_pk(7, 4, 1).unwrap());
        assert!(oracle_p_pk(2, 3, 4).unwrap());
        assert!(oracle_p_pk(2, 2, 8).unwrap());
        assert!(!oracle_p_pk(2, 2, 2).unwrap());
    }

    #[test]
    fn invariants_of_result() {
        let r = ssift(&[6, 10, 15], 500).unwrap();
        assert!(r.contains(1));
        for &a in r.set() {
            assert!(!r.contains(a));
        }
        for n in 1..=500 {
            if r.set().iter().all(|a| n % a != 0) {
                assert!(r.contains(n));
            }
        }
        assert!(!r.contains(0));
        assert!(!r.contains(501));
    }

    #[test]
    fn errors() {
        assert_eq!(ssift(&[1, 2], 10), Err(Error::InvalidSiftElement(1)));
        assert_eq!(ssift(&[0], 10), Err(Error::InvalidSiftElement(0)));
        assert_eq!(ssift(&[2], 0), Err(Error::EmptyRange));
        assert_eq!(oracle_valuation_parity(4, 3), Err(Error::NotPrime(4)));
        assert_eq!(
            oracle_pq(3, 3, PairSet::Primes, 3),
            Err(Error::SamePrime(3))
        );
        assert_eq!(oracle_pq(2, 9, PairSet::Primes, 3), Err(Error::NotPrime(9)));
        assert!(oracle_pk(2, 0, 3).is_err());
        assert!(oracle_p_pk(1, 2, 3).is_err());
    }

    #[test]
    fn large_elements_are_inert() {
        let r = ssift(&[2, 1000], 20).unwrap();
        assert_eq!(r.set(), &[2, 1000]);
        assert_eq!(r, ssift(&[2, 1000], 20).unwrap());
        assert_eq!(r.bitmap(), ssift(&[2], 20).unwrap().bitmap());
    }
}
