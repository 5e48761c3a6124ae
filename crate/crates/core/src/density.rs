//! Natural densities: exact closed forms for valuation classes and
//! empirical estimates from membership bitmaps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::is_prime;
use crate::error::{Error, Result};

fn ratio(n: u64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `p^-e` exactly.
fn inv_pow(p: u64, e: u64) -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(p), e as usize))
}

/// Density of `{m : val_p(m) = residue (mod modulus)}`, which is
/// `p^-residue (1 - 1/p) / (1 - p^-modulus)`.
pub fn density_valuation_class(p: u64, modulus: u64, residue: u64) -> Result<BigRational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if modulus < 2 {
        return Err(Error::InvalidArgument(format!(
            "modulus must be at least 2, got {modulus}"
        )));
    }
    if residue >= modulus {
        return Err(Error::InvalidArgument(format!(
            "residue {residue} not reduced modulo {modulus}"
        )));
    }
    let one = BigRational::one();
    Ok(inv_pow(p, residue) * (&one - ratio(1, p)) / (&one - inv_pow(p, modulus)))
}

/// Joint density of two valuation classes at distinct primes.
pub fn density_valuation_product(
    p: u64,
    q: u64,
    p_modulus: u64,
    q_modulus: u64,
    p_residue: u64,
    q_residue: u64,
) -> Result<BigRational> {
    if p == q {
        return Err(Error::SamePrime(p));
    }
    Ok(density_valuation_class(p, p_modulus, p_residue)?
        * density_valuation_class(q, q_modulus, q_residue)?)
}

/// Exponent sequence `s_0 < s_1 < ...` with gaps larger than one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExponentSequence {
    /// Exactly these terms.
    Finite(Vec<u64>),
    /// `start, start + step, start + 2 step, ...`
    Progression { start: u64, step: u64 },
    /// Known leading terms of an infinite sequence whose continuation is
    /// only known to respect the gap condition.
    Prefix(Vec<u64>),
}

/// A partial sum with a certified bound on what is left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesEstimate {
    pub partial: BigRational,
    pub tail_bound: BigRational,
    pub terms: usize,
}

impl SeriesEstimate {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.partial <= x && x <= &(&self.partial + &self.tail_bound)
    }
}

fn check_gaps(terms: &[u64]) -> Result<()> {
    for w in terms.windows(2) {
        if w[1] <= w[0] + 1 {
            return Err(Error::GapTooSmall {
                prev: w[0],
                next: w[1],
            });
        }
    }
    Ok(())
}

/// Density of `{n : val_p(n) in s}`, summed as `sum (p^-s_k - p^-s_k-1)`.
///
/// For infinite sequences, terms are added until the geometric majorant of
/// the tail (every later gap is at least 2) drops to `tolerance` or below.
pub fn density_sparse_sequence(
    p: u64,
    seq: &ExponentSequence,
    tolerance: &BigRational,
) -> Result<SeriesEstimate> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !tolerance.is_positive() {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let one = BigRational::one();
    let keep = &one - ratio(1, p);
    let term = |s: u64| &keep * inv_pow(p, s);
    // Bound on sum_{j>=1} term(last + 2j).
    let majorant = |last: u64| term(last + 2) / (&one - ratio(1, p * p));

    let mut partial = BigRational::zero();
    match seq {
        ExponentSequence::Finite(terms) => {
            check_gaps(terms)?;
            for &s in terms {
                partial += term(s);
            }
            Ok(SeriesEstimate {
                partial,
                tail_bound: BigRational::zero(),
                terms: terms.len(),
            })
        }
        ExponentSequence::Prefix(terms) => {
            check_gaps(terms)?;
            let Some(&last) = terms.last() else {
                return Err(Error::InvalidArgument("empty prefix".into()));
            };
            for &s in terms {
                partial += term(s);
            }
            Ok(SeriesEstimate {
                partial,
                tail_bound: majorant(last),
                terms: terms.len(),
            })
        }
        &ExponentSequence::Progression { start, step } => {
            if step < 2 {
                return Err(Error::GapTooSmall {
                    prev: start,
                    next: start + step,
                });
            }
            let mut s = start;
            let mut terms = 0;
            loop {
                partial += term(s);
                terms += 1;
                let bound = majorant(s);
                if &bound <= tolerance {
                    return Ok(SeriesEstimate {
                        partial,
                        tail_bound: bound,
                        terms,
                    });
                }
                s += step;
            }
        }
    }
}

/// Powers of ten up to `n_max`, followed by `n_max` itself.
pub fn default_checkpoints(n_max: u64) -> Vec<u64> {
    let mut out: Vec<u64> = std::iter::successors(Some(10u64), |&c| c.checked_mul(10))
        .take_while(|&c| c < n_max)
        .collect();
    out.push(n_max);
    out
}

/// Counting density with the spread of ratios seen at checkpoints.
///
/// The min/max over checkpoints stands in for liminf/limsup; it describes
/// the sample only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityEstimate {
    pub n_max: u64,
    pub count: u64,
    pub value: BigRational,
    pub running_min: BigRational,
    pub running_max: BigRational,
}

impl DensityEstimate {
    pub fn as_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

/// `member[i]` is the membership of `i + 1`. Checkpoints outside
/// `1..=n_max` are ignored and `n_max` is always included.
pub fn empirical_density(member: &[bool], checkpoints: &[u64]) -> Result<DensityEstimate> {
    let n_max = member.len() as u64;
    if n_max == 0 {
        return Err(Error::EmptyRange);
    }
    let mut marks: Vec<u64> = checkpoints
        .iter()
        .copied()
        .filter(|&c| c >= 1 && c <= n_max)
        .collect();
    marks.push(n_max);
    marks.sort_unstable();
    marks.dedup();

    let mut count = 0u64;
    let mut seen = 0usize;
    let mut ratios = Vec::with_capacity(marks.len());
    for &mark in &marks {
        count += member[seen..mark as usize].iter().filter(|&&b| b).count() as u64;
        seen = mark as usize;
        ratios.push(ratio(count, mark));
    }
    let value = ratio(count, n_max);
    let running_min = ratios
        .iter()
        .min()
        .cloned()
        .unwrap_or_else(|| value.clone());
    let running_max = ratios
        .iter()
        .max()
        .cloned()
        .unwrap_or_else(|| value.clone());
    Ok(DensityEstimate {
        n_max,
        count,
        value,
        running_min,
        running_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::valuation;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn closed_forms() {
        assert_eq!(density_valuation_class(2, 2, 0).unwrap(), q(2, 3));
        assert_eq!(density_valuation_class(2, 2, 1).unwrap(), q(1, 3));
        assert_eq!(density_valuation_class(3, 2, 0).unwrap(), q(3, 4));
        assert_eq!(
            density_valuation_product(2, 3, 2, 2, 0, 0).unwrap(),
            q(1, 2)
        );
        assert_eq!(
            density_valuation_product(2, 3, 2, 2, 1, 1).unwrap(),
            q(1, 12)
        );
    }

    #[test]
    fn residue_classes_sum_to_one() {
        for (p, m) in [(2, 2), (3, 5), (7, 3)] {
            let total: BigRational = (0..m)
                .map(|r| density_valuation_class(p, m, r).unwrap())
                .sum();
            assert_eq!(total, BigRational::one());
        }
        let mut total = BigRational::zero();
        for a in 0..2 {
            for b in 0..3 {
                total += density_valuation_product(2, 5, 2, 3, a, b).unwrap();
            }
        }
        assert_eq!(total, BigRational::one());
    }

    #[test]
    fn closed_form_matches_count() {
        let n = 1_000_000u64;
        let count = (1..=n).filter(|&m| valuation(3, m) % 2 == 0).count() as f64;
        assert!((count / n as f64 - 0.75).abs() < 0.005);
    }

    #[test]
    fn sparse_series() {
        let tol = q(1, 1_000_000_000);
        let even = density_sparse_sequence(
            2,
            &ExponentSequence::Progression { start: 0, step: 2 },
            &tol,
        )
        .unwrap();
        assert!(even.contains(&q(2, 3)));
        assert!(even.tail_bound <= tol);

        let single = density_sparse_sequence(2, &ExponentSequence::Finite(vec![0]), &tol).unwrap();
        assert_eq!(single.partial, q(1, 2));
        assert!(single.tail_bound.is_zero());

        let odd3 = density_sparse_sequence(
            3,
            &ExponentSequence::Progression { start: 1, step: 2 },
            &tol,
        )
        .unwrap();
        assert!(odd3.contains(&q(1, 4)));

        let prefix =
            density_sparse_sequence(2, &ExponentSequence::Prefix(vec![0, 2, 4]), &tol).unwrap();
        assert!(prefix.contains(&q(2, 3)));
    }

    #[test]
    fn sparse_series_matches_count() {
        let n = 1_000_000u64;
        let count = (1..=n).filter(|&m| valuation(3, m) % 2 == 1).count() as f64;
        assert!((count / n as f64 - 0.25).abs() < 0.005);
    }

    #[test]
    fn errors() {
        let tol = q(1, 100);
        assert!(matches!(
            density_sparse_sequence(2, &ExponentSequence::Finite(vec![0, 1]), &tol),
            Err(Error::GapTooSmall { prev: 0, next: 1 })
        ));
        assert!(density_sparse_sequence(
            2,
            &ExponentSequence::Progression { start: 0, step: 1 },
            &tol
        )
        .is_err());
        assert!(density_sparse_sequence(4, &ExponentSequence::Finite(vec![0]), &tol).is_err());
        assert!(density_valuation_class(2, 1, 0).is_err());
        assert!(density_valuation_class(2, 2, 2).is_err());
        assert!(density_valuation_class(6, 2, 0).is_err());
        assert_eq!(
            density_valuation_product(3, 3, 2, 2, 0, 0),
            Err(Error::SamePrime(3))
        );
        assert!(empirical_density(&[], &[]).is_err());
    }

    #[test]
    fn empirical() {
        let all = vec![true; 1000];
        let e = empirical_density(&all, &default_checkpoints(1000)).unwrap();
        assert_eq!(e.value, BigRational::one());
        assert_eq!(e.count, 1000);

        let evens: Vec<bool> = (1..=100).map(|n| n % 2 == 0).collect();
        let e = empirical_density(&evens, &[1, 10, 100]).unwrap();
        assert_eq!(e.value, q(1, 2));
        assert_eq!(e.running_min, BigRational::zero());
        assert_eq!(e.running_max, q(1, 2));
        assert!(e.running_min <= e.value && e.value <= e.running_max);
    }

    #[test]
    fn checkpoints() {
        assert_eq!(default_checkpoints(1000), [10, 100, 1000]);
        assert_eq!(default_checkpoints(2500), [10, 100, 1000, 2500]);
        assert_eq!(default_checkpoints(5), [5]);
    }
}
