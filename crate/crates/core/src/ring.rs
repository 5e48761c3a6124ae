//! Truncated arithmetical functions under a homogeneous regular convolution.
//!
//! A rule is fixed by one partition of the exponents `1, 2, 3, ...` into
//! parts; adding `0` to a part gives a block. `p^a` is a unitary-style
//! divisor of `p^b` when `a <= b` and `a`, `b` share a block, and the
//! divisor set `A(n)` is the product of these over the factorization of `n`.
//! Values at `n` of a convolution only involve divisors of `n`, so results
//! on `1..=n_max` are exact under truncation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorize, SpfSieve};
use crate::error::{Error, Result};
use crate::greedy::GreedyTable;

/// Exponent range of the tables behind the built-in bounded rules; covers
/// every prime power that fits in a `u64`.
pub const DEFAULT_EXPONENT_RANGE: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    Dirichlet,
    Unitary,
    Ternary,
    Greedy(usize),
    Custom,
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKind::Dirichlet => write!(f, "dirichlet"),
            RuleKind::Unitary => write!(f, "unitary"),
            RuleKind::Ternary => write!(f, "ternary"),
            RuleKind::Greedy(d) => write!(f, "greedy({d})"),
            RuleKind::Custom => write!(f, "custom"),
        }
    }
}

#[derive(Debug, Clone)]
enum Exponents {
    /// One infinite block.
    Full,
    /// Greedy partition of the exponents.
    Table(GreedyTable),
    /// Explicit parts; `part_of[b]` indexes `parts`, uncovered exponents
    /// are singletons.
    Parts {
        part_of: Vec<Option<usize>>,
        parts: Vec<Vec<u32>>,
    },
}

/// A homogeneous regular convolution, given by its exponent partition.
#[derive(Debug, Clone)]
pub struct ConvolutionRule {
    kind: RuleKind,
    exponents: Exponents,
}

impl ConvolutionRule {
    pub fn dirichlet() -> Self {
        ConvolutionRule {
            kind: RuleKind::Dirichlet,
            exponents: Exponents::Full,
        }
    }

    pub fn unitary() -> Self {
        Self::greedy_kind(RuleKind::Unitary, 1)
    }

    pub fn ternary() -> Self {
        Self::greedy_kind(RuleKind::Ternary, 2)
    }

    pub fn greedy(length: usize) -> Result<Self> {
        let table = GreedyTable::build(length, DEFAULT_EXPONENT_RANGE)?;
        Ok(Self::from_exponent_table(table))
    }

    fn greedy_kind(kind: RuleKind, length: usize) -> Self {
        let table =
            GreedyTable::build(length, DEFAULT_EXPONENT_RANGE).expect("lengths 1 and 2 are valid");
        ConvolutionRule {
            kind,
            exponents: Exponents::Table(table),
        }
    }

    /// Greedy rule over an explicit exponent table; exponents beyond the
    /// table's range are rejected.
    pub fn from_exponent_table(table: GreedyTable) -> Self {
        ConvolutionRule {
            kind: RuleKind::Greedy(table.length()),
            exponents: Exponents::Table(table),
        }
    }

    /// Rule from explicit exponent parts (no zeros). Parts need not be
    /// progressions, which makes this useful for exercising the axiom
    /// checker; exponents not listed are singletons.
    pub fn from_parts(parts: Vec<Vec<u32>>) -> Result<Self> {
        let mut part_of: Vec<Option<usize>> = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            for &b in part {
                if b == 0 {
                    return Err(Error::InvalidArgument("exponent parts exclude 0".into()));
                }
                let b = b as usize;
                if part_of.len() <= b {
                    part_of.resize(b + 1, None);
                }
                if part_of[b].replace(i).is_some() {
                    return Err(Error::InvalidArgument(format!(
                        "exponent {b} appears in two parts"
                    )));
                }
            }
        }
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(ConvolutionRule {
            kind: RuleKind::Custom,
            exponents: Exponents::Parts { part_of, parts },
        })
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    /// Exponents `a` with `p^a` in `A(p^b)`, ascending; always starts at 0.
    pub fn exponent_divisors(&self, b: u32) -> Result<Vec<u32>> {
        if b == 0 {
            return Ok(vec![0]);
        }
        match &self.exponents {
            Exponents::Full => Ok((0..=b).collect()),
            Exponents::Table(table) => {
                let t = table
                    .type_of(u64::from(b))
                    .map_err(|_| Error::ExponentOutOfRange {
                        exponent: b,
                        range: table.n_max(),
                    })? as u32;
                Ok((0..=b / t).map(|j| j * t).collect())
            }
            Exponents::Parts { part_of, parts } => {
                let mut out = vec![0];
                match part_of.get(b as usize).copied().flatten() {
                    Some(i) => out.extend(parts[i].iter().copied().filter(|&a| a <= b)),
                    None => out.push(b),
                }
                Ok(out)
            }
        }
    }

    /// `A(n)` in ascending order.
    pub fn divisor_set(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        self.divisor_set_from(&factorize(n))
    }

    fn divisor_set_from(&self, factors: &[(u64, u32)]) -> Result<Vec<u64>> {
        let mut out = vec![1u64];
        for &(p, b) in factors {
            let exps = self.exponent_divisors(b)?;
            let mut next = Vec::with_capacity(out.len() * exps.len());
            for &d in &out {
                for &a in &exps {
                    next.push(d * p.pow(a));
                }
            }
            out = next;
        }
        out.sort_unstable();
        Ok(out)
    }
}

/// Order of a function: index of its first nonzero value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    At(u64),
    /// Every value in the truncation is zero.
    Infinite,
}

/// An arithmetical function truncated to `1..=n_max`, exact rational values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithFn {
    // index n - 1
    values: Vec<BigRational>,
}

impl ArithFn {
    pub fn new(values: Vec<BigRational>) -> Self {
        ArithFn { values }
    }

    pub fn from_fn(n_max: u64, mut f: impl FnMut(u64) -> BigRational) -> Self {
        ArithFn {
            values: (1..=n_max).map(&mut f).collect(),
        }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        ArithFn {
            values: values
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn zero(n_max: u64) -> Self {
        Self::from_fn(n_max, |_| BigRational::zero())
    }

    pub fn zeta(n_max: u64) -> Self {
        Self::from_fn(n_max, |_| BigRational::one())
    }

    /// `e_j`: one at `j`, zero elsewhere.
    pub fn indicator(j: u64, n_max: u64) -> Self {
        Self::from_fn(n_max, |n| {
            if n == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn n_max(&self) -> u64 {
        self.values.len() as u64
    }

    /// Value at `n`, `1 <= n <= n_max`.
    pub fn get(&self, n: u64) -> &BigRational {
        &self.values[n as usize - 1]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn order(&self) -> Order {
        self.values
            .iter()
            .position(|v| !v.is_zero())
            .map_or(Order::Infinite, |i| Order::At(i as u64 + 1))
    }

    /// `f(1) = 1` and `f(mn) = f(m) f(n)` for coprime `m, n` with
    /// `mn <= n_max`.
    pub fn is_multiplicative(&self) -> bool {
        let n_max = self.values.len();
        if n_max == 0 {
            return true;
        }
        if !self.values[0].is_one() {
            return false;
        }
        // Equivalent to f(n) being the product over its prime powers.
        let sieve = SpfSieve::new(n_max);
        (2..=n_max).all(|n| {
            let factors = sieve.factorize(n);
            if factors.len() < 2 {
                return true;
            }
            let prod = factors
                .iter()
                .fold(BigRational::one(), |acc, &(p, e)| acc * self.get(p.pow(e)));
            &prod == self.get(n as u64)
        })
    }

    fn zip_with(
        &self,
        other: &ArithFn,
        op: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> ArithFn {
        assert_eq!(
            self.values.len(),
            other.values.len(),
            "arithmetical functions truncated at different bounds"
        );
        ArithFn {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }
}

impl Add for &ArithFn {
    type Output = ArithFn;
    fn add(self, rhs: &ArithFn) -> ArithFn {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ArithFn {
    type Output = ArithFn;
    fn sub(self, rhs: &ArithFn) -> ArithFn {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &ArithFn {
    type Output = ArithFn;
    fn neg(self) -> ArithFn {
        ArithFn {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl Mul<&BigRational> for &ArithFn {
    type Output = ArithFn;
    fn mul(self, c: &BigRational) -> ArithFn {
        ArithFn {
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }
}

/// A rule together with its divisor sets `A(n)` for `n <= n_max`.
#[derive(Debug, Clone)]
pub struct Convolution {
    rule: ConvolutionRule,
    // A(n) is data[offsets[n - 1]..offsets[n]]
    offsets: Vec<usize>,
    data: Vec<u64>,
}

impl Convolution {
    pub fn new(rule: ConvolutionRule, n_max: u64) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::EmptyRange);
        }
        let sieve = SpfSieve::new(n_max as usize);
        let mut offsets = Vec::with_capacity(n_max as usize + 1);
        let mut data = Vec::new();
        offsets.push(0);
        for n in 1..=n_max as usize {
            data.extend(rule.divisor_set_from(&sieve.factorize(n))?);
            offsets.push(data.len());
        }
        Ok(Convolution {
            rule,
            offsets,
            data,
        })
    }

    pub fn rule(&self) -> &ConvolutionRule {
        &self.rule
    }

    pub fn n_max(&self) -> u64 {
        (self.offsets.len() - 1) as u64
    }

    /// `A(n)`, ascending.
    pub fn divisor_set(&self, n: u64) -> &[u64] {
        let n = n as usize;
        &self.data[self.offsets[n - 1]..self.offsets[n]]
    }

    pub fn contains(&self, n: u64, d: u64) -> bool {
        self.divisor_set(n).binary_search(&d).is_ok()
    }

    /// `(f * g)(n) = sum over d in A(n) of f(d) g(n/d)`.
    pub fn convolve(&self, f: &ArithFn, g: &ArithFn) -> Result<ArithFn> {
        if f.values.len() != g.values.len() {
            return Err(Error::TruncationMismatch {
                left: f.values.len(),
                right: g.values.len(),
            });
        }
        if f.n_max() > self.n_max() {
            return Err(Error::OutOfRange {
                n: f.n_max(),
                n_max: self.n_max(),
            });
        }
        let values = (1..=f.n_max())
            .map(|n| {
                let mut acc = BigRational::zero();
                for &d in self.divisor_set(n) {
                    let (a, b) = (f.get(d), g.get(n / d));
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect();
        Ok(ArithFn { values })
    }

    /// Inverse of zeta on `1..=n_max`, by triangular solve.
    pub fn mobius(&self) -> ArithFn {
        let n_max = self.n_max() as usize;
        let mut mu: Vec<BigInt> = Vec::with_capacity(n_max);
        mu.push(BigInt::one());
        for n in 2..=n_max as u64 {
            let s: BigInt = self
                .divisor_set(n)
                .iter()
                .filter(|&&d| d < n)
                .map(|&d| &mu[d as usize - 1])
                .sum();
            mu.push(-s);
        }
        ArithFn {
            values: mu.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    /// Checks the regularity axioms for every `n <= n_max` and returns the
    /// first violation found, scanning `n` upward.
    pub fn check_axioms(&self) -> AxiomReport {
        let n_max = self.n_max();
        let violation = (1..=n_max)
            .find_map(|n| self.violation_at(n))
            .or_else(|| self.multiplicative_violation());
        AxiomReport {
            checked_up_to: n_max,
            violation,
        }
    }

    fn violation_at(&self, n: u64) -> Option<AxiomViolation> {
        let set = self.divisor_set(n);
        let fail = |axiom, witness| Some(AxiomViolation { axiom, n, witness });
        if set.first() != Some(&1) {
            return fail(Axiom::Simple, 1);
        }
        if set.last() != Some(&n) {
            return fail(Axiom::Reflexive, n);
        }
        for &d in set {
            if !self.contains(n, n / d) {
                return fail(Axiom::Symmetric, d);
            }
        }
        for &d in set {
            if self.divisor_set(d).iter().any(|&e| !self.contains(n, e)) {
                return fail(Axiom::Transitive, d);
            }
        }
        let factors = factorize(n);
        if let [(p, _)] = factors[..] {
            // A(p^k) = {1, p^t, p^2t, ..., p^k}
            let step = set.get(1).copied().unwrap_or(n);
            let progression = set
                .iter()
                .enumerate()
                .all(|(i, &d)| Some(d) == step.checked_pow(i as u32));
            if !progression || (set.len() > 1 && step % p != 0) {
                return fail(Axiom::Progression, step);
            }
        }
        None
    }

    fn multiplicative_violation(&self) -> Option<AxiomViolation> {
        let n_max = self.n_max();
        for m in 2..=n_max {
            for k in (m + 1)..=n_max / m {
                if m.gcd(&k) != 1 {
                    continue;
                }
                let mut prod: Vec<u64> = self
                    .divisor_set(m)
                    .iter()
                    .flat_map(|&a| self.divisor_set(k).iter().map(move |&b| a * b))
                    .collect();
                prod.sort_unstable();
                if prod != self.divisor_set(m * k) {
                    return Some(AxiomViolation {
                        axiom: Axiom::Multiplicative,
                        n: m * k,
                        witness: m,
                    });
                }
            }
        }
        None
    }
}

/// Builds the divisor sets for `rule` up to the common truncation and
/// convolves.
pub fn convolve(f: &ArithFn, g: &ArithFn, rule: &ConvolutionRule) -> Result<ArithFn> {
    Convolution::new(rule.clone(), f.n_max().max(1))?.convolve(f, g)
}

pub fn mobius(rule: &ConvolutionRule, n_max: u64) -> Result<ArithFn> {
    Ok(Convolution::new(rule.clone(), n_max)?.mobius())
}

pub fn check_axioms(rule: &ConvolutionRule, n_max: u64) -> Result<AxiomReport> {
    Ok(Convolution::new(rule.clone(), n_max)?.check_axioms())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Simple,
    Reflexive,
    Symmetric,
    Transitive,
    Progression,
    Multiplicative,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Simple => "simple",
            Axiom::Reflexive => "reflexive",
            Axiom::Symmetric => "symmetric",
            Axiom::Transitive => "transitive",
            Axiom::Progression => "progression",
            Axiom::Multiplicative => "multiplicative",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub n: u64,
    /// The divisor (or coprime factor) exhibiting the failure.
    pub witness: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked_up_to: u64,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn divisor_sets() {
        let g3 = ConvolutionRule::greedy(3).unwrap();
        assert_eq!(g3.divisor_set(4096).unwrap(), [1, 16, 256, 4096]);
        for rule in [
            ConvolutionRule::dirichlet(),
            ConvolutionRule::unitary(),
            ConvolutionRule::ternary(),
            g3.clone(),
        ] {
            assert_eq!(rule.divisor_set(1).unwrap(), [1]);
        }
        assert_eq!(
            ConvolutionRule::ternary().divisor_set(12).unwrap(),
            [1, 2, 3, 4, 6, 12]
        );
        assert_eq!(
            ConvolutionRule::unitary().divisor_set(12).unwrap(),
            [1, 3, 4, 12]
        );
        assert_eq!(
            ConvolutionRule::dirichlet().divisor_set(12).unwrap().len(),
            6
        );
        // exponent 6 is a singleton part for length three
        assert_eq!(g3.divisor_set(64).unwrap(), [1, 64]);
    }

    #[test]
    fn ternary_block_enumeration() {
        // Blocks {0,1,2},{0,3,6},{0,4,8},...
        let rule = ConvolutionRule::ternary();
        let blocks: Vec<Vec<u32>> = vec![
            vec![0, 1, 2],
            vec![0, 3, 6],
            vec![0, 4, 8],
            vec![0, 5, 10],
            vec![0, 7, 14],
            vec![0, 9, 18],
        ];
        for b in 1..=10u32 {
            let block = blocks.iter().find(|bl| bl.contains(&b)).unwrap();
            let want: Vec<u32> = block.iter().copied().filter(|&a| a <= b).collect();
            assert_eq!(rule.exponent_divisors(b).unwrap(), want, "b = {b}");
        }
    }

    #[test]
    fn exponent_range_error() {
        let table = GreedyTable::build(3, 4).unwrap();
        let rule = ConvolutionRule::from_exponent_table(table);
        assert_eq!(rule.divisor_set(16).unwrap(), [1, 16]);
        assert_eq!(
            rule.divisor_set(32),
            Err(Error::ExponentOutOfRange {
                exponent: 5,
                range: 4
            })
        );
    }

    #[test]
    fn indicator_products() {
        let n = 20;
        let e2 = ArithFn::indicator(2, n);
        let e4 = ArithFn::indicator(4, n);
        let tern = ConvolutionRule::ternary();
        assert_eq!(convolve(&e2, &e2, &tern).unwrap(), e4);
        assert_eq!(convolve(&e2, &e4, &tern).unwrap(), ArithFn::zero(n));
        assert_eq!(
            convolve(&e2, &e2, &ConvolutionRule::unitary()).unwrap(),
            ArithFn::zero(n)
        );
    }

    #[test]
    fn divisor_count() {
        let z = ArithFn::zeta(12);
        let tau = convolve(&z, &z, &ConvolutionRule::dirichlet()).unwrap();
        assert_eq!(tau.get(6), &int(4));
        assert_eq!(tau.get(12), &int(6));
    }

    #[test]
    fn mobius_values() {
        let mu_u = mobius(&ConvolutionRule::unitary(), 30).unwrap();
        let mu_d = mobius(&ConvolutionRule::dirichlet(), 30).unwrap();
        assert_eq!(mu_u.get(4), &int(-1));
        assert_eq!(mu_d.get(4), &int(0));
        assert_eq!(mu_u.get(1), &int(1));
        assert_eq!(mu_d.get(30), &int(-1));
        let g3 = ConvolutionRule::greedy(3).unwrap();
        let mu = mobius(&g3, 300).unwrap();
        assert!(mu.is_multiplicative());
    }

    #[test]
    fn multiplicativity() {
        assert!(ArithFn::zeta(100).is_multiplicative());
        assert!(!ArithFn::indicator(5, 100).is_multiplicative());
        assert!(ArithFn::indicator(1, 100).is_multiplicative());
        assert!(!ArithFn::zero(10).is_multiplicative());
    }

    #[test]
    fn orders() {
        assert_eq!(ArithFn::indicator(5, 10).order(), Order::At(5));
        assert_eq!(ArithFn::zeta(10).order(), Order::At(1));
        assert_eq!(ArithFn::zero(10).order(), Order::Infinite);
    }

    #[test]
    fn axioms_hold_for_block_rules() {
        for rule in [
            ConvolutionRule::greedy(3).unwrap(),
            ConvolutionRule::unitary(),
            ConvolutionRule::dirichlet(),
        ] {
            let r = check_axioms(&rule, 500).unwrap();
            assert!(r.passed(), "{}: {:?}", rule.kind(), r.violation);
        }
    }

    #[test]
    fn gapped_block_is_rejected() {
        let rule = ConvolutionRule::from_parts(vec![vec![1, 3]]).unwrap();
        let r = check_axioms(&rule, 500).unwrap();
        let v = r.violation.expect("violation");
        assert!(matches!(v.axiom, Axiom::Symmetric | Axiom::Transitive));
        assert_eq!(v.n, 8);
    }

    #[test]
    fn bad_parts() {
        assert!(ConvolutionRule::from_parts(vec![vec![1, 2], vec![2]]).is_err());
        assert!(ConvolutionRule::from_parts(vec![vec![0]]).is_err());
    }

    #[test]
    fn truncation_mismatch() {
        let conv = Convolution::new(ConvolutionRule::unitary(), 10).unwrap();
        assert!(matches!(
            conv.convolve(&ArithFn::zeta(10), &ArithFn::zeta(9)),
            Err(Error::TruncationMismatch { left: 10, right: 9 })
        ));
        assert!(matches!(
            conv.convolve(&ArithFn::zeta(11), &ArithFn::zeta(11)),
            Err(Error::OutOfRange { .. })
        ));
    }
}
