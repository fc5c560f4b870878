//! Brute-force partition enumeration and the restricted or decorated families
//! whose counts feed the rho construction.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("{0} carries decorations and has no plain membership predicate")]
    NotAPredicateFamily(Family),
    #[error("{0} has no closed generating function")]
    NoSeriesForm(Family),
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("parts {0:?} do not form a partition (need positive, non-increasing parts)")]
    InvalidPartition(Vec<usize>),
}

/// A partition: positive parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    total: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(CombinatoricsError::InvalidPartition(parts));
        }
        let total = parts.iter().sum();
        Ok(Self { parts, total })
    }

    pub fn empty() -> Self {
        Self {
            parts: Vec::new(),
            total: 0,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// `(size, multiplicity)` pairs, largest size first.
    pub fn multiplicities(&self) -> Multiplicities<'_> {
        multiplicities(&self.parts)
    }

    /// Sum of the distinct part sizes.
    pub fn distinct_sum(&self) -> usize {
        self.multiplicities().map(|(size, _)| size).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

pub struct Multiplicities<'a> {
    parts: &'a [usize],
}

fn multiplicities(parts: &[usize]) -> Multiplicities<'_> {
    Multiplicities { parts }
}

impl Iterator for Multiplicities<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let &size = self.parts.first()?;
        let run = self.parts.iter().take_while(|&&p| p == size).count();
        self.parts = &self.parts[run..];
        Some((size, run))
    }
}

/// Streams partitions of `n` in descending lexicographic order.
///
/// [`Partitions::advance`] exposes each partition as a borrowed slice without
/// allocating; the [`Iterator`] impl clones into owned [`Partition`]s.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<usize>,
    total: usize,
    started: bool,
    done: bool,
}

impl Partitions {
    /// Partitions of `n` with every part at most `max_part`.
    pub fn bounded(n: usize, max_part: usize) -> Self {
        let mut parts = Vec::with_capacity(n);
        let mut rest = n;
        let mut done = false;
        if n > 0 && max_part == 0 {
            done = true;
        } else {
            while rest > 0 {
                let p = rest.min(max_part);
                parts.push(p);
                rest -= p;
            }
        }
        Self {
            parts,
            total: n,
            started: false,
            done,
        }
    }

    /// Moves to the next partition and returns it as a slice.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.parts);
        }
        // Rightmost part larger than 1; everything after it is 1s.
        let Some(pos) = self.parts.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return None;
        };
        let ones = self.parts.len() - pos - 1;
        let new_part = self.parts[pos] - 1;
        self.parts.truncate(pos);
        self.parts.push(new_part);
        let mut rest = ones + 1;
        while rest > 0 {
            let p = rest.min(new_part);
            self.parts.push(p);
            rest -= p;
        }
        Some(&self.parts)
    }

    pub fn total(&self) -> usize {
        self.total
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let total = self.total;
        self.advance().map(|parts| Partition {
            parts: parts.to_vec(),
            total,
        })
    }
}

/// Every partition of `n`, each once, in descending lexicographic order.
/// For `n = 0` this yields the single empty partition.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions::bounded(n, n)
}

/// A family of (possibly decorated) partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Unrestricted,
    /// No part divisible by `ell`.
    LRegular(u32),
    /// First occurrence of each part size may be overlined.
    Overpartition,
    /// Overpartitions into odd parts.
    OverpartitionOdd,
    /// Overpartitions into even parts.
    OverpartitionEven,
    /// Overpartitions with no part divisible by `ell`.
    OverpartitionLRegular(u32),
    /// Each part carries one of `k` colors; equal sizes form a color multiset.
    KColored(u32),
    /// Even parts carry one of two colors.
    Cubic,
    /// Odd parts distinct.
    Pod,
    /// Even parts distinct.
    Ped,
    /// Every even part is smaller than every odd part.
    EvenLessThanOdd,
}

impl Family {
    pub fn validate(&self) -> Result<(), CombinatoricsError> {
        match *self {
            Family::LRegular(ell) | Family::OverpartitionLRegular(ell) if ell < 2 => Err(
                CombinatoricsError::InvalidParameter(format!("ell must be at least 2, got {ell}")),
            ),
            Family::KColored(0) => Err(CombinatoricsError::InvalidParameter(
                "k must be at least 1, got 0".into(),
            )),
            _ => Ok(()),
        }
    }

    pub fn is_decorated(&self) -> bool {
        matches!(
            self,
            Family::Overpartition
                | Family::OverpartitionOdd
                | Family::OverpartitionEven
                | Family::OverpartitionLRegular(_)
                | Family::KColored(_)
                | Family::Cubic
        )
    }

    /// The `(m, e)` factors of the family's generating function as a
    /// product of `(q^m; q^m)_inf^e`.
    pub fn eta_factors(&self) -> Result<Vec<(usize, i32)>, CombinatoricsError> {
        let factors = match *self {
            Family::Unrestricted => vec![(1, -1)],
            Family::LRegular(ell) => vec![(ell as usize, 1), (1, -1)],
            Family::Overpartition => vec![(2, 1), (1, -2)],
            Family::OverpartitionOdd => vec![(2, 3), (1, -2), (4, -1)],
            Family::OverpartitionEven => vec![(4, 1), (2, -2)],
            Family::OverpartitionLRegular(ell) => {
                let ell = ell as usize;
                vec![(ell, 2), (2, 1), (1, -2), (2 * ell, -1)]
            }
            // The k-colored generating function is 1/(q;q)^k, not 1/(q^k;q^k).
            Family::KColored(k) => vec![(1, -(k as i32))],
            Family::Cubic => vec![(1, -1), (2, -1)],
            Family::Pod => vec![(2, 1), (1, -1), (4, -1)],
            Family::Ped => vec![(4, 1), (1, -1)],
            Family::EvenLessThanOdd => return Err(CombinatoricsError::NoSeriesForm(*self)),
        };
        Ok(factors)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Unrestricted => f.write_str("unrestricted"),
            Family::LRegular(ell) => write!(f, "{ell}-regular"),
            Family::Overpartition => f.write_str("overpartition"),
            Family::OverpartitionOdd => f.write_str("overpartition-odd"),
            Family::OverpartitionEven => f.write_str("overpartition-even"),
            Family::OverpartitionLRegular(ell) => write!(f, "{ell}-regular overpartition"),
            Family::KColored(k) => write!(f, "{k}-colored"),
            Family::Cubic => f.write_str("cubic"),
            Family::Pod => f.write_str("pod"),
            Family::Ped => f.write_str("ped"),
            Family::EvenLessThanOdd => f.write_str("even-less-than-odd"),
        }
    }
}

fn assert_valid(family: Family) {
    if let Err(e) = family.validate() {
        panic!("{e}");
    }
}

fn is_even_less_than_odd(parts: &[usize]) -> bool {
    // Non-increasing order: the first even seen is the largest even, the
    // last odd seen is the smallest odd.
    let max_even = parts.iter().find(|&&p| p % 2 == 0);
    let min_odd = parts.iter().rev().find(|&&p| p % 2 == 1);
    match (max_even, min_odd) {
        (Some(e), Some(o)) => e < o,
        _ => true,
    }
}

fn plain_predicate(family: Family, parts: &[usize]) -> Option<bool> {
    let holds = match family {
        Family::Unrestricted => true,
        Family::LRegular(ell) => parts.iter().all(|&p| p % ell as usize != 0),
        Family::Pod => multiplicities(parts).all(|(size, mult)| size % 2 == 0 || mult == 1),
        Family::Ped => multiplicities(parts).all(|(size, mult)| size % 2 == 1 || mult == 1),
        Family::EvenLessThanOdd => is_even_less_than_odd(parts),
        _ => return None,
    };
    Some(holds)
}

/// Membership test for an undecorated family.
pub fn satisfies(family: Family, p: &Partition) -> Result<bool, CombinatoricsError> {
    plain_predicate(family, p.parts()).ok_or(CombinatoricsError::NotAPredicateFamily(family))
}

fn binomial_u128(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

fn binomial_big(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Weight as `u128`, or `None` if it would overflow.
pub(crate) fn weight_u128(family: Family, parts: &[usize]) -> Option<u128> {
    if let Some(holds) = plain_predicate(family, parts) {
        return Some(holds as u128);
    }
    let distinct = || multiplicities(parts).count() as u32;
    let overline = |ok: bool| {
        if ok {
            1u128.checked_shl(distinct())
        } else {
            Some(0)
        }
    };
    match family {
        Family::Overpartition => overline(true),
        Family::OverpartitionOdd => overline(parts.iter().all(|&p| p % 2 == 1)),
        Family::OverpartitionEven => overline(parts.iter().all(|&p| p % 2 == 0)),
        Family::OverpartitionLRegular(ell) => {
            overline(parts.iter().all(|&p| p % ell as usize != 0))
        }
        Family::KColored(k) => {
            let k = k as u128;
            multiplicities(parts).try_fold(1u128, |acc, (_, mult)| {
                acc.checked_mul(binomial_u128(mult as u128 + k - 1, k - 1)?)
            })
        }
        Family::Cubic => multiplicities(parts)
            .filter(|(size, _)| size % 2 == 0)
            .try_fold(1u128, |acc, (_, mult)| acc.checked_mul(mult as u128 + 1)),
        _ => unreachable!("plain families handled above"),
    }
}

fn weight_big(family: Family, parts: &[usize]) -> BigUint {
    if let Some(w) = weight_u128(family, parts) {
        return BigUint::from(w);
    }
    match family {
        Family::Overpartition
        | Family::OverpartitionOdd
        | Family::OverpartitionEven
        | Family::OverpartitionLRegular(_) => {
            // Overflow only happens for admissible partitions.
            BigUint::one() << multiplicities(parts).count()
        }
        Family::KColored(k) => multiplicities(parts)
            .map(|(_, mult)| binomial_big(mult as u64 + k as u64 - 1, k as u64 - 1))
            .product(),
        Family::Cubic => multiplicities(parts)
            .filter(|(size, _)| size % 2 == 0)
            .map(|(_, mult)| BigUint::from(mult + 1))
            .product(),
        _ => unreachable!("plain family weights never overflow"),
    }
}

/// Number of decorated objects of `family` whose underlying plain partition is `p`.
///
/// Overpartitions give `2^(distinct sizes)`, k-colorings give
/// `prod C(mult + k - 1, k - 1)`, cubic partitions give `prod (mult + 1)`
/// over even sizes. Plain families give 1 or 0.
///
/// Panics if the family's parameters are out of range.
pub fn decoration_weight(family: Family, p: &Partition) -> BigUint {
    assert_valid(family);
    weight_big(family, p.parts())
}

pub(crate) fn weighted_sum(family: Family, mut stream: Partitions) -> BigUint {
    assert_valid(family);
    let mut total = BigUint::zero();
    while let Some(parts) = stream.advance() {
        match weight_u128(family, parts) {
            Some(0) => {}
            Some(w) => total += w,
            None => total += weight_big(family, parts),
        }
    }
    total
}

/// `c_f(n)`: decorated family members of size `n`, by exhaustive enumeration.
pub fn count(family: Family, n: usize) -> BigUint {
    weighted_sum(family, enumerate_partitions(n))
}

/// The family's counts `c_f(0..=order)` read off its eta-quotient generating function.
pub fn count_via_series(family: Family, order: usize) -> Result<Series, CombinatoricsError> {
    family.validate()?;
    Ok(Series::eta_quotient(&family.eta_factors()?, order))
}

/// Sum over all partitions of `n` of the sum of their distinct part sizes.
pub fn merca_a(n: usize) -> BigUint {
    let mut stream = enumerate_partitions(n);
    let mut total = BigUint::zero();
    while let Some(parts) = stream.advance() {
        total += multiplicities(parts).map(|(size, _)| size).sum::<usize>();
    }
    total
}

/// `q / ((1 - q)^2 (q; q)_inf)`, whose coefficients are `merca_a`.
pub fn merca_a_series(order: usize) -> Series {
    let partitions = Series::eta_quotient(&[(1, -1)], order);
    let geometric = Series::geometric(1, order);
    let q = Series::monomial(BigInt::one(), 1, order);
    partitions.mul(&q.mul(&geometric.mul(&geometric)))
}
