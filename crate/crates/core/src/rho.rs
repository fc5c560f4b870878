//! The rho construction: partitions of `n` whose largest part `λ` occurs
//! exactly once while the remaining parts form a family partition of `λ`.
//!
//! Such a partition only exists when `n = 2λ`. "Exactly once" is numeric:
//! the remainder may not use a part of size `λ` under any decoration.

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedSub, Zero};
use thiserror::Error;

use crate::combinatorics::{
    count, decoration_weight, merca_a, weighted_sum, Family, Partition, Partitions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RhoError {
    #[error("argument {0} must be even and at least 2")]
    OddArgument(usize),
}

/// One value of a rho function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoCount {
    pub family: Family,
    pub n: usize,
    pub value: BigUint,
}

/// Decorated single-part partitions `[λ]` in the family: the terms the
/// combinator subtracts.
pub fn single_part_count(family: Family, lambda: usize) -> BigUint {
    decoration_weight(family, &Partition::new(vec![lambda]).expect("λ ≥ 1"))
}

/// `ρ_f(n)` through `ρ_f(2λ) = c_f(λ) - s_f(λ)`; zero for odd `n` and `n = 0`.
pub fn rho_count(family: Family, n: usize) -> BigUint {
    if n == 0 || n % 2 == 1 {
        return BigUint::zero();
    }
    let lambda = n / 2;
    count(family, lambda)
        .checked_sub(&single_part_count(family, lambda))
        .expect("the single-part partitions are among those counted")
}

/// `ρ_f(0..=limit)` as records.
pub fn rho_table(family: Family, limit: usize) -> Vec<RhoCount> {
    (0..=limit)
        .map(|n| RhoCount {
            family,
            n,
            value: rho_count(family, n),
        })
        .collect()
}

/// Iterator over the partitions counted by `ρ_f(n)` with their decoration weights.
///
/// Each item is the full partition `λ + (remainder)`; remainders are the
/// partitions of `λ` with every part below `λ`, in descending lexicographic order.
pub struct RhoPartitions {
    family: Family,
    lambda: usize,
    rest: Option<Partitions>,
}

impl Iterator for RhoPartitions {
    type Item = (Partition, BigUint);

    fn next(&mut self) -> Option<Self::Item> {
        let rest = self.rest.as_mut()?;
        loop {
            let tail = rest.next()?;
            let weight = decoration_weight(self.family, &tail);
            if weight.is_zero() {
                continue;
            }
            let mut parts = Vec::with_capacity(tail.parts().len() + 1);
            parts.push(self.lambda);
            parts.extend_from_slice(tail.parts());
            let full = Partition::new(parts).expect("tail parts are below λ");
            return Some((full, weight));
        }
    }
}

pub fn rho_partitions(family: Family, n: usize) -> RhoPartitions {
    let lambda = n / 2;
    let rest = (n >= 2 && n.is_multiple_of(2)).then(|| Partitions::bounded(lambda, lambda - 1));
    RhoPartitions {
        family,
        lambda,
        rest,
    }
}

/// `ρ_f(n)` by direct enumeration of the remainders, with no subtraction.
pub fn rho_direct(family: Family, n: usize) -> BigUint {
    if n < 2 || n % 2 == 1 {
        return BigUint::zero();
    }
    let lambda = n / 2;
    weighted_sum(family, Partitions::bounded(lambda, lambda - 1))
}

fn require_even(n: usize) -> Result<(), RhoError> {
    if n < 2 || n % 2 == 1 {
        return Err(RhoError::OddArgument(n));
    }
    Ok(())
}

/// Sum, over the partitions counted by `ρ(n)`, of their distinct part sizes.
pub fn rho_a(n: usize) -> Result<BigUint, RhoError> {
    require_even(n)?;
    Ok(rho_partitions(Family::Unrestricted, n)
        .map(|(p, _)| BigUint::from(p.distinct_sum()))
        .sum())
}

/// Both sides of `2 ρ_a(n) = n (ρ(n) - 1) + 2 a(n/2)` at one even `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub n: usize,
    pub rho: BigUint,
    pub rho_a: BigUint,
    pub merca_a: BigUint,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl RecurrenceCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn recurrence_sides(n: usize) -> Result<RecurrenceCheck, RhoError> {
    require_even(n)?;
    let rho = rho_count(Family::Unrestricted, n);
    let rho_a = rho_a(n)?;
    let merca = merca_a(n / 2);
    let lhs = BigInt::from(rho_a.clone()) * 2;
    let rhs = BigInt::from(n) * (BigInt::from(rho.clone()) - 1) + BigInt::from(merca.clone()) * 2;
    Ok(RecurrenceCheck {
        n,
        rho,
        rho_a,
        merca_a: merca,
        lhs,
        rhs,
    })
}

pub fn check_recurrence(n: usize) -> Result<bool, RhoError> {
    recurrence_sides(n).map(|c| c.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn single_parts() {
        assert_eq!(single_part_count(Family::Overpartition, 5), big(2));
        assert_eq!(single_part_count(Family::LRegular(3), 6), big(0));
        assert_eq!(single_part_count(Family::KColored(4), 7), big(4));
        assert_eq!(single_part_count(Family::Cubic, 6), big(2));
        assert_eq!(single_part_count(Family::Cubic, 5), big(1));
    }

    #[test]
    fn worked_examples() {
        assert_eq!(rho_count(Family::Unrestricted, 12), big(10));
        assert_eq!(rho_count(Family::EvenLessThanOdd, 10), big(3));
        assert_eq!(rho_count(Family::Overpartition, 8), big(12));
        assert_eq!(rho_direct(Family::Overpartition, 8), big(12));
        for f in [Family::Unrestricted, Family::Cubic, Family::KColored(3)] {
            assert_eq!(rho_count(f, 7), big(0));
            assert_eq!(rho_count(f, 0), big(0));
            assert_eq!(rho_direct(f, 0), big(0));
        }
        assert_eq!(rho_direct(Family::Unrestricted, 2), big(0));
        assert_eq!(rho_direct(Family::Pod, 6), big(1));
    }

    #[test]
    fn rho_twelve_lists_the_ten_partitions() {
        let listed: Vec<String> = rho_partitions(Family::Unrestricted, 12)
            .map(|(p, w)| {
                assert_eq!(w, big(1));
                p.to_string()
            })
            .collect();
        assert_eq!(
            listed,
            [
                "6+5+1",
                "6+4+2",
                "6+4+1+1",
                "6+3+3",
                "6+3+2+1",
                "6+3+1+1+1",
                "6+2+2+2",
                "6+2+2+1+1",
                "6+2+1+1+1+1",
                "6+1+1+1+1+1+1",
            ]
        );
        assert_eq!(rho_direct(Family::Unrestricted, 12), big(10));
    }

    #[test]
    fn rho_epsilon_ten() {
        let listed: Vec<String> = rho_partitions(Family::EvenLessThanOdd, 10)
            .map(|(p, _)| p.to_string())
            .collect();
        assert_eq!(listed, ["5+3+2", "5+3+1+1", "5+1+1+1+1+1"]);
    }

    #[test]
    fn rho_a_values() {
        assert_eq!(rho_a(12).unwrap(), big(99));
        assert_eq!(rho_a(2).unwrap(), big(0));
        assert_eq!(rho_a(4).unwrap(), big(3));
        assert_eq!(rho_a(7), Err(RhoError::OddArgument(7)));
        assert_eq!(rho_a(0), Err(RhoError::OddArgument(0)));
    }

    #[test]
    fn recurrence_examples() {
        let c = recurrence_sides(12).unwrap();
        assert_eq!(c.lhs, BigInt::from(198));
        assert_eq!(c.rhs, BigInt::from(12 * 9 + 2 * 45));
        assert!(check_recurrence(2).unwrap());
        assert_eq!(recurrence_sides(2).unwrap().lhs, BigInt::zero());
        assert!(check_recurrence(4).unwrap());
        assert_eq!(recurrence_sides(4).unwrap().lhs, BigInt::from(6));
        assert_eq!(check_recurrence(5), Err(RhoError::OddArgument(5)));
    }

    #[test]
    fn table_zeroes_odd_entries() {
        let t = rho_table(Family::Unrestricted, 12);
        assert_eq!(t.len(), 13);
        assert!(t.iter().filter(|r| r.n % 2 == 1).all(|r| r.value.is_zero()));
        assert_eq!(t[12].value, big(10));
    }
}
