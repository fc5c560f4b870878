//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`Series`] of order `N` holds the coefficients of `q^0 ..= q^N`. Binary
//! operations between series of different orders truncate to the smaller
//! order, so infinite products and rational correction terms compose freely.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term {0} is not a unit (must be +1 or -1)")]
    NotAUnit(BigInt),
    #[error("coefficient index {index} is beyond truncation order {order}")]
    IndexBeyondOrder { index: usize, order: usize },
}

/// Sign selector for [`Series::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A power series `c_0 + c_1 q + ... + c_N q^N`, exact modulo `q^(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Builds a series from explicit coefficients; the order is `len - 1`.
    ///
    /// Panics on an empty vector, since every series has at least `c_0`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    /// `c * q^degree`, or the zero series when `degree > order`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c.into();
        }
        s
    }

    /// `1 / (1 - q^period)`: ones at every multiple of `period`.
    pub fn geometric(period: usize, order: usize) -> Self {
        assert!(period >= 1, "geometric period must be positive");
        let mut s = Self::zero(order);
        for n in (0..=order).step_by(period) {
            s.coeffs[n] = BigInt::one();
        }
        s
    }

    /// `(q^start; q^step)_inf = prod_{k >= 0} (1 - q^(start + k*step))`, truncated.
    pub fn pochhammer(start: usize, step: usize, order: usize) -> Self {
        assert!(
            start >= 1 && step >= 1,
            "pochhammer arguments must be positive"
        );
        let mut s = Self::one(order);
        let mut exponent = start;
        while exponent <= order {
            s.mul_one_minus_q_pow(exponent);
            exponent += step;
        }
        s
    }

    /// `prod (q^m; q^m)_inf ^ e` over the given `(m, e)` factors.
    ///
    /// Each factor is applied one binomial `(1 - q^j)` at a time: positive
    /// exponents multiply, negative exponents divide. Both steps are exact
    /// in-place linear passes.
    pub fn eta_quotient(factors: &[(usize, i32)], order: usize) -> Self {
        let mut s = Self::one(order);
        for &(m, e) in factors {
            assert!(m >= 1, "eta factor base must be positive");
            for j in (m..=order).step_by(m) {
                for _ in 0..e.unsigned_abs() {
                    if e > 0 {
                        s.mul_one_minus_q_pow(j);
                    } else {
                        s.div_one_minus_q_pow(j);
                    }
                }
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^n`. Asking past the truncation order is an error,
    /// never a silent zero.
    pub fn coeff(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::IndexBeyondOrder {
            index: n,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// `a + b` or `a - b`, truncated to the smaller order.
    pub fn combine(&self, other: &Series, sign: Sign) -> Self {
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| match sign {
                Sign::Plus => a + b,
                Sign::Minus => a - b,
            })
            .collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        Self {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Schoolbook convolution, truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse; requires `c_0 = +-1` so the result stays integral.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.abs() != BigInt::one() {
            return Err(SeriesError::NotAUnit(a0.clone()));
        }
        // 1/a0 == a0 for a unit.
        let inv0 = a0.clone();
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        coeffs.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &coeffs[n - i];
                }
            }
            coeffs.push(-(acc * &inv0));
        }
        Ok(Self { coeffs })
    }

    /// In place `self *= (1 - q^j)`.
    fn mul_one_minus_q_pow(&mut self, j: usize) {
        for n in (j..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] -= &lo[n - j];
        }
    }

    /// In place `self /= (1 - q^j)`, i.e. `self *= sum_k q^(jk)`.
    fn div_one_minus_q_pow(&mut self, j: usize) {
        for n in j..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] += &lo[n - j];
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}*q^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.combine(rhs, Sign::Plus)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.combine(rhs, Sign::Minus)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub);
