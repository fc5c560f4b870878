//! Generating functions for every rho variant, and a coefficient-by-coefficient
//! verifier that checks them against the enumeration counters.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::Family;
use crate::rho::{rho_count, rho_direct};
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown variant {0:?}")]
    UnknownVariant(String),
    #[error("variant {variant} needs parameter --{param}")]
    MissingParameter {
        variant: &'static str,
        param: &'static str,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown oracle {0:?} (expected combinator, direct-enumeration or both)")]
    UnknownOracle(String),
    #[error("order {order} exceeds the {oracle} enumeration budget of {limit}")]
    BudgetExceeded {
        oracle: Oracle,
        order: usize,
        limit: usize,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// One rho identity, with its inner family parameter where it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Rho,
    RhoLRegular(u32),
    RhoOver,
    RhoOverOdd,
    RhoOverEven,
    RhoOverLRegular(u32),
    RhoKColored(u32),
    RhoCubic,
    RhoPod,
    RhoPed,
    RhoEpsilon,
}

impl Variant {
    pub const NAMES: [&'static str; 11] = [
        "rho",
        "rho-lregular",
        "rho-over",
        "rho-over-odd",
        "rho-over-even",
        "rho-over-lregular",
        "rho-kcolored",
        "rho-cubic",
        "rho-pod",
        "rho-ped",
        "rho-epsilon",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Rho => "rho",
            Variant::RhoLRegular(_) => "rho-lregular",
            Variant::RhoOver => "rho-over",
            Variant::RhoOverOdd => "rho-over-odd",
            Variant::RhoOverEven => "rho-over-even",
            Variant::RhoOverLRegular(_) => "rho-over-lregular",
            Variant::RhoKColored(_) => "rho-kcolored",
            Variant::RhoCubic => "rho-cubic",
            Variant::RhoPod => "rho-pod",
            Variant::RhoPed => "rho-ped",
            Variant::RhoEpsilon => "rho-epsilon",
        }
    }

    pub fn ell(&self) -> Option<u32> {
        match *self {
            Variant::RhoLRegular(ell) | Variant::RhoOverLRegular(ell) => Some(ell),
            _ => None,
        }
    }

    pub fn k(&self) -> Option<u32> {
        match *self {
            Variant::RhoKColored(k) => Some(k),
            _ => None,
        }
    }

    /// Parses a kebab-case name; `ell` and `k` are consulted only by the
    /// variants that take them.
    pub fn from_name(name: &str, ell: Option<u32>, k: Option<u32>) -> Result<Self, CatalogError> {
        let need_ell = |variant| {
            ell.ok_or(CatalogError::MissingParameter {
                variant,
                param: "ell",
            })
        };
        let v = match name {
            "rho" => Variant::Rho,
            "rho-lregular" => Variant::RhoLRegular(need_ell("rho-lregular")?),
            "rho-over" => Variant::RhoOver,
            "rho-over-odd" => Variant::RhoOverOdd,
            "rho-over-even" => Variant::RhoOverEven,
            "rho-over-lregular" => Variant::RhoOverLRegular(need_ell("rho-over-lregular")?),
            "rho-kcolored" => Variant::RhoKColored(k.ok_or(CatalogError::MissingParameter {
                variant: "rho-kcolored",
                param: "colors",
            })?),
            "rho-cubic" => Variant::RhoCubic,
            "rho-pod" => Variant::RhoPod,
            "rho-ped" => Variant::RhoPed,
            "rho-epsilon" => Variant::RhoEpsilon,
            other => return Err(CatalogError::UnknownVariant(other.to_string())),
        };
        v.validate()?;
        Ok(v)
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        self.family()
            .validate()
            .map_err(|e| CatalogError::InvalidParameter(e.to_string()))
    }

    /// The family the remaining parts are drawn from.
    pub fn family(&self) -> Family {
        match *self {
            Variant::Rho => Family::Unrestricted,
            Variant::RhoLRegular(ell) => Family::LRegular(ell),
            Variant::RhoOver => Family::Overpartition,
            Variant::RhoOverOdd => Family::OverpartitionOdd,
            Variant::RhoOverEven => Family::OverpartitionEven,
            Variant::RhoOverLRegular(ell) => Family::OverpartitionLRegular(ell),
            Variant::RhoKColored(k) => Family::KColored(k),
            Variant::RhoCubic => Family::Cubic,
            Variant::RhoPod => Family::Pod,
            Variant::RhoPed => Family::Ped,
            Variant::RhoEpsilon => Family::EvenLessThanOdd,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        if let Some(ell) = self.ell() {
            write!(f, " ell={ell}")?;
        }
        if let Some(k) = self.k() {
            write!(f, " k={k}")?;
        }
        Ok(())
    }
}

/// A variant checked up to truncation order `order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariantSpec {
    variant: Variant,
    order: usize,
}

impl VariantSpec {
    pub fn new(variant: Variant, order: usize) -> Result<Self, CatalogError> {
        variant.validate()?;
        Ok(Self { variant, order })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

pub fn family_of(spec: &VariantSpec) -> Family {
    spec.variant.family()
}

/// The closed-form generating function of `spec.variant`, truncated at `spec.order`.
pub fn build_gf(spec: &VariantSpec) -> Series {
    let n = spec.order;
    let eta = |factors: &[(usize, i32)]| Series::eta_quotient(factors, n);
    let geo = |m: usize| Series::geometric(m, n);
    let one = Series::one(n);
    // c q^d / (1 - q^m)
    let shifted_geo = |c: i64, d: usize, m: usize| Series::monomial(c, d, n).mul(&geo(m));

    match spec.variant {
        Variant::Rho => &eta(&[(2, -1)]) - &geo(2),
        Variant::RhoLRegular(ell) => {
            let l2 = 2 * ell as usize;
            &(&eta(&[(l2, 1), (2, -1)]) - &geo(2)) + &shifted_geo(1, l2, l2)
        }
        Variant::RhoOver => &(&eta(&[(4, 1), (2, -2)]) - &geo(2).scale(2)) + &one,
        Variant::RhoOverOdd => &(&eta(&[(4, 3), (2, -2), (8, -1)]) - &shifted_geo(2, 2, 4)) - &one,
        Variant::RhoOverEven => &(&eta(&[(8, 1), (4, -2)]) - &shifted_geo(2, 4, 4)) - &one,
        Variant::RhoOverLRegular(ell) => {
            let l = ell as usize;
            let main = eta(&[(2 * l, 2), (4, 1), (2, -2), (4 * l, -1)]);
            &(&(&main - &geo(2).scale(2)) + &shifted_geo(2, 2 * l, 2 * l)) + &one
        }
        Variant::RhoKColored(k) => {
            let main = eta(&[(2, -(k as i32))]);
            &(&main - &shifted_geo(k as i64, 2, 2)) - &one
        }
        Variant::RhoCubic => {
            let main = eta(&[(2, -1), (4, -1)]);
            let tail = &(&shifted_geo(1, 6, 4) + &one) + &Series::monomial(1, 2, n);
            &(&main - &geo(2).scale(2)) + &tail
        }
        Variant::RhoPod => &eta(&[(4, 1), (2, -1), (8, -1)]) - &geo(2),
        Variant::RhoPed => &eta(&[(8, 1), (2, -1)]) - &geo(2),
        Variant::RhoEpsilon => geo(2).mul(&(&eta(&[(4, -1)]) - &one)),
    }
}

/// Which counter the series is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Oracle {
    /// `c_f(λ) - s_f(λ)` from enumerated family counts.
    Combinator,
    /// Direct enumeration of the remainders that avoid a part of size `λ`.
    Direct,
    Both,
}

impl Oracle {
    pub fn name(&self) -> &'static str {
        match self {
            Oracle::Combinator => "combinator",
            Oracle::Direct => "direct-enumeration",
            Oracle::Both => "both",
        }
    }

    /// `Both` while direct enumeration is affordable, then `Combinator`.
    pub fn widest_within(order: usize, budget: &Budget) -> Result<Self, CatalogError> {
        if order <= budget.direct {
            Ok(Oracle::Both)
        } else {
            budget.check(Oracle::Combinator, order)?;
            Ok(Oracle::Combinator)
        }
    }
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Oracle {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "combinator" => Ok(Oracle::Combinator),
            "direct" | "direct-enumeration" => Ok(Oracle::Direct),
            "both" => Ok(Oracle::Both),
            other => Err(CatalogError::UnknownOracle(other.to_string())),
        }
    }
}

/// Largest truncation orders each enumeration oracle may be asked to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub combinator: usize,
    pub direct: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            combinator: 120,
            direct: 60,
        }
    }
}

impl Budget {
    fn check(&self, oracle: Oracle, order: usize) -> Result<(), CatalogError> {
        let over = |which: Oracle, limit: usize| {
            if order > limit {
                Err(CatalogError::BudgetExceeded {
                    oracle: which,
                    order,
                    limit,
                })
            } else {
                Ok(())
            }
        };
        match oracle {
            Oracle::Combinator => over(Oracle::Combinator, self.combinator),
            Oracle::Direct => over(Oracle::Direct, self.direct),
            Oracle::Both => {
                over(Oracle::Combinator, self.combinator)?;
                over(Oracle::Direct, self.direct)
            }
        }
    }
}

/// A coefficient where the series and an oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub series: BigInt,
    pub oracle: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec: VariantSpec,
    pub oracle: Oracle,
    pub checked_range: RangeInclusive<usize>,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks `build_gf(spec)` against the chosen oracle under the default budget.
pub fn verify(spec: &VariantSpec, oracle: Oracle) -> Result<VerificationReport, CatalogError> {
    verify_with_budget(spec, oracle, &Budget::default())
}

pub fn verify_with_budget(
    spec: &VariantSpec,
    oracle: Oracle,
    budget: &Budget,
) -> Result<VerificationReport, CatalogError> {
    budget.check(oracle, spec.order)?;
    verify_series(spec, &build_gf(spec), oracle, budget)
}

/// Checks an arbitrary candidate series for `spec`; the hook for testing
/// the verifier itself with perturbed or mistyped formulas.
pub fn verify_series(
    spec: &VariantSpec,
    series: &Series,
    oracle: Oracle,
    budget: &Budget,
) -> Result<VerificationReport, CatalogError> {
    budget.check(oracle, spec.order)?;
    let start = Instant::now();
    let family = family_of(spec);
    let mut mismatches = Vec::new();
    for n in 0..=spec.order {
        let coeff = series.coeff(n)?;
        let mut expected: Vec<BigInt> = Vec::with_capacity(2);
        if matches!(oracle, Oracle::Combinator | Oracle::Both) {
            expected.push(rho_count(family, n).into());
        }
        if matches!(oracle, Oracle::Direct | Oracle::Both) {
            expected.push(rho_direct(family, n).into());
        }
        expected.dedup();
        for value in expected {
            if &value != coeff {
                mismatches.push(Mismatch {
                    n,
                    series: coeff.clone(),
                    oracle: value,
                });
            }
        }
    }
    Ok(VerificationReport {
        spec: *spec,
        oracle,
        checked_range: 0..=spec.order,
        mismatches,
        elapsed: start.elapsed(),
    })
}

/// Every variant, parameterized ones swept over `ells` and `ks`, in a fixed order.
pub fn catalog(ells: &[u32], ks: &[u32]) -> Vec<Variant> {
    let mut out = vec![Variant::Rho];
    out.extend(ells.iter().map(|&l| Variant::RhoLRegular(l)));
    out.extend([Variant::RhoOver, Variant::RhoOverOdd, Variant::RhoOverEven]);
    out.extend(ells.iter().map(|&l| Variant::RhoOverLRegular(l)));
    out.extend(ks.iter().map(|&k| Variant::RhoKColored(k)));
    out.extend([
        Variant::RhoCubic,
        Variant::RhoPod,
        Variant::RhoPed,
        Variant::RhoEpsilon,
    ]);
    out
}

pub const DEFAULT_ELLS: [u32; 5] = [2, 3, 4, 5, 7];
pub const DEFAULT_KS: [u32; 4] = [1, 2, 3, 5];

/// Verifies the whole catalog at `order`, using both oracles when the
/// direct budget allows and the combinator alone otherwise.
pub fn verify_all(
    order: usize,
    ells: &[u32],
    ks: &[u32],
) -> Result<Vec<VerificationReport>, CatalogError> {
    let budget = Budget::default();
    let oracle = Oracle::widest_within(order, &budget)?;
    verify_all_with(order, ells, ks, oracle, &budget, &build_gf)
}

/// [`verify_all`] with an explicit oracle, budget and formula builder.
///
/// Variants are checked in parallel; reports come back in catalog order.
pub fn verify_all_with(
    order: usize,
    ells: &[u32],
    ks: &[u32],
    oracle: Oracle,
    budget: &Budget,
    builder: &(dyn Fn(&VariantSpec) -> Series + Sync),
) -> Result<Vec<VerificationReport>, CatalogError> {
    let specs = catalog(ells, ks)
        .into_iter()
        .map(|v| VariantSpec::new(v, order))
        .collect::<Result<Vec<_>, _>>()?;
    budget.check(oracle, order)?;
    specs
        .par_iter()
        .map(|spec| verify_series(spec, &builder(spec), oracle, budget))
        .collect()
}

/// Serialized form of a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub variant: String,
    pub params: Params,
    pub order: usize,
    pub oracle: String,
    pub mismatches: Vec<MismatchRecord>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchRecord {
    pub n: usize,
    #[serde(with = "json_integer")]
    pub series: BigInt,
    #[serde(with = "json_integer")]
    pub oracle: BigInt,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        let variant = r.spec.variant();
        Self {
            variant: variant.name().to_string(),
            params: Params {
                ell: variant.ell(),
                k: variant.k(),
            },
            order: r.spec.order(),
            oracle: r.oracle.name().to_string(),
            mismatches: r
                .mismatches
                .iter()
                .map(|m| MismatchRecord {
                    n: m.n,
                    series: m.series.clone(),
                    oracle: m.oracle.clone(),
                })
                .collect(),
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

impl TryFrom<&ReportRecord> for VerificationReport {
    type Error = CatalogError;

    fn try_from(r: &ReportRecord) -> Result<Self, CatalogError> {
        let variant = Variant::from_name(&r.variant, r.params.ell, r.params.k)?;
        Ok(Self {
            spec: VariantSpec::new(variant, r.order)?,
            oracle: r.oracle.parse()?,
            checked_range: 0..=r.order,
            mismatches: r
                .mismatches
                .iter()
                .map(|m| Mismatch {
                    n: m.n,
                    series: m.series.clone(),
                    oracle: m.oracle.clone(),
                })
                .collect(),
            elapsed: Duration::from_millis(r.elapsed_ms),
        })
    }
}

/// Unbounded integers as bare JSON numbers.
mod json_integer {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Number::from_str(&v.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map_err(D::Error::custom)
    }
}
