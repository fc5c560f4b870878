//! Exact partition counting for the rho family of partition functions.
//!
//! A rho partition of `n = 2λ` has its largest part `λ` exactly once, with
//! the remaining parts forming a partition of `λ` drawn from some family:
//! unrestricted, ℓ-regular, overpartitions and their odd, even and ℓ-regular
//! restrictions, k-colored, cubic, pod, ped, or "every even part below every
//! odd part".
//!
//! - [`series`]: truncated power series over unbounded integers, with
//!   q-Pochhammer symbols and eta quotients.
//! - [`combinatorics`]: partition enumeration and the family counters.
//! - [`rho`]: the rho construction, its direct-enumeration oracle and the
//!   distinct-part-sum recurrence.
//! - [`gfcatalog`]: closed-form generating functions for each variant and a
//!   verifier that compares them coefficient by coefficient.
//! - [`cli`]: the `rho-partitions` command line.
//!
//! ```
//! use rho_partitions::gfcatalog::{build_gf, Variant, VariantSpec};
//! use rho_partitions::rho::rho_count;
//! use rho_partitions::combinatorics::Family;
//!
//! let spec = VariantSpec::new(Variant::Rho, 12).unwrap();
//! let series = build_gf(&spec);
//! assert_eq!(series.coeff(12).unwrap(), &10.into());
//! assert_eq!(rho_count(Family::Unrestricted, 12), 10u32.into());
//! ```

pub mod cli;
pub mod combinatorics;
pub mod gfcatalog;
pub mod rho;
pub mod series;

pub use combinatorics::{Family, Partition};
pub use gfcatalog::{Oracle, Variant, VariantSpec, VerificationReport};
pub use series::Series;
