//! The rho construction: the partitions behind rho(12) and rho_eps(10), and
//! the first values of every variant.
//!
//! cargo run -p rho-partitions --example rho_variants

use rho_partitions::combinatorics::Family;
use rho_partitions::gfcatalog::{catalog, DEFAULT_ELLS, DEFAULT_KS};
use rho_partitions::rho::{rho_count, rho_partitions};

fn main() {
    println!("rho(12):");
    for (p, _) in rho_partitions(Family::Unrestricted, 12) {
        println!("  {p}");
    }
    println!("rho_eps(10):");
    for (p, _) in rho_partitions(Family::EvenLessThanOdd, 10) {
        println!("  {p}");
    }
    println!("overpartition remainders of rho_over(6), with decoration weights:");
    for (p, w) in rho_partitions(Family::Overpartition, 6) {
        println!("  {p}  x{w}");
    }

    println!("\nvalues at n = 2, 4, ..., 24:");
    for v in catalog(&DEFAULT_ELLS, &DEFAULT_KS) {
        let row: Vec<String> = (2..=24)
            .step_by(2)
            .map(|n| rho_count(v.family(), n).to_string())
            .collect();
        println!("  {:<22} {}", v.to_string(), row.join(" "));
    }
}
