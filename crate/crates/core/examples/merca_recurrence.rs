//! Distinct-part sums: a(n) by enumeration and by its generating function,
//! then the recurrence linking rho_a, rho and a.
//!
//! cargo run -p rho-partitions --example merca_recurrence

use rho_partitions::combinatorics::{merca_a, merca_a_series};
use rho_partitions::rho::recurrence_sides;

fn main() {
    let s = merca_a_series(12);
    for n in 1..=12 {
        println!(
            "a({n:>2}) = {:>4}   series {:>4}",
            merca_a(n),
            s.coeffs()[n]
        );
    }
    println!();
    println!(
        "{:>3} {:>6} {:>6} {:>8} {:>8}",
        "n", "rho", "rho_a", "2rho_a", "rhs"
    );
    for n in (2..=30).step_by(2) {
        let c = recurrence_sides(n).unwrap();
        println!(
            "{:>3} {:>6} {:>6} {:>8} {:>8} {}",
            c.n,
            c.rho,
            c.rho_a,
            c.lhs,
            c.rhs,
            if c.holds() { "" } else { "FAILS" }
        );
    }
}
