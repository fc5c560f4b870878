//! Family counts by brute force next to their generating-function coefficients.
//!
//! cargo run -p rho-partitions --example family_counts

use num_bigint::BigInt;
use rho_partitions::combinatorics::{count, count_via_series, Family};

fn main() {
    let order = 12;
    let families = [
        Family::Unrestricted,
        Family::LRegular(3),
        Family::Overpartition,
        Family::OverpartitionOdd,
        Family::OverpartitionEven,
        Family::OverpartitionLRegular(3),
        Family::KColored(2),
        Family::Cubic,
        Family::Pod,
        Family::Ped,
    ];
    for family in families {
        let series = count_via_series(family, order).unwrap();
        let counts: Vec<String> = (0..=order).map(|n| count(family, n).to_string()).collect();
        let agree = (0..=order).all(|n| BigInt::from(count(family, n)) == series.coeffs()[n]);
        println!(
            "{:<26} {}  [{}]",
            family.to_string(),
            counts.join(" "),
            if agree { "ok" } else { "MISMATCH" }
        );
    }
    let elo: Vec<String> = (0..=order)
        .map(|n| count(Family::EvenLessThanOdd, n).to_string())
        .collect();
    println!(
        "{:<26} {}  [enumeration only]",
        Family::EvenLessThanOdd.to_string(),
        elo.join(" ")
    );
}
