//! Stream partitions in descending lexicographic order and classify them.
//!
//! cargo run -p rho-partitions --example enumerate_partitions -- 6

use rho_partitions::combinatorics::{decoration_weight, enumerate_partitions, satisfies, Family};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);

    println!(
        "{:<14} {:>5} {:>4} {:>4} {:>5} {:>5} {:>5}",
        "partition", "3-reg", "pod", "ped", "e<o", "over", "cubic"
    );
    for p in enumerate_partitions(n) {
        let flag = |f| {
            if satisfies(f, &p).unwrap() {
                "yes"
            } else {
                "-"
            }
        };
        println!(
            "{:<14} {:>5} {:>4} {:>4} {:>5} {:>5} {:>5}",
            p.to_string(),
            flag(Family::LRegular(3)),
            flag(Family::Pod),
            flag(Family::Ped),
            flag(Family::EvenLessThanOdd),
            decoration_weight(Family::Overpartition, &p),
            decoration_weight(Family::Cubic, &p),
        );
    }
}
