//! Feed the verifier a k-colored formula built on 1/(q^k;q^k) instead of
//! 1/(q;q)^k and watch it report the first disagreeing coefficients.
//!
//! cargo run -p rho-partitions --example typo_detection

use rho_partitions::gfcatalog::{build_gf, verify_series, Budget, Oracle, Variant, VariantSpec};
use rho_partitions::series::Series;

fn main() {
    let k = 2u32;
    let order = 16;
    let spec = VariantSpec::new(Variant::RhoKColored(k), order).unwrap();

    let inner = Series::eta_quotient(&[(2 * k as usize, -1)], order);
    let correction = Series::monomial(k as i64, 2, order).mul(&Series::geometric(2, order));
    let wrong = &(&inner - &correction) - &Series::one(order);

    let good = verify_series(&spec, &build_gf(&spec), Oracle::Both, &Budget::default()).unwrap();
    println!("1/(q^2;q^2)^k form: {} mismatches", good.mismatches.len());

    let bad = verify_series(&spec, &wrong, Oracle::Both, &Budget::default()).unwrap();
    println!("1/(q^2k;q^2k) form: {} mismatches", bad.mismatches.len());
    for m in bad.mismatches.iter().take(5) {
        println!("  n={:<3} series={:<6} oracle={}", m.n, m.series, m.oracle);
    }
}
