//! Truncated q-series: Euler's product, its inverse, and an eta quotient.
//!
//! cargo run -p rho-partitions --example series_basics

use rho_partitions::series::Series;

fn main() {
    let order = 20;
    let euler = Series::pochhammer(1, 1, order);
    println!("(q;q)_inf          = {euler}");

    let partitions = euler.inverse().expect("constant term is 1");
    println!("1/(q;q)_inf        = {partitions}");

    // Overpartitions: (q^2;q^2)_inf / (q;q)_inf^2
    let over = Series::eta_quotient(&[(2, 1), (1, -2)], order);
    println!("overpartition gf   = {over}");

    let corrected = &Series::eta_quotient(&[(2, -1)], order) - &Series::geometric(2, order);
    println!("1/(q^2;q^2) - 1/(1-q^2) = {corrected}");

    match Series::from_i64s(&[2, 1]).inverse() {
        Ok(_) => unreachable!(),
        Err(e) => println!("inverse of 2 + q: {e}"),
    }
}
