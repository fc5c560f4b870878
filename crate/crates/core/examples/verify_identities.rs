//! Verify every generating function against both enumeration oracles and
//! print the reports as JSON records.
//!
//! cargo run --release -p rho-partitions --example verify_identities -- 60

use rho_partitions::gfcatalog::{verify_all, ReportRecord, DEFAULT_ELLS, DEFAULT_KS};

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(60);
    let reports = match verify_all(order, &DEFAULT_ELLS, &DEFAULT_KS) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    for r in &reports {
        println!(
            "{:<24} {:<10} {}",
            r.spec.variant().to_string(),
            r.oracle.to_string(),
            if r.is_verified() { "ok" } else { "MISMATCH" }
        );
    }
    let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
    println!("{}", serde_json::to_string_pretty(&records[0]).unwrap());
    let failed = reports.iter().filter(|r| !r.is_verified()).count();
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
