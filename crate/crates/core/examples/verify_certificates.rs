//! Checks every shipped certificate file and prints one verdict per line.
//!
//! Run with `cargo run --example verify_certificates`.

use std::time::Instant;

use superdegen::catalog::Catalog;
use superdegen::degen::{shipped, verify_all, SHIPPED};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let catalog = Catalog::embedded();
    for (name, _) in SHIPPED {
        let start = Instant::now();
        let checked = verify_all(catalog, shipped(name)?, None);
        println!(
            "== {name} ({} certificates, {:.2?})",
            checked.len(),
            start.elapsed()
        );
        for c in &checked {
            let mark = if c.meets_expectation() { "ok  " } else { "FAIL" };
            println!(
                "{mark} {:<8} {:>9} -> {:<9} {:<13} {}",
                c.cert.id(),
                c.cert.source(),
                c.cert.target(),
                c.verdict.status(),
                c.verdict.detail()
            );
        }
    }
    Ok(())
}
