//! Why one structure does not degenerate to another: each method applied to
//! a few pairs, with the invariant values it compares.
//!
//! `cargo run --example obstructions`

use superdegen::catalog::Catalog;
use superdegen::degen::{separates, Method};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::embedded();
    let pairs = [
        ("(8|1)", "(8|2)", Method::Od),
        ("(2|1)", "(7|1)", Method::A),
        ("(13|1)", "(14|1)", Method::B),
        ("(16|3)", "(16|2)", Method::E),
        ("(3|3)", "(3|2)", Method::C),
        ("(18;λ|2)", "(7|2)", Method::D),
        ("(1|1)", "(1|2)", Method::Dim0),
        ("(10|1)", "(11|3)", Method::Od),
    ];
    for (s, t, m) in pairs {
        match separates(cat.entry(s)?, cat.entry(t)?, m)? {
            Some((true, why)) => println!("{s} -/-> {t} by {m:?}: {why}"),
            Some((false, why)) => println!("{s} -> {t}? {m:?} does not decide: {why}"),
            None => println!("{s} -> {t}: {m:?} needs external data"),
        }
    }
    Ok(())
}
