//! Stabilizer and orbit dimension tables, computed from the catalog.
//!
//! `cargo run --example orbit_tables`

use superdegen::cli::{cmd_tables, TableKind};

fn main() {
    for kind in [TableKind::Stab, TableKind::Orbit] {
        let r = cmd_tables(None, kind);
        print!("{}", r.text);
        println!();
    }
}
