//! Invariants of one entry: stabilizer and orbit dimension, closed-set
//! membership and the full fingerprint. Also shows that the fingerprint is
//! unchanged by a change of basis.
//!
//! `cargo run --example invariants -- '(3|3)'`

use superdegen::catalog::Catalog;
use superdegen::exact::{Field, Scalar};
use superdegen::invariants::{closed_set_member, fingerprint, orbit_dim, stabilizer_dim, ClosedSet};
use superdegen::linalg::Matrix;
use superdegen::superalg::GroupElement;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "(3|3)".into());
    let sc = &Catalog::embedded().entry(&label)?.constants;

    println!("{label}: stab {}, orbit {}", stabilizer_dim(sc), orbit_dim(sc));
    for set in [
        ClosedSet::A,
        ClosedSet::B,
        ClosedSet::C,
        ClosedSet::D,
        ClosedSet::E,
    ] {
        match closed_set_member(sc, set) {
            Ok(m) => println!("  in {set:?}: {m}"),
            Err(e) => println!("  {set:?}: {e}"),
        }
    }
    let fp = fingerprint(sc)?;
    println!("{}", serde_json::to_string_pretty(&fp)?);

    let g = Matrix::from_fn(4, 4, |r, c| match (r, c) {
        (0, 0) => Scalar::from_i64(1),
        (_, 0) => Scalar::from_i64(0),
        _ => Scalar::from_i64(((r * 3 + c * 5) % 4) as i64 - 1),
    });
    let moved = sc.transport(&GroupElement::new(g)?)?;
    println!(
        "after a basis change the fingerprint is {}",
        if fingerprint(&moved)? == fp {
            "the same"
        } else {
            "DIFFERENT"
        }
    );
    Ok(())
}
