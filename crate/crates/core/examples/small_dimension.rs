//! Nothing is tied to dimension 4. A two-dimensional catalog and a curve
//! whose limit is not reached by rescaling basis vectors.
//!
//! `cargo run --example small_dimension`

use superdegen::catalog::Catalog;
use superdegen::degen::{load_cert_file, verify_specialization, Cert};
use superdegen::exact::Scalar;
use superdegen::invariants::{orbit_dim, stabilizer_dim};
use superdegen::superalg::cn_structure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data/n2");
    let cat = Catalog::from_path(format!("{dir}/catalog.json"))?;
    for e in cat.entries() {
        let sc = &e.constants;
        println!(
            "{}: stab {}, orbit {}",
            e.label,
            stabilizer_dim(sc),
            orbit_dim(sc)
        );
    }
    for c in load_cert_file(format!("{dir}/nonhomogeneous.json"))? {
        if let Cert::Specialization(s) = c {
            println!(
                "{} -> {}: {:?}",
                s.source,
                s.target,
                verify_specialization(&cat, &s)?
            );
        }
    }
    for n in 2..=5 {
        let dims: Vec<usize> = (1..=n)
            .map(|i| cn_structure::<Scalar>(n, i).map(|c| orbit_dim(&c)))
            .collect::<Result<_, _>>()?;
        println!("C_{n}(1..{n}) orbit dims {dims:?}");
    }
    Ok(())
}
