//! Browse the embedded catalog: components, declared dimensions, one entry's
//! nonzero structure constants, and a family member at a chosen parameter.
//!
//! `cargo run --example catalog -- '(18;l|1)' 3`

use superdegen::catalog::Catalog;
use superdegen::exact::{parse_scalar, Field};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or_else(|| "(7|1)".into());
    let value = args.next().map(|v| parse_scalar(&v)).transpose()?;

    let cat = Catalog::embedded();
    for comp in 1..=4 {
        let labels: Vec<&str> = cat.component(comp).map(|e| e.label.as_str()).collect();
        println!("dim A_0 = {comp}: {} entries: {}", labels.len(), labels.join(" "));
    }

    let e = cat.entry(&label)?;
    println!("\n{}  basis {}", e.label, e.basis_doc.join(", "));
    println!(
        "declared stab {:?}, orbit {:?}",
        e.expected_stab_dim, e.expected_orbit_dim
    );
    let sc = cat.get(&label, value.as_ref())?;
    for (name, v) in sc.named_entries() {
        if !v.is_zero() {
            println!("  {name} = {v}");
        }
    }
    Ok(())
}
