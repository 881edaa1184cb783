//! Structures nothing else degenerates to, per component, and the pairs the
//! data leaves open.
//!
//! `cargo run --example generic`

use superdegen::catalog::Catalog;
use superdegen::degen::{assemble, generic_structures, shipped_all, verify_all};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::embedded();
    let checked = verify_all(cat, shipped_all()?, None);
    let (graph, _) = assemble(cat, &checked)?;
    let mut total = 0;
    for comp in 1..=4 {
        println!("dim A_0 = {comp}");
        for g in generic_structures(&graph, comp) {
            let fam = if g.family { " (family)" } else { "" };
            println!("  {:<10} orbit {:>2}{fam}  {:?}", g.label, g.orbit_dim, g.flag);
            total += 1;
        }
    }
    println!("{total} listed");
    println!("open pairs:");
    for p in graph.open_pairs.iter().filter(|p| p.registered.is_some()) {
        println!("  {} -> {}", p.source, p.target);
    }
    Ok(())
}
