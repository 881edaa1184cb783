//! Degeneration diagram of one component in Graphviz format.
//!
//! `cargo run --example diagram -- 3 | dot -Tsvg > c3.svg`

use superdegen::catalog::Catalog;
use superdegen::degen::{assemble, shipped_all, verify_all};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let comp: usize = std::env::args().nth(1).map_or(Ok(3), |s| s.parse())?;
    let cat = Catalog::embedded();
    let checked = verify_all(cat, shipped_all()?, None);
    let (graph, rejected) = assemble(cat, &checked)?;
    for id in rejected {
        eprintln!("left out: {id}");
    }
    let d = graph.diagram(comp);
    eprintln!("{} nodes, {} edges", d.nodes.len(), d.edges.len());
    print!("{}", d.to_dot());
    Ok(())
}
