//! Collapse conjectures over all graphs with 3 to 5 vertices.
//!
//! Run with `cargo run --release --example conjectures`.

use compartment_ident::census::{test_conjectures, CensusOptions};

fn main() -> compartment_ident::Result<()> {
    for n in 3..=5 {
        for r in test_conjectures(n, CensusOptions::default())? {
            println!(
                "n = {n} {}: {} graphs, {} collapses, {} counterexamples",
                r.id.as_str(),
                r.tested_graphs,
                r.tested_collapses,
                r.counterexamples.len()
            );
            for c in r.counterexamples.iter().take(5) {
                println!("  {} at {} (G: {}, G': {})", c.graph, c.exchange, c.expected, c.collapsed_expected);
            }
        }
    }
    Ok(())
}
