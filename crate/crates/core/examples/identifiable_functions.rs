//! Dimension report, identifiable cycle functions and the reparametrized
//! matrix for the four-compartment graph in `fixtures/identifiable4.json`.

use compartment_ident::charpoly::{identifiable_cycle_functions, image_dimension, DimensionOptions};
use compartment_ident::graph::CompartmentGraph;
use compartment_ident::reparam::{matrix_entries, reparametrize, verify_reparametrization};

fn main() -> compartment_ident::Result<()> {
    let g = CompartmentGraph::from_json(include_str!("../fixtures/identifiable4.json"))?;
    let opts = DimensionOptions::default();

    let report = image_dimension(&g, opts)?;
    println!("{g}");
    println!("d = {}, m + 1 = {}", report.d, report.expected);

    let functions: Vec<String> = identifiable_cycle_functions(&g, opts)?.iter().map(|c| c.monomial_string(&g)).collect();
    println!("identifiable: {{{}}}", functions.join(", "));

    let r = reparametrize(&g, opts)?;
    for row in matrix_entries(&g, &r) {
        println!("  {}", row.join("\t"));
    }
    println!("verified: {}", verify_reparametrization(&g, &r).passed());
    Ok(())
}
