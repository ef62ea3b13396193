//! Structural predicates: strong connectivity, exchanges, inductive strong
//! connectivity, collapsing an exchange and adding one.

use compartment_ident::charpoly::{has_expected_dimension, DimensionOptions};
use compartment_ident::graph::{
    add_exchange_vertex, collapse_at, exchanges, io_strong_component, is_inductively_strongly_connected,
    is_strongly_connected, CompartmentGraph,
};

fn main() -> compartment_ident::Result<()> {
    let opts = DimensionOptions::default();
    let g = CompartmentGraph::from_json(include_str!("../fixtures/isc5.json"))?;
    println!("{g}");
    println!("strongly connected: {}", is_strongly_connected(&g));
    println!("isc ordering: {:?}", is_inductively_strongly_connected(&g).map(|c| c.ordering));

    for v in exchanges(&g) {
        let collapsed = collapse_at(&g, v)?;
        println!("collapse 1 <-> {v}: {collapsed}, expected dimension {}", has_expected_dimension(&collapsed, opts)?);
    }

    let cycle = CompartmentGraph::directed_cycle(4);
    let bigger = add_exchange_vertex(&cycle);
    println!("{cycle} -> {bigger}: expected dimension {}", has_expected_dimension(&bigger, opts)?);

    let leaky = CompartmentGraph::new(4, [(1, 2), (2, 1), (2, 3), (4, 1)])?;
    println!("{leaky} reduces to {}", io_strong_component(&leaky));
    Ok(())
}
