//! Reparametrizing the five-compartment graph with a chosen spanning tree,
//! then writing each new parameter in terms of basis cycles.

use compartment_ident::charpoly::DimensionOptions;
use compartment_ident::graph::CompartmentGraph;
use compartment_ident::reparam::{
    format_monomial, reparametrize_with_tree, reparametrized_dimension, verify_reparametrization, SpanningTree,
};

fn main() -> compartment_ident::Result<()> {
    let g = CompartmentGraph::from_json(include_str!("../fixtures/isc5.json"))?;
    let opts = DimensionOptions::default();
    // edges 2->3, 3->4, 4->5, 5->1, i.e. a32, a43, a54, a15
    let tree = SpanningTree::from_pairs(&g, &[(2, 3), (3, 4), (4, 5), (5, 1)])?;
    let r = reparametrize_with_tree(&g, &tree, opts)?;

    println!("{}", r.to_json(&g));

    let qs: Vec<String> = (1..=r.basis.len()).map(|l| format!("q{l}")).collect();
    for (l, c) in r.basis.cycles.iter().enumerate() {
        println!("{} = {}", qs[l], c.monomial_string(&g));
    }
    for x in &r.expressions {
        println!("{} -> {}", g.edge(x.edge).parameter_name(), format_monomial(&x.exponents, &qs));
    }
    println!("verified: {}", verify_reparametrization(&g, &r).passed());
    println!("rank in new parameters: {} of {}", reparametrized_dimension(&g, &r, opts)?, g.m() + 1);
    Ok(())
}
