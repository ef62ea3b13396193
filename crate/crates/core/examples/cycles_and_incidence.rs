//! Elementary cycles, the incidence matrix and the tree block inverse.

use compartment_ident::algebra::inverse_unimodular;
use compartment_ident::graph::{elementary_cycles, incidence_matrix, undirected_components, CompartmentGraph};
use compartment_ident::reparam::{spanning_tree, tree_block};

fn main() -> compartment_ident::Result<()> {
    let g = CompartmentGraph::from_json(include_str!("../fixtures/identifiable4.json"))?;

    for c in &elementary_cycles(&g) {
        println!("{:?}  {}", c.vertices, c.monomial_string(&g));
    }

    let e = incidence_matrix(&g);
    println!("E(G) =\n{e:?}");
    println!("rank {} = n - components = {}", e.rank(), g.n() - undirected_components(&g));

    let tree = spanning_tree(&g)?;
    let e1 = tree_block(&g, &tree);
    println!("E1 =\n{e1:?}");
    println!("E1^-1 =\n{:?}", inverse_unimodular(&e1)?);
    Ok(())
}
