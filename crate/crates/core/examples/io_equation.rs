//! Input-output equations of small graphs.

use compartment_ident::charpoly::{io_equation_text, symbolic_coefficients};
use compartment_ident::graph::CompartmentGraph;

fn main() -> compartment_ident::Result<()> {
    let exchange = CompartmentGraph::new(2, [(1, 2), (2, 1)])?;
    println!("{}", io_equation_text(&exchange)?);

    let g = CompartmentGraph::from_json(include_str!("../fixtures/identifiable4.json"))?;
    println!("{}", io_equation_text(&g)?);

    let names = g.parameter_names();
    let (c, d) = symbolic_coefficients(&g);
    for (i, p) in c.iter().enumerate() {
        println!("c{} = {}", i + 1, p.render(&names));
    }
    for (i, p) in d.iter().enumerate() {
        println!("d{} = {}", i + 1, p.render(&names));
    }
    Ok(())
}
