//! A strongly connected graph whose image has dimension 6 < m + 1, so no
//! identifiable scaling reparametrization exists.

use compartment_ident::charpoly::DimensionOptions;
use compartment_ident::graph::CompartmentGraph;
use compartment_ident::reparam::reparametrize;
use compartment_ident::Error;

fn main() -> compartment_ident::Result<()> {
    let g = CompartmentGraph::from_json(include_str!("../fixtures/unidentifiable4.json"))?;
    match reparametrize(&g, DimensionOptions::default()) {
        Err(Error::NoReparametrization(report)) => {
            println!("{g}");
            println!("no reparametrization: d = {} but m + 1 = {}", report.d, report.expected);
            println!("{}", report.to_json_value());
        }
        Ok(_) => println!("unexpectedly found a reparametrization"),
        Err(e) => return Err(e),
    }
    Ok(())
}
