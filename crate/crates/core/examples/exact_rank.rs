//! Jacobian ranks over the prime field and over the rationals.

use compartment_ident::algebra::ArithmeticMode;
use compartment_ident::charpoly::{image_dimension, DimensionOptions};
use compartment_ident::graph::CompartmentGraph;

fn main() -> compartment_ident::Result<()> {
    let graphs = [
        CompartmentGraph::from_json(include_str!("../fixtures/identifiable4.json"))?,
        CompartmentGraph::from_json(include_str!("../fixtures/unidentifiable4.json"))?,
        CompartmentGraph::from_json(include_str!("../fixtures/isc5.json"))?,
    ];
    for g in &graphs {
        for mode in [ArithmeticMode::PrimeField, ArithmeticMode::Rational] {
            let report = image_dimension(g, DimensionOptions::default().with_mode(mode).with_trials(3))?;
            println!("{g}  {mode:<11} ranks {:?} -> d = {}", report.ranks, report.d);
        }
    }
    Ok(())
}
