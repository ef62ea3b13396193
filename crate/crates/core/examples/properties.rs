//! Proven structural statements checked over all graphs with at most five
//! vertices.
//!
//! Run with `cargo run --release --example properties`.

use compartment_ident::census::{non_isc_identifiable_classes, property_suite, CensusOptions};

fn main() -> compartment_ident::Result<()> {
    let opts = CensusOptions::default();
    let report = property_suite(5, opts)?;
    for r in &report.results {
        println!("{:<20} {:>6} checked, {} violations", r.name, r.checked, r.violations.len());
    }

    let odd = non_isc_identifiable_classes(4, 6, opts)?;
    println!("identifiable but not isc, (4,6): {} classes", odd.len());
    for g in odd {
        println!("  {g}");
    }
    Ok(())
}
