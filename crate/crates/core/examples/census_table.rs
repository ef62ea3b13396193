//! Prints the census table for 3 to 5 vertices as CSV.
//!
//! Run with `cargo run --release --example census_table`.

use std::time::Instant;

use compartment_ident::census::{census_row, CensusOptions, CensusRow};

const ROWS: [(usize, usize); 9] = [(3, 3), (3, 4), (4, 4), (4, 5), (4, 6), (5, 5), (5, 6), (5, 7), (5, 8)];

fn main() -> compartment_ident::Result<()> {
    println!("{}", CensusRow::CSV_HEADER);
    for (n, m) in ROWS {
        let start = Instant::now();
        let row = census_row(n, m, CensusOptions::default())?;
        println!("{}", row.to_csv());
        eprintln!("  ({n},{m}) in {:.2?}", start.elapsed());
    }
    Ok(())
}
