pub mod algebra;
pub mod census;
pub mod charpoly;
pub mod cli;
pub mod error;
pub mod graph;
pub mod reparam;

pub use error::{Error, Result};
