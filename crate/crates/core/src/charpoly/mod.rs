//! The double characteristic polynomial map `A -> (c_1..c_n, d_1..d_{n-1})`.
//!
//! Coefficients are available symbolically (expanded over disjoint cycle
//! collections) and numerically (Faddeev-LeVerrier over any exact ring,
//! including jets for Jacobians). The generic image dimension is the
//! Jacobian rank at random points.

mod equation;
mod numeric;
mod poly;
mod symbolic;

pub use equation::io_equation_text;
pub use numeric::{
    compartment_matrix, faddeev_leverrier, has_expected_dimension, image_dimension, jacobian, jacobian_in,
    numeric_coefficients, random_point, CoefficientVector, DimensionOptions, DimensionReport,
};
pub use poly::MonomialPolynomial;
pub use symbolic::symbolic_coefficients;

use crate::error::{Error, Result};
use crate::graph::{elementary_cycles, CompartmentGraph, Cycle};

/// `m + 1` algebraically independent identifiable cycle monomials: the
/// diagonal entries plus a basis of `m - n + 1` longer cycles.
pub fn identifiable_cycle_functions(g: &CompartmentGraph, opts: DimensionOptions) -> Result<Vec<Cycle>> {
    if !has_expected_dimension(g, opts)? {
        return Err(Error::NotExpectedDimension);
    }
    let tree = crate::reparam::spanning_tree(g)?;
    let basis = crate::reparam::cycle_basis(g, &tree)?;
    let mut out: Vec<Cycle> = elementary_cycles(g).iter().filter(|c| c.is_one_cycle()).cloned().collect();
    out.extend(basis.cycles);
    Ok(out)
}
