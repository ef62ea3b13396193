use super::{symbolic_coefficients, MonomialPolynomial};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, CompartmentGraph};

fn derivative(var: &str, order: usize) -> String {
    match order {
        0 => var.to_string(),
        1..=3 => format!("{var}{}", "'".repeat(order)),
        _ => format!("{var}^({order})"),
    }
}

fn push_term(out: &mut String, coeff: &MonomialPolynomial, var: &str, names: &[String]) {
    if coeff.is_zero() {
        return;
    }
    let negative = coeff.leading_is_negative();
    let shown = if negative { coeff.negated() } else { coeff.clone() };
    let body = shown.render(names);
    let product = if shown.len() == 1 { format!("{body}*{var}") } else { format!("({body})*{var}") };
    out.push_str(if negative { " - " } else { " + " });
    out.push_str(&product);
}

/// The input-output equation
/// `y^(n) + c_1 y^(n-1) + ... + c_n y = u1^(n-1) + d_1 u1^(n-2) + ... + d_{n-1} u1`
/// with every coefficient expanded in the model parameters.
pub fn io_equation_text(g: &CompartmentGraph) -> Result<String> {
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let n = g.n();
    let names = g.parameter_names();
    let (c, d) = symbolic_coefficients(g);
    let mut lhs = derivative("y", n);
    for (i, ci) in c.iter().enumerate() {
        push_term(&mut lhs, ci, &derivative("y", n - 1 - i), &names);
    }
    let mut rhs = derivative("u1", n - 1);
    for (i, di) in d.iter().enumerate() {
        push_term(&mut rhs, di, &derivative("u1", n - 2 - i), &names);
    }
    Ok(format!("{lhs} = {rhs}"))
}
