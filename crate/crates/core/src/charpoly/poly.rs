use std::collections::BTreeMap;

use crate::algebra::Ring;

/// Sparse multivariate polynomial with integer coefficients.
///
/// Exponent vectors index the model parameters in slot order (diagonals
/// first, then edges). Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MonomialPolynomial {
    pub fn zero(nvars: usize) -> Self {
        MonomialPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: i64) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector has wrong length");
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// Total degree of every term, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Whether variable `slot` occurs in any term.
    pub fn involves(&self, slot: usize) -> bool {
        self.terms.keys().any(|e| e[slot] > 0)
    }

    pub fn evaluate<R: Ring>(&self, point: &[R]) -> R {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let mut acc = R::zero();
        for (exps, &coeff) in &self.terms {
            let mut term = R::from_i64(coeff);
            for (slot, &k) in exps.iter().enumerate() {
                for _ in 0..k {
                    term = term * point[slot].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Renders the polynomial with the given variable names, terms in
    /// descending lexicographic order (so `a11` leads `a22`).
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (exps, &coeff)) in self.terms.iter().rev().enumerate() {
            let body = render_monomial(exps, names);
            let magnitude = coeff.unsigned_abs();
            let text = match (body.is_empty(), magnitude) {
                (true, _) => magnitude.to_string(),
                (false, 1) => body,
                (false, _) => format!("{magnitude}*{body}"),
            };
            match (i, coeff < 0) {
                (0, true) => out.push_str(&format!("-{text}")),
                (0, false) => out.push_str(&text),
                (_, true) => out.push_str(&format!(" - {text}")),
                (_, false) => out.push_str(&format!(" + {text}")),
            }
        }
        out
    }

    pub fn negated(&self) -> Self {
        MonomialPolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect() }
    }

    /// Sign of the leading term in render order.
    pub(crate) fn leading_is_negative(&self) -> bool {
        self.terms.iter().next_back().is_some_and(|(_, &c)| c < 0)
    }
}

/// `a11*a23^2`-style product; empty for the unit monomial.
pub(crate) fn render_monomial(exps: &[u32], names: &[String]) -> String {
    exps.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(slot, &k)| if k == 1 { names[slot].clone() } else { format!("{}^{k}", names[slot]) })
        .collect::<Vec<_>>()
        .join("*")
}
