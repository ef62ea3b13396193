use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Ring, Scalar};

/// First-order jet: a value together with its partial derivatives.
///
/// An empty `partials` vector stands for an all-zero gradient, so constants
/// combine with jets of any width.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet<F> {
    pub value: F,
    pub partials: Vec<F>,
}

impl<F: Scalar> Jet<F> {
    pub fn constant(value: F) -> Self {
        Jet { value, partials: Vec::new() }
    }

    /// The coordinate function `x_index` evaluated at `value`.
    pub fn variable(value: F, index: usize, width: usize) -> Self {
        let mut partials = vec![F::zero(); width];
        partials[index] = F::one();
        Jet { value, partials }
    }

    pub fn partial(&self, index: usize) -> F {
        self.partials.get(index).cloned().unwrap_or_else(F::zero)
    }

    fn scale(partials: &[F], by: &F) -> Vec<F> {
        partials.iter().map(|p| p.clone() * by.clone()).collect()
    }

    fn combine(a: &[F], b: &[F], f: impl Fn(F, F) -> F) -> Vec<F> {
        let len = a.len().max(b.len());
        (0..len)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(F::zero);
                let y = b.get(i).cloned().unwrap_or_else(F::zero);
                f(x, y)
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        let inv = self.value.inverse()?;
        let factor = -(inv.clone() * inv.clone());
        Some(Jet { value: inv, partials: Self::scale(&self.partials, &factor) })
    }
}

impl<F: Scalar> Add for Jet<F> {
    type Output = Jet<F>;
    fn add(self, rhs: Jet<F>) -> Jet<F> {
        Jet { value: self.value + rhs.value, partials: Self::combine(&self.partials, &rhs.partials, |x, y| x + y) }
    }
}

impl<F: Scalar> Sub for Jet<F> {
    type Output = Jet<F>;
    fn sub(self, rhs: Jet<F>) -> Jet<F> {
        Jet { value: self.value - rhs.value, partials: Self::combine(&self.partials, &rhs.partials, |x, y| x - y) }
    }
}

impl<F: Scalar> Mul for Jet<F> {
    type Output = Jet<F>;
    fn mul(self, rhs: Jet<F>) -> Jet<F> {
        // (fg)' = f'g + fg'
        let (f, g) = (&self.value, &rhs.value);
        let partials = match (self.partials.is_empty(), rhs.partials.is_empty()) {
            (true, true) => Vec::new(),
            (false, true) => Self::scale(&self.partials, g),
            (true, false) => Self::scale(&rhs.partials, f),
            (false, false) => {
                Self::combine(&self.partials, &rhs.partials, |df, dg| df * g.clone() + f.clone() * dg)
            }
        };
        Jet { value: self.value * rhs.value, partials }
    }
}

impl<F: Scalar> Div for Jet<F> {
    type Output = Jet<F>;
    /// Panics when the divisor's value is zero.
    fn div(self, rhs: Jet<F>) -> Jet<F> {
        self * rhs.inverse().expect("division by a jet with zero value")
    }
}

impl<F: Scalar> Neg for Jet<F> {
    type Output = Jet<F>;
    fn neg(self) -> Jet<F> {
        Jet { value: -self.value, partials: self.partials.into_iter().map(|p| -p).collect() }
    }
}

impl<F: Scalar> Ring for Jet<F> {
    fn zero() -> Self {
        Jet::constant(F::zero())
    }

    fn one() -> Self {
        Jet::constant(F::one())
    }

    fn from_i64(v: i64) -> Self {
        Jet::constant(F::from_i64(v))
    }

    fn characteristic() -> u64 {
        F::characteristic()
    }

    fn div_small(&self, k: u64) -> Self {
        let inv = F::one().div_small(k);
        Jet { value: self.value.clone() * inv.clone(), partials: Self::scale(&self.partials, &inv) }
    }
}
