//! Exact arithmetic used on the decision path: a Mersenne prime field,
//! arbitrary-precision rationals, first-order jets, exact rank and integer
//! matrices with unimodular inversion. No floating point is involved.

mod field;
mod intmatrix;
mod jet;
mod rank;
mod rational;

pub use field::{Fp, P61};
pub use intmatrix::{integer_solve_in_lattice, inverse_unimodular, IntMatrix};
pub use jet::Jet;
pub use rank::{bareiss_rank, gaussian_rank, rank};

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

/// Which exact number system a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArithmeticMode {
    /// Residues modulo the prime `2^61 - 1`.
    PrimeField,
    /// Arbitrary-precision rationals.
    Rational,
}

impl ArithmeticMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            ArithmeticMode::PrimeField => "prime-field",
            ArithmeticMode::Rational => "rational",
        }
    }
}

impl std::fmt::Display for ArithmeticMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Commutative ring with exact division by small positive integers.
pub trait Ring:
    Clone + Debug + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Divides by the integer `k`, which must be invertible in the ring.
    fn div_small(&self, k: u64) -> Self;
    /// 0 for characteristic zero.
    fn characteristic() -> u64;
}

/// An exact field usable as the scalar type of the algebra kernels.
pub trait Scalar: Ring + Send + Sync + 'static {
    const MODE: ArithmeticMode;

    fn is_zero(&self) -> bool;

    fn inverse(&self) -> Option<Self>;

    /// A uniformly sampled nonzero element (from a large finite range for
    /// the rationals).
    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Exact rank of a dense matrix given by rows.
    fn rank(rows: Vec<Vec<Self>>) -> usize {
        gaussian_rank(rows)
    }

    /// Integer power; negative exponents need an invertible base.
    fn powi(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * sq.clone();
            }
            sq = sq.clone() * sq;
            k >>= 1;
        }
        Some(acc)
    }
}
