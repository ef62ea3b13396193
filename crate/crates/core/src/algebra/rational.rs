use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{bareiss_rank, ArithmeticMode, Ring, Scalar};

/// Half-width of the integer range rational sample points are drawn from.
const SAMPLE_RANGE: i64 = 1 << 31;

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn characteristic() -> u64 {
        0
    }

    fn div_small(&self, k: u64) -> Self {
        self / BigRational::from_integer(BigInt::from(k))
    }
}

impl Scalar for BigRational {
    const MODE: ArithmeticMode = ArithmeticMode::Rational;

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let magnitude = rng.gen_range(1..=SAMPLE_RANGE);
        let v = if rng.gen::<bool>() { magnitude } else { -magnitude };
        BigRational::from_integer(BigInt::from(v))
    }

    /// Clears denominators row by row, then runs fraction-free elimination.
    fn rank(rows: Vec<Vec<Self>>) -> usize {
        let ints = rows
            .into_iter()
            .map(|row| {
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.into_iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect()
            })
            .collect();
        bareiss_rank(ints)
    }
}

pub(crate) fn is_integer(x: &BigRational) -> bool {
    x.denom().abs().is_one()
}
