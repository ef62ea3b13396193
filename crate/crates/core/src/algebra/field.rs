use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use super::{ArithmeticMode, Ring, Scalar};

/// The Mersenne prime `2^61 - 1`.
pub const P61: u64 = (1 << 61) - 1;

/// Element of the prime field of order `2^61 - 1`, stored reduced in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % P61)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    fn reduce128(x: u128) -> u64 {
        // 2^61 = 1 (mod p)
        let lo = (x as u64) & P61;
        let hi = (x >> 61) as u64;
        let s = lo + (hi & P61) + (hi >> 61);
        let s = (s & P61) + (s >> 61);
        if s >= P61 {
            s - P61
        } else {
            s
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut acc = Fp(1);
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        let s = self.0 + rhs.0;
        Fp(if s >= P61 { s - P61 } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P61 - rhs.0 })
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        Fp(Fp::reduce128(self.0 as u128 * rhs.0 as u128))
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        Fp(if self.0 == 0 { 0 } else { P61 - self.0 })
    }
}

impl Ring for Fp {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1)
    }

    fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(P61 as i64);
        Fp(r as u64)
    }

    fn characteristic() -> u64 {
        P61
    }

    fn div_small(&self, k: u64) -> Self {
        *self * Fp::new(k).inverse().expect("divisor invertible mod p")
    }
}

impl Scalar for Fp {
    const MODE: ArithmeticMode = ArithmeticMode::PrimeField;

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn inverse(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P61 - 2))
    }

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(1..P61))
    }
}
