//! Scalar fields for the linear-algebra layer.
//!
//! Everything matrix-shaped in this crate is generic over [`Field`]. Two
//! instances ship: [`Fp61`], the prime field modulo the Mersenne prime
//! `2^61 - 1` used by the randomized representation, and exact rationals
//! ([`num_rational::BigRational`]) used as an independent route in tests.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// A commutative field. Division by zero may panic.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Fields that can produce uniformly random nonzero elements.
pub trait SampleNonzero: Field {
    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Size of the sampling domain, used for Schwartz-Zippel bounds.
    fn sample_space() -> f64;
}

/// The Mersenne prime `2^61 - 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

/// An element of the prime field `F_p`, `p = 2^61 - 1`, kept in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp61(u64);

impl Fp61 {
    pub const fn new(value: u64) -> Self {
        Fp61(reduce64(value))
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Fp61(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(MODULUS - 2))
        }
    }
}

const fn reduce64(x: u64) -> u64 {
    let r = (x & MODULUS) + (x >> 61);
    if r >= MODULUS {
        r - MODULUS
    } else {
        r
    }
}

#[inline]
fn reduce128(x: u128) -> u64 {
    let lo = (x as u64) & MODULUS;
    let hi = (x >> 61) as u64;
    // hi < 2^61 because both factors are < 2^61
    reduce64(lo + hi)
}

impl fmt::Debug for Fp61 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp61 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for Fp61 {
    fn from(value: u64) -> Self {
        Fp61::new(value)
    }
}

impl From<i64> for Fp61 {
    fn from(value: i64) -> Self {
        if value >= 0 {
            Fp61::new(value as u64)
        } else {
            -Fp61::new(value.unsigned_abs())
        }
    }
}

impl Add for Fp61 {
    type Output = Fp61;
    #[inline]
    fn add(self, rhs: Fp61) -> Fp61 {
        let s = self.0 + rhs.0;
        Fp61(if s >= MODULUS { s - MODULUS } else { s })
    }
}

impl Sub for Fp61 {
    type Output = Fp61;
    #[inline]
    fn sub(self, rhs: Fp61) -> Fp61 {
        Fp61(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + MODULUS - rhs.0
        })
    }
}

impl Mul for Fp61 {
    type Output = Fp61;
    #[inline]
    fn mul(self, rhs: Fp61) -> Fp61 {
        Fp61(reduce128(self.0 as u128 * rhs.0 as u128))
    }
}

impl Div for Fp61 {
    type Output = Fp61;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp61) -> Fp61 {
        self * rhs.inverse().expect("division by zero in F_p")
    }
}

impl Neg for Fp61 {
    type Output = Fp61;
    #[inline]
    fn neg(self) -> Fp61 {
        Fp61(if self.0 == 0 { 0 } else { MODULUS - self.0 })
    }
}

impl AddAssign for Fp61 {
    fn add_assign(&mut self, rhs: Fp61) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp61 {
    fn sub_assign(&mut self, rhs: Fp61) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp61 {
    fn mul_assign(&mut self, rhs: Fp61) {
        *self = *self * rhs;
    }
}

impl Zero for Fp61 {
    fn zero() -> Self {
        Fp61(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp61 {
    fn one() -> Self {
        Fp61(1)
    }
}

impl SampleNonzero for Fp61 {
    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp61(rng.gen_range(1..MODULUS))
    }

    fn sample_space() -> f64 {
        (MODULUS - 1) as f64
    }
}

/// Random integers in `[1, 2^20]`; enough for Schwartz-Zippel in small tests.
impl SampleNonzero for BigRational {
    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        BigRational::from_integer(BigInt::from(rng.gen_range(1i64..=1 << 20)))
    }

    fn sample_space() -> f64 {
        (1u64 << 20) as f64
    }
}
