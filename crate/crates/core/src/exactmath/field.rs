//! The scalar abstraction every exact algorithm in this crate is written against.
//!
//! A [`Field`] is anything with the four arithmetic operations and an
//! embedding of ℚ. Exact instances are [`BigRational`], the rational function
//! fields built on top of it, and quadratic number fields; `f32`/`f64` are
//! provided for approximate cross-checks.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Image of a rational number under the structure map ℚ → Self.
    fn from_rational(q: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Multiplicative inverse, `None` for zero.
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }
}

impl Field for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl Field for f64 {
    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

impl Field for f32 {
    fn from_rational(q: &BigRational) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }
}

/// Fields containing a distinguished copy of the field `K`.
///
/// Used where a construction over `K` (a curve, a coordinate change) has to be
/// evaluated on points with coordinates in an extension, e.g. the function
/// field of the curve itself.
pub trait Embeds<K>: Field {
    fn embed(k: &K) -> Self;
}

impl<K: Field> Embeds<K> for K {
    fn embed(k: &K) -> Self {
        k.clone()
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
