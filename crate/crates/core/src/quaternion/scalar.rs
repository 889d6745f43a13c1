use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative coefficient ring for quaternions.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_i64(v: i64) -> Self;
}

/// A coefficient field.
pub trait FieldScalar: Scalar {
    fn inv(&self) -> Option<Self>;
}

/// Integrality data for elements of a number field, relative to its ring of
/// integers.
pub trait Integrality: Scalar {
    fn is_integral(&self) -> bool;
    fn is_integral_unit(&self) -> bool;
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl FieldScalar for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Integrality for BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
    fn is_integral_unit(&self) -> bool {
        self.is_integer() && self.numer().abs().is_one()
    }
}
