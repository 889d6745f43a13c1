//! The ring ℤ[φ] of integers of ℚ(√5) and its fraction field, in the basis
//! `(1, φ)` with `φ² = φ + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::{FieldScalar, Integrality, Scalar};

/// `a + bφ` with integer coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GoldenInteger {
    pub a: BigInt,
    pub b: BigInt,
}

impl GoldenInteger {
    pub fn new(a: i64, b: i64) -> Self {
        GoldenInteger {
            a: BigInt::from(a),
            b: BigInt::from(b),
        }
    }

    pub fn phi() -> Self {
        GoldenInteger::new(0, 1)
    }

    /// Image under `φ ↦ 1 − φ`.
    pub fn galois_conjugate(&self) -> Self {
        GoldenInteger {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// Field norm `a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// `self / 2` if it stays integral.
    pub fn halve(&self) -> Option<Self> {
        if self.a.is_even() && self.b.is_even() {
            Some(GoldenInteger {
                a: &self.a / 2,
                b: &self.b / 2,
            })
        } else {
            None
        }
    }

    /// Both real embeddings, `φ ↦ (1 ± √5)/2`.
    pub fn embeddings(&self) -> (f64, f64) {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let s5 = 5f64.sqrt();
        (a + b * (1.0 + s5) / 2.0, a + b * (1.0 - s5) / 2.0)
    }

    pub fn to_rational(&self) -> GoldenRational {
        GoldenRational {
            a: BigRational::from_integer(self.a.clone()),
            b: BigRational::from_integer(self.b.clone()),
        }
    }
}

/// Field norm of `a + bφ`.
pub fn golden_norm(x: &GoldenInteger) -> BigInt {
    x.norm()
}

pub fn is_golden_unit(x: &GoldenInteger) -> bool {
    x.is_unit()
}

impl fmt::Display for GoldenInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}φ", self.a, self.b)
    }
}

impl Add for GoldenInteger {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GoldenInteger { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for GoldenInteger {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GoldenInteger { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for GoldenInteger {
    type Output = Self;
    fn neg(self) -> Self {
        GoldenInteger { a: -self.a, b: -self.b }
    }
}

impl Mul for GoldenInteger {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let bd = &self.b * &o.b;
        GoldenInteger {
            a: &self.a * &o.a + &bd,
            b: &self.a * &o.b + &self.b * &o.a + bd,
        }
    }
}

impl Zero for GoldenInteger {
    fn zero() -> Self {
        GoldenInteger::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenInteger {
    fn one() -> Self {
        GoldenInteger::new(1, 0)
    }
}

impl Scalar for GoldenInteger {
    fn from_i64(v: i64) -> Self {
        GoldenInteger::new(v, 0)
    }
}

/// `a + bφ` with rational coordinates: the field ℚ(√5).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GoldenRational {
    pub a: BigRational,
    pub b: BigRational,
}

impl GoldenRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenRational { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        GoldenInteger::new(a, b).to_rational()
    }

    pub fn phi() -> Self {
        GoldenRational::from_ints(0, 1)
    }

    pub fn galois_conjugate(&self) -> Self {
        GoldenRational {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn to_integer(&self) -> Option<GoldenInteger> {
        if self.a.is_integer() && self.b.is_integer() {
            Some(GoldenInteger {
                a: self.a.to_integer(),
                b: self.b.to_integer(),
            })
        } else {
            None
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        GoldenRational {
            a: &self.a * r,
            b: &self.b * r,
        }
    }
}

impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})φ", self.a, self.b)
    }
}

impl Add for GoldenRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GoldenRational { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for GoldenRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GoldenRational { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for GoldenRational {
    type Output = Self;
    fn neg(self) -> Self {
        GoldenRational { a: -self.a, b: -self.b }
    }
}

impl Mul for GoldenRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let bd = &self.b * &o.b;
        GoldenRational {
            a: &self.a * &o.a + &bd,
            b: &self.a * &o.b + &self.b * &o.a + bd,
        }
    }
}

impl Zero for GoldenRational {
    fn zero() -> Self {
        GoldenRational::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenRational {
    fn one() -> Self {
        GoldenRational::from_ints(1, 0)
    }
}

impl Scalar for GoldenRational {
    fn from_i64(v: i64) -> Self {
        GoldenRational::from_ints(v, 0)
    }
}

impl FieldScalar for GoldenRational {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.galois_conjugate().scale(&n.recip()))
    }
}

impl Integrality for GoldenRational {
    fn is_integral(&self) -> bool {
        self.to_integer().is_some()
    }
    fn is_integral_unit(&self) -> bool {
        self.to_integer().is_some_and(|x| x.is_unit())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms_and_units() {
        let phi = GoldenInteger::phi();
        assert_eq!(golden_norm(&phi), BigInt::from(-1));
        assert!(is_golden_unit(&phi));
        let one_minus_phi = GoldenInteger::new(1, -1);
        assert_eq!(golden_norm(&one_minus_phi), BigInt::from(-1));
        assert!(is_golden_unit(&one_minus_phi));
        let two = GoldenInteger::new(2, 0);
        assert_eq!(golden_norm(&two), BigInt::from(4));
        assert!(!is_golden_unit(&two));
    }

    #[test]
    fn ring_laws() {
        let phi = GoldenInteger::phi();
        assert_eq!(phi.clone() * phi.clone(), phi.clone() + GoldenInteger::one());
        // (1 - φ) = -1/φ
        assert_eq!(GoldenInteger::new(1, -1) * phi.clone(), GoldenInteger::new(-1, 0));
        let x = GoldenInteger::new(3, -2);
        let y = GoldenInteger::new(-1, 5);
        assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        assert_eq!(x.clone() * x.galois_conjugate(), GoldenInteger { a: x.norm(), b: BigInt::zero() });
    }

    #[test]
    fn embeddings_of_phi() {
        let (hi, lo) = GoldenInteger::phi().embeddings();
        assert!((hi - 1.618033988749895).abs() < 1e-12);
        assert!((lo + 0.6180339887498949).abs() < 1e-12);
        // 1 − φ = (1 − √5)/2 is negative under the identity embedding.
        assert!(GoldenInteger::new(1, -1).embeddings().0 < 0.0);
    }

    #[test]
    fn rational_inverse() {
        let x = GoldenRational::from_ints(2, 3);
        let inv = x.inv().unwrap();
        assert_eq!(x * inv, GoldenRational::one());
        assert!(GoldenRational::zero().inv().is_none());
        assert!(GoldenRational::from_ints(1, -1).is_integral_unit());
        assert!(!GoldenRational::from_ints(2, 0).is_integral_unit());
    }
}
