//! Quaternion algebras `(−1,−1)` over ℚ and ℚ(√5), the Hurwitz and icosian
//! orders, and diagonal hermitian forms.

mod golden;
mod hermitian;
mod hurwitz;
mod icosian;
mod ramification;
mod scalar;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


pub use golden::{golden_norm, is_golden_unit, GoldenInteger, GoldenRational};
pub use hermitian::{
    g_normalization_checks, is_isometry, is_regular_diagonal, HermitianError, HermitianForm,
    NormalizationReport, QuaternionMatrix,
};
pub use hurwitz::{conjugation_by_one_plus_i, hurwitz_units, is_hurwitz, DoubledHurwitz};
pub use icosian::{icosian_basis, icosian_units, DoubledIcosian, IcosianBasis};
pub use ramification::{hilbert_symbol, ramification_data, Algebra, Place, RamificationData};
pub use scalar::{FieldScalar, Integrality, Scalar};

/// `w + x·i + y·j + z·k` with `i² = j² = k² = −1`, `ij = k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quaternion<R> {
    pub w: R,
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: Scalar> Quaternion<R> {
    pub fn new(w: R, x: R, y: R, z: R) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(R::from_i64(w), R::from_i64(x), R::from_i64(y), R::from_i64(z))
    }

    pub fn scalar(r: R) -> Self {
        Quaternion::new(r, R::zero(), R::zero(), R::zero())
    }

    pub fn zero() -> Self {
        Quaternion::scalar(R::zero())
    }

    pub fn one() -> Self {
        Quaternion::scalar(R::one())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn coords(&self) -> [&R; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn from_coords(c: [R; 4]) -> Self {
        let [w, x, y, z] = c;
        Quaternion { w, x, y, z }
    }

    pub fn map<S, F: Fn(&R) -> S>(&self, f: F) -> Quaternion<S> {
        Quaternion { w: f(&self.w), x: f(&self.x), y: f(&self.y), z: f(&self.z) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }

    /// Reduced norm `x·conj(x) = Σ xᵢ²`.
    pub fn norm(&self) -> R {
        self.coords()
            .iter()
            .fold(R::zero(), |acc, c| acc + (*c).clone() * (*c).clone())
    }

    /// Reduced trace `x + conj(x) = 2w`.
    pub fn trace(&self) -> R {
        self.w.clone() + self.w.clone()
    }

    pub fn scale(&self, r: &R) -> Self {
        self.map(|c| c.clone() * r.clone())
    }
}

impl<R: FieldScalar> Quaternion<R> {
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(self.conj().scale(&n))
    }
}

impl<R: Scalar> Add for Quaternion<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<R: Scalar> Sub for Quaternion<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<R: Scalar> Neg for Quaternion<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<R: Scalar> Mul for Quaternion<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<R: Scalar> Mul for &Quaternion<R> {
    type Output = Quaternion<R>;
    fn mul(self, o: &Quaternion<R>) -> Quaternion<R> {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        let m = |p: &R, q: &R| p.clone() * q.clone();
        Quaternion::new(
            m(a1, a2) - m(b1, b2) - m(c1, c2) - m(d1, d2),
            m(a1, b2) + m(b1, a2) + m(c1, d2) - m(d1, c2),
            m(a1, c2) - m(b1, d2) + m(c1, a2) + m(d1, b2),
            m(a1, d2) + m(b1, c2) - m(c1, b2) + m(d1, a2),
        )
    }
}

impl<R: fmt::Display> fmt::Display for Quaternion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type Q = Quaternion<BigRational>;

    #[test]
    fn basis_relations() {
        let (i, j, k) = (Q::i(), Q::j(), Q::k());
        let m1 = -Q::one();
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -k.clone());
    }

    #[test]
    fn norm_is_x_times_conj() {
        let x = Q::from_ints(1, -2, 3, 5);
        assert_eq!(&x * &x.conj(), Q::scalar(x.norm()));
        assert_eq!(x.trace(), BigRational::from_i64(2));
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, Q::one());
        assert!(Q::zero().inverse().is_none());
    }

    #[test]
    fn golden_coefficients() {
        let phi = GoldenRational::phi();
        let x = Quaternion::new(phi.clone(), GoldenRational::one(), GoldenRational::zero(), phi);
        let n = x.norm();
        assert_eq!(&x * &x.conj(), Quaternion::scalar(n));
        assert_eq!(&x * &x.inverse().unwrap(), Quaternion::one());
    }
}
