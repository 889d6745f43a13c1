use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{FieldScalar, Quaternion, Scalar};

/// A Hurwitz quaternion stored as doubled coordinates; all four share parity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DoubledHurwitz([BigInt; 4]);

impl DoubledHurwitz {
    pub fn from_doubled(c: [i64; 4]) -> Option<Self> {
        Self::from_doubled_big(c.map(BigInt::from))
    }

    pub fn from_doubled_big(c: [BigInt; 4]) -> Option<Self> {
        let p = c[0].is_odd();
        if c.iter().all(|v| v.is_odd() == p) {
            Some(DoubledHurwitz(c))
        } else {
            None
        }
    }

    pub fn from_rational(q: &Quaternion<BigRational>) -> Option<Self> {
        let two = BigRational::from_i64(2);
        let mut out = Vec::with_capacity(4);
        for c in q.coords() {
            let d = c * &two;
            if !d.is_integer() {
                return None;
            }
            out.push(d.to_integer());
        }
        let arr: [BigInt; 4] = out.try_into().ok()?;
        Self::from_doubled_big(arr)
    }

    pub fn doubled(&self) -> &[BigInt; 4] {
        &self.0
    }

    pub fn to_rational(&self) -> Quaternion<BigRational> {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let c = self.0.clone().map(|v| BigRational::from_integer(v) * &half);
        Quaternion::from_coords(c)
    }

    /// Four times the norm.
    pub fn doubled_norm(&self) -> BigInt {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn conj(&self) -> Self {
        let [w, x, y, z] = self.0.clone();
        DoubledHurwitz([w, -x, -y, -z])
    }
}

impl Mul for &DoubledHurwitz {
    type Output = DoubledHurwitz;
    fn mul(self, o: &DoubledHurwitz) -> DoubledHurwitz {
        let p = &Quaternion::from_coords(self.0.clone()) * &Quaternion::from_coords(o.0.clone());
        let halved = [p.w, p.x, p.y, p.z].map(|v| {
            debug_assert!(v.is_even());
            v / 2
        });
        DoubledHurwitz::from_doubled_big(halved).expect("Hurwitz order is closed under products")
    }
}

/// All coordinates in ℤ, or all in ℤ + 1/2.
pub fn is_hurwitz(x: &Quaternion<BigRational>) -> bool {
    DoubledHurwitz::from_rational(x).is_some()
}

/// The 24 Hurwitz quaternions of norm 1.
pub fn hurwitz_units() -> Vec<Quaternion<BigRational>> {
    let mut out = Vec::new();
    for w in -2i64..=2 {
        for x in -2i64..=2 {
            for y in -2i64..=2 {
                for z in -2i64..=2 {
                    if w * w + x * x + y * y + z * z != 4 {
                        continue;
                    }
                    if let Some(h) = DoubledHurwitz::from_doubled([w, x, y, z]) {
                        out.push(h.to_rational());
                    }
                }
            }
        }
    }
    out
}

/// `(1+i)·x·(1+i)⁻¹`.
pub fn conjugation_by_one_plus_i<R: FieldScalar>(x: &Quaternion<R>) -> Quaternion<R> {
    let c = Quaternion::<R>::from_ints(1, 1, 0, 0);
    let c_inv = c.inverse().expect("1+i is invertible");
    &(&c * x) * &c_inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    type Q = Quaternion<BigRational>;

    fn half(w: i64, x: i64, y: i64, z: i64) -> Q {
        Quaternion::new(ratio(w, 2), ratio(x, 2), ratio(y, 2), ratio(z, 2))
    }

    #[test]
    fn parity_examples() {
        assert!(is_hurwitz(&half(1, 1, 1, 1)));
        assert!(!is_hurwitz(&half(1, 1, 0, 0)));
        assert!(is_hurwitz(&Q::from_ints(3, -2, 1, 0)));
        assert!(!is_hurwitz(&Quaternion::new(ratio(1, 3), ratio(0, 1), ratio(0, 1), ratio(0, 1))));
    }

    #[test]
    fn unit_group() {
        let units = hurwitz_units();
        assert_eq!(units.len(), 24);
        for u in [Q::one(), Q::i(), Q::j(), Q::k()] {
            assert!(units.contains(&u));
            assert!(units.contains(&-u));
        }
        assert!(units.contains(&half(1, 1, 1, 1)));
        for u in &units {
            assert!(u.norm().is_one());
            assert!(units.contains(&u.inverse().unwrap()));
            for v in &units {
                assert!(units.contains(&(u * v)));
            }
        }
    }

    #[test]
    fn doubled_product_matches_rational() {
        let a = DoubledHurwitz::from_doubled([1, 1, 1, 1]).unwrap();
        let b = DoubledHurwitz::from_doubled([6, -2, 0, 4]).unwrap();
        assert_eq!((&a * &b).to_rational(), &a.to_rational() * &b.to_rational());
        assert_eq!(a.doubled_norm(), BigInt::from(4));
        assert!(DoubledHurwitz::from_doubled([1, 0, 0, 0]).is_none());
        assert_eq!(a.conj().doubled()[1], BigInt::from(-1));
    }

    #[test]
    fn conjugation_on_basis() {
        assert_eq!(conjugation_by_one_plus_i(&Q::i()), Q::i());
        assert_eq!(conjugation_by_one_plus_i(&Q::j()), Q::k());
        assert_eq!(conjugation_by_one_plus_i(&Q::k()), -Q::j());
        assert_eq!(conjugation_by_one_plus_i(&half(1, 1, 1, 1)), half(1, 1, -1, 1));
    }
}
