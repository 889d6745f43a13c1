use crate::zeta::kronecker;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(u64),
    Infinite,
}

/// The algebras `(−1,−1)` over the two fields of interest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    MinusOneMinusOneOverQ,
    MinusOneMinusOneOverQSqrt5,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationData {
    /// Ramified finite primes of the base field, by residue characteristic.
    pub finite: Vec<u64>,
    pub real_places: usize,
    pub ramified_real_places: usize,
}

impl RamificationData {
    /// The total number of ramified places is even.
    pub fn parity_ok(&self) -> bool {
        (self.finite.len() + self.ramified_real_places) % 2 == 0
    }
}

fn split_power(mut a: i64, p: i64) -> (u32, i64) {
    let mut e = 0;
    while a % p == 0 {
        a /= p;
        e += 1;
    }
    (e, a)
}

fn sign_bit(v: bool) -> i8 {
    if v {
        -1
    } else {
        1
    }
}

/// Quadratic Hilbert symbol `(a, b)_v` over ℚ for nonzero `a`, `b`.
pub fn hilbert_symbol(a: i64, b: i64, place: Place) -> i8 {
    assert!(a != 0 && b != 0, "Hilbert symbol of zero");
    match place {
        Place::Infinite => sign_bit(a < 0 && b < 0),
        Place::Finite(2) => {
            let (alpha, u) = split_power(a, 2);
            let (beta, v) = split_power(b, 2);
            let eps = |x: i64| (x.rem_euclid(4) == 3) as u32;
            let omega = |x: i64| matches!(x.rem_euclid(8), 3 | 5) as u32;
            let e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
            sign_bit(e % 2 == 1)
        }
        Place::Finite(p) => {
            let pi = p as i64;
            let (alpha, u) = split_power(a, pi);
            let (beta, v) = split_power(b, pi);
            let eps = ((p - 1) / 2) as u32 % 2;
            let mut s = sign_bit((alpha * beta * eps) % 2 == 1);
            if beta % 2 == 1 {
                s *= kronecker(u, p);
            }
            if alpha % 2 == 1 {
                s *= kronecker(v, p);
            }
            s
        }
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Ramified places of `(a, b)` over ℚ; only primes dividing `2ab` can ramify.
fn ramification_over_q(a: i64, b: i64) -> RamificationData {
    let m = 2 * a.unsigned_abs() * b.unsigned_abs();
    let finite = prime_divisors(m)
        .into_iter()
        .filter(|&p| hilbert_symbol(a, b, Place::Finite(p)) == -1)
        .collect();
    RamificationData {
        finite,
        real_places: 1,
        ramified_real_places: (hilbert_symbol(a, b, Place::Infinite) == -1) as usize,
    }
}

pub fn ramification_data(algebra: Algebra) -> RamificationData {
    match algebra {
        Algebra::MinusOneMinusOneOverQ => ramification_over_q(-1, -1),
        Algebra::MinusOneMinusOneOverQSqrt5 => {
            // −1 is negative under both real embeddings; no finite prime ramifies.
            let data = RamificationData {
                finite: Vec::new(),
                real_places: 2,
                ramified_real_places: 2,
            };
            debug_assert!(data.parity_ok());
            data
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_for_hamilton() {
        assert_eq!(hilbert_symbol(-1, -1, Place::Finite(2)), -1);
        assert_eq!(hilbert_symbol(-1, -1, Place::Infinite), -1);
        for p in [3, 5, 7, 11, 13] {
            assert_eq!(hilbert_symbol(-1, -1, Place::Finite(p)), 1);
        }
    }

    #[test]
    fn product_formula() {
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23];
        for a in [-15i64, -7, -3, -2, -1, 2, 3, 5, 6, 10, 21] {
            for b in [-11i64, -6, -5, -1, 3, 7, 14, 15] {
                let mut prod = hilbert_symbol(a, b, Place::Infinite) as i32;
                for &p in &primes {
                    prod *= hilbert_symbol(a, b, Place::Finite(p)) as i32;
                }
                assert_eq!(prod, 1, "({a},{b})");
            }
        }
    }

    #[test]
    fn known_symbols() {
        // 2 is a norm from ℚ(i) at every place.
        assert_eq!(hilbert_symbol(2, -1, Place::Finite(2)), 1);
        assert_eq!(hilbert_symbol(3, 5, Place::Finite(5)), -1);
        assert_eq!(hilbert_symbol(3, 5, Place::Finite(3)), -1);
        assert_eq!(hilbert_symbol(2, 3, Place::Finite(3)), -1);
    }

    #[test]
    fn algebra_data() {
        let q = ramification_data(Algebra::MinusOneMinusOneOverQ);
        assert_eq!(q.finite, vec![2]);
        assert_eq!(q.ramified_real_places, 1);
        assert!(q.parity_ok());
        let k = ramification_data(Algebra::MinusOneMinusOneOverQSqrt5);
        assert!(k.finite.is_empty());
        assert_eq!(k.ramified_real_places, 2);
        assert!(k.parity_ok());
    }
}
