//! Exact rational arithmetic: Bernoulli numbers, prime factorization of
//! rationals and decimal rendering.

mod bernoulli;
mod decimal;
mod factor;

pub use bernoulli::{bernoulli, bernoulli_poly, BernoulliCache};
pub use decimal::{approx_decimal, approx_decimal_with, Rounding, GUARD_DIGITS};
pub use factor::{factorize, is_prime, FactorError, FactoredRational, TRIAL_DIVISION_LIMIT};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type ExactRational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Shorthand for `num/den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for a possibly negative exponent.
pub fn pow_signed(base: &ExactRational, exp: i64) -> ExactRational {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn abs(r: &ExactRational) -> ExactRational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn signed_powers() {
        assert_eq!(pow_signed(&int(2), -3), ratio(1, 8));
        assert_eq!(pow_signed(&ratio(2, 3), 2), ratio(4, 9));
        assert_eq!(pow_signed(&int(7), 0), int(1));
    }
}
