use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use covolume::arith::{
    approx_decimal, approx_decimal_with, bernoulli, binomial, factorize, ratio, FactoredRational,
    Rounding, GUARD_DIGITS,
};

/// `B_m = Σ_{k≤m} 1/(k+1) Σ_{v≤k} (−1)^v C(k,v) v^m`.
fn bernoulli_double_sum(m: usize) -> BigRational {
    let mut total = BigRational::zero();
    for k in 0..=m {
        let mut inner = BigInt::zero();
        for v in 0..=k {
            let term = binomial(k as u64, v as u64) * num_traits::pow(BigInt::from(v), m);
            if v % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += BigRational::new(inner, BigInt::from(k + 1));
    }
    total
}

#[test]
fn bernoulli_matches_double_sum_up_to_60() {
    for m in 0..=60 {
        assert_eq!(bernoulli(m), bernoulli_double_sum(m), "m = {m}");
    }
}

fn product(factors: &[u64]) -> BigInt {
    factors.iter().fold(BigInt::one(), |acc, &f| acc * BigInt::from(f))
}

/// Splits `s` (like `-1.2345e-6`) into mantissa digits and exponent.
fn parts(s: &str) -> (bool, String, i64) {
    let neg = s.starts_with('-');
    let body = s.trim_start_matches('-');
    let (mant, exp) = body.split_once('e').unwrap();
    (neg, mant.replace('.', ""), exp.parse().unwrap())
}

fn render(neg: bool, digits: &str, exp: i64) -> String {
    let sign = if neg { "-" } else { "" };
    let (lead, tail) = digits.split_at(1);
    if tail.is_empty() {
        format!("{sign}{lead}e{exp}")
    } else {
        format!("{sign}{lead}.{tail}e{exp}")
    }
}

fn round_half_up(digits: &str, keep: usize, exp: i64) -> (String, i64) {
    let head: BigInt = digits[..keep].parse().unwrap();
    let first_dropped = digits.as_bytes()[keep] - b'0';
    let rounded = if first_dropped >= 5 { head + 1 } else { head };
    let s = rounded.to_string();
    if s.len() > keep {
        (s[..keep].to_string(), exp + 1)
    } else {
        (s, exp)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorize_round_trips(
        num in prop::collection::vec(1u64..1_000_000_000, 0..7),
        den in prop::collection::vec(1u64..1_000_000_000, 0..7),
        negative in any::<bool>(),
    ) {
        let mut r = BigRational::new(product(&num), product(&den));
        if negative {
            r = -r;
        }
        let f = factorize(&r).unwrap();
        prop_assert_eq!(f.reconstruct(), r.clone());
        let again = factorize(&f.reconstruct()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn factored_form_round_trips(
        primes in prop::collection::btree_map(
            prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 691, 3617, 1_000_003, 998_244_353]),
            -12i64..12,
            0..6,
        ),
        sign in prop::sample::select(vec![-1i8, 1]),
    ) {
        let factors = primes
            .into_iter()
            .filter(|(_, e)| *e != 0)
            .map(|(p, e)| (BigInt::from(p), e))
            .collect();
        let fr = FactoredRational { sign, factors };
        prop_assert_eq!(factorize(&fr.reconstruct()).unwrap(), fr);
    }

    #[test]
    fn decimal_agrees_with_guard_digit_rendering(
        n in 1i64..i64::MAX,
        d in 1i64..i64::MAX,
        negative in any::<bool>(),
        s in 1u32..12,
    ) {
        let r = if negative { ratio(-n, d) } else { ratio(n, d) };
        let wide = approx_decimal(&r, s + GUARD_DIGITS);
        let (neg, digits, exp) = parts(&wide);
        prop_assert_eq!(approx_decimal(&r, s), render(neg, &digits[..s as usize], exp));
        let (rd, re) = round_half_up(&digits, s as usize, exp);
        prop_assert_eq!(approx_decimal_with(&r, s, Rounding::HalfUp), render(neg, &rd, re));
    }

    #[test]
    fn decimal_mantissa_is_normalized(n in 1i64..1_000_000_000_000, d in 1i64..1_000_000_000_000) {
        let out = approx_decimal(&ratio(n, d), 4);
        let (_, digits, _) = parts(&out);
        prop_assert_eq!(digits.len(), 4);
        prop_assert!(!digits.starts_with('0'));
    }
}
