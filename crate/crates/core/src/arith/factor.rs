use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::ExactRational;

/// Trial division runs over all primes below this bound.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Cofactors below this size get the full Pollard–Brent budget.
const LARGE_COFACTOR_DIGITS: usize = 40;
const RHO_BUDGET_SMALL: u64 = 1 << 22;
const RHO_BUDGET_LARGE: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("composite cofactor {0} could not be split")]
    UnfactoredCofactor(BigInt),
}

/// `sign * prod p^e` with nonzero exponents; denominators carry negative
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredRational {
    pub sign: i8,
    pub factors: BTreeMap<BigInt, i64>,
}

impl FactoredRational {
    pub fn reconstruct(&self) -> ExactRational {
        if self.sign == 0 {
            return BigRational::zero();
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (p, &e) in &self.factors {
            let pw = num_traits::pow(p.clone(), e.unsigned_abs() as usize);
            if e > 0 {
                num *= pw;
            } else {
                den *= pw;
            }
        }
        if self.sign < 0 {
            num = -num;
        }
        BigRational::new(num, den)
    }

    /// Factors with positive exponents, in increasing order.
    pub fn numerator_factors(&self) -> impl Iterator<Item = (&BigInt, i64)> {
        self.factors.iter().filter(|(_, &e)| e > 0).map(|(p, &e)| (p, e))
    }

    /// Factors with negative exponents, reported as positive powers.
    pub fn denominator_factors(&self) -> impl Iterator<Item = (&BigInt, i64)> {
        self.factors.iter().filter(|(_, &e)| e < 0).map(|(p, &e)| (p, -e))
    }
}

fn write_product<'a>(
    f: &mut fmt::Formatter<'_>,
    parts: impl Iterator<Item = (&'a BigInt, i64)>,
) -> fmt::Result {
    for (idx, (p, e)) in parts.enumerate() {
        if idx > 0 {
            f.write_str("·")?;
        }
        if e == 1 {
            write!(f, "{p}")?;
        } else {
            write!(f, "{p}^{e}")?;
        }
    }
    Ok(())
}

/// Renders as `17·31/(2^19·3^6·11)`; a lone denominator prime is left
/// unparenthesized.
impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return f.write_str("0");
        }
        if self.sign < 0 {
            f.write_str("-")?;
        }
        let num_count = self.numerator_factors().count();
        let den_count = self.denominator_factors().count();
        if num_count == 0 {
            f.write_str("1")?;
        } else {
            write_product(f, self.numerator_factors())?;
        }
        if den_count > 0 {
            f.write_str("/")?;
            let single = den_count == 1;
            if !single {
                f.write_str("(")?;
            }
            write_product(f, self.denominator_factors())?;
            if !single {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

/// Prime factorization of a rational.
pub fn factorize(r: &ExactRational) -> Result<FactoredRational, FactorError> {
    if r.is_zero() {
        return Ok(FactoredRational::default());
    }
    let sign = if r.is_negative() { -1 } else { 1 };
    let mut factors = BTreeMap::new();
    for (p, e) in factor_integer(&r.numer().abs())? {
        *factors.entry(p).or_insert(0) += e as i64;
    }
    for (p, e) in factor_integer(r.denom())? {
        *factors.entry(p).or_insert(0) -= e as i64;
    }
    factors.retain(|_, e| *e != 0);
    Ok(FactoredRational { sign, factors })
}

/// Factors a positive integer into (prime, multiplicity) pairs.
fn factor_integer(n: &BigInt) -> Result<Vec<(BigInt, u32)>, FactorError> {
    let mut out: BTreeMap<BigInt, u32> = BTreeMap::new();
    let mut rest = n.clone();
    for p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = BigInt::from(*p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            *out.entry(pb.clone()).or_insert(0) += 1;
        }
    }
    if !rest.is_one() {
        let mut stack = vec![rest];
        while let Some(c) = stack.pop() {
            if is_prime(&c) {
                *out.entry(c).or_insert(0) += 1;
                continue;
            }
            let budget = if c.to_string().len() <= LARGE_COFACTOR_DIGITS {
                RHO_BUDGET_SMALL
            } else {
                RHO_BUDGET_LARGE
            };
            match pollard_brent(&c, budget) {
                Some(d) => {
                    let other = &c / &d;
                    stack.push(d);
                    stack.push(other);
                }
                None => return Err(FactorError::UnfactoredCofactor(c)),
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn small_primes() -> &'static [u64] {
    use std::sync::OnceLock;
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_DIVISION_LIMIT as usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i < limit {
            if sieve[i] {
                let mut j = i * i;
                while j < limit {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        sieve
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u64)
            .collect()
    })
}

const MR_BASES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller–Rabin over a fixed base set. Deterministic below 3.3·10^24 (the
/// first 13 prime bases suffice there); a strong probable-prime test above.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus || n.is_one() {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return true;
        }
    }
    for &p in &MR_BASES {
        let pb = BigInt::from(p);
        if n == &pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
            if x == one {
                return false;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; returns a nontrivial factor or `None`
/// once `budget` polynomial steps have been spent.
fn pollard_brent(n: &BigInt, budget: u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    const BATCH: u64 = 128;
    let mut spent = 0u64;
    for c in 1u64..=64 {
        let c = BigInt::from(c);
        let step = |v: &BigInt, spent: &mut u64| {
            *spent += 1;
            (v * v + &c) % n
        };
        let mut y = BigInt::from(2);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut r = 1u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y, &mut spent);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y, &mut spent);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
            if spent > budget {
                return None;
            }
        }
        if &g == n {
            // Batched gcd overshot; replay one step at a time.
            g = BigInt::one();
            while g.is_one() {
                ys = step(&ys, &mut spent);
                g = (&x - &ys).abs().gcd(n);
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}
