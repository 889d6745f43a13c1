use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{binomial, ExactRational};

/// Memo table of Bernoulli numbers, grown on demand and never invalidated.
///
/// Uses the convention `B_1 = -1/2`, i.e. the values defined by
/// `sum_{k=0}^{m} C(m+1, k) B_k = 0` for `m >= 1`. With this convention
/// `zeta(-m) = (-1)^m B_{m+1} / (m+1)` holds for every `m >= 0`.
#[derive(Debug)]
pub struct BernoulliCache {
    memo: RwLock<Vec<ExactRational>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            memo: RwLock::new(vec![BigRational::one()]),
        }
    }

    /// Process-wide shared cache.
    pub fn global() -> &'static BernoulliCache {
        static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
        CACHE.get_or_init(BernoulliCache::new)
    }

    pub fn get(&self, m: usize) -> ExactRational {
        if let Some(v) = self.memo.read().expect("bernoulli cache poisoned").get(m) {
            return v.clone();
        }
        let mut memo = self.memo.write().expect("bernoulli cache poisoned");
        // Another writer may have extended the table while we waited.
        while memo.len() <= m {
            let next = memo.len();
            let value = Self::next_value(&memo, next);
            memo.push(value);
        }
        memo[m].clone()
    }

    /// Number of cached entries.
    pub fn len(&self) -> usize {
        self.memo.read().expect("bernoulli cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn next_value(known: &[ExactRational], m: usize) -> ExactRational {
        if m > 1 && m % 2 == 1 {
            return BigRational::zero();
        }
        // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        let mut acc = BigRational::zero();
        for (k, b) in known.iter().enumerate().take(m) {
            if b.is_zero() {
                continue;
            }
            acc += BigRational::from_integer(binomial(m as u64 + 1, k as u64)) * b;
        }
        -acc / BigRational::from_integer(BigInt::from(m + 1))
    }
}

/// The m-th Bernoulli number (`B_1 = -1/2`).
pub fn bernoulli(m: usize) -> ExactRational {
    BernoulliCache::global().get(m)
}

/// Bernoulli polynomial `B_n(x) = sum_k C(n,k) B_k x^{n-k}`.
pub fn bernoulli_poly(n: usize, x: &ExactRational) -> ExactRational {
    // Horner over descending powers of x: coefficients C(n,k) B_k for k = 0..n.
    let mut acc = BigRational::zero();
    for k in 0..=n {
        acc = acc * x + BigRational::from_integer(binomial(n as u64, k as u64)) * bernoulli(k);
    }
    acc
}
