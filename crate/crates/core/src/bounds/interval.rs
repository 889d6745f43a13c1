use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 128;

/// Outcome of comparing two enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Greater,
    Less,
    /// The enclosures overlap; nothing is asserted.
    Undecided,
}

impl Verdict {
    pub fn is_greater(self) -> bool {
        self == Verdict::Greater
    }
}

/// A real number enclosed in `[lo, hi]` with dyadic endpoints carrying
/// about `prec` significant bits each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighPrecisionReal {
    lo: BigRational,
    hi: BigRational,
    prec: u32,
}

fn log2_estimate(x: &BigRational) -> i64 {
    x.numer().bits() as i64 - x.denom().bits() as i64
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

fn scale_pow2(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        x * BigRational::from_integer(pow2(k as u64))
    } else {
        x / BigRational::from_integer(pow2((-k) as u64))
    }
}

fn round_dyadic(x: &BigRational, prec: u32, up: bool) -> BigRational {
    if x.is_zero() || x.denom().is_one() && x.numer().bits() <= prec as u64 {
        return x.clone();
    }
    let k = prec as i64 + 2 - log2_estimate(x);
    let scaled = scale_pow2(x, k);
    let m = if up { scaled.ceil() } else { scaled.floor() };
    scale_pow2(&m, -k)
}

impl HighPrecisionReal {
    pub fn from_bounds(lo: BigRational, hi: BigRational, prec: u32) -> Self {
        assert!(lo <= hi, "empty enclosure");
        HighPrecisionReal {
            lo: round_dyadic(&lo, prec, false),
            hi: round_dyadic(&hi, prec, true),
            prec,
        }
    }

    pub fn exact(r: &BigRational, prec: u32) -> Self {
        Self::from_bounds(r.clone(), r.clone(), prec)
    }

    pub fn from_int(v: i64, prec: u32) -> Self {
        Self::exact(&BigRational::from_integer(BigInt::from(v)), prec)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::exact(&BigRational::from_integer(v.clone()), prec)
    }

    /// π by Machin's formula with alternating-series tail bounds, memoized
    /// per precision.
    pub fn pi(prec: u32) -> Self {
        static CACHE: OnceLock<Mutex<HashMap<u32, HighPrecisionReal>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(pi) = cache.lock().expect("pi cache poisoned").get(&prec) {
            return pi.clone();
        }
        let pi = Self::machin_pi(prec);
        cache.lock().expect("pi cache poisoned").insert(prec, pi.clone());
        pi
    }

    fn machin_pi(prec: u32) -> Self {
        let a5 = arctan_inv(5, prec + 16);
        let a239 = arctan_inv(239, prec + 16);
        let four = BigRational::from_integer(BigInt::from(4));
        let lo = &four * (&four * &a5.0 - &a239.1);
        let hi = &four * (&four * &a5.1 - &a239.0);
        Self::from_bounds(lo, hi, prec)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Half-width of the enclosure.
    pub fn error_bound(&self) -> BigRational {
        self.width() / BigRational::from_integer(BigInt::from(2))
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.midpoint();
        let e = log2_estimate(&m);
        let shifted = scale_pow2(&m, 60 - e);
        shifted.to_integer().to_f64().unwrap_or(f64::NAN) * 2f64.powi((e - 60) as i32)
    }

    /// Base-10 logarithm of the midpoint, usable far outside the f64 range.
    pub fn log10_estimate(&self) -> f64 {
        let m = self.midpoint().abs();
        let e = log2_estimate(&m);
        let shifted = scale_pow2(&m, 60 - e);
        let mant = shifted.to_integer().to_f64().unwrap_or(f64::NAN);
        mant.log10() + (e - 60) as f64 * 2f64.log10()
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::from_bounds(self.lo.clone(), self.hi.clone(), prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_bounds(&self.lo + &o.lo, &self.hi + &o.hi, self.prec.min(o.prec))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_bounds(&self.lo - &o.hi, &self.hi - &o.lo, self.prec.min(o.prec))
    }

    pub fn neg(&self) -> Self {
        Self::from_bounds(-self.hi.clone(), -self.lo.clone(), self.prec)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = cands.iter().min().cloned().expect("nonempty");
        let hi = cands.iter().max().cloned().expect("nonempty");
        Self::from_bounds(lo, hi, self.prec.min(o.prec))
    }

    /// `None` when the enclosure contains zero.
    pub fn recip(&self) -> Option<Self> {
        if !self.lo.is_positive() && !self.hi.is_negative() {
            return None;
        }
        Some(Self::from_bounds(self.hi.recip(), self.lo.recip(), self.prec))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.recip()?))
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        self.mul(&Self::exact(r, self.prec))
    }

    pub fn powi(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_int(1, self.prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `None` for enclosures reaching below zero.
    pub fn sqrt(&self) -> Option<Self> {
        if self.lo.is_negative() {
            return None;
        }
        Some(Self::from_bounds(
            sqrt_bound(&self.lo, self.prec, false),
            sqrt_bound(&self.hi, self.prec, true),
            self.prec,
        ))
    }

    /// `self^(k/2)` for positive enclosures.
    pub fn pow_half(&self, twice_exp: u64) -> Option<Self> {
        let whole = self.powi(twice_exp / 2);
        if twice_exp % 2 == 0 {
            Some(whole)
        } else {
            Some(whole.mul(&self.sqrt()?))
        }
    }

    /// Certified comparison; `Undecided` when the enclosures overlap.
    pub fn compare(&self, o: &Self) -> Verdict {
        if self.lo > o.hi {
            Verdict::Greater
        } else if self.hi < o.lo {
            Verdict::Less
        } else {
            Verdict::Undecided
        }
    }

    pub fn compare_rational(&self, r: &BigRational) -> Verdict {
        match (self.lo.cmp(r), self.hi.cmp(r)) {
            (Ordering::Greater, _) => Verdict::Greater,
            (_, Ordering::Less) => Verdict::Less,
            _ => Verdict::Undecided,
        }
    }

    pub fn certainly_gt(&self, o: &Self) -> bool {
        self.compare(o).is_greater()
    }

    pub fn certainly_gt_one(&self) -> bool {
        self.compare_rational(&BigRational::one()).is_greater()
    }
}

impl fmt::Display for HighPrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.log10_estimate();
        let e = l.floor();
        write!(f, "{:.6}e{}", 10f64.powf(l - e), e as i64)
    }
}

/// Lower and upper bounds for arctan(1/x), accurate to about `bits` bits.
fn arctan_inv(x: u64, bits: u32) -> (BigRational, BigRational) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let eps = BigRational::new(BigInt::one(), pow2(bits as u64));
    let mut sum = BigRational::zero();
    let mut pow = x.clone();
    let mut k: u64 = 0;
    loop {
        let term = BigRational::new(BigInt::one(), BigInt::from(2 * k + 1) * &pow);
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        pow *= &x2;
        k += 1;
        let next = BigRational::new(BigInt::one(), BigInt::from(2 * k + 1) * &pow);
        if next < eps {
            // Alternating with decreasing terms: the limit lies between the
            // partial sum and the partial sum plus the next signed term.
            return if k % 2 == 0 {
                (sum.clone(), sum + next)
            } else {
                (sum.clone() - next, sum)
            };
        }
    }
}

fn sqrt_bound(x: &BigRational, prec: u32, up: bool) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let k = ((prec as i64 + 4 - log2_estimate(x) / 2).max(0)) as u64;
    let scaled = x * BigRational::from_integer(pow2(2 * k));
    let s = if up {
        scaled.ceil().to_integer().sqrt() + BigInt::one()
    } else {
        scaled.floor().to_integer().sqrt()
    };
    let r = BigRational::new(s, pow2(k));
    debug_assert!(if up { &(&r * &r) >= x } else { &(&r * &r) <= x });
    r
}
