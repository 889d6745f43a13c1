//! Special values of the Riemann zeta function, Dirichlet L-functions of
//! real quadratic characters and Dedekind zeta functions of ℚ and of real
//! quadratic fields at negative odd integers.
//!
//! For `k` real quadratic of discriminant `D` we use the factorization
//! `zeta_k(s) = zeta(s) L(s, chi_D)` with `L(1-n, chi) = -B_{n,chi}/n`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{bernoulli, bernoulli_poly, int, ExactRational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZetaError {
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("degree {0} fields are not supported")]
    UnsupportedDegree(u32),
    #[error("index must be positive")]
    ZeroIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldLabel {
    Rationals,
    RealQuadratic,
}

/// The arithmetic data of a totally real base field used by the covolume
/// formulas.
///
/// `class_number` and `tp_units_mod_squares` (the order of `U⁺/U²`) are
/// stored, not computed. For ℚ(√5) both are 1: the class number is 1, and
/// the fundamental unit φ has norm −1, so every totally positive unit is a
/// square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticFieldData {
    pub label: FieldLabel,
    pub discriminant: u64,
    pub degree: u32,
    pub class_number: u64,
    pub tp_units_mod_squares: u64,
}

impl QuadraticFieldData {
    pub const RATIONALS: QuadraticFieldData = QuadraticFieldData {
        label: FieldLabel::Rationals,
        discriminant: 1,
        degree: 1,
        class_number: 1,
        tp_units_mod_squares: 1,
    };

    pub const Q_SQRT5: QuadraticFieldData = QuadraticFieldData {
        label: FieldLabel::RealQuadratic,
        discriminant: 5,
        degree: 2,
        class_number: 1,
        tp_units_mod_squares: 1,
    };

    /// A real quadratic field given by its discriminant, with caller-supplied
    /// class number and unit data.
    pub fn real_quadratic(
        discriminant: u64,
        class_number: u64,
        tp_units_mod_squares: u64,
    ) -> Result<Self, ZetaError> {
        if !is_fundamental_discriminant(discriminant as i64) || discriminant == 1 {
            return Err(ZetaError::NotFundamental(discriminant as i64));
        }
        Ok(QuadraticFieldData {
            label: FieldLabel::RealQuadratic,
            discriminant,
            degree: 2,
            class_number,
            tp_units_mod_squares,
        })
    }

    pub fn character(&self) -> Option<QuadraticCharacter> {
        match self.label {
            FieldLabel::Rationals => None,
            FieldLabel::RealQuadratic => QuadraticCharacter::new(self.discriminant as i64).ok(),
        }
    }

    fn validate(&self) -> Result<(), ZetaError> {
        match (self.label, self.degree) {
            (FieldLabel::Rationals, 1) if self.discriminant == 1 => Ok(()),
            (FieldLabel::Rationals, 1) => Err(ZetaError::NotFundamental(self.discriminant as i64)),
            (FieldLabel::RealQuadratic, 2) => {
                let d = self.discriminant as i64;
                if d > 1 && is_fundamental_discriminant(d) {
                    Ok(())
                } else {
                    Err(ZetaError::NotFundamental(d))
                }
            }
            (_, deg) => Err(ZetaError::UnsupportedDegree(deg)),
        }
    }
}

fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        if n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

/// Fundamental discriminants: `D ≡ 1 mod 4` squarefree, or `D = 4m` with
/// `m ≡ 2, 3 mod 4` squarefree. Sign is allowed; 1 counts (trivial field).
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let abs = d.unsigned_abs();
    match d.rem_euclid(4) {
        1 => is_squarefree(abs),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Kronecker symbol `(a/n)` for `n >= 1`.
pub fn kronecker(a: i64, n: u64) -> i8 {
    if n == 0 {
        return if a.unsigned_abs() == 1 { 1 } else { 0 };
    }
    let mut n = n;
    let mut result: i8 = 1;
    // Strip factors of 2 from n using (a/2).
    let twos = n.trailing_zeros();
    n >>= twos;
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Remaining odd n: Jacobi symbol with reciprocity.
    let mut a = a.rem_euclid(n as i64) as u64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// The primitive quadratic character `a ↦ (D/a)` attached to a fundamental
/// discriminant `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticCharacter {
    modulus: i64,
}

impl QuadraticCharacter {
    pub fn new(discriminant: i64) -> Result<Self, ZetaError> {
        if discriminant == 1 || !is_fundamental_discriminant(discriminant) {
            return Err(ZetaError::NotFundamental(discriminant));
        }
        Ok(QuadraticCharacter {
            modulus: discriminant,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus.unsigned_abs()
    }

    /// χ(−1) = +1 for real quadratic fields.
    pub fn is_even(&self) -> bool {
        self.modulus > 0
    }

    pub fn value(&self, a: i64) -> i8 {
        if a >= 0 {
            kronecker(self.modulus, a as u64)
        } else {
            let sign = if self.is_even() { 1 } else { -1 };
            sign * kronecker(self.modulus, a.unsigned_abs())
        }
    }
}

/// `zeta(1 - 2j) = -B_{2j} / (2j)`.
pub fn riemann_zeta_neg(j: u32) -> Result<ExactRational, ZetaError> {
    if j == 0 {
        return Err(ZetaError::ZeroIndex);
    }
    let m = 2 * j as usize;
    Ok(-bernoulli(m) / int(m as i64))
}

/// Generalized Bernoulli number `B_{n,χ} = D^{n-1} sum_{a=1}^{D} χ(a) B_n(a/D)`.
pub fn generalized_bernoulli(n: u32, chi: &QuadraticCharacter) -> Result<ExactRational, ZetaError> {
    if n == 0 {
        return Err(ZetaError::ZeroIndex);
    }
    let d = chi.modulus() as i64;
    let mut acc = BigRational::zero();
    for a in 1..=d {
        match chi.value(a) {
            0 => {}
            v => {
                let x = BigRational::new(BigInt::from(a), BigInt::from(d));
                let term = bernoulli_poly(n as usize, &x);
                if v > 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
    }
    Ok(acc * num_traits::pow(int(d), n as usize - 1))
}

type LCache = RwLock<HashMap<(u64, u32), ExactRational>>;

/// `L(1 - n, χ) = -B_{n,χ} / n`, memoized per (modulus, n).
pub fn dirichlet_l_neg(n: u32, chi: &QuadraticCharacter) -> Result<ExactRational, ZetaError> {
    static CACHE: OnceLock<LCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (chi.modulus(), n);
    if let Some(v) = cache.read().expect("L-value cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let value = -generalized_bernoulli(n, chi)? / int(n as i64);
    cache
        .write()
        .expect("L-value cache poisoned")
        .insert(key, value.clone());
    Ok(value)
}

/// `zeta_k(1 - 2j)` for `k = ℚ` or `k` real quadratic.
pub fn dedekind_zeta_neg(field: &QuadraticFieldData, j: u32) -> Result<ExactRational, ZetaError> {
    field.validate()?;
    let zeta = riemann_zeta_neg(j)?;
    match field.character() {
        None => Ok(zeta),
        Some(chi) => {
            let value = zeta * dirichlet_l_neg(2 * j, &chi)?;
            debug_assert!(value.is_positive());
            Ok(value)
        }
    }
}
