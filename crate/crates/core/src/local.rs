//! Orders of finite reductive groups and the local correction factors
//! `e'(P_v)` at places where the group is not split.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{factorize, pow_signed, ExactRational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("rank parameter n = {0} is out of range")]
    BadRank(u32),
    #[error("type α₁ requires odd n, got n = {0}")]
    EvenRankForAlpha1(u32),
    #[error("hyperspecial parahorics have no correction factor")]
    Hyperspecial,
}

/// Maximal-volume parahoric types at a place. `SpecialAlpha1` only exists
/// when `n` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParahoricType {
    Hyperspecial,
    SpecialAlpha0,
    SpecialAlpha1,
}

impl ParahoricType {
    /// The special type of maximal volume at a nonsplit place: α₀ for even
    /// `n`, α₁ for odd `n`.
    pub fn maximal_volume(n: u32) -> ParahoricType {
        if n % 2 == 0 {
            ParahoricType::SpecialAlpha0
        } else {
            ParahoricType::SpecialAlpha1
        }
    }
}

/// Finite groups of Lie type over `F_q` whose orders enter the local
/// factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiniteGroupKind {
    /// `Sp_{2r}(F_q)`, split of type C_r.
    SplitC { rank: u32, q: u64 },
    /// `SU_{r+1}(F_q)`, quasi-split of type ²A_r.
    Unitary2A { rank: u32, q: u64 },
    /// One-dimensional anisotropic torus, `q + 1` points.
    NonsplitTorus { q: u64 },
}

impl FiniteGroupKind {
    fn q(&self) -> u64 {
        match *self {
            FiniteGroupKind::SplitC { q, .. }
            | FiniteGroupKind::Unitary2A { q, .. }
            | FiniteGroupKind::NonsplitTorus { q } => q,
        }
    }

    /// Dimension of the algebraic group.
    pub fn dimension(&self) -> u64 {
        match *self {
            FiniteGroupKind::SplitC { rank, .. } => (rank as u64) * (2 * rank as u64 + 1),
            FiniteGroupKind::Unitary2A { rank, .. } => (rank as u64 + 1).pow(2) - 1,
            FiniteGroupKind::NonsplitTorus { .. } => 1,
        }
    }
}

/// Checks that `q` is a prime power `p^f` with `f >= 1`.
pub fn check_prime_power(q: u64) -> Result<(), LocalError> {
    if q < 2 {
        return Err(LocalError::NotPrimePower(q));
    }
    let f = factorize(&BigRational::from_integer(BigInt::from(q)))
        .map_err(|_| LocalError::NotPrimePower(q))?;
    if f.factors.len() == 1 {
        Ok(())
    } else {
        Err(LocalError::NotPrimePower(q))
    }
}

fn big(q: u64) -> BigInt {
    BigInt::from(q)
}

fn pow(q: &BigInt, e: u64) -> BigInt {
    num_traits::pow(q.clone(), e as usize)
}

/// Exact order of the group of `F_q`-points.
pub fn group_order(kind: FiniteGroupKind) -> Result<BigInt, LocalError> {
    check_prime_power(kind.q())?;
    let q = big(kind.q());
    Ok(match kind {
        FiniteGroupKind::SplitC { rank, .. } => {
            let r = rank as u64;
            let mut acc = pow(&q, r * r);
            for j in 1..=r {
                acc *= pow(&q, 2 * j) - 1;
            }
            acc
        }
        FiniteGroupKind::Unitary2A { rank, .. } => {
            let r = rank as u64;
            let mut acc = pow(&q, r * (r + 1) / 2);
            for j in 2..=r + 1 {
                let qj = pow(&q, j);
                acc *= if j % 2 == 0 { qj - 1 } else { qj + 1 };
            }
            acc
        }
        FiniteGroupKind::NonsplitTorus { .. } => q + 1,
    })
}

/// `e'(P⁰_v) = prod_{j=1}^{n+1} (q^j + (-1)^j)`.
pub fn e_prime_alpha0(q: u64, n: u32) -> Result<BigInt, LocalError> {
    check_prime_power(q)?;
    if n < 2 {
        return Err(LocalError::BadRank(n));
    }
    let qb = big(q);
    let mut acc = BigInt::one();
    for j in 1..=(n as u64 + 1) {
        let qj = pow(&qb, j);
        acc *= if j % 2 == 0 { qj + 1 } else { qj - 1 };
    }
    Ok(acc)
}

/// `e'(P¹_v) = prod_{j=1}^{2m} (q^{2j} - 1) / prod_{j=1}^{m} (q^{4j} - 1)`
/// with `n + 1 = 2m`.
pub fn e_prime_alpha1(q: u64, n: u32) -> Result<BigInt, LocalError> {
    check_prime_power(q)?;
    if n % 2 == 0 {
        return Err(LocalError::EvenRankForAlpha1(n));
    }
    if n < 3 {
        return Err(LocalError::BadRank(n));
    }
    let m = (n as u64 + 1) / 2;
    let qb = big(q);
    let num = (1..=2 * m).fold(BigInt::one(), |acc, j| acc * (pow(&qb, 2 * j) - 1));
    let den = (1..=m).fold(BigInt::one(), |acc, j| acc * (pow(&qb, 4 * j) - 1));
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "e'(P¹) must be integral");
    Ok(quot)
}

/// Correction factor for a parahoric type at a nonsplit place.
pub fn e_prime(q: u64, n: u32, kind: ParahoricType) -> Result<BigInt, LocalError> {
    match kind {
        ParahoricType::Hyperspecial => Err(LocalError::Hyperspecial),
        ParahoricType::SpecialAlpha0 => e_prime_alpha0(q, n),
        ParahoricType::SpecialAlpha1 => e_prime_alpha1(q, n),
    }
}

/// `e'(P_v) = q^{(dim M - dim M_split)/2} |M_split(F_q)| / |M(F_q)|`, built
/// from group orders and dimensions of the reductive quotients.
///
/// The split quotient is `Sp_{2n+2}`. For α₀ the quotient is a nonsplit
/// torus times `SU_{n+1}`; for α₁ it is the restriction of scalars of
/// `Sp_{n+1}` from `F_{q²}`.
pub fn e_prime_from_definition(
    q: u64,
    n: u32,
    kind: ParahoricType,
) -> Result<ExactRational, LocalError> {
    let split = FiniteGroupKind::SplitC { rank: n + 1, q };
    let split_dim = split.dimension() as i64;
    let (dim, order) = match kind {
        ParahoricType::Hyperspecial => (split_dim, group_order(split)?),
        ParahoricType::SpecialAlpha0 => {
            if n < 2 {
                return Err(LocalError::BadRank(n));
            }
            let torus = FiniteGroupKind::NonsplitTorus { q };
            let unitary = FiniteGroupKind::Unitary2A { rank: n, q };
            let dim = (torus.dimension() + unitary.dimension()) as i64;
            (dim, group_order(torus)? * group_order(unitary)?)
        }
        ParahoricType::SpecialAlpha1 => {
            if n % 2 == 0 {
                return Err(LocalError::EvenRankForAlpha1(n));
            }
            if n < 3 {
                return Err(LocalError::BadRank(n));
            }
            let m = (n + 1) / 2;
            let q2 = q.checked_mul(q).ok_or(LocalError::NotPrimePower(q))?;
            let inner = FiniteGroupKind::SplitC { rank: m, q: q2 };
            (2 * inner.dimension() as i64, group_order(inner)?)
        }
    };
    let diff = dim - split_dim;
    debug_assert!(diff % 2 == 0);
    let qr = BigRational::from_integer(big(q));
    Ok(pow_signed(&qr, diff / 2) * BigRational::new(group_order(split)?, order))
}

/// Convenience for callers that need a plain `u64` (small inputs only).
pub fn e_prime_u64(q: u64, n: u32, kind: ParahoricType) -> Option<u64> {
    e_prime(q, n, kind).ok()?.to_u64()
}
