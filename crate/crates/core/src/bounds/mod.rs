//! Certified evaluation of the minimality inequalities and index bounds.

mod interval;

use num_bigint::BigInt;
use num_traits::Signed;

pub use interval::{HighPrecisionReal, Verdict, DEFAULT_PRECISION};

use crate::arith::{factorial, int, ratio, ExactRational};
use crate::covolume::dim_g;
use crate::local::{e_prime, LocalError, ParahoricType};
use crate::zeta::{riemann_zeta_neg, QuadraticFieldData, ZetaError};

type Real = HighPrecisionReal;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("rank n = {0} is below 2")]
    RankTooSmall(u32),
    #[error("degree d = {0} is below 2")]
    DegreeTooSmall(u32),
    #[error("discriminant {0} is below 5")]
    DiscriminantTooSmall(u64),
    #[error("the ramified set is empty")]
    EmptyRamifiedSet,
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

fn check_n(n: u32) -> Result<(), BoundsError> {
    if n < 2 {
        Err(BoundsError::RankTooSmall(n))
    } else {
        Ok(())
    }
}

/// `δ(n) = dim G/2 − 1`, a half-integer when `n` is even.
pub fn delta(n: u32) -> ExactRational {
    ratio(dim_g(n) as i64, 2) - int(1)
}

/// `C(n) = ∏_{j=1}^{n+1} (2j−1)!/(2π)^{2j}`.
pub fn c_const(n: u32, prec: u32) -> Real {
    let mut num = BigInt::from(1);
    for j in 1..=(n as u64 + 1) {
        num *= factorial(2 * j - 1);
    }
    let two_pi = Real::pi(prec).mul_rational(&int(2));
    let total_exp = (n as u64 + 1) * (n as u64 + 2);
    Real::from_bigint(&num, prec)
        .div(&two_pi.powi(total_exp))
        .expect("2π is positive")
}

/// `C(n+1)/C(n) = (2n+3)!/(2π)^{2n+4}`.
pub fn c_ratio(n: u32, prec: u32) -> Real {
    let two_pi = Real::pi(prec).mul_rational(&int(2));
    Real::from_bigint(&factorial(2 * n as u64 + 3), prec)
        .div(&two_pi.powi(2 * n as u64 + 4))
        .expect("2π is positive")
}

/// `f(n,d,D) = (12/π)^d (D/5)^{dim G/2} (C(n)/2)^{d−2} / (39 D)`.
pub fn f_bound(n: u32, d: u32, disc: u64, prec: u32) -> Result<Real, BoundsError> {
    check_n(n)?;
    if d < 2 {
        return Err(BoundsError::DegreeTooSmall(d));
    }
    if disc < 5 {
        return Err(BoundsError::DiscriminantTooSmall(disc));
    }
    let pi = Real::pi(prec);
    let twelve_over_pi = Real::from_int(12, prec).div(&pi).expect("π is positive");
    let d_over_5 = Real::exact(&ratio(disc as i64, 5), prec);
    let half_c = c_const(n, prec).mul_rational(&ratio(1, 2));
    let value = twelve_over_pi
        .powi(d as u64)
        .mul(&d_over_5.pow_half(dim_g(n)).expect("D/5 is positive"))
        .mul(&half_c.powi(d as u64 - 2))
        .mul_rational(&ratio(1, 39 * disc as i64));
    Ok(value)
}

fn six_point_five_pow_delta(n: u32, prec: u32) -> Real {
    // 6.5^{δ(n)} with 2δ(n) = dim G − 2
    Real::exact(&ratio(13, 2), prec)
        .pow_half(dim_g(n) - 2)
        .expect("positive base")
}

/// `a(n) = (6/π) C(n) 6.5^{δ(n)}`.
pub fn a_const(n: u32, prec: u32) -> Result<Real, BoundsError> {
    check_n(n)?;
    let six_over_pi = Real::from_int(6, prec).div(&Real::pi(prec)).expect("π is positive");
    Ok(six_over_pi.mul(&c_const(n, prec)).mul(&six_point_five_pow_delta(n, prec)))
}

/// `(12/π)² (6.5²/5)^{δ(n)} / 195`.
pub fn odlyzko_prefactor(n: u32, prec: u32) -> Result<Real, BoundsError> {
    check_n(n)?;
    let twelve_over_pi = Real::from_int(12, prec).div(&Real::pi(prec)).expect("π is positive");
    let base = Real::exact(&ratio(169, 20), prec);
    Ok(twelve_over_pi
        .powi(2)
        .mul(&base.pow_half(dim_g(n) - 2).expect("positive base"))
        .mul_rational(&ratio(1, 195)))
}

/// Right side of the `d ≥ 5` exclusion, `prefactor · a(n)^{d−2}`.
pub fn odlyzko_bound(n: u32, d: u32, prec: u32) -> Result<Real, BoundsError> {
    if d < 2 {
        return Err(BoundsError::DegreeTooSmall(d));
    }
    Ok(odlyzko_prefactor(n, prec)?.mul(&a_const(n, prec)?.powi(d as u64 - 2)))
}

/// The exclusion bound exceeds 1 with certified separation.
pub fn odlyzko_check(n: u32, d: u32, prec: u32) -> Result<bool, BoundsError> {
    Ok(odlyzko_bound(n, d, prec)?.certainly_gt_one())
}

/// `h_k ≤ 16 (π/12)^d D`.
pub fn class_number_bound(d: u32, disc: u64, prec: u32) -> Real {
    let pi_over_12 = Real::pi(prec).mul_rational(&ratio(1, 12));
    pi_over_12.powi(d as u64).mul_rational(&int(16 * disc as i64))
}

/// `|U⁺/U²| ≤ 2^{d−1}`.
pub fn unit_index_bound(d: u32) -> BigInt {
    BigInt::from(1) << (d.saturating_sub(1))
}

/// Both sides of the step from the unsimplified covolume quotient to `f`.
#[derive(Debug, Clone)]
pub struct DerivationAudit {
    pub n: u32,
    pub d: u32,
    pub disc: u64,
    /// `(n+1) D^{dim/2} C^d (12/π)^d / (16 D 2^{d−1})` over `1.2 (n+1) 5^{dim/2} C²`.
    pub chain: Real,
    pub f: Real,
    /// `chain ≥ f` with certified separation, so `f` is a valid lower bound.
    pub consistent: bool,
}

/// Recomputes the quotient bound from the class-number and unit-index
/// evaluators, before the constant is rounded up to 39.
pub fn derivation_audit(n: u32, d: u32, disc: u64, prec: u32) -> Result<DerivationAudit, BoundsError> {
    let f = f_bound(n, d, disc, prec)?;
    let c = c_const(n, prec);
    let half_dim = dim_g(n);
    let dk = Real::exact(&int(disc as i64), prec);
    // Replacing h_k by its bound: ((n+1)/(16 D 2^{d−1})) (12/π)^d D^{dim/2} C(n)^d.
    let h_bound = class_number_bound(d, disc, prec);
    let hk_factor = Real::from_int(16 * disc as i64, prec).div(&h_bound).expect("positive");
    let lower = hk_factor
        .mul(&dk.pow_half(half_dim).expect("positive"))
        .mul(&c.powi(d as u64))
        .mul_rational(&ExactRational::new(BigInt::from(n + 1), BigInt::from(16 * disc) * unit_index_bound(d)));
    let upper = Real::exact(&int(5), prec)
        .pow_half(half_dim)
        .expect("positive")
        .mul(&c.powi(2))
        .mul_rational(&(ratio(6, 5) * int(n as i64 + 1)));
    let chain = lower.div(&upper).expect("positive");
    let consistent = chain.compare(&f) == Verdict::Greater;
    Ok(DerivationAudit { n, d, disc, chain, f, consistent })
}

/// `[Γ : Λ_P] ≤ 2^{#ℛ} h_k |U⁺/U²|` from stored field data.
pub fn index_bound(field: &QuadraticFieldData, num_ramified: u32) -> BigInt {
    (BigInt::from(1) << num_ramified) * field.class_number * field.tp_units_mod_squares
}

/// `(n+1) ∏_{q∈ℛ} e′(P_q)/2 · ∏_j |ζ(1−2j)|/2`, with the α_s factor for
/// `s = n mod 2`.
pub fn nonuniform_lower_bound(n: u32, ramified: &[u64]) -> Result<ExactRational, BoundsError> {
    check_n(n)?;
    if ramified.is_empty() {
        return Err(BoundsError::EmptyRamifiedSet);
    }
    let kind = if n % 2 == 0 {
        ParahoricType::SpecialAlpha0
    } else {
        ParahoricType::SpecialAlpha1
    };
    let mut value = int(n as i64 + 1);
    for &q in ramified {
        value *= ExactRational::from_integer(e_prime(q, n, kind)?) / int(2);
    }
    for j in 1..=(n + 1) {
        value *= riemann_zeta_neg(j)?.abs() / int(2);
    }
    Ok(value)
}

/// The bound at `ℛ = {2}` is strictly below every other single prime and
/// every pair from `candidates`.
pub fn verify_min_at_q2(n: u32, candidates: &[u64]) -> Result<bool, BoundsError> {
    let at_two = nonuniform_lower_bound(n, &[2])?;
    for (i, &p) in candidates.iter().enumerate() {
        if p != 2 && nonuniform_lower_bound(n, &[p])? <= at_two {
            return Ok(false);
        }
        for &q in &candidates[i + 1..] {
            if nonuniform_lower_bound(n, &[p, q])? <= at_two {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One checked inequality with its verdicts at two precisions.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub label: String,
    pub value: Real,
    pub verdict: Verdict,
    pub verdict_doubled: Verdict,
}

impl BoundCheck {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Greater && self.verdict_doubled == Verdict::Greater
    }
}

fn check_gt_one<F>(label: String, prec: u32, eval: F) -> Result<BoundCheck, BoundsError>
where
    F: Fn(u32) -> Result<Real, BoundsError>,
{
    let value = eval(prec)?;
    let one = ExactRational::from_integer(BigInt::from(1));
    let verdict = value.compare_rational(&one);
    let verdict_doubled = eval(2 * prec)?.compare_rational(&one);
    Ok(BoundCheck { label, value, verdict, verdict_doubled })
}

/// All inequalities the uniform minimality argument consumes, for
/// `2 ≤ n ≤ 13`: `f(n,2,8)`, `f(n,3,49)`, `f(n,4,725)`, `a(n)`, the
/// Odlyzko prefactor, and `C(13)/2`.
pub fn minimality_checks(prec: u32) -> Result<Vec<BoundCheck>, BoundsError> {
    let mut out = Vec::new();
    for n in 2..=13 {
        for (d, disc) in [(2, 8), (3, 49), (4, 725)] {
            out.push(check_gt_one(format!("f({n},{d},{disc}) > 1"), prec, |p| {
                f_bound(n, d, disc, p)
            })?);
        }
        out.push(check_gt_one(format!("a({n}) > 1"), prec, |p| a_const(n, p))?);
        out.push(check_gt_one(format!("odlyzko prefactor({n}) > 1"), prec, |p| {
            odlyzko_prefactor(n, p)
        })?);
    }
    out.push(check_gt_one("C(13)/2 > 1".to_string(), prec, |p| {
        Ok(c_const(13, p).mul_rational(&ratio(1, 2)))
    })?);
    Ok(out)
}

/// `C(n+1)/C(n)` strictly increases on `lo ≤ n ≤ hi`, certified.
pub fn c_ratio_increasing(lo: u32, hi: u32, prec: u32) -> bool {
    let ratios: Vec<Real> = (lo..=hi).map(|n| c_ratio(n, prec)).collect();
    ratios.windows(2).all(|w| w[1].certainly_gt(&w[0]))
}

pub fn is_prime_u64(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covolume::{chi_gamma0_exact, chi_gamma_s_exact};

    const P: u32 = DEFAULT_PRECISION;

    #[test]
    fn c_values() {
        let c2 = c_const(2, P);
        let oracle = 720.0 / (2.0 * std::f64::consts::PI).powi(12);
        assert!((c2.to_f64() / oracle - 1.0).abs() < 1e-14);
        let exact_ratio = c_const(6, P).div(&c_const(5, P)).unwrap();
        let formula = c_ratio(5, P);
        assert!((exact_ratio.to_f64() / formula.to_f64() - 1.0).abs() < 1e-25);
        assert!(c_const(13, P).mul_rational(&ratio(1, 2)).certainly_gt_one());
        assert!(!c_const(12, P).mul_rational(&ratio(1, 2)).certainly_gt_one());
    }

    #[test]
    fn f_examples() {
        for n in 2..=13 {
            assert!(f_bound(n, 2, 8, P).unwrap().certainly_gt_one(), "n={n}");
        }
        let f225 = f_bound(2, 2, 5, P).unwrap();
        assert_eq!(f225.compare_rational(&int(1)), Verdict::Less);
        assert!((f225.to_f64() - 144.0 / (195.0 * std::f64::consts::PI.powi(2))).abs() < 1e-12);
        assert_eq!(f_bound(1, 2, 8, P).unwrap_err(), BoundsError::RankTooSmall(1));
        assert_eq!(f_bound(2, 1, 8, P).unwrap_err(), BoundsError::DegreeTooSmall(1));
        assert_eq!(f_bound(2, 2, 4, P).unwrap_err(), BoundsError::DiscriminantTooSmall(4));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(2), ratio(19, 2));
        assert_eq!(delta(3), int(17));
    }

    #[test]
    fn a_and_odlyzko() {
        for n in 2..=13 {
            assert!(a_const(n, P).unwrap().certainly_gt_one(), "n={n}");
            assert!(odlyzko_prefactor(n, P).unwrap().certainly_gt_one());
            for d in 5..=8 {
                assert!(odlyzko_check(n, d, P).unwrap());
            }
        }
    }

    #[test]
    fn audit_supports_f() {
        for (n, d, disc) in [(2, 2, 8), (5, 3, 49), (13, 4, 725), (7, 2, 5)] {
            let a = derivation_audit(n, d, disc, P).unwrap();
            assert!(a.consistent, "n={n} d={d} D={disc}");
        }
        assert_eq!(unit_index_bound(1), BigInt::from(1));
        assert_eq!(unit_index_bound(4), BigInt::from(8));
    }

    #[test]
    fn index_bounds() {
        assert_eq!(index_bound(&QuadraticFieldData::RATIONALS, 1), BigInt::from(2));
        assert_eq!(index_bound(&QuadraticFieldData::Q_SQRT5, 0), BigInt::from(1));
        assert_eq!(index_bound(&QuadraticFieldData::RATIONALS, 2), BigInt::from(4));
    }

    #[test]
    fn lower_bound_is_gamma_s() {
        assert_eq!(nonuniform_lower_bound(2, &[2]).unwrap(), chi_gamma0_exact(2).unwrap());
        for n in 2..=9 {
            assert_eq!(nonuniform_lower_bound(n, &[2]).unwrap(), chi_gamma_s_exact(n).unwrap());
        }
        assert_eq!(nonuniform_lower_bound(2, &[]).unwrap_err(), BoundsError::EmptyRamifiedSet);
    }

    #[test]
    fn minimum_at_two() {
        let primes: Vec<u64> = (2..=100).filter(|&p| is_prime_u64(p)).collect();
        assert_eq!(primes.len(), 25);
        for n in 2..=5 {
            assert!(verify_min_at_q2(n, &primes).unwrap());
        }
    }

    #[test]
    fn c_ratio_growth() {
        assert!(c_ratio_increasing(13, 40, P));
        assert!(c_ratio(12, P).compare_rational(&int(1)) == Verdict::Greater);
    }
}
