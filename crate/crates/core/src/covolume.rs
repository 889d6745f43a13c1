//! Exact Euler–Poincaré characteristics of principal arithmetic subgroups
//! of `Sp(n,1)` and of the minimal-covolume lattices built from them.
//!
//! Every value goes through the Euler-product form
//! `chi(Λ_P) = (n+1) prod_{v in T} e'(P_v) prod_{j=1}^{n+1} 2^{-d} |zeta_k(1-2j)|`,
//! except where a second closed form is provided as a cross-check.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::arith::{
    abs, approx_decimal, bernoulli, factorize, int, ratio, ExactRational,
    FactoredRational,
};
use crate::local::{e_prime, e_prime_alpha0, e_prime_alpha1, LocalError, ParahoricType};
use crate::zeta::{dedekind_zeta_neg, FieldLabel, QuadraticFieldData, ZetaError};

/// Significant figures used for the decimal view of a [`ChiResult`].
pub const DEFAULT_SIG_FIGS: u32 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CovolumeError {
    #[error("n must be at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("Γ¹ is only defined for odd n, got n = {0}")]
    EvenRankForGamma1(u32),
    #[error("unsupported base field (degree {0})")]
    UnsupportedField(u32),
    #[error("descriptor is inconsistent: {0}")]
    BadDescriptor(&'static str),
    #[error("value must be positive")]
    NonPositive,
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeName {
    /// `Sp(n,1,ℋ)` extended by the scalar `I(1+i)/√2`.
    Gamma0,
    /// Normalizer of the principal subgroup with type α₁ at 2 (odd n).
    Gamma1,
    /// Stabilizer of `𝒮^{n+1}` for the icosian ring, uniform.
    Delta,
    /// Stabilizer of the Hurwitz lattice `ℋ^{n+1}`.
    SpHurwitz,
    Generic,
}

impl LatticeName {
    pub fn as_str(&self) -> &'static str {
        match self {
            LatticeName::Gamma0 => "gamma0",
            LatticeName::Gamma1 => "gamma1",
            LatticeName::Delta => "delta",
            LatticeName::SpHurwitz => "sp-hurwitz",
            LatticeName::Generic => "generic",
        }
    }
}

impl fmt::Display for LatticeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A nonsplit finite place: residue field size and the chosen parahoric type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RamifiedPlace {
    pub q: u64,
    pub parahoric: ParahoricType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeDescriptor {
    pub name: LatticeName,
    pub n: u32,
    pub field: QuadraticFieldData,
    pub ramified: Vec<RamifiedPlace>,
}

impl LatticeDescriptor {
    pub fn gamma0(n: u32) -> Self {
        Self::hurwitz_like(LatticeName::Gamma0, n, ParahoricType::SpecialAlpha0)
    }

    pub fn gamma1(n: u32) -> Self {
        Self::hurwitz_like(LatticeName::Gamma1, n, ParahoricType::SpecialAlpha1)
    }

    pub fn sp_hurwitz(n: u32) -> Self {
        Self::hurwitz_like(LatticeName::SpHurwitz, n, ParahoricType::SpecialAlpha0)
    }

    /// Γ^s with `s = n mod 2`.
    pub fn gamma_s(n: u32) -> Self {
        if n % 2 == 0 {
            Self::gamma0(n)
        } else {
            Self::gamma1(n)
        }
    }

    pub fn delta(n: u32) -> Self {
        LatticeDescriptor {
            name: LatticeName::Delta,
            n,
            field: QuadraticFieldData::Q_SQRT5,
            ramified: Vec::new(),
        }
    }

    pub fn generic(n: u32, field: QuadraticFieldData, ramified: Vec<RamifiedPlace>) -> Self {
        LatticeDescriptor {
            name: LatticeName::Generic,
            n,
            field,
            ramified,
        }
    }

    fn hurwitz_like(name: LatticeName, n: u32, parahoric: ParahoricType) -> Self {
        LatticeDescriptor {
            name,
            n,
            field: QuadraticFieldData::RATIONALS,
            ramified: vec![RamifiedPlace { q: 2, parahoric }],
        }
    }

    /// `dim G = (n+1)(2n+3)`.
    pub fn dim_g(&self) -> u64 {
        dim_g(self.n)
    }

    /// Index of the principal subgroup `Λ_P` in the named lattice: 2 for the
    /// normalizers over ℚ with one ramified prime, 1 for Δ and for the
    /// stabilizer `Sp(n,1,ℋ)` itself.
    pub fn index_over_principal(&self) -> Option<u64> {
        match self.name {
            LatticeName::Gamma0 | LatticeName::Gamma1 => Some(2),
            LatticeName::Delta | LatticeName::SpHurwitz => Some(1),
            LatticeName::Generic => None,
        }
    }

    pub fn validate(&self) -> Result<(), CovolumeError> {
        if self.n < 2 {
            return Err(CovolumeError::RankTooSmall(self.n));
        }
        let over_q_at_2 = self.field == QuadraticFieldData::RATIONALS
            && self.ramified.len() == 1
            && self.ramified[0].q == 2;
        match self.name {
            LatticeName::Gamma0 | LatticeName::SpHurwitz => {
                if !over_q_at_2 || self.ramified[0].parahoric != ParahoricType::SpecialAlpha0 {
                    return Err(CovolumeError::BadDescriptor("expected ℚ with α₀ at q = 2"));
                }
            }
            LatticeName::Gamma1 => {
                if self.n % 2 == 0 {
                    return Err(CovolumeError::EvenRankForGamma1(self.n));
                }
                if !over_q_at_2 || self.ramified[0].parahoric != ParahoricType::SpecialAlpha1 {
                    return Err(CovolumeError::BadDescriptor("expected ℚ with α₁ at q = 2"));
                }
            }
            LatticeName::Delta => {
                if self.field != QuadraticFieldData::Q_SQRT5 || !self.ramified.is_empty() {
                    return Err(CovolumeError::BadDescriptor("expected ℚ(√5) with no ramification"));
                }
            }
            LatticeName::Generic => {}
        }
        match (self.field.label, self.field.degree) {
            (FieldLabel::Rationals, 1) | (FieldLabel::RealQuadratic, 2) => {}
            (_, d) => return Err(CovolumeError::UnsupportedField(d)),
        }
        for place in &self.ramified {
            if place.parahoric == ParahoricType::SpecialAlpha1 && self.n % 2 == 0 {
                return Err(LocalError::EvenRankForAlpha1(self.n).into());
            }
        }
        Ok(())
    }
}

pub fn dim_g(n: u32) -> u64 {
    (n as u64 + 1) * (2 * n as u64 + 3)
}

/// Exact, factored and decimal views of one covolume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiResult {
    pub exact: ExactRational,
    /// `None` when a cofactor resists factorization.
    pub factored: Option<FactoredRational>,
    pub approx: String,
}

impl ChiResult {
    pub fn new(exact: ExactRational) -> Result<ChiResult, CovolumeError> {
        if !exact.is_positive() {
            return Err(CovolumeError::NonPositive);
        }
        let factored = factorize(&exact).ok();
        let approx = approx_decimal(&exact, DEFAULT_SIG_FIGS);
        Ok(ChiResult {
            exact,
            factored,
            approx,
        })
    }
}

impl fmt::Display for ChiResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.factored {
            Some(fr) => write!(f, "{} ≈ {}", fr, self.approx),
            None => write!(f, "{} ≈ {}", self.exact, self.approx),
        }
    }
}

fn check_rank(n: u32) -> Result<(), CovolumeError> {
    if n < 2 {
        Err(CovolumeError::RankTooSmall(n))
    } else {
        Ok(())
    }
}

/// `prod_{j=1}^{n+1} 2^{-d} |zeta_k(1-2j)|`.
fn zeta_product(field: &QuadraticFieldData, n: u32) -> Result<ExactRational, CovolumeError> {
    let scale = num_traits::pow(int(2), field.degree as usize).recip();
    let mut acc = BigRational::one();
    for j in 1..=n + 1 {
        acc *= abs(&dedekind_zeta_neg(field, j)?) * &scale;
    }
    Ok(acc)
}

/// χ of the principal arithmetic subgroup `Λ_P` described by `desc`, from
/// the Euler-product form of the volume formula.
pub fn chi_principal_exact(desc: &LatticeDescriptor) -> Result<ExactRational, CovolumeError> {
    desc.validate()?;
    let mut acc = int(desc.n as i64 + 1) * zeta_product(&desc.field, desc.n)?;
    for place in &desc.ramified {
        if place.parahoric == ParahoricType::Hyperspecial {
            continue;
        }
        acc *= BigRational::from_integer(e_prime(place.q, desc.n, place.parahoric)?);
    }
    Ok(acc)
}

pub fn chi_principal(desc: &LatticeDescriptor) -> Result<ChiResult, CovolumeError> {
    ChiResult::new(chi_principal_exact(desc)?)
}

/// χ of a named lattice: `chi(Λ_P) / [Γ : Λ_P]`.
pub fn chi_lattice(desc: &LatticeDescriptor) -> Result<ChiResult, CovolumeError> {
    let index = desc
        .index_over_principal()
        .ok_or(CovolumeError::BadDescriptor("index unknown for generic descriptors"))?;
    ChiResult::new(chi_principal_exact(desc)? / int(index as i64))
}

/// `chi(Γ⁰_n) = (n+1)/2 prod_{j=1}^{n+1} (2^j + (-1)^j)/(4j) |B_{2j}|`.
pub fn chi_gamma0_exact(n: u32) -> Result<ExactRational, CovolumeError> {
    check_rank(n)?;
    let mut acc = ratio(n as i64 + 1, 2);
    for j in 1..=(n as usize + 1) {
        let two_j: BigInt = BigInt::one() << j;
        let factor = if j % 2 == 0 { two_j + 1 } else { two_j - 1 };
        acc *= BigRational::new(factor, BigInt::from(4 * j)) * abs(&bernoulli(2 * j));
    }
    Ok(acc)
}

pub fn chi_gamma0(n: u32) -> Result<ChiResult, CovolumeError> {
    ChiResult::new(chi_gamma0_exact(n)?)
}

/// `chi(Γ¹_n) = (n+1)/2 prod_{j=1}^{n+1} (2^{2j}-1)/(4j) |B_{2j}|
/// prod_{j=1}^{(n+1)/2} 1/(2^{4j}-1)`.
pub fn chi_gamma1_exact(n: u32) -> Result<ExactRational, CovolumeError> {
    check_rank(n)?;
    if n % 2 == 0 {
        return Err(CovolumeError::EvenRankForGamma1(n));
    }
    let mut acc = ratio(n as i64 + 1, 2);
    for j in 1..=(n as usize + 1) {
        let factor: BigInt = (BigInt::one() << (2 * j)) - 1;
        acc *= BigRational::new(factor, BigInt::from(4 * j)) * abs(&bernoulli(2 * j));
    }
    for j in 1..=((n as usize + 1) / 2) {
        let factor: BigInt = (BigInt::one() << (4 * j)) - 1;
        acc /= BigRational::from_integer(factor);
    }
    Ok(acc)
}

/// `chi(Γ¹_n) = e'(P¹_2)/e'(P⁰_2) chi(Γ⁰_n)`.
pub fn chi_gamma1_by_ratio(n: u32) -> Result<ExactRational, CovolumeError> {
    if n % 2 == 0 {
        return Err(CovolumeError::EvenRankForGamma1(n));
    }
    let ratio = BigRational::new(e_prime_alpha1(2, n)?, e_prime_alpha0(2, n)?);
    Ok(ratio * chi_gamma0_exact(n)?)
}

/// Both closed forms are computed; a mismatch is a bug.
pub fn chi_gamma1(n: u32) -> Result<ChiResult, CovolumeError> {
    let direct = chi_gamma1_exact(n)?;
    assert_eq!(direct, chi_gamma1_by_ratio(n)?, "Γ¹ formula paths disagree at n = {n}");
    ChiResult::new(direct)
}

/// χ(Γ^s_n), `s = n mod 2`.
pub fn chi_gamma_s_exact(n: u32) -> Result<ExactRational, CovolumeError> {
    if n % 2 == 0 {
        chi_gamma0_exact(n)
    } else {
        chi_gamma1_exact(n)
    }
}

/// `chi(Δ_n) = (n+1) prod_{j=1}^{n+1} zeta_k(1-2j)/4`, `k = ℚ(√5)`.
pub fn chi_delta_exact(n: u32) -> Result<ExactRational, CovolumeError> {
    check_rank(n)?;
    let k = QuadraticFieldData::Q_SQRT5;
    let mut acc = int(n as i64 + 1);
    for j in 1..=n + 1 {
        acc *= dedekind_zeta_neg(&k, j)? / int(4);
    }
    Ok(acc)
}

pub fn chi_delta(n: u32) -> Result<ChiResult, CovolumeError> {
    ChiResult::new(chi_delta_exact(n)?)
}

/// χ of the stabilizer of a hermitian lattice of maximal type:
/// `(n+1) prod_j ( |zeta_k(1-2j)| / 2^d  prod_{q in R} (q^j + (-1)^j) )`.
pub fn chi_stabilizer_max_type_exact(
    field: &QuadraticFieldData,
    ramified_q: &[u64],
    n: u32,
) -> Result<ExactRational, CovolumeError> {
    check_rank(n)?;
    match (field.label, field.degree) {
        (FieldLabel::Rationals, 1) | (FieldLabel::RealQuadratic, 2) => {}
        (_, d) => return Err(CovolumeError::UnsupportedField(d)),
    }
    for &q in ramified_q {
        crate::local::check_prime_power(q)?;
    }
    let scale = num_traits::pow(int(2), field.degree as usize).recip();
    let mut acc = int(n as i64 + 1);
    for j in 1..=n + 1 {
        let mut term = abs(&dedekind_zeta_neg(field, j)?) * &scale;
        for &q in ramified_q {
            let qj = num_traits::pow(BigInt::from(q), j as usize);
            let local = if j % 2 == 0 { qj + 1 } else { qj - 1 };
            term *= BigRational::from_integer(local);
        }
        acc *= term;
    }
    Ok(acc)
}

pub fn chi_stabilizer_max_type(
    field: &QuadraticFieldData,
    ramified_q: &[u64],
    n: u32,
) -> Result<ChiResult, CovolumeError> {
    ChiResult::new(chi_stabilizer_max_type_exact(field, ramified_q, n)?)
}

/// Orbifold characteristic of `Γ' = π(Γ)` in `PSp(n,1)`: `2 chi(Γ)`.
pub fn orbifold_chi(chi_of_gamma: &ExactRational) -> Result<ExactRational, CovolumeError> {
    if !chi_of_gamma.is_positive() {
        return Err(CovolumeError::NonPositive);
    }
    Ok(chi_of_gamma * int(2))
}

/// `vol(M) = vol(ℍP^n)/(n+1) chi(M)` for a caller-chosen normalization of
/// `vol(ℍP^n)`.
pub fn orbifold_volume(
    chi_m: &ExactRational,
    n: u32,
    vol_hpn: &ExactRational,
) -> Result<ExactRational, CovolumeError> {
    if !vol_hpn.is_positive() {
        return Err(CovolumeError::NonPositive);
    }
    Ok(vol_hpn / int(n as i64 + 1) * chi_m)
}

/// The smaller of χ(Δ_n) and χ(Γ^s_n), compared exactly.
pub fn min_lattice_exact(n: u32) -> Result<(LatticeDescriptor, ExactRational), CovolumeError> {
    let delta = chi_delta_exact(n)?;
    let gamma = chi_gamma_s_exact(n)?;
    Ok(match delta.cmp(&gamma) {
        Ordering::Less => (LatticeDescriptor::delta(n), delta),
        _ => (LatticeDescriptor::gamma_s(n), gamma),
    })
}

pub fn min_lattice(n: u32) -> Result<(LatticeDescriptor, ChiResult), CovolumeError> {
    let (desc, value) = min_lattice_exact(n)?;
    Ok((desc, ChiResult::new(value)?))
}

/// Smallest covolume over `2 <= n <= n_max`. Only the scanned range is
/// examined.
pub fn global_min(n_max: u32) -> Result<(u32, LatticeDescriptor, ChiResult), CovolumeError> {
    check_rank(n_max)?;
    let mut best: Option<(u32, LatticeDescriptor, ExactRational)> = None;
    for n in 2..=n_max {
        let (desc, value) = min_lattice_exact(n)?;
        if best.as_ref().map_or(true, |(_, _, b)| value < *b) {
            best = Some((n, desc, value));
        }
    }
    let (n, desc, value) = best.expect("range is nonempty");
    Ok((n, desc, ChiResult::new(value)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthRow {
    pub n: u32,
    pub gamma_s: ExactRational,
    pub delta: ExactRational,
    /// χ(Δ_n)/χ(Γ^s_n).
    pub ratio: ExactRational,
    /// χ(Γ^s_n)/χ(Γ^s_{n-1}); `None` on the first row.
    pub gamma_step: Option<ExactRational>,
    /// χ(Δ_n)/χ(Δ_{n-1}); `None` on the first row.
    pub delta_step: Option<ExactRational>,
    pub gamma_s_approx: String,
    pub delta_approx: String,
    pub ratio_approx: String,
}

pub fn growth_report(n_max: u32) -> Result<Vec<GrowthRow>, CovolumeError> {
    check_rank(n_max)?;
    let mut rows: Vec<GrowthRow> = Vec::new();
    for n in 2..=n_max {
        let gamma_s = chi_gamma_s_exact(n)?;
        let delta = chi_delta_exact(n)?;
        let ratio = &delta / &gamma_s;
        let (gamma_step, delta_step) = match rows.last() {
            Some(prev) => (Some(&gamma_s / &prev.gamma_s), Some(&delta / &prev.delta)),
            None => (None, None),
        };
        rows.push(GrowthRow {
            n,
            gamma_s_approx: approx_decimal(&gamma_s, DEFAULT_SIG_FIGS),
            delta_approx: approx_decimal(&delta, DEFAULT_SIG_FIGS),
            ratio_approx: approx_decimal(&ratio, DEFAULT_SIG_FIGS),
            gamma_s,
            delta,
            ratio,
            gamma_step,
            delta_step,
        });
    }
    Ok(rows)
}

/// True when `values[i+1]/values[i]` is strictly increasing over the slice.
pub fn successive_ratios_increasing(values: &[ExactRational]) -> bool {
    let ratios: Vec<ExactRational> = values.windows(2).map(|w| &w[1] / &w[0]).collect();
    ratios.windows(2).all(|w| w[1] > w[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Builds `num / den` from (prime, exponent) lists.
    fn fr(num: &[(u64, u32)], den: &[(u64, u32)]) -> ExactRational {
        let prod = |v: &[(u64, u32)]| {
            v.iter()
                .fold(BigInt::one(), |acc, &(p, e)| acc * num_traits::pow(BigInt::from(p), e as usize))
        };
        BigRational::new(prod(num), prod(den))
    }

    #[test]
    fn principal_examples() {
        let sp = chi_principal(&LatticeDescriptor::sp_hurwitz(2)).unwrap();
        assert_eq!(sp.exact, fr(&[], &[(2, 10), (3, 3)]));
        let delta = chi_principal(&LatticeDescriptor::delta(2)).unwrap();
        assert_eq!(delta.exact, fr(&[(67, 1)], &[(2, 10), (3, 3), (5, 3), (7, 1)]));
        let generic = LatticeDescriptor::generic(
            3,
            QuadraticFieldData::RATIONALS,
            vec![RamifiedPlace { q: 2, parahoric: ParahoricType::SpecialAlpha0 }],
        );
        assert_eq!(chi_principal_exact(&generic).unwrap(), fr(&[(17, 1)], &[(2, 13), (3, 5), (5, 1)]));
    }

    #[test]
    fn gamma0_values() {
        assert_eq!(chi_gamma0_exact(2).unwrap(), fr(&[], &[(2, 11), (3, 3)]));
        assert_eq!(chi_gamma0_exact(3).unwrap(), fr(&[(17, 1)], &[(2, 14), (3, 5), (5, 1)]));
        assert_eq!(chi_gamma0_exact(4).unwrap(), fr(&[(17, 1), (31, 1)], &[(2, 19), (3, 6), (11, 1)]));
        assert_eq!(chi_gamma0(2).unwrap().approx, "1.808e-5");
    }

    #[test]
    fn gamma1_values() {
        assert_eq!(chi_gamma1_exact(3).unwrap(), fr(&[], &[(2, 14), (3, 2), (5, 2)]));
        assert_eq!(
            chi_gamma1_exact(5).unwrap(),
            fr(&[(31, 1), (691, 1)], &[(2, 22), (3, 3), (5, 3), (7, 1), (13, 1)])
        );
        assert_eq!(
            ratio(189, 595) * fr(&[(17, 1)], &[(2, 14), (3, 5), (5, 1)]),
            fr(&[], &[(2, 14), (3, 2), (5, 2)])
        );
        assert_eq!(chi_gamma1_by_ratio(3).unwrap(), chi_gamma1_exact(3).unwrap());
        assert_eq!(chi_gamma1(4), Err(CovolumeError::EvenRankForGamma1(4)));
    }

    #[test]
    fn delta_values() {
        assert_eq!(chi_delta_exact(2).unwrap(), fr(&[(67, 1)], &[(2, 10), (3, 3), (5, 3), (7, 1)]));
        assert_eq!(
            chi_delta_exact(3).unwrap(),
            fr(&[(19, 2), (67, 1)], &[(2, 13), (3, 5), (5, 4), (7, 1)])
        );
        assert_eq!(
            chi_delta_exact(4).unwrap(),
            fr(&[(19, 2), (67, 1), (191, 1), (2161, 1)], &[(2, 18), (3, 6), (5, 5), (7, 1), (11, 1)])
        );
    }

    #[test]
    fn stabilizer_examples() {
        let q = QuadraticFieldData::RATIONALS;
        let k = QuadraticFieldData::Q_SQRT5;
        assert_eq!(
            chi_stabilizer_max_type_exact(&q, &[2], 2).unwrap(),
            chi_principal_exact(&LatticeDescriptor::sp_hurwitz(2)).unwrap()
        );
        assert_eq!(chi_stabilizer_max_type_exact(&k, &[], 2).unwrap(), chi_delta_exact(2).unwrap());
        assert_eq!(
            chi_stabilizer_max_type_exact(&q, &[2], 4).unwrap(),
            fr(&[(17, 1), (31, 1)], &[(2, 18), (3, 6), (11, 1)])
        );
        assert!(chi_stabilizer_max_type_exact(&q, &[6], 2).is_err());
    }

    #[test]
    fn paths_agree() {
        for n in 2..=15 {
            let principal = chi_principal_exact(&LatticeDescriptor::sp_hurwitz(n)).unwrap();
            assert_eq!(chi_gamma0_exact(n).unwrap(), &principal / int(2), "n = {n}");
            assert_eq!(chi_lattice(&LatticeDescriptor::gamma0(n)).unwrap().exact, &principal / int(2));
            if n % 2 == 1 {
                let g1 = chi_lattice(&LatticeDescriptor::gamma1(n)).unwrap().exact;
                assert_eq!(g1, chi_gamma1_exact(n).unwrap());
                assert_eq!(g1, chi_gamma1_by_ratio(n).unwrap());
            }
        }
        for n in 2..=10 {
            assert_eq!(
                chi_delta_exact(n).unwrap(),
                chi_principal_exact(&LatticeDescriptor::delta(n)).unwrap()
            );
        }
    }

    #[test]
    fn descriptor_validation() {
        assert_eq!(
            LatticeDescriptor::gamma1(4).validate(),
            Err(CovolumeError::EvenRankForGamma1(4))
        );
        assert_eq!(LatticeDescriptor::delta(1).validate(), Err(CovolumeError::RankTooSmall(1)));
        let mut bad = LatticeDescriptor::delta(3);
        bad.field = QuadraticFieldData::RATIONALS;
        assert!(matches!(bad.validate(), Err(CovolumeError::BadDescriptor(_))));
        let cubic = QuadraticFieldData { degree: 3, ..QuadraticFieldData::Q_SQRT5 };
        let generic = LatticeDescriptor::generic(3, cubic, vec![]);
        assert_eq!(generic.validate(), Err(CovolumeError::UnsupportedField(3)));
        assert_eq!(LatticeDescriptor::gamma0(5).dim_g(), 6 * 13);
    }

    #[test]
    fn orbifold_conversions() {
        assert_eq!(orbifold_chi(&fr(&[], &[(2, 11), (3, 3)])).unwrap(), fr(&[], &[(2, 10), (3, 3)]));
        assert_eq!(orbifold_chi(&int(1)).unwrap(), int(2));
        assert_eq!(
            orbifold_chi(&fr(&[(17, 1)], &[(2, 14), (3, 5), (5, 1)])).unwrap(),
            fr(&[(17, 1)], &[(2, 13), (3, 5), (5, 1)])
        );
        assert_eq!(orbifold_chi(&int(0)), Err(CovolumeError::NonPositive));
        assert_eq!(orbifold_volume(&int(2), 1, &int(1)).unwrap(), int(1));
        let chi = fr(&[], &[(2, 10), (3, 3)]);
        assert_eq!(orbifold_volume(&chi, 2, &int(3)).unwrap(), chi);
        assert_eq!(orbifold_volume(&int(1), 4, &int(5)).unwrap(), int(1));
        assert_eq!(orbifold_volume(&int(1), 4, &int(-1)), Err(CovolumeError::NonPositive));
    }

    #[test]
    fn minimal_lattices() {
        assert_eq!(min_lattice(2).unwrap().0.name, LatticeName::Delta);
        assert_eq!(min_lattice(3).unwrap().0.name, LatticeName::Gamma1);
        assert_eq!(min_lattice(4).unwrap().0.name, LatticeName::Gamma0);
        let (n, desc, chi) = global_min(20).unwrap();
        assert_eq!((n, desc.name), (5, LatticeName::Gamma1));
        assert_eq!(chi.factored.unwrap().to_string(), "31·691/(2^22·3^3·5^3·7·13)");
        assert_eq!(global_min(5).unwrap().0, 5);
    }

    #[test]
    fn growth_rows() {
        let rows = growth_report(20).unwrap();
        assert_eq!(rows.len(), 19);
        let row = |n: u32| rows.iter().find(|r| r.n == n).unwrap();
        assert_eq!(row(10).gamma_s_approx, "1.736e8");
        assert_eq!(row(10).delta_approx, "5.771e64");
        assert_eq!(row(20).gamma_s_approx, "1.654e151");
        assert_eq!(row(20).delta_approx, "1.833e478");
        assert_eq!(row(2).ratio_approx, "1.531e-1");
        assert!(row(2).gamma_step.is_none());
        assert!(row(3).ratio.is_positive());
    }
}
