use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use super::{
    conjugation_by_one_plus_i, hurwitz_units, is_hurwitz, GoldenRational, Integrality, Quaternion,
    Scalar,
};
use crate::arith::ratio;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HermitianError {
    #[error("matrix of size {matrix} tested against a form of dimension {form}")]
    DimensionMismatch { matrix: usize, form: usize },
    #[error("entry count {0} is not a square")]
    NotSquare(usize),
    #[error("normalization checks need n >= 2, got {0}")]
    RankTooSmall(u32),
}

/// Diagonal hermitian form `Σ aᵢ conj(xᵢ) xᵢ` with central coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianForm<R> {
    pub coeffs: Vec<R>,
}

impl<R: Scalar> HermitianForm<R> {
    pub fn diagonal(coeffs: Vec<R>) -> Self {
        HermitianForm { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn as_matrix(&self) -> QuaternionMatrix<R> {
        QuaternionMatrix::diagonal(self.coeffs.iter().cloned().map(Quaternion::scalar).collect())
    }
}

impl HermitianForm<BigRational> {
    /// `diag(−1, 1, …, 1)` in dimension `n + 1`.
    pub fn standard(n: usize) -> Self {
        let mut c = vec![ratio(1, 1); n + 1];
        c[0] = ratio(-1, 1);
        HermitianForm { coeffs: c }
    }
}

impl HermitianForm<GoldenRational> {
    /// `diag(1 − φ, 1, …, 1)` in dimension `n + 1`.
    pub fn golden(n: usize) -> Self {
        let mut c = vec![GoldenRational::one(); n + 1];
        c[0] = GoldenRational::from_ints(1, -1);
        HermitianForm { coeffs: c }
    }
}

/// Square matrix of quaternions, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionMatrix<R> {
    size: usize,
    entries: Vec<Quaternion<R>>,
}

impl<R: Scalar> QuaternionMatrix<R> {
    pub fn from_entries(entries: Vec<Quaternion<R>>) -> Result<Self, HermitianError> {
        let size = (entries.len() as f64).sqrt().round() as usize;
        if size * size != entries.len() {
            return Err(HermitianError::NotSquare(entries.len()));
        }
        Ok(QuaternionMatrix { size, entries })
    }

    pub fn identity(size: usize) -> Self {
        Self::diagonal(vec![Quaternion::one(); size])
    }

    pub fn diagonal(diag: Vec<Quaternion<R>>) -> Self {
        let size = diag.len();
        let mut entries = vec![Quaternion::zero(); size * size];
        for (i, d) in diag.into_iter().enumerate() {
            entries[i * size + i] = d;
        }
        QuaternionMatrix { size, entries }
    }

    /// Permutation matrix sending coordinate `perm[i]` to `i`.
    pub fn permutation(perm: &[usize]) -> Self {
        let size = perm.len();
        let mut entries = vec![Quaternion::zero(); size * size];
        for (i, &p) in perm.iter().enumerate() {
            entries[i * size + p] = Quaternion::one();
        }
        QuaternionMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &Quaternion<R> {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Quaternion<R>) {
        self.entries[r * self.size + c] = v;
    }

    pub fn entries(&self) -> &[Quaternion<R>] {
        &self.entries
    }

    pub fn map_entries<F: Fn(&Quaternion<R>) -> Quaternion<R>>(&self, f: F) -> Self {
        QuaternionMatrix { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    pub fn conj_transpose(&self) -> Self {
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(self.get(c, r).conj());
            }
        }
        QuaternionMatrix { size: n, entries }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, HermitianError> {
        if self.size != o.size {
            return Err(HermitianError::DimensionMismatch { matrix: o.size, form: self.size });
        }
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Quaternion::zero();
                for t in 0..n {
                    acc = acc + self.get(r, t) * o.get(t, c);
                }
                entries.push(acc);
            }
        }
        Ok(QuaternionMatrix { size: n, entries })
    }
}

/// `conj(M)ᵀ · diag(a) · M = diag(a)`.
pub fn is_isometry<R: Scalar>(
    m: &QuaternionMatrix<R>,
    h: &HermitianForm<R>,
) -> Result<bool, HermitianError> {
    if m.size() != h.dim() {
        return Err(HermitianError::DimensionMismatch { matrix: m.size(), form: h.dim() });
    }
    let a = h.as_matrix();
    let lhs = m.conj_transpose().mul(&a)?.mul(m)?;
    Ok(lhs == a)
}

/// All coefficients are units of the ring of integers.
pub fn is_regular_diagonal<R: Integrality>(h: &HermitianForm<R>) -> bool {
    h.coeffs.iter().all(Integrality::is_integral_unit)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationReport {
    pub n: u32,
    pub checks: Vec<NormalizationCheck>,
}

impl NormalizationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }
}

type Q = Quaternion<BigRational>;
type QMatrix = QuaternionMatrix<BigRational>;

fn hurwitz_test_set() -> Vec<Q> {
    let half = |w, x, y, z| Quaternion::new(ratio(w, 2), ratio(x, 2), ratio(y, 2), ratio(z, 2));
    let mut set = hurwitz_units();
    set.extend([
        Q::from_ints(3, -2, 1, 0),
        Q::from_ints(1, 1, 0, 0),
        Q::from_ints(0, 2, -1, 5),
        half(3, -1, 5, 1),
        half(-7, 3, 3, -1),
        Q::zero(),
    ]);
    set
}

/// Elements of `Sp(n,1)` over the Hurwitz order for `diag(−1,1,…,1)`.
fn sample_lattice_elements(n: usize) -> Vec<QMatrix> {
    let size = n + 1;
    let mut out = vec![QMatrix::identity(size)];
    let mut d = vec![Q::one(); size];
    d[1] = Q::i();
    out.push(QMatrix::diagonal(d));
    let mut d = vec![Q::one(); size];
    d[0] = Quaternion::new(ratio(1, 2), ratio(1, 2), ratio(1, 2), ratio(1, 2));
    d[size - 1] = Q::k();
    out.push(QMatrix::diagonal(d));
    let mut perm: Vec<usize> = (0..size).collect();
    perm.swap(1, 2);
    out.push(QMatrix::permutation(&perm));
    let mut t = QMatrix::identity(size);
    t.set(0, 0, Q::from_ints(1, -1, 0, 0));
    t.set(0, 1, Q::i());
    t.set(1, 0, Q::from_ints(0, -1, 0, 0));
    t.set(1, 1, Q::from_ints(1, 1, 0, 0));
    out.push(t.clone());
    if let Ok(p) = t.mul(&out[2]) {
        out.push(p);
    }
    out
}

/// Symbolic checks that `g = (1+i)/√2 · I` normalizes `Sp(n,1)` over the
/// Hurwitz order, using only `c² = i` and `conj(c)·c = 1`.
pub fn g_normalization_checks(n: u32) -> Result<NormalizationReport, HermitianError> {
    if n < 2 {
        return Err(HermitianError::RankTooSmall(n));
    }
    let size = n as usize + 1;
    let form = HermitianForm::standard(n as usize);
    let one_plus_i = Q::from_ints(1, 1, 0, 0);
    let two = Q::from_ints(2, 0, 0, 0);
    let mut checks = Vec::new();
    let mut push = |name, passed| checks.push(NormalizationCheck { name, passed });

    // c² = (1+i)²/2 = i
    let c_squared_is_i = &one_plus_i * &one_plus_i == &two * &Q::i();
    push("c_squared_is_i", c_squared_is_i);
    // (conj(c)c)² = conj(c²)c² = conj(i)·i = 1, and conj(c)c is a positive real.
    let c_unitary = (Q::i().conj() * Q::i()) == Q::one() && one_plus_i.norm() == ratio(2, 1);
    push("c_unitary", c_unitary);

    let g_sq = QMatrix::diagonal(vec![Q::i(); size]);
    push("g_squared_hurwitz", g_sq.entries().iter().all(is_hurwitz));
    push("g_squared_isometry", is_isometry(&g_sq, &form)?);

    let tests = hurwitz_test_set();
    let mapped: Vec<Q> = tests.iter().map(conjugation_by_one_plus_i).collect();
    push("conjugation_preserves_hurwitz", mapped.iter().all(is_hurwitz));
    push(
        "conjugation_respects_involution",
        tests
            .iter()
            .zip(&mapped)
            .all(|(x, mx)| conjugation_by_one_plus_i(&x.conj()) == mx.conj()),
    );
    push(
        "conjugation_multiplicative",
        tests.iter().zip(&mapped).all(|(x, mx)| {
            tests
                .iter()
                .zip(&mapped)
                .all(|(y, my)| conjugation_by_one_plus_i(&(x * y)) == mx * my)
        }),
    );

    let samples = sample_lattice_elements(n as usize);
    let mut samples_ok = true;
    let mut normalized_ok = true;
    for m in &samples {
        samples_ok &= m.entries().iter().all(is_hurwitz) && is_isometry(m, &form)?;
        let cm = m.map_entries(conjugation_by_one_plus_i);
        normalized_ok &= cm.entries().iter().all(is_hurwitz) && is_isometry(&cm, &form)?;
    }
    push("samples_in_lattice", samples_ok);
    push("conjugated_samples_in_lattice", normalized_ok);

    Ok(NormalizationReport { n, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isometry_examples() {
        let h = HermitianForm::standard(2);
        assert!(is_isometry(&QMatrix::identity(3), &h).unwrap());
        assert!(is_isometry(&QMatrix::permutation(&[0, 2, 1]), &h).unwrap());
        assert!(is_isometry(&QMatrix::diagonal(vec![Q::one(), Q::i(), Q::one()]), &h).unwrap());
        assert!(!is_isometry(&QMatrix::permutation(&[1, 0, 2]), &h).unwrap());
        let doubled = QMatrix::diagonal(vec![Q::from_ints(2, 0, 0, 0), Q::one(), Q::one()]);
        assert!(!is_isometry(&doubled, &h).unwrap());
        assert_eq!(
            is_isometry(&QMatrix::identity(2), &h),
            Err(HermitianError::DimensionMismatch { matrix: 2, form: 3 })
        );
    }

    #[test]
    fn golden_form_isometries() {
        let h = HermitianForm::golden(2);
        let m = QuaternionMatrix::<GoldenRational>::permutation(&[0, 2, 1]);
        assert!(is_isometry(&m, &h).unwrap());
        assert!(!is_isometry(&QuaternionMatrix::permutation(&[1, 0, 2]), &h).unwrap());
    }

    #[test]
    fn regularity() {
        assert!(is_regular_diagonal(&HermitianForm::standard(2)));
        assert!(is_regular_diagonal(&HermitianForm::golden(2)));
        let h = HermitianForm::diagonal(vec![ratio(2, 1), ratio(1, 1), ratio(1, 1)]);
        assert!(!is_regular_diagonal(&h));
        let g = HermitianForm::diagonal(vec![GoldenRational::from_ints(2, 0), GoldenRational::one()]);
        assert!(!is_regular_diagonal(&g));
    }

    #[test]
    fn normalization_report() {
        for n in 2..=5 {
            let r = g_normalization_checks(n).unwrap();
            assert!(r.all_passed(), "n={n}: {:?}", r.failed());
        }
        assert_eq!(g_normalization_checks(1), Err(HermitianError::RankTooSmall(1)));
    }

    #[test]
    fn conjugation_pair_example() {
        let (j, k) = (Q::j(), Q::k());
        let lhs = conjugation_by_one_plus_i(&(&j * &k));
        let rhs = &conjugation_by_one_plus_i(&j) * &conjugation_by_one_plus_i(&k);
        assert_eq!(lhs, rhs);
        assert_eq!(rhs, Q::i());
    }

    #[test]
    fn matrix_shape() {
        assert!(QMatrix::from_entries(vec![Q::one(); 4]).is_ok());
        assert_eq!(QMatrix::from_entries(vec![Q::one(); 3]), Err(HermitianError::NotSquare(3)));
    }
}
