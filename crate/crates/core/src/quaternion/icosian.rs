use std::collections::{BTreeSet, HashSet};
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::hurwitz::DoubledHurwitz;
use super::{hurwitz_units, GoldenInteger, GoldenRational, Quaternion, Scalar};

/// Search bound on each doubled coordinate `a + bφ`: `|a|, |b| ≤ 2`.
const SEARCH_HEIGHT: i64 = 2;
const GROUP_LIMIT: usize = 1000;

/// A quaternion over ℚ(√5) with all doubled coordinates in ℤ[φ].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DoubledIcosian(pub [GoldenInteger; 4]);

impl DoubledIcosian {
    pub fn from_hurwitz(h: &DoubledHurwitz) -> Self {
        DoubledIcosian(h.doubled().clone().map(|v| GoldenInteger { a: v, b: BigInt::zero() }))
    }

    pub fn from_quaternion(q: &Quaternion<GoldenRational>) -> Option<Self> {
        let two = BigRational::from_i64(2);
        let mut out = Vec::with_capacity(4);
        for c in q.coords() {
            out.push(c.scale(&two).to_integer()?);
        }
        Some(DoubledIcosian(out.try_into().ok()?))
    }

    pub fn to_quaternion(&self) -> Quaternion<GoldenRational> {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Quaternion::from_coords(self.0.clone().map(|c| c.to_rational().scale(&half)))
    }

    /// Four times the norm.
    pub fn doubled_norm(&self) -> GoldenInteger {
        self.0
            .iter()
            .fold(GoldenInteger::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    /// Integer coordinates `(a₀, b₀, …, a₃, b₃)`.
    pub fn integer_vector(&self) -> Vec<BigInt> {
        self.0.iter().flat_map(|c| [c.a.clone(), c.b.clone()]).collect()
    }

    /// Product, if its doubled coordinates stay in ℤ[φ].
    pub fn checked_mul(&self, o: &Self) -> Option<Self> {
        let p = &Quaternion::from_coords(self.0.clone()) * &Quaternion::from_coords(o.0.clone());
        Some(DoubledIcosian([
            p.w.halve()?,
            p.x.halve()?,
            p.y.halve()?,
            p.z.halve()?,
        ]))
    }
}

impl Mul for &DoubledIcosian {
    type Output = Option<DoubledIcosian>;
    fn mul(self, o: &DoubledIcosian) -> Option<DoubledIcosian> {
        self.checked_mul(o)
    }
}

fn coordinate_candidates() -> Vec<GoldenInteger> {
    let mut out = Vec::new();
    for a in -SEARCH_HEIGHT..=SEARCH_HEIGHT {
        for b in -SEARCH_HEIGHT..=SEARCH_HEIGHT {
            let c = GoldenInteger::new(a, b);
            let (s1, s2) = c.embeddings();
            if s1 * s1 <= 4.0 + 1e-9 && s2 * s2 <= 4.0 + 1e-9 {
                out.push(c);
            }
        }
    }
    out
}

/// All norm-1 quaternions with doubled coordinates of height at most 2.
fn norm_one_search() -> BTreeSet<DoubledIcosian> {
    let cands = coordinate_candidates();
    let four = GoldenInteger::new(4, 0);
    let mut out = BTreeSet::new();
    for w in &cands {
        for x in &cands {
            for y in &cands {
                for z in &cands {
                    let q = DoubledIcosian([w.clone(), x.clone(), y.clone(), z.clone()]);
                    if q.doubled_norm() == four {
                        out.insert(q);
                    }
                }
            }
        }
    }
    out
}

fn closure(
    gens: &[DoubledIcosian],
    allowed: &BTreeSet<DoubledIcosian>,
) -> Option<Vec<DoubledIcosian>> {
    let mut seen: HashSet<DoubledIcosian> = gens.iter().cloned().collect();
    let mut elems: Vec<DoubledIcosian> = gens.to_vec();
    let mut idx = 0;
    while idx < elems.len() {
        let a = elems[idx].clone();
        for g in gens {
            let p = a.checked_mul(g)?;
            if !allowed.contains(&p) {
                return None;
            }
            if seen.insert(p.clone()) {
                elems.push(p);
                if elems.len() > GROUP_LIMIT {
                    return None;
                }
            }
        }
        idx += 1;
    }
    elems.sort();
    Some(elems)
}

fn hurwitz_doubled() -> Vec<DoubledIcosian> {
    hurwitz_units()
        .iter()
        .map(|u| DoubledIcosian::from_hurwitz(&DoubledHurwitz::from_rational(u).expect("unit is Hurwitz")))
        .collect()
}

/// The icosian unit group in doubled coordinates: the Hurwitz units plus the
/// first searched element whose generated group stays inside the search set.
pub fn icosian_units_doubled() -> Vec<DoubledIcosian> {
    let search = norm_one_search();
    let hurwitz = hurwitz_doubled();
    let hset: HashSet<_> = hurwitz.iter().cloned().collect();
    for cand in &search {
        if hset.contains(cand) {
            continue;
        }
        let mut gens = hurwitz.clone();
        gens.push(cand.clone());
        if let Some(group) = closure(&gens, &search) {
            return group;
        }
    }
    unreachable!("search set contains an icosian generator")
}

pub fn icosian_units() -> Vec<Quaternion<GoldenRational>> {
    icosian_units_doubled().iter().map(DoubledIcosian::to_quaternion).collect()
}

/// Row-style Hermite normal form; returns the nonzero rows.
fn hermite_normal_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        loop {
            let pivot = (r..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| rows[i][col].abs());
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut done = true;
            for i in (r + 1)..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                for c in col..ncols {
                    let v = &rows[r][c] * &q;
                    rows[i][c] -= v;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r >= rows.len() || rows[r][col].is_zero() {
            continue;
        }
        if rows[r][col].is_negative() {
            for c in col..ncols {
                rows[r][c] = -rows[r][c].clone();
            }
        }
        for i in 0..r {
            let q = rows[i][col].div_floor(&rows[r][col]);
            if q.is_zero() {
                continue;
            }
            for c in col..ncols {
                let v = &rows[r][c] * &q;
                rows[i][c] -= v;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    // Bareiss fraction-free elimination.
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(s) = ((k + 1)..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// The icosian ring as a ℤ-module of rank 8 and a ℤ[φ]-module of rank 4.
#[derive(Clone, Debug)]
pub struct IcosianBasis {
    /// HNF rows in doubled integer coordinates.
    pub hnf: Vec<Vec<BigInt>>,
    pub z_basis: Vec<Quaternion<GoldenRational>>,
    pub golden_basis: Vec<Quaternion<GoldenRational>>,
    /// Index of the doubled lattice in ℤ⁸.
    pub determinant: BigInt,
}

impl IcosianBasis {
    pub fn rank(&self) -> usize {
        self.hnf.len()
    }

    fn contains_vector(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for row in &self.hnf {
            let Some(p) = row.iter().position(|c| !c.is_zero()) else { continue };
            let (q, rem) = v[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return false;
            }
            for (c, rc) in v.iter_mut().zip(row) {
                *c -= rc * &q;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn contains(&self, q: &Quaternion<GoldenRational>) -> bool {
        DoubledIcosian::from_quaternion(q).is_some_and(|d| self.contains_vector(&d.integer_vector()))
    }

    /// Every product of two ℤ-basis elements lies in the module.
    pub fn is_closed_under_multiplication(&self) -> bool {
        self.z_basis
            .iter()
            .all(|a| self.z_basis.iter().all(|b| self.contains(&(a * b))))
    }
}

/// ℤ-module generated by the icosian units, with a ℤ[φ]-basis of units.
pub fn icosian_basis() -> IcosianBasis {
    let units = icosian_units_doubled();
    let hnf = hermite_normal_form(units.iter().map(DoubledIcosian::integer_vector).collect());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let z_basis = hnf
        .iter()
        .map(|row| {
            let c: Vec<GoldenRational> = row
                .chunks(2)
                .map(|p| {
                    GoldenRational::new(
                        BigRational::from_integer(p[0].clone()),
                        BigRational::from_integer(p[1].clone()),
                    )
                    .scale(&half)
                })
                .collect();
            Quaternion::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
        })
        .collect();
    let determinant = if hnf.len() == 8 {
        determinant(&hnf)
    } else {
        BigInt::zero()
    };
    let golden_basis = golden_basis_from_units(&units, &determinant);
    IcosianBasis { hnf, z_basis, golden_basis, determinant }
}

fn golden_span_rows(u: &DoubledIcosian) -> [Vec<BigInt>; 2] {
    let phi = GoldenInteger::phi();
    let pu = DoubledIcosian(u.0.clone().map(|c| c * phi.clone()));
    [u.integer_vector(), pu.integer_vector()]
}

/// Four units `u` whose ℤ-span of `{u, φu}` has the full module's index.
fn golden_basis_from_units(units: &[DoubledIcosian], target: &BigInt) -> Vec<Quaternion<GoldenRational>> {
    if target.is_zero() {
        return Vec::new();
    }
    let one = DoubledIcosian([GoldenInteger::new(2, 0), GoldenInteger::zero(), GoldenInteger::zero(), GoldenInteger::zero()]);
    let rows: Vec<[Vec<BigInt>; 2]> = units.iter().map(golden_span_rows).collect();
    let base = golden_span_rows(&one);
    for a in 0..units.len() {
        for b in (a + 1)..units.len() {
            for c in (b + 1)..units.len() {
                let m: Vec<Vec<BigInt>> = base
                    .iter()
                    .chain(rows[a].iter())
                    .chain(rows[b].iter())
                    .chain(rows[c].iter())
                    .cloned()
                    .collect();
                if determinant(&m).abs() == target.abs() {
                    return [&one, &units[a], &units[b], &units[c]]
                        .iter()
                        .map(|u| u.to_quaternion())
                        .collect();
                }
            }
        }
    }
    Vec::new()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_set_size() {
        // Two conjugate icosian groups sharing the binary tetrahedral group.
        assert_eq!(norm_one_search().len(), 24 + 96 + 96);
    }

    #[test]
    fn group_of_order_120() {
        let units = icosian_units_doubled();
        assert_eq!(units.len(), 120);
        let set: HashSet<_> = units.iter().cloned().collect();
        for h in hurwitz_doubled() {
            assert!(set.contains(&h));
        }
        for a in &units {
            for b in &units {
                let p = a.checked_mul(b).expect("product stays half-integral");
                assert!(set.contains(&p));
            }
        }
        let four = GoldenInteger::new(4, 0);
        assert!(units.iter().all(|u| u.doubled_norm() == four));
    }

    #[test]
    fn module_structure() {
        let basis = icosian_basis();
        assert_eq!(basis.rank(), 8);
        assert!(basis.determinant.is_positive());
        for q in [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()] {
            assert!(basis.contains(&q));
        }
        let phi_q = Quaternion::scalar(GoldenRational::phi());
        assert!(basis.contains(&phi_q));
        let third = Quaternion::scalar(GoldenRational::new(
            BigRational::new(BigInt::one(), BigInt::from(3)),
            BigRational::zero(),
        ));
        assert!(!basis.contains(&third));
        assert!(basis.is_closed_under_multiplication());
        assert_eq!(basis.golden_basis.len(), 4);
    }

    #[test]
    fn hnf_of_small_lattice() {
        let rows = vec![
            vec![BigInt::from(2), BigInt::from(4)],
            vec![BigInt::from(3), BigInt::from(1)],
            vec![BigInt::from(5), BigInt::from(5)],
        ];
        let h = hermite_normal_form(rows);
        assert_eq!(h.len(), 2);
        assert_eq!(determinant(&h).abs(), BigInt::from(10));
        assert_eq!(h[0][0], BigInt::one());
    }
}
