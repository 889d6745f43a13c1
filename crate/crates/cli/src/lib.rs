//! Command implementations behind the `covolume` binary.
//!
//! Every command returns an [`Output`] holding the rendered text and an exit
//! status, so the binary only has to print and exit.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use covolume::arith::{approx_decimal, factorize, int, ExactRational, FactoredRational};
use covolume::bounds::{
    c_ratio_increasing, derivation_audit, is_prime_u64, minimality_checks, odlyzko_check,
    verify_min_at_q2, BoundsError, DEFAULT_PRECISION,
};
use covolume::covolume::{
    chi_delta_exact, chi_gamma0_exact, chi_gamma1_by_ratio, chi_gamma1_exact, chi_gamma_s_exact,
    chi_principal_exact, chi_stabilizer_max_type_exact, global_min, growth_report,
    min_lattice_exact, orbifold_chi, orbifold_volume, CovolumeError, LatticeDescriptor,
};
use covolume::local::{e_prime, e_prime_from_definition, LocalError, ParahoricType};
use covolume::quaternion::{
    g_normalization_checks, hurwitz_units, icosian_basis, icosian_units, ramification_data, Algebra,
};
use covolume::zeta::QuadraticFieldData;

pub mod reference;

pub const DEFAULT_APPROX: u32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Covolume(#[from] CovolumeError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Usage = 1,
    VerificationFailed = 2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

impl Output {
    fn ok(text: String) -> Output {
        Output {
            text,
            status: Status::Success,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lattice {
    Gamma0,
    Gamma1,
    Delta,
    SpHurwitz,
    Stabilizer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Field {
    Rationals,
    Sqrt5,
}

impl Field {
    fn data(self) -> QuadraticFieldData {
        match self {
            Field::Rationals => QuadraticFieldData::RATIONALS,
            Field::Sqrt5 => QuadraticFieldData::Q_SQRT5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Paths,
    LocalFactors,
    Quaternion,
    Bounds,
    All,
}

/// An inclusive range of ranks, written `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankRange {
    pub start: u32,
    pub end: u32,
}

impl FromStr for RankRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
        let b = b.trim_start_matches('=');
        let start = a
            .trim()
            .parse()
            .map_err(|_| format!("bad range start {a:?}"))?;
        let end = b
            .trim()
            .parse()
            .map_err(|_| format!("bad range end {b:?}"))?;
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(RankRange { start, end })
    }
}

/// Parses `p/q` or an integer into a positive rational.
pub fn parse_positive_rational(s: &str) -> Result<ExactRational, String> {
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| format!("bad numerator in {s:?}"))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| format!("bad denominator in {s:?}"))?;
            if den == BigInt::from(0) {
                return Err("zero denominator".into());
            }
            BigRational::new(num, den)
        }
        None => BigRational::from_integer(
            s.trim()
                .parse()
                .map_err(|_| format!("bad rational {s:?}"))?,
        ),
    };
    if !value.is_positive() {
        return Err(format!("{s} is not positive"));
    }
    Ok(value)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredRecord {
    pub sign: i8,
    /// `[prime, exponent]`, primes as decimal strings.
    pub factors: Vec<(String, i64)>,
}

/// One covolume in machine-readable form. Big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub lattice: String,
    pub n: u32,
    pub numerator: String,
    pub denominator: String,
    /// `null` when a cofactor could not be split.
    pub factored: Option<FactoredRecord>,
    pub approx: String,
    /// The formula route used for `numerator/denominator`.
    pub path: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbifold_volume: Option<String>,
}

impl ResultRecord {
    pub fn new(
        lattice: &str,
        n: u32,
        exact: &ExactRational,
        sig_figs: u32,
        path: &str,
    ) -> ResultRecord {
        let factored = factorize(exact).ok().map(|f| FactoredRecord {
            sign: f.sign,
            factors: f.factors.iter().map(|(p, e)| (p.to_string(), *e)).collect(),
        });
        ResultRecord {
            lattice: lattice.to_string(),
            n,
            numerator: exact.numer().to_string(),
            denominator: exact.denom().to_string(),
            factored,
            approx: approx_decimal(exact, sig_figs),
            path: path.to_string(),
            orbifold_volume: None,
        }
    }

    pub fn exact(&self) -> Result<ExactRational, CliError> {
        let bad = |what: &str| CliError::Usage(format!("record has a malformed {what}"));
        let num: BigInt = self.numerator.parse().map_err(|_| bad("numerator"))?;
        let den: BigInt = self.denominator.parse().map_err(|_| bad("denominator"))?;
        if den == BigInt::from(0) {
            return Err(bad("denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    pub fn factored_value(&self) -> Result<Option<FactoredRational>, CliError> {
        let Some(rec) = &self.factored else {
            return Ok(None);
        };
        let mut factors = BTreeMap::new();
        for (p, e) in &rec.factors {
            let p: BigInt = p
                .parse()
                .map_err(|_| CliError::Usage(format!("record has a malformed prime {p:?}")))?;
            factors.insert(p, *e);
        }
        Ok(Some(FactoredRational {
            sign: rec.sign,
            factors,
        }))
    }

    /// The factored string when available, else `num/den`.
    pub fn display_exact(&self) -> String {
        match self.factored_value() {
            Ok(Some(f)) => f.to_string(),
            _ if self.denominator == "1" => self.numerator.clone(),
            _ => format!("{}/{}", self.numerator, self.denominator),
        }
    }

    pub fn human(&self) -> String {
        let mut line = format!(
            "{} n={}: {} ≈ {}",
            self.lattice,
            self.n,
            self.display_exact(),
            self.approx
        );
        if let Some(v) = &self.orbifold_volume {
            let _ = write!(line, "  vol = {v}");
        }
        line
    }
}

fn render_ratio(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn check_rank(n: u32) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

/// Options for `chi`.
#[derive(Debug, Clone)]
pub struct ChiOptions {
    pub lattice: Lattice,
    pub ranks: RankRange,
    pub approx: u32,
    pub json: bool,
    pub vol_hpn: Option<ExactRational>,
    pub field: Field,
    pub ramified: Option<Vec<u64>>,
}

fn chi_value(opts: &ChiOptions, n: u32) -> Result<(String, ExactRational, &'static str), CliError> {
    check_rank(n)?;
    let out = match opts.lattice {
        Lattice::Gamma0 => (
            "gamma0".into(),
            chi_gamma0_exact(n)?,
            "closed form over ℚ at q = 2",
        ),
        Lattice::Gamma1 => {
            if n % 2 == 0 {
                return Err(CliError::Usage(format!(
                    "gamma1 needs odd n (the α₁ vertex exists only then), got n = {n}"
                )));
            }
            (
                "gamma1".into(),
                chi_gamma1_exact(n)?,
                "closed form over ℚ at q = 2",
            )
        }
        Lattice::Delta => (
            "delta".into(),
            chi_delta_exact(n)?,
            "closed form over ℚ(√5)",
        ),
        Lattice::SpHurwitz => (
            "sp-hurwitz".into(),
            via_principal(&LatticeDescriptor::sp_hurwitz(n))?,
            "principal product",
        ),
        Lattice::Stabilizer => {
            let ramified = opts.ramified.clone().unwrap_or_else(|| match opts.field {
                Field::Rationals => vec![2],
                Field::Sqrt5 => vec![],
            });
            let value = chi_stabilizer_max_type_exact(&opts.field.data(), &ramified, n)?;
            let list: Vec<String> = ramified.iter().map(u64::to_string).collect();
            let name =
                format!("stabilizer[{:?},{{{}}}]", opts.field, list.join(",")).to_lowercase();
            (name, value, "maximal-type stabilizer product")
        }
    };
    Ok(out)
}

fn chi_record(opts: &ChiOptions, n: u32) -> Result<ResultRecord, CliError> {
    let (name, exact, path) = chi_value(opts, n)?;
    let mut rec = ResultRecord::new(&name, n, &exact, opts.approx, path);
    if let Some(vol) = &opts.vol_hpn {
        let value = orbifold_volume(&orbifold_chi(&exact)?, n, vol)?;
        rec.orbifold_volume = Some(format!(
            "{} ≈ {}",
            render_ratio(&value),
            approx_decimal(&value, opts.approx)
        ));
    }
    Ok(rec)
}

/// Computes one record per rank, in parallel, returned in rank order.
fn chi_records(opts: &ChiOptions) -> Result<Vec<ResultRecord>, CliError> {
    let ranks: Vec<u32> = (opts.ranks.start..=opts.ranks.end).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = ranks
            .iter()
            .map(|&n| s.spawn(move || chi_record(opts, n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

pub fn cmd_chi(opts: &ChiOptions) -> Result<Output, CliError> {
    let records = chi_records(opts)?;
    let single = opts.ranks.start == opts.ranks.end;
    let text = if opts.json {
        if single {
            to_json(&records[0])?
        } else {
            to_json(&records)?
        }
    } else {
        records.iter().map(|r| r.human() + "\n").collect()
    };
    Ok(Output::ok(text))
}

/// `(n, Γ⁰, Γ¹, Δ)` cells of the exact table; absent cells are `None`.
pub fn table1_records() -> Result<Vec<(u32, [Option<ResultRecord>; 3])>, CliError> {
    let mut rows = Vec::new();
    for n in 2..=5u32 {
        let g0 = Some(ResultRecord::new(
            "gamma0",
            n,
            &chi_gamma0_exact(n)?,
            DEFAULT_APPROX,
            "closed form",
        ));
        let g1 = if n % 2 == 1 {
            Some(ResultRecord::new(
                "gamma1",
                n,
                &chi_gamma1_exact(n)?,
                DEFAULT_APPROX,
                "closed form",
            ))
        } else {
            None
        };
        let d = if n <= 4 {
            Some(ResultRecord::new(
                "delta",
                n,
                &chi_delta_exact(n)?,
                DEFAULT_APPROX,
                "closed form",
            ))
        } else {
            None
        };
        rows.push((n, [g0, g1, d]));
    }
    Ok(rows)
}

fn pad_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out += &line(widths.iter().map(|&w| "-".repeat(w)).collect());
    for row in rows {
        out += &line(row.clone());
    }
    out
}

pub fn cmd_table1(json: bool) -> Result<Output, CliError> {
    let rows = table1_records()?;
    if json {
        let cells: Vec<&ResultRecord> = rows.iter().flat_map(|(_, c)| c.iter().flatten()).collect();
        return Ok(Output::ok(to_json(&cells)?));
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|(n, cells)| {
            let mut row = vec![n.to_string()];
            row.extend(
                cells
                    .iter()
                    .map(|c| c.as_ref().map_or("-".into(), |r| r.display_exact())),
            );
            row
        })
        .collect();
    Ok(Output::ok(pad_table(
        &["n", "χ(Γ⁰_n)", "χ(Γ¹_n)", "χ(Δ_n)"],
        &body,
    )))
}

pub const TABLE2_RANKS: [u32; 7] = [2, 3, 4, 5, 10, 15, 20];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxRow {
    pub n: u32,
    pub gamma_s: String,
    pub delta: String,
}

pub fn table2_rows(sig_figs: u32) -> Result<Vec<ApproxRow>, CliError> {
    TABLE2_RANKS
        .iter()
        .map(|&n| {
            Ok(ApproxRow {
                n,
                gamma_s: approx_decimal(&chi_gamma_s_exact(n)?, sig_figs),
                delta: approx_decimal(&chi_delta_exact(n)?, sig_figs),
            })
        })
        .collect()
}

pub fn cmd_table2(sig_figs: u32, json: bool) -> Result<Output, CliError> {
    let rows = table2_rows(sig_figs)?;
    if json {
        return Ok(Output::ok(to_json(&rows)?));
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| vec![r.n.to_string(), r.gamma_s.clone(), r.delta.clone()])
        .collect();
    Ok(Output::ok(pad_table(&["n", "χ(Γ^s_n)", "χ(Δ_n)"], &body)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Checks {
    suite: &'static str,
    lines: Vec<CheckLine>,
}

impl Checks {
    fn new(suite: &'static str) -> Checks {
        Checks {
            suite,
            lines: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.lines.push(CheckLine {
            suite: self.suite.to_string(),
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn agree(&mut self, name: String, values: &[(&str, ExactRational)]) {
        let first = &values[0].1;
        let mismatched: Vec<&str> = values
            .iter()
            .filter(|(_, v)| v != first)
            .map(|(p, _)| *p)
            .collect();
        let detail = if mismatched.is_empty() {
            values
                .iter()
                .map(|(p, _)| *p)
                .collect::<Vec<_>>()
                .join(" = ")
        } else {
            format!("differs via {}", mismatched.join(", "))
        };
        self.push(name, mismatched.is_empty(), detail);
    }
}

fn verify_tables() -> Result<Vec<CheckLine>, CliError> {
    let mut c = Checks::new("tables");
    for (n, expected) in reference::GAMMA0_TABLE {
        table1_check(&mut c, format!("Γ⁰_{n}"), expected, &chi_gamma0_exact(n)?);
    }
    for (n, expected) in reference::GAMMA1_TABLE {
        table1_check(&mut c, format!("Γ¹_{n}"), expected, &chi_gamma1_exact(n)?);
    }
    for (n, expected) in reference::DELTA_TABLE {
        table1_check(&mut c, format!("Δ_{n}"), expected, &chi_delta_exact(n)?);
    }
    for (row, (n, gs, d)) in table2_rows(DEFAULT_APPROX)?
        .iter()
        .zip(reference::APPROX_TABLE)
    {
        debug_assert_eq!(row.n, n);
        c.push(
            format!("Γ^s_{n} ≈"),
            row.gamma_s == gs,
            format!("{} vs {gs}", row.gamma_s),
        );
        c.push(
            format!("Δ_{n} ≈"),
            row.delta == d,
            format!("{} vs {d}", row.delta),
        );
    }
    Ok(c.lines)
}

fn table1_check(c: &mut Checks, name: String, expected: &str, value: &ExactRational) {
    match factorize(value) {
        Ok(f) => {
            let got = f.to_string();
            c.push(name, got == expected, format!("{got} vs {expected}"));
        }
        Err(e) => c.push(name, false, e.to_string()),
    }
}

/// `χ(Λ_P) / [Γ : Λ_P]` without building the factored view.
fn via_principal(desc: &LatticeDescriptor) -> Result<ExactRational, CliError> {
    let index = desc.index_over_principal().expect("named lattice");
    Ok(chi_principal_exact(desc)? / int(index as i64))
}

fn verify_paths() -> Result<Vec<CheckLine>, CliError> {
    let mut c = Checks::new("paths");
    let q = QuadraticFieldData::RATIONALS;
    let k = QuadraticFieldData::Q_SQRT5;
    for n in 2..=20u32 {
        let stab = chi_stabilizer_max_type_exact(&q, &[2], n)?;
        c.agree(
            format!("Γ⁰_{n}"),
            &[
                ("closed form", chi_gamma0_exact(n)?),
                (
                    "principal/index",
                    via_principal(&LatticeDescriptor::gamma0(n))?,
                ),
                ("stabilizer/2", &stab / int(2)),
            ],
        );
        c.agree(
            format!("Sp(n,1,ℋ) n={n}"),
            &[
                (
                    "principal product",
                    via_principal(&LatticeDescriptor::sp_hurwitz(n))?,
                ),
                ("stabilizer", stab),
            ],
        );
        if n % 2 == 1 {
            c.agree(
                format!("Γ¹_{n}"),
                &[
                    ("closed form", chi_gamma1_exact(n)?),
                    ("local-factor ratio", chi_gamma1_by_ratio(n)?),
                    (
                        "principal/index",
                        via_principal(&LatticeDescriptor::gamma1(n))?,
                    ),
                ],
            );
        }
        c.agree(
            format!("Δ_{n}"),
            &[
                ("closed form", chi_delta_exact(n)?),
                (
                    "principal product",
                    via_principal(&LatticeDescriptor::delta(n))?,
                ),
                (
                    "icosian stabilizer",
                    chi_stabilizer_max_type_exact(&k, &[], n)?,
                ),
            ],
        );
    }
    Ok(c.lines)
}

fn verify_local_factors() -> Result<Vec<CheckLine>, CliError> {
    let mut c = Checks::new("local-factors");
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for n in 2..=11u32 {
            let a0 = e_prime(q, n, ParahoricType::SpecialAlpha0)?;
            let d0 = e_prime_from_definition(q, n, ParahoricType::SpecialAlpha0)?;
            c.push(
                format!("e′(α₀) q={q} n={n}"),
                BigRational::from_integer(a0.clone()) == d0,
                a0.to_string(),
            );
            if n % 2 == 1 {
                let a1 = e_prime(q, n, ParahoricType::SpecialAlpha1)?;
                let d1 = e_prime_from_definition(q, n, ParahoricType::SpecialAlpha1)?;
                let ok = d1.is_integer() && BigRational::from_integer(a1.clone()) == d1 && a1 < a0;
                c.push(format!("e′(α₁) q={q} n={n}"), ok, format!("{a1} < {a0}"));
            }
        }
    }
    Ok(c.lines)
}

fn verify_quaternion() -> Result<Vec<CheckLine>, CliError> {
    let mut c = Checks::new("quaternion");
    let h = hurwitz_units().len();
    c.push("Hurwitz unit group", h == 24, format!("{h} units"));
    let i = icosian_units().len();
    c.push("icosian unit group", i == 120, format!("{i} units"));
    let basis = icosian_basis();
    let closed = basis.is_closed_under_multiplication();
    c.push(
        "icosian ring",
        basis.rank() == 8 && closed,
        format!(
            "rank {}, closed {closed}, index det {}",
            basis.rank(),
            basis.determinant
        ),
    );
    for n in 2..=5 {
        let report = g_normalization_checks(n).map_err(|e| CliError::Usage(e.to_string()))?;
        let failed = report.failed();
        let detail = if failed.is_empty() {
            format!("{} checks", report.checks.len())
        } else {
            failed.join(", ")
        };
        c.push(
            format!("normalizing element n={n}"),
            report.all_passed(),
            detail,
        );
    }
    let over_q = ramification_data(Algebra::MinusOneMinusOneOverQ);
    c.push(
        "(−1,−1) over ℚ",
        over_q.finite == vec![2] && over_q.ramified_real_places == 1 && over_q.parity_ok(),
        format!(
            "finite {:?}, real {}",
            over_q.finite, over_q.ramified_real_places
        ),
    );
    let over_k = ramification_data(Algebra::MinusOneMinusOneOverQSqrt5);
    c.push(
        "(−1,−1) over ℚ(√5)",
        over_k.finite.is_empty() && over_k.ramified_real_places == 2 && over_k.parity_ok(),
        format!(
            "finite {:?}, real {}",
            over_k.finite, over_k.ramified_real_places
        ),
    );
    Ok(c.lines)
}

fn verify_bounds() -> Result<Vec<CheckLine>, CliError> {
    let mut c = Checks::new("bounds");
    for chk in minimality_checks(DEFAULT_PRECISION)? {
        let detail = format!(
            "{} ({:?}/{:?})",
            chk.value, chk.verdict, chk.verdict_doubled
        );
        c.push(chk.label.clone(), chk.passed(), detail);
    }
    for n in 2..=13 {
        let ok = (5..=8)
            .map(|d| odlyzko_check(n, d, DEFAULT_PRECISION))
            .collect::<Result<Vec<_>, _>>()?;
        c.push(
            format!("degree ≥ 5 exclusion n={n}"),
            ok.iter().all(|&b| b),
            "d = 5..8",
        );
    }
    for (n, d, disc) in [(2, 2, 8), (5, 3, 49), (13, 4, 725)] {
        let audit = derivation_audit(n, d, disc, DEFAULT_PRECISION)?;
        c.push(
            format!("derivation n={n} d={d} D={disc}"),
            audit.consistent,
            format!("{} ≥ {}", audit.chain, audit.f),
        );
    }
    let primes: Vec<u64> = (2..=100).filter(|&p| is_prime_u64(p)).collect();
    for n in 2..=5 {
        c.push(
            format!("ℛ = {{2}} minimal n={n}"),
            verify_min_at_q2(n, &primes)?,
            "primes and pairs below 100",
        );
    }
    c.push(
        "C(n+1)/C(n) increasing",
        c_ratio_increasing(13, 40, DEFAULT_PRECISION),
        "13 ≤ n ≤ 40",
    );
    Ok(c.lines)
}

pub fn run_suite(suite: Suite) -> Result<Vec<CheckLine>, CliError> {
    Ok(match suite {
        Suite::Tables => verify_tables()?,
        Suite::Paths => verify_paths()?,
        Suite::LocalFactors => verify_local_factors()?,
        Suite::Quaternion => verify_quaternion()?,
        Suite::Bounds => verify_bounds()?,
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Tables,
                Suite::Paths,
                Suite::LocalFactors,
                Suite::Quaternion,
                Suite::Bounds,
            ] {
                all.extend(run_suite(s)?);
            }
            all
        }
    })
}

pub fn cmd_verify(suite: Suite, json: bool) -> Result<Output, CliError> {
    let lines = run_suite(suite)?;
    let failed = lines.iter().filter(|l| !l.passed).count();
    let text = if json {
        to_json(&lines)?
    } else {
        let mut out = String::new();
        for l in &lines {
            let mark = if l.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{mark} [{}] {}: {}", l.suite, l.name, l.detail);
        }
        let _ = writeln!(out, "{} checks, {failed} failed", lines.len());
        out
    };
    let status = if failed == 0 {
        Status::Success
    } else {
        Status::VerificationFailed
    };
    Ok(Output { text, status })
}

/// Either the minimum at one rank or the scan `2 ≤ n ≤ n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinQuery {
    Rank(u32),
    Global(u32),
}

pub fn cmd_min(query: MinQuery, approx: u32, json: bool) -> Result<Output, CliError> {
    let (rec, note) = match query {
        MinQuery::Rank(n) => {
            check_rank(n)?;
            let (desc, value) = min_lattice_exact(n)?;
            let rec = ResultRecord::new(
                desc.name.as_str(),
                n,
                &value,
                approx,
                "exact comparison of Δ_n and Γ^s_n",
            );
            (rec, String::new())
        }
        MinQuery::Global(n_max) => {
            check_rank(n_max)?;
            let (n, desc, chi) = global_min(n_max)?;
            let rec = ResultRecord::new(
                desc.name.as_str(),
                n,
                &chi.exact,
                approx,
                "exact scan over 2 ≤ n ≤ n_max",
            );
            (rec, format!(" (scanned 2 ≤ n ≤ {n_max})"))
        }
    };
    if json {
        return Ok(Output::ok(to_json(&rec)?));
    }
    Ok(Output::ok(format!("{}{note}\n", rec.human())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthRecord {
    pub n: u32,
    pub gamma_s: String,
    pub delta: String,
    pub ratio: String,
    pub gamma_step: Option<String>,
    pub delta_step: Option<String>,
}

pub fn cmd_growth(ranks: RankRange, approx: u32, json: bool) -> Result<Output, CliError> {
    check_rank(ranks.start)?;
    let rows: Vec<GrowthRecord> = growth_report(ranks.end)?
        .into_iter()
        .filter(|r| r.n >= ranks.start)
        .map(|r| GrowthRecord {
            n: r.n,
            gamma_s: approx_decimal(&r.gamma_s, approx),
            delta: approx_decimal(&r.delta, approx),
            ratio: approx_decimal(&r.ratio, approx),
            gamma_step: r.gamma_step.as_ref().map(|s| approx_decimal(s, approx)),
            delta_step: r.delta_step.as_ref().map(|s| approx_decimal(s, approx)),
        })
        .collect();
    if json {
        return Ok(Output::ok(to_json(&rows)?));
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.gamma_s.clone(),
                r.delta.clone(),
                r.ratio.clone(),
                r.gamma_step.clone().unwrap_or_else(|| "-".into()),
                r.delta_step.clone().unwrap_or_else(|| "-".into()),
            ]
        })
        .collect();
    Ok(Output::ok(pad_table(
        &["n", "χ(Γ^s_n)", "χ(Δ_n)", "Δ/Γ^s", "Γ^s step", "Δ step"],
        &body,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(
            "2..5".parse::<RankRange>().unwrap(),
            RankRange { start: 2, end: 5 }
        );
        assert_eq!(
            "3..=3".parse::<RankRange>().unwrap(),
            RankRange { start: 3, end: 3 }
        );
        assert!("5..2".parse::<RankRange>().is_err());
        assert!("5".parse::<RankRange>().is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_positive_rational("3/6").unwrap(),
            covolume::arith::ratio(1, 2)
        );
        assert_eq!(parse_positive_rational("7").unwrap(), int(7));
        assert!(parse_positive_rational("-1/2").is_err());
        assert!(parse_positive_rational("1/0").is_err());
    }

    #[test]
    fn record_views_agree() {
        let value = chi_gamma1_exact(5).unwrap();
        let rec = ResultRecord::new("gamma1", 5, &value, 4, "closed form");
        assert_eq!(rec.exact().unwrap(), value);
        assert_eq!(rec.factored_value().unwrap().unwrap().reconstruct(), value);
        assert_eq!(rec.display_exact(), "31·691/(2^22·3^3·5^3·7·13)");
    }

    #[test]
    fn table1_has_nine_cells() {
        let rows = table1_records().unwrap();
        assert_eq!(rows.iter().flat_map(|(_, c)| c.iter().flatten()).count(), 9);
    }
}
