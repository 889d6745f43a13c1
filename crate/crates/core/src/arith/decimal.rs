use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::ExactRational;

/// Guard digits carried below the last displayed digit before rounding.
pub const GUARD_DIGITS: u32 = 10;

/// How the guard digits are folded into the last displayed digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rounding {
    /// Drop the guard digits (round toward zero).
    Truncate,
    /// Round half away from zero on the guard digits.
    HalfUp,
}

/// Scientific-notation rendering with `sig_figs` significant digits, e.g.
/// `1.808e-5`, with digits beyond the last shown one dropped.
pub fn approx_decimal(r: &ExactRational, sig_figs: u32) -> String {
    approx_decimal_with(r, sig_figs, Rounding::Truncate)
}

/// Scientific-notation rendering by integer long division carrying
/// [`GUARD_DIGITS`] extra digits, folded in according to `mode`.
pub fn approx_decimal_with(r: &ExactRational, sig_figs: u32, mode: Rounding) -> String {
    assert!(sig_figs >= 1, "need at least one significant figure");
    if r.is_zero() {
        return format!("{}e0", zero_mantissa(sig_figs));
    }
    let num = r.numer().abs();
    let den = r.denom().clone();
    let mut exp = decimal_exponent(&num, &den);

    // digits = floor(|r| * 10^(sig_figs - 1 - exp + guard))
    let shift = sig_figs as i64 - 1 - exp + GUARD_DIGITS as i64;
    let (n, d) = if shift >= 0 {
        (num * pow10(shift as u32), den)
    } else {
        (num, den * pow10((-shift) as u32))
    };
    let truncated = n.div_floor(&d);
    let guard = pow10(GUARD_DIGITS);
    let (mut mantissa, rest) = truncated.div_rem(&guard);
    if mode == Rounding::HalfUp && rest * 2 >= guard {
        mantissa += 1;
    }
    if mantissa == pow10(sig_figs) {
        mantissa = pow10(sig_figs - 1);
        exp += 1;
    }
    let digits = mantissa.to_string();
    let sign = if r.is_negative() { "-" } else { "" };
    let (lead, tail) = digits.split_at(1);
    if tail.is_empty() {
        format!("{sign}{lead}e{exp}")
    } else {
        format!("{sign}{lead}.{tail}e{exp}")
    }
}

fn zero_mantissa(sig_figs: u32) -> String {
    if sig_figs == 1 {
        "0".to_string()
    } else {
        format!("0.{}", "0".repeat(sig_figs as usize - 1))
    }
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// floor(log10(num/den)) for positive num, den.
fn decimal_exponent(num: &BigInt, den: &BigInt) -> i64 {
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    // 10^e <= num/den < 10^(e+1), adjusted in at most a step or two.
    loop {
        let below = if e >= 0 {
            den * pow10(e as u32) <= *num
        } else {
            den <= &(num * pow10((-e) as u32))
        };
        if !below {
            e -= 1;
            continue;
        }
        let above = if e + 1 >= 0 {
            den * pow10((e + 1) as u32) > *num
        } else {
            *den > num * pow10((-(e + 1)) as u32)
        };
        if above {
            return e;
        }
        e += 1;
    }
}
