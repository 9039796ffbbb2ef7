//! Text forms of exact rationals: parsing `a/b` and decimal literals,
//! common-denominator rendering, and fixed-place decimal rounding.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse '{input}' as a fraction or decimal: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

/// Parses `a/b`, an integer, or a decimal literal (`0.05`, `-1.5e-2`) into
/// an exact rational. Decimals are converted digit by digit, so `0.05`
/// becomes exactly `1/20`.
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let s = input.trim();
    let fail = |reason| ParseRationalError {
        input: input.to_string(),
        reason,
    };
    if s.is_empty() {
        return Err(fail("empty input"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_signed_integer(num.trim()).ok_or_else(|| fail("bad numerator"))?;
        let den = den.trim();
        if !den.bytes().all(|b| b.is_ascii_digit()) || den.is_empty() {
            return Err(fail("bad denominator"));
        }
        let den: BigInt = den.parse().map_err(|_| fail("bad denominator"))?;
        if den.is_zero() {
            return Err(fail("zero denominator"));
        }
        return Ok(Rational::new(num, den));
    }
    parse_decimal(s).ok_or_else(|| fail("not a decimal literal"))
}

fn parse_signed_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (negative, rest) = match s.as_bytes()[0] {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match rest.find(['e', 'E']) {
        Some(i) => {
            let exp = &rest[i + 1..];
            let digits = exp.strip_prefix(['-', '+']).unwrap_or(exp);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            (&rest[..i], exp.parse::<i32>().ok()?)
        }
        None => (rest, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(digits.parse().ok()?);
    let scale = exponent - i32::try_from(frac_part.len()).ok()?;
    let ten = Rational::from_integer(BigInt::from(10));
    value = if scale >= 0 {
        value * num_traits::pow(ten, scale as usize)
    } else {
        value / num_traits::pow(ten, scale.unsigned_abs() as usize)
    };
    Some(if negative { -value } else { value })
}

/// Least common multiple of the reduced denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Renders `value` as `n/denominator` without reducing. Integers are
/// printed bare when `denominator` is one.
///
/// `denominator` must be a positive multiple of `value`'s reduced denominator.
pub fn over(value: &Rational, denominator: &BigInt) -> String {
    if denominator.is_one() {
        return value.numer().to_string();
    }
    let scale = denominator / value.denom();
    debug_assert!((&scale * value.denom()) == *denominator);
    format!("{}/{}", value.numer() * scale, denominator)
}

/// Renders a row of values over their shared least common denominator, e.g.
/// `{2/5, 3/10, 1/5, 1/10}` as `4/10, 3/10, 2/10, 1/10`.
pub fn render_common(values: &[Rational]) -> Vec<String> {
    let den = common_denominator(values);
    values.iter().map(|v| over(v, &den)).collect()
}

/// Reduced `n/d` form, bare integer when `d = 1`.
pub fn render_reduced(value: &Rational) -> String {
    value.to_string()
}

/// Fixed-point decimal with `places` digits after the point, rounding half
/// to even.
pub fn to_decimal(value: &Rational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = value.numer().abs() * &scale;
    let den = value.denom();
    let (mut q, r) = scaled.div_rem(den);
    let twice = r * 2;
    if twice > *den || (twice == *den && q.is_odd()) {
        q += 1;
    }
    let negative = value.numer().sign() == Sign::Minus && !q.is_zero();
    let digits = q.to_string();
    let digits = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}
