//! Exact parsing of numeric literals.
//!
//! Accepted real forms: `-2`, `0.125`, `1.5e-3`, `3/7`, `-1/2.5`.
//! Complex forms append `i` to the imaginary part: `1+2i`, `-0.5-i`, `3i`,
//! `i`. Every literal is read as an exact rational.

use maskcheck_core::Rational;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Pow, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("exponent out of range in `{0}`")]
    ExponentRange(String),
    #[error("no values given")]
    Empty,
}

const MAX_EXPONENT: i64 = 4000;

fn parse_decimal(s: &str) -> Result<Rational, ParseError> {
    let invalid = || ParseError::InvalidNumber(s.to_string());
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(k) => {
            let e: i64 = body[k + 1..].parse().map_err(|_| invalid())?;
            (&body[..k], e)
        }
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if int_part.len() + frac_part.len() == 0 || !all_digits(int_part) || !all_digits(frac_part) {
        return Err(invalid());
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| invalid())?;
    let scale = exponent - frac_part.len() as i64;
    if scale.abs() > MAX_EXPONENT {
        return Err(ParseError::ExponentRange(s.to_string()));
    }
    let power = BigInt::from(10u32).pow(scale.unsigned_abs() as u32);
    let value = if scale >= 0 {
        Rational::from_integer(digits * power)
    } else {
        Rational::new(digits, power)
    };
    Ok(if negative { -value } else { value })
}

/// A real literal, optionally a quotient `p/q` of two decimals.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_decimal(q.trim())?;
            if q.is_zero() {
                return Err(ParseError::ZeroDenominator(s.to_string()));
            }
            Ok(parse_decimal(p.trim())? / q)
        }
        None => parse_decimal(s),
    }
}

/// A real or complex literal.
pub fn parse_complex(s: &str) -> Result<Complex<Rational>, ParseError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(&t)?, Rational::zero()));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E' | b'/'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re.is_empty() { Rational::zero() } else { parse_rational(re)? };
    let im = match im {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        x => parse_rational(x)?,
    };
    Ok(Complex::new(re, im))
}

/// Values separated by commas, semicolons or whitespace.
pub fn parse_list(s: &str) -> Result<Vec<Complex<Rational>>, ParseError> {
    let values = s
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_complex)
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(values)
}
