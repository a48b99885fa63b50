//! Parsing and rendering of scalar values in both backends.

use std::str::FromStr;

use krawtchouk_core::{Rational, Scalar};
use num_bigint::BigInt;
use serde_json::Value;

/// Largest decimal exponent accepted in a literal such as `1e-300`.
const MAX_DECIMAL_EXPONENT: i64 = 4096;

/// Parses `a/b`, an integer, or a decimal with optional exponent into an
/// exact rational. Decimals convert exactly: `0.1` is `1/10`.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let bad = || format!("not a rational or decimal number: {text:?}");
    if let Some((num, den)) = text.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den == BigInt::from(0) {
            return Err(format!("zero denominator in {text:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(at) => {
            let exp: i64 = text[at + 1..].parse().map_err(|_| bad())?;
            (&text[..at], exp)
        }
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int_part.len() + frac_part.len() == 0 || !all_digits(int_part) || !all_digits(frac_part) {
        return Err(bad());
    }
    let exponent = exponent - frac_part.len() as i64;
    if exponent.abs() > MAX_DECIMAL_EXPONENT {
        return Err(format!("exponent out of range in {text:?}"));
    }
    let mut value = BigInt::from_str(&format!("{int_part}{frac_part}")).map_err(|_| bad())?;
    if negative {
        value = -value;
    }
    let power = BigInt::from(10).pow(exponent.unsigned_abs() as u32);
    Ok(if exponent >= 0 {
        Rational::from_integer(value * power)
    } else {
        Rational::new(value, power)
    })
}

/// A backend scalar the command line can read and write.
pub trait CliScalar: Scalar {
    fn from_rational(value: &Rational) -> Self;

    fn parse_value(text: &str) -> Result<Self, String>;

    fn to_json(&self) -> Value;

    fn from_json(value: &Value) -> Result<Self, String> {
        match value {
            Value::String(s) => Self::parse_value(s),
            Value::Number(n) => Self::parse_value(&n.to_string()),
            other => Err(format!("expected a number or string, found {other}")),
        }
    }
}

impl CliScalar for Rational {
    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn parse_value(text: &str) -> Result<Self, String> {
        parse_rational(text)
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl CliScalar for f64 {
    fn from_rational(value: &Rational) -> Self {
        value.to_f64()
    }

    fn parse_value(text: &str) -> Result<Self, String> {
        let text = text.trim();
        if text.contains('/') {
            return parse_rational(text).map(|r| r.to_f64());
        }
        text.parse::<f64>()
            .map_err(|_| format!("not a number: {text:?}"))
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }
}

/// Reads a vector written as JSON (an array) or as CSV (values separated by
/// newlines or commas).
pub fn parse_vector<S: CliScalar>(text: &str) -> Result<Vec<S>, String> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let value: Value =
            serde_json::from_str(trimmed).map_err(|e| format!("invalid JSON: {e}"))?;
        let Value::Array(items) = value else {
            return Err("expected a JSON array".into());
        };
        return items.iter().map(S::from_json).collect();
    }
    text.split([',', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(S::parse_value)
        .collect()
}
