//! Exact rational scalars and number parsing/formatting helpers.
//!
//! All internal arithmetic runs on `BigRational` so that piecewise-polynomial
//! calculus, Riemann-Stieltjes integration and every bound comparison are
//! exact; floats only appear at the API boundary and in the refining-sum
//! oracles.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rat;

/// Rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact rational value of a finite float.
pub fn rat_from_f64(x: f64) -> Result<Rat> {
    Rat::from_float(x).ok_or_else(|| Error::Parse(format!("non-finite number {x}")))
}

/// Nearest float to a rational.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Absolute value.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

/// Parses a number literal: an integer (`-3`), an exact rational (`5/8`), or
/// a decimal with optional exponent (`0.25`, `1.5e-3`). Decimal literals are
/// parsed exactly (base ten), not through a float.
pub fn parse_number(text: &str) -> Result<Rat> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(Rat::new(n, d));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Rat> {
    let err = || Error::Parse(format!("bad number literal `{s}`"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let exp: i32 = s[i + 1..].parse().map_err(|_| err())?;
            (&s[..i], exp)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let joined = format!("{int_part}{frac_part}");
    let n: BigInt = if joined.is_empty() {
        BigInt::zero()
    } else {
        joined.parse().map_err(|_| err())?
    };
    let scale = frac_part.len() as i32 - exponent;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rat::new(n, ten.pow(scale as u32))
    } else {
        Rat::from_integer(n * ten.pow((-scale) as u32))
    };
    Ok(if sign < 0 { -value } else { value })
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats a float with 17 significant digits, enough to round-trip the
/// exact binary value.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_decimals() {
        assert_eq!(parse_number("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_number("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_number("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_number("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_number("2e3").unwrap(), rat_i(2000));
        assert_eq!(parse_number("1.5e-2").unwrap(), rat(3, 200));
        assert_eq!(parse_number("42").unwrap(), rat_i(42));
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("abc").is_err());
        assert!(parse_number("").is_err());
    }

    #[test]
    fn canonical_format_round_trips() {
        for r in [rat(3, 4), rat_i(-5), rat(22, 7), rat(0, 1)] {
            assert_eq!(parse_number(&format_rat(&r)).unwrap(), r);
        }
    }

    #[test]
    fn float_formatting_round_trips() {
        for x in [0.1, 1.0 / 3.0, -2.5e-17, 123456.789, f64::MIN_POSITIVE] {
            let s = fmt_f64(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }
}
