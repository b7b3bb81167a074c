//! Exact rationals.
//!
//! Everything numeric in this crate (coefficients, LP data, scale values) is a
//! [`Rational`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. No floating point is used anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Floor as a machine integer. Coefficients in this crate are small, so an
/// overflow here is an input error.
pub fn floor_i64(q: &Rational) -> Result<i64> {
    q.floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::input(format!("rational {q} is out of range")))
}

pub fn ceil_i64(q: &Rational) -> Result<i64> {
    q.ceil()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::input(format!("rational {q} is out of range")))
}

/// Parses `p/q` or `p` (optionally signed, surrounding whitespace ignored).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let parse_int = |s: &str, at: usize| -> Result<BigInt> {
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(at, format!("invalid integer `{s}`")));
        }
        s.parse::<BigInt>()
            .map_err(|e| Error::parse(at, format!("invalid integer `{s}`: {e}")))
    };
    let numer = parse_int(num, offset)?;
    let denom = match den {
        Some(d) => {
            let at = offset + trimmed.find('/').map_or(0, |i| i + 1);
            let d = parse_int(d, at)?;
            if d.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            d
        }
        None => BigInt::from(1),
    };
    Ok(Rational::new(numer, denom))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()))
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("5/6").unwrap(), frac(5, 6));
        assert_eq!(parse_rational(" 4/2 ").unwrap(), int(2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/").is_err());
    }

    #[test]
    fn lowest_terms_and_display() {
        let q = frac(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(int(3).to_string(), "3");
    }

    #[test]
    fn floors() {
        assert_eq!(floor_i64(&frac(7, 2)).unwrap(), 3);
        assert_eq!(floor_i64(&frac(-1, 2)).unwrap(), -1);
        assert_eq!(ceil_i64(&frac(7, 2)).unwrap(), 4);
        assert_eq!(ceil_i64(&int(3)).unwrap(), 3);
    }

    #[test]
    fn lcm_of_denominators() {
        let xs = [frac(1, 4), frac(5, 6), int(2)];
        assert_eq!(common_denominator(&xs), BigInt::from(12));
    }
}
