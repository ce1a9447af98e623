//! Exact scalars.
//!
//! [`Rational`] is `num_rational::BigRational`: every constructor and every
//! arithmetic operation reduces to lowest terms with a positive denominator,
//! so equality is structural. The helpers here cover the pieces the rest of
//! the crate needs on top of that: parsing `p/q` text, binomial
//! coefficients, factorials, `lcm(1..=n)` and display-only decimals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Builds `num / den` in lowest terms. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or a bare integer. Surrounding whitespace is ignored; a
/// leading sign is allowed on the numerator only.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let token = text.trim();
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (token, None),
    };
    let parse_int = |s: &str, what: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(token, format!("{what} is not an integer")));
        }
        s.parse::<BigInt>()
            .map_err(|e| Error::parse(token, format!("{what}: {e}")))
    };
    let num = parse_int(num, "numerator")?;
    let den = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(Error::parse(token, "sign belongs on the numerator"));
            }
            parse_int(d, "denominator")?
        }
    };
    if den.is_zero() {
        return Err(Error::parse(token, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma-separated list of rationals. An empty string is an empty
/// list.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

/// Exact `C(n, j)`.
pub fn binomial(n: i64, j: i64) -> Result<BigInt> {
    if n < 0 || j < 0 || j > n {
        return Err(Error::BinomialRange { n, j });
    }
    let j = j.min(n - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    row.push(acc.clone());
    for i in 0..n {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        row.push(acc.clone());
    }
    row
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `lcm(1, 2, ..., n)`; `lcm_upto(0) == 1`.
pub fn lcm_upto(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)))
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Greatest integer not exceeding `q`.
pub fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

/// Decimal rendering with 15 significant digits, for display columns only.
pub fn approx(q: &Rational) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    match q.to_f64() {
        Some(v) if v.is_finite() => {
            let rounded: f64 = format!("{v:.14e}").parse().unwrap_or(v);
            format!("{rounded}")
        }
        _ => {
            let sign = if q.is_negative() { "-" } else { "" };
            format!("{sign}inf")
        }
    }
}

/// Largest absolute value in `values`, or zero for an empty slice.
pub fn max_abs<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
}
