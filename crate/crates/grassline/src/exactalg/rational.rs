use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ParseError;

/// Exact rational scalar. Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` reduced; panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `int` or `int/posint`. A leading `-` (or U+2212) is accepted.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim().replace('\u{2212}', "-");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s.as_str(), None),
    };
    let numer: BigInt = num.parse().map_err(|_| ParseError::BadRational(s.clone()))?;
    let denom: BigInt = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(ParseError::BadRational(s.clone()));
            }
            d.parse().map_err(|_| ParseError::BadRational(s.clone()))?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ParseError::ZeroDenominator(s.clone()));
    }
    Ok(Rational::new(numer, denom))
}

/// Converts an integral rational to `i64`, if it fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    let n = q.numer();
    i64::try_from(n).ok()
}

pub fn factorial(k: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    Rational::from_integer(acc)
}

pub fn pow(q: &Rational, k: i64) -> Rational {
    let mut acc = Rational::one();
    let base = if k < 0 { q.recip() } else { q.clone() };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}
