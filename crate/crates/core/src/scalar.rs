//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

pub type Rational = BigRational;
pub type Gaussian = Complex<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed rational {0:?}")]
    Malformed(String),
    #[error("rational {0:?} is not in lowest terms")]
    NotReduced(String),
    #[error("rational {0:?} has a zero denominator")]
    ZeroDenominator(String),
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn gauss(re: Rational, im: Rational) -> Gaussian {
    Complex::new(re, im)
}

pub fn gi(re: i64, im: i64) -> Gaussian {
    Complex::new(qi(re), qi(im))
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt, ScalarError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ScalarError::Malformed(whole.to_string()));
    }
    s.parse().map_err(|_| ScalarError::Malformed(whole.to_string()))
}

/// Parses `"p"` or `"p/q"` with `q > 0` and `gcd(p, q) = 1`; anything else is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s, s)?)),
        Some((p, d)) => {
            let p = parse_int(p, s)?;
            if d.starts_with('-') {
                return Err(ScalarError::Malformed(s.to_string()));
            }
            let d = parse_int(d, s)?;
            if d.is_zero() {
                return Err(ScalarError::ZeroDenominator(s.to_string()));
            }
            if !p.gcd(&d).is_one() || (p.is_zero() && !d.is_one()) {
                return Err(ScalarError::NotReduced(s.to_string()));
            }
            Ok(Rational::new_raw(p, d))
        }
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn fmt_gaussian(z: &Gaussian) -> String {
    if z.im.is_zero() {
        return fmt_rational(&z.re);
    }
    if z.re.is_zero() {
        return format!("{}i", fmt_rational(&z.im));
    }
    let sign = if z.im.is_negative() { "-" } else { "+" };
    format!("{}{}{}i", fmt_rational(&z.re), sign, fmt_rational(&z.im.abs()))
}

/// Draws from the trial pool `{-9..9}/{1..9}`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=9);
    q(n, d)
}

pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng)).collect()
}

/// Sum of absolute values.
pub fn l1_norm(v: &[Rational]) -> Rational {
    v.iter().fold(Rational::zero(), |acc, x| acc + x.abs())
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn from_f64_exact(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_reduced_forms() {
        assert_eq!(parse_rational("3").unwrap(), qi(3));
        assert_eq!(parse_rational("-3/4").unwrap(), q(-3, 4));
        assert_eq!(parse_rational("0").unwrap(), qi(0));
    }

    #[test]
    fn parse_rejects_non_reduced_and_junk() {
        assert!(matches!(parse_rational("2/4"), Err(ScalarError::NotReduced(_))));
        assert!(matches!(parse_rational("0/5"), Err(ScalarError::NotReduced(_))));
        assert!(matches!(parse_rational("1/0"), Err(ScalarError::ZeroDenominator(_))));
        for bad in ["", "1/-2", "+3", " 1", "1.5", "a/b", "1/2/3", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn format_roundtrip() {
        for (n, d) in [(1, 2), (-7, 3), (0, 1), (12, 1)] {
            let r = q(n, d);
            assert_eq!(parse_rational(&fmt_rational(&r)).unwrap(), r);
        }
        assert_eq!(fmt_gaussian(&gi(1, -2)), "1-2i");
        assert_eq!(fmt_gaussian(&gi(0, 3)), "3i");
    }
}
