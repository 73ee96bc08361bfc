//! The exact scalar field and a few integer helpers.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator and represents zero as `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Row `n` of Pascal's triangle as rationals.
pub fn binomial_row(n: usize) -> Vec<Rational> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(Rational::from_integer(c.clone()));
    for k in 1..=n {
        c = c * BigInt::from(n + 1 - k) / BigInt::from(k);
        row.push(Rational::from_integer(c.clone()));
    }
    row
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Integer power with a possibly negative exponent. Panics on `0^-k`.
pub fn powi(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        pow(base, exp as usize)
    } else {
        pow(&base.recip(), exp.unsigned_abs() as usize)
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Parses `p`, `p/q`, or a terminating decimal such as `-0.125` or `2.5e-3`.
///
/// Decimal input is converted exactly; anything that is not a finite decimal
/// literal (e.g. `0.333...`, `inf`, `NaN`) is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = t[i + 1..].parse().map_err(|_| err())?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    if exponent.unsigned_abs() > 4096 {
        return Err(err());
    }
    let all: BigInt = format!("0{whole}{frac}").parse().map_err(|_| err())?;
    let scale = exponent - frac.len() as i64;
    let ten = int(10);
    let mut value = Rational::from_integer(all) * powi(&ten, scale);
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Lossy conversion used only by the floating-point Dobinski surface.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Scale both parts down when they overflow f64 individually.
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let nf = (n.abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
    let df = (d >> shift).to_f64().unwrap_or(f64::INFINITY);
    let v = nf / df;
    if r.is_negative() {
        -v
    } else {
        v
    }
}

/// Serde adapter writing a rational as the string `"p/q"` (or `"p"`).
pub mod serde_str {
    use super::{parse_rational, Rational};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.collect_str(r),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let s = Option::<String>::deserialize(d)?;
            s.map(|s| parse_rational(&s).map_err(de::Error::custom)).transpose()
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&r.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter().map(|s| parse_rational(s).map_err(de::Error::custom)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rational("-2.5e-1").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_non_terminating_or_malformed() {
        for bad in ["", "1/0", "0.333...", "inf", "NaN", "1.2.3", "x", "-", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial_row(4), vec![int(1), int(4), int(6), int(4), int(1)]);
    }
}
