//! Rational scalars and their string form.
//!
//! Integers serialize as `"p"`, everything else as reduced `"p/q"` with
//! `q > 0`. Every file format in the crate uses this representation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::MalformedRational(s.to_string());
    let parse_int = |p: &str| -> Result<BigInt> {
        let p = p.trim();
        let digits = p.strip_prefix(['-', '+']).unwrap_or(p);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        p.parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(t)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn parse_vector(items: &[String]) -> Result<Vec<Rational>> {
    items.iter().map(|s| parse_rational(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&frac(-6, 4)), "-3/2");
        assert_eq!(format_rational(&frac(6, -3)), "-2");
        assert_eq!(format_rational(&zero()), "0");
    }

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("4/-8").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert_eq!(
            parse_rational("123456789012345678901234567890")
                .unwrap()
                .numer()
                .to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "1.5", "a", "1/", "/2", "--1", "1/2/3"] {
            assert!(parse_rational(s).is_err(), "{s:?} should be rejected");
        }
    }

    proptest! {
        #[test]
        fn string_form_roundtrips(p in -10_000i64..10_000, q in 1i64..10_000) {
            let r = frac(p, q);
            let s = format_rational(&r);
            prop_assert_eq!(parse_rational(&s).unwrap(), r);
        }
    }
}
