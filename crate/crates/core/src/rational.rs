//! Exact rational scalars and the extension parameters `(k, m, l)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. Always normalized: positive denominator,
/// coprime numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"`, `"p"` or `"-p/q"`. Decimal notation is rejected so that
/// every value that enters the exact pipeline is exactly what was written.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = BigInt::from_str(den).map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Serde adapter storing a [`Rational`] as its `"p/q"` string.
pub mod serde_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Central-extension parameters of the 2+1 Galilei algebra: `k` pairs the two
/// boosts, `m` pairs boosts with translations (the mass) and `l` pairs the
/// rotation with the Hamiltonian.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtensionParams {
    #[serde(with = "serde_str")]
    pub k: Rational,
    #[serde(with = "serde_str")]
    pub m: Rational,
    #[serde(with = "serde_str")]
    pub l: Rational,
}

impl ExtensionParams {
    pub fn new(k: Rational, m: Rational, l: Rational) -> Self {
        Self { k, m, l }
    }

    pub fn from_ints(k: i64, m: i64, l: i64) -> Self {
        Self::new(int(k), int(m), int(l))
    }

    pub fn parse(k: &str, m: &str, l: &str) -> Result<Self> {
        Ok(Self::new(parse_rational(k)?, parse_rational(m)?, parse_rational(l)?))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }

    /// The same parameters with `k` set to zero.
    pub fn without_k(&self) -> Self {
        Self::new(Rational::zero(), self.m.clone(), self.l.clone())
    }

    /// The same parameters with `l` set to zero.
    pub fn without_l(&self) -> Self {
        Self::new(self.k.clone(), self.m.clone(), Rational::zero())
    }

    pub fn to_f64(&self) -> (f64, f64, f64) {
        (rational_to_f64(&self.k), rational_to_f64(&self.m), rational_to_f64(&self.l))
    }
}

impl fmt::Display for ExtensionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} m={} l={}", self.k, self.m, self.l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
    }

    #[test]
    fn rejects_decimals_and_zero_denominator() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("m").is_err());
    }

    #[test]
    fn params_serialize_as_strings() {
        let p = ExtensionParams::new(ratio(1, 2), int(2), int(0));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"k":"1/2","m":"2","l":"0"}"#);
        let back: ExtensionParams = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
