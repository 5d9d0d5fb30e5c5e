//! The positive rational parameter q and its exact floor arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A positive rational parameter stored as an irreducible fraction c/d.
///
/// All floor computations of the form ⌊i/q⌋ are done as integer
/// multiply-then-divide (i·d)÷c so that no rounding drift can occur,
/// no matter how large i gets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalParam {
    c: u64,
    d: u64,
}

impl RationalParam {
    /// Builds the reduced fraction c/d. Zero numerators or denominators
    /// are rejected; negative values cannot be expressed at all.
    pub fn new(c: u64, d: u64) -> Result<Self> {
        if c == 0 || d == 0 {
            return Err(Error::InvalidParameter {
                input: format!("{c}/{d}"),
                reason: "parameter must be a positive rational".into(),
            });
        }
        let g = c.gcd(&d);
        Ok(Self { c: c / g, d: d / g })
    }

    pub fn numerator(&self) -> u64 {
        self.c
    }

    pub fn denominator(&self) -> u64 {
        self.d
    }

    /// ⌊i/q⌋ = ⌊i·d/c⌋ in exact integer arithmetic.
    pub fn floor_div(&self, i: u64) -> u64 {
        let v = (i as u128 * self.d as u128) / self.c as u128;
        u64::try_from(v).expect("floor(i*d/c) exceeds u64")
    }

    /// Number of zeros in the i-th suffix element 0^{1+⌊i/q⌋} 1^i.
    pub fn suffix_zeros(&self, i: u64) -> u64 {
        1 + self.floor_div(i)
    }

    /// Total length of the i-th suffix element.
    pub fn suffix_len(&self, i: u64) -> u64 {
        self.suffix_zeros(i) + i
    }
}

impl fmt::Display for RationalParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.c, self.d)
    }
}

impl PartialOrd for RationalParam {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalParam {
    fn cmp(&self, other: &Self) -> Ordering {
        // numeric order via cross multiplication
        let left = self.c as u128 * other.d as u128;
        let right = other.c as u128 * self.d as u128;
        left.cmp(&right)
    }
}

impl FromStr for RationalParam {
    type Err = Error;

    /// Accepts "c/d", a plain positive integer, or a positive decimal.
    /// Decimals convert exactly: "0.02" becomes 1/50.
    fn from_str(text: &str) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidParameter {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let s = text.trim();
        if s.is_empty() {
            return Err(invalid("empty input"));
        }
        if let Some((num, den)) = s.split_once('/') {
            let c: u64 = parse_digits(num).ok_or_else(|| invalid("malformed numerator"))?;
            let d: u64 = parse_digits(den).ok_or_else(|| invalid("malformed denominator"))?;
            return Self::new(c, d).map_err(|_| invalid("parameter must be positive"));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let int: u64 = parse_digits(int_part).ok_or_else(|| invalid("malformed integer part"))?;
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid("malformed fractional part"));
            }
            let frac: u64 = parse_digits(frac_part).ok_or_else(|| invalid("fractional part too long"))?;
            let scale = 10u64
                .checked_pow(frac_part.len() as u32)
                .ok_or_else(|| invalid("fractional part too long"))?;
            let c = int
                .checked_mul(scale)
                .and_then(|v| v.checked_add(frac))
                .ok_or_else(|| invalid("value too large"))?;
            return Self::new(c, scale).map_err(|_| invalid("parameter must be positive"));
        }
        let c: u64 = parse_digits(s).ok_or_else(|| invalid("malformed integer"))?;
        Self::new(c, 1).map_err(|_| invalid("parameter must be positive"))
    }
}

fn parse_digits(s: &str) -> Option<u64> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> RationalParam {
        text.parse().unwrap()
    }

    #[test]
    fn parses_integers_as_over_one() {
        let r = q("4");
        assert_eq!((r.numerator(), r.denominator()), (4, 1));
    }

    #[test]
    fn reduces_fractions() {
        let r = q("6/4");
        assert_eq!((r.numerator(), r.denominator()), (3, 2));
    }

    #[test]
    fn converts_decimals_exactly() {
        let r = q("0.02");
        assert_eq!((r.numerator(), r.denominator()), (1, 50));
        let r = q("1.5");
        assert_eq!((r.numerator(), r.denominator()), (3, 2));
        let r = q("0.020");
        assert_eq!((r.numerator(), r.denominator()), (1, 50));
    }

    #[test]
    fn rejects_zero_negative_and_malformed() {
        for bad in ["0", "0/5", "3/0", "-1", "-3/2", "", "abc", "1.2.3", "1/", "/2", "0.0", "1e3", ".5"] {
            assert!(bad.parse::<RationalParam>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(q("3/2").floor_div(2), 1);
        assert_eq!(q("7/3").floor_div(0), 0);
        assert_eq!(q("3/4").floor_div(2), 2);
    }

    #[test]
    fn display_is_reduced_fraction() {
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("1").to_string(), "1/1");
    }

    #[test]
    fn numeric_ordering() {
        assert!(q("1/2") < q("2/3"));
        assert!(q("3/2") > q("1"));
        assert_eq!(q("2/4"), q("1/2"));
    }
}
