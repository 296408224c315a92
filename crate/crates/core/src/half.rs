//! Exact half-integers for the labels Λ, J, γ and M.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::scalar::Rational;

/// A value `twice / 2`. Ordering and arithmetic act on the doubled integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { twice: 0 };
    pub const HALF: HalfInteger = HalfInteger { twice: 1 };
    pub const ONE: HalfInteger = HalfInteger { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInteger { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInteger { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.twice, 2)
    }

    /// `(-1)^self` for integer values.
    pub fn parity_sign(self) -> Option<i64> {
        self.to_integer()
            .map(|n| if n.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// Inclusive range `from, from+1, ..., to`.
    pub fn steps(from: HalfInteger, to: HalfInteger) -> impl DoubleEndedIterator<Item = HalfInteger> {
        let start = from.twice;
        let end = to.twice;
        (0..)
            .map(move |k| start + 2 * k)
            .take_while(move |&t| t <= end)
            .map(HalfInteger::from_twice)
            .collect::<Vec<_>>()
            .into_iter()
    }
}

impl Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: Self) -> Self {
        HalfInteger::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: Self) -> Self {
        HalfInteger::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> Self {
        HalfInteger::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts `"k"` or `"k/2"`; any other denominator is rejected.
impl FromStr for HalfInteger {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("expected \"k\" or \"k/2\", got {s:?}"));
        match s.split_once('/') {
            None => s.parse::<i64>().map(HalfInteger::from_int).map_err(|_| bad()),
            Some((num, den)) => {
                if den.trim() != "2" {
                    return Err(bad());
                }
                num.trim()
                    .parse::<i64>()
                    .map(HalfInteger::from_twice)
                    .map_err(|_| bad())
            }
        }
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.to_integer() {
            Some(n) => serializer.serialize_i64(n),
            None => serializer.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for HalfInteger {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct HalfVisitor;

        impl Visitor<'_> for HalfVisitor {
            type Value = HalfInteger;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a \"p/2\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<HalfInteger, E> {
                Ok(HalfInteger::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<HalfInteger, E> {
                i64::try_from(v)
                    .map(HalfInteger::from_int)
                    .map_err(|_| E::custom("half-integer out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<HalfInteger, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(HalfVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("3/2".parse::<HalfInteger>().unwrap(), HalfInteger::from_twice(3));
        assert_eq!("1".parse::<HalfInteger>().unwrap(), HalfInteger::ONE);
        assert_eq!("-1/2".parse::<HalfInteger>().unwrap(), HalfInteger::from_twice(-1));
        assert_eq!("4/2".parse::<HalfInteger>().unwrap(), HalfInteger::from_int(2));
        assert!("1/3".parse::<HalfInteger>().is_err());
        assert!("0.5".parse::<HalfInteger>().is_err());
        assert!("x".parse::<HalfInteger>().is_err());
    }

    #[test]
    fn display_and_json() {
        let h = HalfInteger::from_twice(-3);
        assert_eq!(h.to_string(), "-3/2");
        assert_eq!(serde_json::to_string(&h).unwrap(), "\"-3/2\"");
        assert_eq!(serde_json::to_string(&HalfInteger::ONE).unwrap(), "1");
        let back: HalfInteger = serde_json::from_str("\"-3/2\"").unwrap();
        assert_eq!(back, h);
        let back: HalfInteger = serde_json::from_str("2").unwrap();
        assert_eq!(back, HalfInteger::from_int(2));
    }

    #[test]
    fn steps_are_inclusive() {
        let v: Vec<_> = HalfInteger::steps(HalfInteger::from_twice(-3), HalfInteger::from_twice(3)).collect();
        assert_eq!(v.iter().map(|h| h.twice()).collect::<Vec<_>>(), vec![-3, -1, 1, 3]);
        assert_eq!(HalfInteger::steps(HalfInteger::ONE, HalfInteger::ZERO).count(), 0);
    }

    #[test]
    fn parity() {
        assert_eq!(HalfInteger::from_int(-1).parity_sign(), Some(-1));
        assert_eq!(HalfInteger::from_int(2).parity_sign(), Some(1));
        assert_eq!(HalfInteger::HALF.parity_sign(), None);
    }
}
