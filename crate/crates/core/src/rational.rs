//! Exact fractions, rendered as `p/q` everywhere they leave the process.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A fraction in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i64>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not a rational of the form p/q")]
pub struct ParseRationalError(pub String);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn int(v: i64) -> Self {
        Rational(Ratio::from_integer(v))
    }

    pub fn from_count(v: usize) -> Self {
        Rational::int(i64::try_from(v).expect("count fits in i64"))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

/// Shorthand for `Rational::new`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        match t.split_once('/') {
            Some((p, d)) => {
                let p: i64 = p.trim().parse().map_err(|_| err())?;
                let d: i64 = d.trim().parse().map_err(|_| err())?;
                if d == 0 {
                    return Err(err());
                }
                Ok(Rational::new(p, d))
            }
            None => t.parse().map(Rational::int).map_err(|_| err()),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, o: Rational) -> Rational {
                Rational(self.0.$m(o.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Mul<usize> for Rational {
    type Output = Rational;
    fn mul(self, k: usize) -> Rational {
        self * Rational::from_count(k)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |a, b| a + b)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::int(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_and_rendering() {
        assert_eq!(q(6, 8).to_string(), "3/4");
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(Rational::int(2).to_string(), "2/1");
        assert_eq!(q(2, 3) + q(5, 14), q(43, 42));
    }

    #[test]
    fn parsing() {
        assert_eq!("5/7".parse::<Rational>().unwrap(), q(5, 7));
        assert_eq!(" -2/4 ".parse::<Rational>().unwrap(), q(-1, 2));
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::int(3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("0.5".parse::<Rational>().is_err());
        assert!("a/b".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(q(7, 3).floor(), 2);
        assert_eq!(q(7, 3).ceil(), 3);
        assert_eq!(q(-7, 3).floor(), -3);
    }

    #[test]
    fn serde_as_string() {
        let s = serde_json::to_string(&q(-5, 14)).unwrap();
        assert_eq!(s, "\"-5/14\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q(-5, 14));
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(p in -10_000i64..10_000, d in 1i64..10_000) {
            let r = q(p, d);
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
