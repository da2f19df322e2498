//! Exact rational numbers for reports: `{num, den}` in JSON, `p/q` in text.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(pub Ratio<i64>);

impl Q {
    pub fn new(num: i64, den: i64) -> Self {
        Q(Ratio::new(num, den))
    }

    pub fn int(n: i64) -> Self {
        Q(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn abs(&self) -> Q {
        Q(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Self {
        Q::int(n)
    }
}

impl Add for Q {
    type Output = Q;
    fn add(self, rhs: Q) -> Q {
        Q(self.0 + rhs.0)
    }
}

impl Sub for Q {
    type Output = Q;
    fn sub(self, rhs: Q) -> Q {
        Q(self.0 - rhs.0)
    }
}

impl Mul for Q {
    type Output = Q;
    fn mul(self, rhs: Q) -> Q {
        Q(self.0 * rhs.0)
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Frac {
    num: i64,
    den: i64,
}

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Frac { num: self.numer(), den: self.denom() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = Frac::deserialize(d)?;
        if f.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Q::new(f.num, f.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_json() {
        assert_eq!(Q::new(6, 8).to_string(), "3/4");
        assert_eq!(Q::new(-4, 2).to_string(), "-2");
        let j = serde_json::to_string(&Q::new(-3, 4)).unwrap();
        assert_eq!(j, r#"{"num":-3,"den":4}"#);
        let back: Q = serde_json::from_str(&j).unwrap();
        assert_eq!(back, Q::new(-3, 4));
        assert!(serde_json::from_str::<Q>(r#"{"num":1,"den":0}"#).is_err());
    }

    #[test]
    fn floor_rounds_down() {
        assert_eq!(Q::new(27, 2).floor(), 13);
        assert_eq!(Q::new(-1, 2).floor(), -1);
    }
}
