//! Exact rational probabilities.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational value, reduced with a positive denominator.
///
/// Game values are always in `[0, 1]`; the same type is used for the
/// intermediate weighted sums, which are not.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Prob(BigRational);

impl Prob {
    pub fn new(num: i64, den: i64) -> Self {
        Prob(BigRational::new(num.into(), den.into()))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Prob(r)
    }

    pub fn from_integer(n: i64) -> Self {
        Prob(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Prob(BigRational::zero())
    }

    pub fn one() -> Self {
        Prob(BigRational::one())
    }

    pub fn half() -> Self {
        Prob::new(1, 2)
    }

    pub fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `1 - self`.
    pub fn complement(&self) -> Prob {
        Prob(BigRational::one() - &self.0)
    }

    pub fn is_probability(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }

    pub fn scale(&self, k: usize) -> Prob {
        Prob(&self.0 * BigRational::from_integer(k.into()))
    }

    pub fn div_int(&self, k: usize) -> Prob {
        Prob(&self.0 / BigRational::from_integer(k.into()))
    }
}

impl Add for Prob {
    type Output = Prob;
    fn add(self, rhs: Prob) -> Prob {
        Prob(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Prob> for &'a Prob {
    type Output = Prob;
    fn add(self, rhs: &Prob) -> Prob {
        Prob(&self.0 + &rhs.0)
    }
}

impl Sub for Prob {
    type Output = Prob;
    fn sub(self, rhs: Prob) -> Prob {
        Prob(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a Prob> for &'a Prob {
    type Output = Prob;
    fn sub(self, rhs: &Prob) -> Prob {
        Prob(&self.0 - &rhs.0)
    }
}

impl Mul for Prob {
    type Output = Prob;
    fn mul(self, rhs: Prob) -> Prob {
        Prob(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Prob> for &'a Prob {
    type Output = Prob;
    fn mul(self, rhs: &Prob) -> Prob {
        Prob(&self.0 * &rhs.0)
    }
}

impl std::iter::Sum for Prob {
    fn sum<I: Iterator<Item = Prob>>(iter: I) -> Prob {
        iter.fold(Prob::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<BigRational> for Prob {
    fn from(r: BigRational) -> Self {
        Prob(r)
    }
}

#[derive(Serialize, Deserialize)]
struct ProbRepr {
    num: String,
    den: String,
    #[serde(default, skip_deserializing)]
    approx: f64,
}

impl Serialize for Prob {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ProbRepr {
            num: self.0.numer().to_string(),
            den: self.0.denom().to_string(),
            approx: self.to_f64(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Prob {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ProbRepr::deserialize(d)?;
        let num: BigInt = repr.num.parse().map_err(D::Error::custom)?;
        let den: BigInt = repr.den.parse().map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Prob(BigRational::new(num, den)))
    }
}
