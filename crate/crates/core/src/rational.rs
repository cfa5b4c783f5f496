//! Exact rational numbers over arbitrary-precision integers.
//!
//! Every value is kept in canonical form: the denominator is positive and
//! coprime to the numerator, and zero is `0/1`. Equality is therefore
//! structural, which the tie detection in the search code relies on.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact fraction `num/den`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in lowest terms with the sign carried on the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// The Egyptian fraction `1/n`.
    pub fn unit(n: &BigInt) -> Result<Self> {
        Rational::new(1, n.clone())
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("reciprocal of zero"));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    pub fn fract(&self) -> Rational {
        self - &Rational::from_integer(self.floor())
    }

    /// `floor(1/x)`. For `x > 0` this is the unique `n` with `n*x <= 1 < (n+1)*x`.
    pub fn floor_of_reciprocal(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::domain("reciprocal of zero"));
        }
        let (n, d) = (self.numer(), self.denom());
        // 1/x = d/n; move the sign onto the denominator before flooring.
        if n.is_negative() {
            Ok((-d).div_floor(&-n))
        } else {
            Ok(d.div_floor(n))
        }
    }

    pub fn cmp_integer(&self, n: &BigInt) -> Ordering {
        self.numer().cmp(&(n * self.denom()))
    }

    /// Nearest `f64`, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `n/d` with decimal integers.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::domain(format!("not an integer: {t:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse(n)?, parse(d)?),
            None => Ok(Rational::from_integer(parse(s)?)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: String,
    den: String,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.numer().to_string(),
            den: self.denom().to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(deserializer)?;
        let num = BigInt::from_str(&repr.num).map_err(D::Error::custom)?;
        let den = BigInt::from_str(&repr.den).map_err(D::Error::custom)?;
        let r = Rational::new(num, den).map_err(D::Error::custom)?;
        // Only canonical encodings are accepted so that round-trips are bit-exact.
        if r.numer().to_string() != repr.num || r.denom().to_string() != repr.den {
            return Err(D::Error::custom("rational is not in lowest terms"));
        }
        Ok(r)
    }
}

/// Serde adapters that write big integers as decimal strings.
pub mod decimal {
    use std::str::FromStr;

    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        BigInt::from_str(&s).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(ns: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(ns.len()))?;
            for n in ns {
                seq.serialize_element(&n.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| BigInt::from_str(s).map_err(D::Error::custom))
                .collect()
        }
    }

    pub mod pair {
        use super::*;

        pub fn serialize<S: Serializer>(p: &(BigInt, BigInt), s: S) -> Result<S::Ok, S::Error> {
            super::vec::serialize(&[p.0.clone(), p.1.clone()], s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(BigInt, BigInt), D::Error> {
            let v = super::vec::deserialize(d)?;
            match <[BigInt; 2]>::try_from(v) {
                Ok([a, b]) => Ok((a, b)),
                Err(v) => Err(D::Error::custom(format!(
                    "expected a pair, got {} items",
                    v.len()
                ))),
            }
        }
    }

    pub mod tuples {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<'a, S, I>(tuples: I, s: S) -> Result<S::Ok, S::Error>
        where
            S: Serializer,
            I: IntoIterator<Item = &'a Vec<BigInt>>,
        {
            let mut seq = s.serialize_seq(None)?;
            for t in tuples {
                let row: Vec<String> = t.iter().map(ToString::to_string).collect();
                seq.serialize_element(&row)?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D, C>(d: D) -> Result<C, D::Error>
        where
            D: Deserializer<'de>,
            C: FromIterator<Vec<BigInt>>,
        {
            let raw = Vec::<Vec<String>>::deserialize(d)?;
            raw.into_iter()
                .map(|row| {
                    row.iter()
                        .map(|s| BigInt::from_str(s).map_err(D::Error::custom))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect()
        }
    }
}
