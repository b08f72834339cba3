//! Arbitrary-precision rationals with a canonical string form.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number, always in lowest terms with positive denominator.
///
/// Serializes as `"n"`, `"-n"` or `"n/d"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Rat {
        let d = denom.into();
        assert!(!d.is_zero(), "zero denominator");
        Rat(BigRational::new(numer.into(), d))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics on zero.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Rat {
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Rat::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_int(n)
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Rat {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `"n"`, `"-n"` and `"n/d"` with `d > 0`. Non-reduced fractions
    /// are accepted and reduced.
    fn from_str(s: &str) -> Result<Rat, Error> {
        let bad = || Error::Parse(format!("invalid rational {s:?}"));
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, Error> {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rat::from_int(parse_int(s)?)),
            Some((n, d)) => {
                let n = parse_int(n)?;
                if d.starts_with('-') {
                    return Err(bad());
                }
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rat::new(n, d))
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |a, b| a + b)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |a, b| a * b)
    }
}

/// Shorthand for building rationals in tests and examples: `rat(3)` or `rat((1, 2))`.
pub fn rat<T: IntoRat>(v: T) -> Rat {
    v.into_rat()
}

pub trait IntoRat {
    fn into_rat(self) -> Rat;
}

impl IntoRat for i64 {
    fn into_rat(self) -> Rat {
        Rat::from_int(self)
    }
}

impl IntoRat for i32 {
    fn into_rat(self) -> Rat {
        Rat::from_int(self)
    }
}

impl IntoRat for (i64, i64) {
    fn into_rat(self) -> Rat {
        Rat::new(self.0, self.1)
    }
}

impl IntoRat for Rat {
    fn into_rat(self) -> Rat {
        self
    }
}
