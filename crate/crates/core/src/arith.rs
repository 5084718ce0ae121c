//! Exact scalars and exact complex values.
//!
//! Every classification decision in this crate (wall membership, perversity
//! sign, boundary position) reduces to the sign of a polynomial expression in
//! rational inputs, so the scalar type is an arbitrary-precision rational and
//! the complex type is a pair of them. Floats only appear in reports.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn from_ordering(ord: Ordering) -> Sign {
        match ord {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// Arbitrary-precision rational in canonical form (positive denominator,
/// coprime numerator and denominator).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// `num / den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Rational> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    /// One half, the coefficient that turns `e` into `e/2` throughout.
    pub fn half() -> Rational {
        Rational::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn sign(&self) -> Sign {
        Sign::from_ordering(self.0.cmp(&BigRational::zero()))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The reciprocal, or `None` for zero.
    pub fn checked_recip(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Integer value if this rational is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `(-1)^n` as a rational.
    pub fn sign_power(n: i64) -> Rational {
        if n.rem_euclid(2) == 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    pub fn max(self, other: Rational) -> Rational {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n as i64)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_integer(n as i64)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let s = s.trim();
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::from_big(parse_int(n)?, parse_int(d)?),
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                (self.0).$assign_method(rhs.0);
            }
        }
        impl<'a> $assign_trait<&'a Rational> for Rational {
            fn $assign_method(&mut self, rhs: &'a Rational) {
                (self.0).$assign_method(&rhs.0);
            }
        }
    };
}

rational_binop!(Add, add, AddAssign, add_assign);
rational_binop!(Sub, sub, SubAssign, sub_assign);
rational_binop!(Mul, mul, MulAssign, mul_assign);

// Division panics on a zero divisor, like the integer types do.
impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

struct RationalVisitor;

impl<'de> Visitor<'de> for RationalVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a rational string \"p/q\" or \"n\", or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
        Rational::from_str(v).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
        Ok(Rational::from_integer(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
        Ok(Rational(BigRational::from_integer(BigInt::from(v))))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Rational, D::Error> {
        deserializer.deserialize_any(RationalVisitor)
    }
}

/// Exact complex number `re + i·im` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(re.into(), im.into())
    }

    pub fn real(re: Rational) -> GaussianRational {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn zero() -> GaussianRational {
        GaussianRational::default()
    }

    pub fn one() -> GaussianRational {
        GaussianRational::real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> GaussianRational {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> GaussianRational {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, s: &Rational) -> GaussianRational {
        GaussianRational::new(&self.re * s, &self.im * s)
    }

    /// `re(self)·im(other) − im(self)·re(other)`, the determinant of the 2×2
    /// matrix with columns `self` and `other`.
    pub fn cross(&self, other: &GaussianRational) -> Rational {
        &self.re * &other.im - &self.im * &other.re
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn abs_f64(&self) -> f64 {
        let (re, im) = self.to_f64();
        re.hypot(im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! gaussian_additive {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl<'a, 'b> $trait<&'b GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'b GaussianRational) -> GaussianRational {
                GaussianRational::new((&self.re).$method(&rhs.re), (&self.im).$method(&rhs.im))
            }
        }
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $assign_trait<GaussianRational> for GaussianRational {
            fn $assign_method(&mut self, rhs: GaussianRational) {
                self.re.$assign_method(rhs.re);
                self.im.$assign_method(rhs.im);
            }
        }
        impl<'a> $assign_trait<&'a GaussianRational> for GaussianRational {
            fn $assign_method(&mut self, rhs: &'a GaussianRational) {
                self.re.$assign_method(&rhs.re);
                self.im.$assign_method(&rhs.im);
            }
        }
    };
}

gaussian_additive!(Add, add, AddAssign, add_assign);
gaussian_additive!(Sub, sub, SubAssign, sub_assign);

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul<GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = GaussianRational>>(iter: I) -> GaussianRational {
        iter.fold(GaussianRational::zero(), |acc, x| acc + x)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.re)?;
        t.serialize_element(&self.im)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (re, im) = <(Rational, Rational)>::deserialize(deserializer)?;
        Ok(GaussianRational::new(re, im))
    }
}

/// A nonzero value in `ℍ = {r·exp(iπφ) : r > 0, 0 < φ ≤ 1}`: the open upper
/// half-plane together with the negative real axis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct HalfPlanePoint(GaussianRational);

impl HalfPlanePoint {
    pub fn new(value: GaussianRational) -> Result<HalfPlanePoint> {
        if value.im.is_positive() || (value.im.is_zero() && value.re.is_negative()) {
            Ok(HalfPlanePoint(value))
        } else {
            Err(Error::NotInHalfPlane(value.to_string()))
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Result<HalfPlanePoint> {
        HalfPlanePoint::new(GaussianRational::from_ints(re, im))
    }

    pub fn value(&self) -> &GaussianRational {
        &self.0
    }

    pub fn into_value(self) -> GaussianRational {
        self.0
    }

    /// On the negative real axis, i.e. phase exactly 1.
    pub fn is_negative_real(&self) -> bool {
        self.0.im.is_zero()
    }

    /// Sum of two points of `ℍ` stays in `ℍ`.
    pub fn add(&self, other: &HalfPlanePoint) -> HalfPlanePoint {
        HalfPlanePoint(&self.0 + &other.0)
    }

    /// Scaling by a positive rational preserves the phase.
    pub fn scale(&self, s: &Rational) -> Result<HalfPlanePoint> {
        HalfPlanePoint::new(self.0.scale(s))
    }
}

impl<'de> Deserialize<'de> for HalfPlanePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = GaussianRational::deserialize(deserializer)?;
        HalfPlanePoint::new(v).map_err(de::Error::custom)
    }
}

impl TryFrom<GaussianRational> for HalfPlanePoint {
    type Error = Error;
    fn try_from(value: GaussianRational) -> Result<HalfPlanePoint> {
        HalfPlanePoint::new(value)
    }
}

/// Orders the phases `φ(z1)` and `φ(z2)` exactly.
pub fn phase_compare(z1: &HalfPlanePoint, z2: &HalfPlanePoint) -> Ordering {
    match (z1.is_negative_real(), z2.is_negative_real()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        // Both strictly in the upper half-plane: arg z1 < arg z2 iff the
        // determinant of (z1, z2) is positive.
        (false, false) => match z1.value().cross(z2.value()).sign() {
            Sign::Positive => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Negative => Ordering::Greater,
        },
    }
}

/// `arg(z)/π ∈ (0, 1]`, for display only.
pub fn phase_approx(z: &HalfPlanePoint) -> f64 {
    if z.is_negative_real() {
        return 1.0;
    }
    let (re, im) = z.value().to_f64();
    im.atan2(re) / std::f64::consts::PI
}
