//! Exact phases: rational numbers modulo 1.
//!
//! A [`RationalPhase`] is the exponent θ of a unit complex number e^{2πiθ},
//! kept as an exact rational in canonical form `0 ≤ θ < 1`. All arithmetic
//! is performed mod 1 with arbitrary-precision integers, so phase identities
//! can be decided by structural equality.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::ParseError;

/// A rational number reduced mod 1 to its canonical representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPhase(BigRational);

impl RationalPhase {
    /// The zero phase.
    pub fn zero() -> Self {
        RationalPhase(BigRational::zero())
    }

    /// Phase `num/den` reduced mod 1. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "phase denominator must be nonzero");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Canonicalizes an arbitrary rational into `[0, 1)`.
    pub fn from_rational(r: BigRational) -> Self {
        let reduced = &r - r.floor();
        debug_assert!(!reduced.is_negative() && reduced < BigRational::from(BigInt::from(1)));
        RationalPhase(reduced)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Denominator in lowest terms, as a machine integer.
    /// Panics if it does not fit in `u64` (unreachable for parsed input).
    pub fn denom_u64(&self) -> u64 {
        self.0
            .denom()
            .to_u64()
            .expect("phase denominator exceeds u64")
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Whether the stored representative lies in `[0, 1)`. Always true for
    /// values built through this type; used by structural sanity checks.
    pub fn is_canonical(&self) -> bool {
        !self.0.is_negative() && self.0 < BigRational::from(BigInt::from(1))
    }

    /// The underlying rational representative in `[0, 1)`.
    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// `n · θ` mod 1.
    pub fn scale(&self, n: &BigInt) -> Self {
        Self::from_rational(&self.0 * n)
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        self.scale(&BigInt::from(n))
    }

    /// The unit complex number `e^{2πiθ}` as `(re, im)`.
    pub fn unit_complex(&self) -> (f64, f64) {
        let t = self.0.to_f64().unwrap_or(0.0) * std::f64::consts::TAU;
        (t.cos(), t.sin())
    }
}

impl Add for &RationalPhase {
    type Output = RationalPhase;
    fn add(self, rhs: &RationalPhase) -> RationalPhase {
        RationalPhase::from_rational(&self.0 + &rhs.0)
    }
}

impl Add for RationalPhase {
    type Output = RationalPhase;
    fn add(self, rhs: RationalPhase) -> RationalPhase {
        &self + &rhs
    }
}

impl Neg for &RationalPhase {
    type Output = RationalPhase;
    fn neg(self) -> RationalPhase {
        RationalPhase::from_rational(-&self.0)
    }
}

impl Neg for RationalPhase {
    type Output = RationalPhase;
    fn neg(self) -> RationalPhase {
        -&self
    }
}

impl Sub for &RationalPhase {
    type Output = RationalPhase;
    fn sub(self, rhs: &RationalPhase) -> RationalPhase {
        RationalPhase::from_rational(&self.0 - &rhs.0)
    }
}

impl Sub for RationalPhase {
    type Output = RationalPhase;
    fn sub(self, rhs: RationalPhase) -> RationalPhase {
        &self - &rhs
    }
}

impl Sum for RationalPhase {
    fn sum<I: Iterator<Item = RationalPhase>>(iter: I) -> Self {
        iter.fold(RationalPhase::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for RationalPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom() == &BigInt::from(1) {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for RationalPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPhase({})", self)
    }
}

impl FromStr for RationalPhase {
    type Err = ParseError;

    /// Parses `num/den` or a bare integer. The value is reduced mod 1.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| ParseError::new(format!("invalid rational numerator `{num}`")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| ParseError::new(format!("invalid rational denominator `{den}`")))?;
        if den.is_zero() {
            return Err(ParseError::new("rational denominator is zero"));
        }
        Ok(Self::from_rational(BigRational::new(num, den)))
    }
}

impl Serialize for RationalPhase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalPhase {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
