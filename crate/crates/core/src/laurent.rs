//! Sparse Laurent polynomials over the integers.
//!
//! Coefficients are kept in a sorted map from exponent to nonzero
//! coefficient, so the zero polynomial is the empty map and equality is
//! structural. Exponents may be negative.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::ParseError;

/// A Laurent polynomial with integer coefficients, canonical sparse form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The monomial `c·x^e` (zero polynomial when `c == 0`).
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms, summing
    /// duplicates and stripping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert(0);
            *entry += c;
            if *entry == 0 {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplication by `x^t`.
    pub fn shift(&self, t: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + t, c)).collect(),
        }
    }

    /// Applies `f` to every exponent. `f` must be injective on the support.
    pub fn map_exponents<F: Fn(i64) -> i64>(&self, f: F) -> Self {
        let out = Self::from_terms(self.coeffs.iter().map(|(&e, &c)| (f(e), c)));
        debug_assert_eq!(out.num_terms(), self.num_terms(), "exponent map not injective");
        out
    }

    /// The truncated geometric sum `g` with `1 - x^{k·s} = (1 - x^k) · g`.
    ///
    /// For `s > 0` this is `1 + x^k + … + x^{k(s-1)}`; for `s < 0` it is
    /// `-x^{ks}(1 + x^k + … + x^{k(-s-1)})`; for `s = 0` it is zero.
    pub fn geometric_sum(k: i64, s: i64) -> Self {
        if s >= 0 {
            Self::from_terms((0..s).map(|i| (k * i, 1)))
        } else {
            Self::from_terms((0..-s).map(|i| (k * s + k * i, -1)))
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms().map(|(e, c)| (e, -c))))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let e = e1 + e2;
                let entry = acc.entry(e).or_insert(0);
                *entry += c1 * c2;
                if *entry == 0 {
                    acc.remove(&e);
                }
            }
        }
        LaurentPoly { coeffs: acc }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "x")?,
                (1, m) => write!(f, "{m}x")?,
                (e, 1) => write!(f, "x^{e}")?,
                (e, m) => write!(f, "{m}x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    /// Parses a signed monomial list such as `3x^-2 - x^-1 + 5 + 7x`.
    /// Whitespace is ignored; `x` alone means `x^1`; a bare integer is a
    /// constant term.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::new("empty polynomial"));
        }
        let bytes = compact.as_bytes();
        let mut pos = 0usize;
        let mut terms: Vec<(i64, i64)> = vec![];

        let parse_int = |bytes: &[u8], pos: &mut usize| -> Option<i64> {
            let start = *pos;
            let mut i = *pos;
            if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                i += 1;
            }
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == digits_start {
                return None;
            }
            *pos = i;
            std::str::from_utf8(&bytes[start..i]).ok()?.parse().ok()
        };

        while pos < bytes.len() {
            let term_start = pos;
            let mut sign = 1i64;
            if bytes[pos] == b'+' {
                pos += 1;
            } else if bytes[pos] == b'-' {
                sign = -1;
                pos += 1;
            } else if !terms.is_empty() {
                return Err(ParseError::at(pos, "expected `+` or `-` between terms"));
            }
            let coeff_mag = {
                let mut i = pos;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i > pos {
                    let v: i64 = std::str::from_utf8(&bytes[pos..i])
                        .unwrap()
                        .parse()
                        .map_err(|_| ParseError::at(pos, "coefficient out of range"))?;
                    pos = i;
                    Some(v)
                } else {
                    None
                }
            };
            let has_x = pos < bytes.len() && bytes[pos] == b'x';
            if has_x {
                pos += 1;
            }
            let exp = if has_x {
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    parse_int(bytes, &mut pos)
                        .ok_or_else(|| ParseError::at(pos, "expected integer exponent after `^`"))?
                } else {
                    1
                }
            } else {
                0
            };
            let coeff = match (coeff_mag, has_x) {
                (Some(c), _) => sign * c,
                (None, true) => sign,
                (None, false) => {
                    return Err(ParseError::at(term_start, "expected a coefficient or `x`"))
                }
            };
            terms.push((exp, coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

// JSON form: an object mapping exponent strings to integer coefficients.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, i64> = BTreeMap::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let exp: i64 = e
                .parse()
                .map_err(|_| de::Error::custom(format!("invalid exponent key `{e}`")))?;
            terms.push((exp, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    /// Independent schoolbook convolution over dense vectors.
    fn schoolbook_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() || b.is_zero() {
            return LaurentPoly::zero();
        }
        let (alo, ahi) = (a.min_exp().unwrap(), a.max_exp().unwrap());
        let (blo, bhi) = (b.min_exp().unwrap(), b.max_exp().unwrap());
        let lo = alo + blo;
        let hi = ahi + bhi;
        let mut dense = vec![0i64; (hi - lo + 1) as usize];
        for ea in alo..=ahi {
            for eb in blo..=bhi {
                dense[(ea + eb - lo) as usize] += a.coeff(ea) * b.coeff(eb);
            }
        }
        LaurentPoly::from_terms(dense.into_iter().enumerate().map(|(i, c)| (lo + i as i64, c)))
    }

    #[test]
    fn mul_examples() {
        let diff = poly(&[(0, 1), (2, -1)]); // 1 - x^2
        let sum = poly(&[(0, 1), (2, 1)]); // 1 + x^2
        assert_eq!(&diff * &sum, poly(&[(0, 1), (4, -1)]));

        let p = poly(&[(-2, 3), (-1, -1), (0, 5), (1, 7)]);
        assert_eq!(&p * &LaurentPoly::zero(), LaurentPoly::zero());

        // shifting the example polynomial by x^2, against the convolution oracle
        let x2 = LaurentPoly::monomial(2, 1);
        let expect = poly(&[(0, 3), (1, -1), (2, 5), (3, 7)]);
        assert_eq!(&p * &x2, expect);
        assert_eq!(schoolbook_mul(&p, &x2), expect);
        assert_eq!(p.shift(2), expect);
    }

    #[test]
    fn geometric_sum_factors_difference() {
        for k in 1..4i64 {
            for s in -5..=5i64 {
                let lhs = poly(&[(0, 1), (k * s, -1)]); // 1 - x^{ks}
                let base = poly(&[(0, 1), (k, -1)]); // 1 - x^k
                assert_eq!(lhs, &base * &LaurentPoly::geometric_sum(k, s), "k={k} s={s}");
            }
        }
    }

    #[test]
    fn display_matches_grammar() {
        let p = poly(&[(-2, 3), (-1, -1), (0, 5), (1, 7)]);
        assert_eq!(p.to_string(), "3x^-2 - x^-1 + 5 + 7x");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(poly(&[(3, -1)]).to_string(), "-x^3");
    }

    #[test]
    fn parse_examples() {
        let p: LaurentPoly = "3x^-2 - x^-1 + 5 + 7x".parse().unwrap();
        assert_eq!(p, poly(&[(-2, 3), (-1, -1), (0, 5), (1, 7)]));
        assert_eq!("x".parse::<LaurentPoly>().unwrap(), LaurentPoly::monomial(1, 1));
        assert_eq!("-x".parse::<LaurentPoly>().unwrap(), LaurentPoly::monomial(1, -1));
        assert_eq!("42".parse::<LaurentPoly>().unwrap(), LaurentPoly::constant(42));
        assert_eq!("x + x".parse::<LaurentPoly>().unwrap(), LaurentPoly::monomial(1, 2));
        assert_eq!("x - x".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        // whitespace carries no meaning at all
        assert_eq!("3 5".parse::<LaurentPoly>().unwrap(), LaurentPoly::constant(35));
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("x^".parse::<LaurentPoly>().is_err());
        assert!("3x 5".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let p = poly(&[(-2, 3), (1, 7)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"-2":3,"1":7}"#);
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-4i64..=4, -9i64..=9), 0..6)
            .prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), LaurentPoly::zero());
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        }

        #[test]
        fn mul_matches_schoolbook(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a * &b, schoolbook_mul(&a, &b));
        }

        #[test]
        fn shift_roundtrip(a in arb_poly(), t in -10i64..=10) {
            prop_assert_eq!(a.shift(t).shift(-t), a.clone());
        }

        #[test]
        fn parse_display_roundtrip(a in arb_poly()) {
            let back: LaurentPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
