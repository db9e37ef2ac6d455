//! Arithmetic of the discrete Heisenberg group `H = Z² ⋊ Z`.
//!
//! Elements are integer triples `((m, k), s)` with the semidirect-product
//! multiplication `((m,k),s)·((m',k'),s') = ((m+m', k+k'+sm'), s+s')`.
//! The triple is already a normal form: `((m,k),s) = a^m b^k c^s` for the
//! generators `a = ((1,0),0)`, `b = ((0,1),0)`, `c = ((0,0),1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::matrix::IntMatrix;
use crate::ParseError;

/// A group element `((m, k), s)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HeisenbergElement {
    pub m: i64,
    pub k: i64,
    pub s: i64,
}

/// Shorthand constructor.
pub fn heis(m: i64, k: i64, s: i64) -> HeisenbergElement {
    HeisenbergElement { m, k, s }
}

impl HeisenbergElement {
    pub const IDENTITY: Self = HeisenbergElement { m: 0, k: 0, s: 0 };
    pub const A: Self = HeisenbergElement { m: 1, k: 0, s: 0 };
    pub const B: Self = HeisenbergElement { m: 0, k: 1, s: 0 };
    pub const C: Self = HeisenbergElement { m: 0, k: 0, s: 1 };

    pub fn new(m: i64, k: i64, s: i64) -> Self {
        HeisenbergElement { m, k, s }
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    #[allow(clippy::should_implement_trait)] // `*` is provided below and delegates here
    pub fn mul(self, rhs: Self) -> Self {
        HeisenbergElement {
            m: self.m + rhs.m,
            k: self.k + rhs.k + self.s * rhs.m,
            s: self.s + rhs.s,
        }
    }

    pub fn inv(self) -> Self {
        HeisenbergElement {
            m: -self.m,
            k: self.s * self.m - self.k,
            s: -self.s,
        }
    }

    /// `self · rhs · self⁻¹ · rhs⁻¹`.
    pub fn commutator(self, rhs: Self) -> Self {
        self.mul(rhs).mul(self.inv()).mul(rhs.inv())
    }

    pub fn pow(self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self };
        let mut acc = Self::IDENTITY;
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(base);
        }
        acc
    }

    /// The upper unitriangular 3×3 matrix `[[1, s, k], [0, 1, m], [0, 0, 1]]`.
    pub fn to_matrix(self) -> IntMatrix {
        IntMatrix::from_rows(&[
            vec![1, self.s, self.k],
            vec![0, 1, self.m],
            vec![0, 0, 1],
        ])
    }
}

impl std::ops::Mul for HeisenbergElement {
    type Output = HeisenbergElement;
    fn mul(self, rhs: Self) -> Self {
        HeisenbergElement::mul(self, rhs)
    }
}

impl fmt::Display for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),{})", self.m, self.k, self.s)
    }
}

impl fmt::Debug for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),{})", self.m, self.k, self.s)
    }
}

impl FromStr for HeisenbergElement {
    type Err = ParseError;

    /// Parses the `((m,k),s)` form, e.g. `((2,-3),1)`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("((")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| ParseError::new("expected element of the form ((m,k),s)"))?;
        let (mk, s_str) = inner
            .rsplit_once(',')
            .ok_or_else(|| ParseError::new("expected element of the form ((m,k),s)"))?;
        let mk = mk
            .strip_suffix(')')
            .ok_or_else(|| ParseError::new("expected `)` closing the pair (m,k)"))?;
        let (m_str, k_str) = mk
            .split_once(',')
            .ok_or_else(|| ParseError::new("expected `,` inside the pair (m,k)"))?;
        let parse = |t: &str, what: &str| -> Result<i64, ParseError> {
            t.parse()
                .map_err(|_| ParseError::new(format!("invalid integer `{t}` for {what}")))
        };
        Ok(heis(
            parse(m_str, "m")?,
            parse(k_str, "k")?,
            parse(s_str, "s")?,
        ))
    }
}

/// All elements with `|m|, |k|, |s| ≤ radius`, in a fixed deterministic order.
pub fn ball(radius: i64) -> Vec<HeisenbergElement> {
    assert!(radius >= 0);
    let mut out = Vec::with_capacity(((2 * radius + 1).pow(3)) as usize);
    for m in -radius..=radius {
        for k in -radius..=radius {
            for s in -radius..=radius {
                out.push(heis(m, k, s));
            }
        }
    }
    out
}

/// One of the three standard generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    A,
    B,
    C,
}

impl Generator {
    pub fn element(self) -> HeisenbergElement {
        match self {
            Generator::A => HeisenbergElement::A,
            Generator::B => HeisenbergElement::B,
            Generator::C => HeisenbergElement::C,
        }
    }

    fn symbol(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::C => 'c',
        }
    }
}

/// A word in the generators `a`, `b`, `c` with integer exponents.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupWord {
    letters: Vec<(Generator, i64)>,
}

impl GroupWord {
    pub fn new(letters: Vec<(Generator, i64)>) -> Self {
        GroupWord { letters }
    }

    pub fn letters(&self) -> &[(Generator, i64)] {
        &self.letters
    }

    /// Left-to-right product of the generator powers.
    pub fn eval(&self) -> HeisenbergElement {
        self.letters
            .iter()
            .fold(HeisenbergElement::IDENTITY, |acc, &(g, e)| {
                acc.mul(g.element().pow(e))
            })
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{}", g.symbol())?;
            } else {
                write!(f, "{}^{}", g.symbol(), e)?;
            }
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = ParseError;

    /// Parses whitespace-separated letters `a|b|c`, each with an optional
    /// `^<integer>` exponent, e.g. `a^2 b^3` or `c a c^-1 a^-1`.
    /// The empty word (or `e`) is the identity.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut letters = vec![];
        for tok in s.split_whitespace() {
            if tok == "e" && letters.is_empty() && s.split_whitespace().count() == 1 {
                return Ok(GroupWord::default());
            }
            let (head, exp) = match tok.split_once('^') {
                Some((h, e)) => {
                    let exp: i64 = e.parse().map_err(|_| {
                        ParseError::new(format!("invalid exponent `{e}` in token `{tok}`"))
                    })?;
                    (h, exp)
                }
                None => (tok, 1),
            };
            let gen = match head {
                "a" => Generator::A,
                "b" => Generator::B,
                "c" => Generator::C,
                other => {
                    return Err(ParseError::new(format!(
                        "unknown generator `{other}` (expected a, b or c)"
                    )))
                }
            };
            letters.push((gen, exp));
        }
        Ok(GroupWord::new(letters))
    }
}

/// Accepts either the `((m,k),s)` element form or a generator word.
pub fn parse_element_or_word(s: &str) -> Result<HeisenbergElement, ParseError> {
    let trimmed = s.trim();
    if trimmed.starts_with('(') {
        trimmed.parse()
    } else {
        trimmed.parse::<GroupWord>().map(|w| w.eval())
    }
}
