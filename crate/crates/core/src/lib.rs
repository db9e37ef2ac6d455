//! Exact computational tools around twisted conjugacy.
//!
//! The crate covers four connected areas, all in exact arithmetic:
//!
//! - [`heisenberg`]: the discrete Heisenberg group `H = Z² ⋊ Z`:
//!   multiplication, inversion, commutators, the 3×3 matrix form and
//!   generator words.
//! - [`twisted`]: automorphisms of `H` with closed-form twisted-conjugacy
//!   class invariants and Reidemeister numbers, plus a distinguished
//!   automorphism whose classes are found by brute force.
//! - [`reps`]: the finite-dimensional irreducible unitary representations
//!   of `H` as exact monomial operators, their characters, precomposition
//!   with automorphisms and a fixed-representation search.
//! - [`wreath`]: the wreath product `A ≀ Z` of a finitely generated
//!   abelian group with the integers: Laurent-polynomial element encoding,
//!   abelianization, commutant membership and a constructive automorphism
//!   family.
//!
//! [`oracle`] supplies a generic brute-force twisted-conjugacy partition
//! used as ground truth for the closed-form classifiers, and [`phase`],
//! [`laurent`], [`matrix`] hold the shared exact-arithmetic primitives.

use std::fmt;

pub mod heisenberg;
pub mod laurent;
pub mod matrix;
pub mod oracle;
pub mod phase;
pub mod reps;
pub mod sampling;
pub mod twisted;
pub mod wreath;

pub use heisenberg::{heis, GroupWord, HeisenbergElement};
pub use laurent::LaurentPoly;
pub use matrix::IntMatrix;
pub use oracle::{ClassPartition, GroupInterface};
pub use phase::RationalPhase;
pub use reps::{CharacterValue, MonomialOperator, RepParams};
pub use twisted::{Automorphism, Phi2Special, PhiN, TwistedClassLabel};
pub use wreath::{AbelianSpec, WreathAutomorphism, WreathElement};

/// A text-input parse failure, with a byte position when available.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    message: String,
    position: Option<usize>,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            position: None,
        }
    }

    pub fn at(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            position: Some(position),
        }
    }

    pub fn position(&self) -> Option<usize> {
        self.position
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some(p) => write!(f, "{} (at position {})", self.message, p),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}
