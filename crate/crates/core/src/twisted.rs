//! Twisted conjugacy for the discrete Heisenberg group.
//!
//! [`PhiN`] is a one-parameter family of automorphisms realizing every even
//! Reidemeister number `2N`: the twisted classes are classified in closed
//! form by a residue `r = m mod N` together with a parity bit, with class
//! representatives `((r,0),0)` and `((r,1),0)`. [`Phi2Special`] is a fixed
//! automorphism with Reidemeister number 2 whose classes are computed by
//! the generic oracle rather than a closed form.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::heisenberg::{ball, heis, HeisenbergElement};
use crate::oracle::GroupInterface;

#[derive(Debug, Error)]
pub enum TwistedError {
    #[error("family parameter N must be >= 1, got {0}")]
    InvalidParameter(i64),
    #[error(
        "ball radius {radius} too small: witnessed {witnessed} of {expected} classes; \
         radius >= {suggested} witnesses all of them"
    )]
    BallTooSmall {
        radius: i64,
        witnessed: usize,
        expected: usize,
        suggested: i64,
    },
}

/// An automorphism of the Heisenberg group with an explicit inverse.
pub trait Automorphism {
    fn apply(&self, h: HeisenbergElement) -> HeisenbergElement;
    fn apply_inverse(&self, h: HeisenbergElement) -> HeisenbergElement;
}

/// The identity automorphism; twisted conjugacy degenerates to ordinary
/// conjugacy under it.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityAutomorphism;

impl Automorphism for IdentityAutomorphism {
    fn apply(&self, h: HeisenbergElement) -> HeisenbergElement {
        h
    }
    fn apply_inverse(&self, h: HeisenbergElement) -> HeisenbergElement {
        h
    }
}

/// The two candidate signs for the quadratic `s(s-1)/2·N` term of `Q0`.
///
/// The source display of the automorphism family and the separate
/// definition of `Q0` disagree on this sign; only [`Q0Sign::Minus`] makes
/// the family a homomorphism, which the regression tests pin down.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Q0Sign {
    Minus,
    Plus,
}

fn tri(n: i64) -> i64 {
    // n(n-1)/2; exact for either parity
    if n % 2 == 0 {
        (n / 2) * (n - 1)
    } else {
        n * ((n - 1) / 2)
    }
}

/// The automorphism family with Reidemeister number `2N`:
/// `φ((m,k),s) = ((m(1−N)+sN, −k+Q0(m,s)), m−s)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PhiN {
    n: i64,
}

impl PhiN {
    pub fn new(n: i64) -> Result<Self, TwistedError> {
        if n < 1 {
            return Err(TwistedError::InvalidParameter(n));
        }
        Ok(PhiN { n })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// `Q0(m,s) = m(m−1)/2·(1−N) − s(s−1)/2·N + msN` (resolved sign).
    pub fn q0(&self, m: i64, s: i64) -> i64 {
        self.q0_with_sign(Q0Sign::Minus, m, s)
    }

    /// `Q0` under either candidate sign reading; kept public so the
    /// regression tests can demonstrate that the other sign breaks the
    /// homomorphism property.
    pub fn q0_with_sign(&self, sign: Q0Sign, m: i64, s: i64) -> i64 {
        let quad_s = match sign {
            Q0Sign::Minus => -tri(s) * self.n,
            Q0Sign::Plus => tri(s) * self.n,
        };
        tri(m) * (1 - self.n) + quad_s + m * s * self.n
    }

    /// `Q1(g1,g3) = −g1·g3 + Q0(−g1,−g3)`.
    pub fn q1(&self, g1: i64, g3: i64) -> i64 {
        -g1 * g3 + self.q0(-g1, -g3)
    }

    /// The k-component correction in
    /// `g·h·φ(g⁻¹) = ((m+(g1−g3)N, k+2g2+Q2(g1,g3,s,m)), s+2g3−g1)`.
    pub fn q2(&self, g1: i64, g3: i64, s: i64, m: i64) -> i64 {
        g3 * m + self.q1(g1, g3)
            - g3 * g1 * (1 - self.n)
            - s * g1 * (1 - self.n)
            - g3 * g3 * self.n
            - s * g3 * self.n
    }

    /// `Q2` after the reparametrization `f1 = g1−g3`, `f3 = 2g3−g1`
    /// (so `g1 = 2f1+f3`, `g3 = f1+f3`); the class of `((m,k),s)` is
    /// `{((m+f1·N, k+2f2+Q3(f1,f3,s,m)), s+f3)}`.
    pub fn q3(&self, f1: i64, f3: i64, s: i64, m: i64) -> i64 {
        self.q2(2 * f1 + f3, f1 + f3, s, m)
    }

    pub fn apply_with_sign(&self, sign: Q0Sign, h: HeisenbergElement) -> HeisenbergElement {
        heis(
            h.m * (1 - self.n) + h.s * self.n,
            -h.k + self.q0_with_sign(sign, h.m, h.s),
            h.m - h.s,
        )
    }

    /// The closed-form twisted class label of `h`.
    pub fn class_label(&self, h: HeisenbergElement) -> TwistedClassLabel {
        let r = h.m.rem_euclid(self.n);
        let f1 = (h.m - r) / self.n;
        let f3 = h.s;
        let parity = (h.k - self.q3(f1, f3, 0, r)).rem_euclid(2) as u8;
        TwistedClassLabel { r, parity }
    }

    /// The canonical representative `((r, parity), 0)` of a class.
    pub fn class_representative(&self, label: TwistedClassLabel) -> HeisenbergElement {
        heis(label.r, label.parity as i64, 0)
    }

    /// Counts distinct class labels over the ball `|m|,|k|,|s| ≤ radius`.
    /// Succeeds exactly when all `2N` classes are witnessed; a too-small
    /// ball yields a diagnostic instead of an undercount.
    pub fn reidemeister_number(&self, ball_radius: i64) -> Result<u64, TwistedError> {
        let table = self.class_table(ball_radius);
        let expected = 2 * self.n as usize;
        if table.len() < expected {
            return Err(TwistedError::BallTooSmall {
                radius: ball_radius,
                witnessed: table.len(),
                expected,
                suggested: self.n,
            });
        }
        Ok(table.len() as u64)
    }

    /// All labels witnessed in the ball, with element counts, ordered by
    /// `(r, parity)`.
    pub fn class_table(&self, ball_radius: i64) -> Vec<(TwistedClassLabel, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for h in ball(ball_radius) {
            *counts.entry(self.class_label(h)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    /// Ball radius that comfortably witnesses every class, capped so the
    /// enumeration stays under ~10⁷ elements.
    pub fn default_ball_radius(&self) -> i64 {
        (2 * self.n).min(107)
    }
}

impl Automorphism for PhiN {
    fn apply(&self, h: HeisenbergElement) -> HeisenbergElement {
        self.apply_with_sign(Q0Sign::Minus, h)
    }

    fn apply_inverse(&self, h: HeisenbergElement) -> HeisenbergElement {
        // Solving ((M,K),S) = φ((m,k),s) for (m,k,s).
        let (mm, kk, ss) = (h.m, h.k, h.s);
        let m = mm + self.n * ss;
        let s = mm + (self.n - 1) * ss;
        heis(m, self.q0(m, s) - kk, s)
    }
}

/// The fixed automorphism `φ((m,k),s) = ((s+m, −k+m(m−1)/2+sm), m)` with
/// Reidemeister number 2. Its twisted classes are computed via the generic
/// oracle partition; no closed-form classifier is exposed for it.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct Phi2Special;

impl Automorphism for Phi2Special {
    fn apply(&self, h: HeisenbergElement) -> HeisenbergElement {
        heis(h.s + h.m, -h.k + tri(h.m) + h.s * h.m, h.m)
    }

    fn apply_inverse(&self, h: HeisenbergElement) -> HeisenbergElement {
        let (mm, kk, ss) = (h.m, h.k, h.s);
        let m = ss;
        let s = mm - ss;
        heis(m, tri(m) + s * m - kk, s)
    }
}

/// The twisted class name `(r mod N, parity)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct TwistedClassLabel {
    pub r: i64,
    pub parity: u8,
}

/// A [`GroupInterface`] over the Heisenberg group twisted by `aut`.
pub fn heisenberg_interface<A>(aut: A) -> GroupInterface<HeisenbergElement>
where
    A: Automorphism + Send + Sync + 'static,
{
    GroupInterface::new(
        |a, b| a.mul(*b),
        |a| a.inv(),
        HeisenbergElement::IDENTITY,
        move |a| aut.apply(*a),
    )
}
