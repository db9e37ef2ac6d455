//! Finite-dimensional irreducible unitary representations of the discrete
//! Heisenberg group, built as monomial (generalized permutation) operators.
//!
//! A `p`-dimensional irreducible is determined by exact parameters
//! `(ξ, η, α, p)` where `η` is an irreducible fraction of denominator `p`.
//! The operator `ρ((m,k),s)` sends the basis vector `ε_j` to
//! `e^{2πi·θ(j*)} ε_{j*}` with `j* = (j−s) mod p` and
//! `θ(j*) = mξ + (k + j*m)η + ⌊(s+j*)/p⌋α`.
//!
//! Keeping operators as a permutation plus exact phases makes composition,
//! traces and character comparisons exact; dense complex matrices are only
//! materialized for the numeric commutant computation.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::heisenberg::{ball, HeisenbergElement};
use crate::phase::RationalPhase;
use crate::twisted::Phi2Special;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("dimension p must be >= 1, got {0}")]
    InvalidDimension(usize),
    #[error("eta = {eta} has denominator {got}, expected exactly p = {expected}")]
    EtaDenominator {
        eta: RationalPhase,
        got: u64,
        expected: u64,
    },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("search bounds exceeded: {0}")]
    SearchBounds(String),
    #[error("permutation image is not a bijection of 0..{0}")]
    NotAPermutation(usize),
}

/// Exact parameters `(ξ, η, α, p)` of a `p`-dimensional irreducible.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RepParams {
    xi: RationalPhase,
    eta: RationalPhase,
    alpha: RationalPhase,
    p: usize,
}

impl RepParams {
    /// Validates that `η` has denominator exactly `p` in lowest terms
    /// (`p = 1` forces `η = 0`) and that `p ≥ 1`.
    pub fn new(
        xi: RationalPhase,
        eta: RationalPhase,
        alpha: RationalPhase,
        p: usize,
    ) -> Result<Self, RepError> {
        if p == 0 {
            return Err(RepError::InvalidDimension(p));
        }
        let got = eta.denom_u64();
        if got != p as u64 {
            return Err(RepError::EtaDenominator {
                eta,
                got,
                expected: p as u64,
            });
        }
        Ok(RepParams { xi, eta, alpha, p })
    }

    /// The trivial one-dimensional representation.
    pub fn trivial() -> Self {
        RepParams {
            xi: RationalPhase::zero(),
            eta: RationalPhase::zero(),
            alpha: RationalPhase::zero(),
            p: 1,
        }
    }

    pub fn xi(&self) -> &RationalPhase {
        &self.xi
    }

    pub fn eta(&self) -> &RationalPhase {
        &self.eta
    }

    pub fn alpha(&self) -> &RationalPhase {
        &self.alpha
    }

    pub fn p(&self) -> usize {
        self.p
    }
}

/// Size of the torus orbit of `(ξ, η)` under `(ξ,η) ↦ (ξ+sη, η)`:
/// the denominator of `η` in lowest terms.
pub fn orbit_size(eta: &RationalPhase) -> usize {
    eta.denom_u64() as usize
}

/// A unitary operator permuting basis vectors up to unit-modulus scalars:
/// sends `ε_j` to `e^{2πi·phases[j]} ε_{perm[j]}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOperator {
    perm: Vec<usize>,
    phases: Vec<RationalPhase>,
}

impl MonomialOperator {
    pub fn new(perm: Vec<usize>, phases: Vec<RationalPhase>) -> Result<Self, RepError> {
        let p = perm.len();
        if phases.len() != p {
            return Err(RepError::OutOfRange(format!(
                "{} phases for a permutation of {} points",
                phases.len(),
                p
            )));
        }
        let mut seen = vec![false; p];
        for &img in &perm {
            if img >= p || seen[img] {
                return Err(RepError::NotAPermutation(p));
            }
            seen[img] = true;
        }
        Ok(MonomialOperator { perm, phases })
    }

    pub fn identity(p: usize) -> Self {
        MonomialOperator {
            perm: (0..p).collect(),
            phases: vec![RationalPhase::zero(); p],
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn phases(&self) -> &[RationalPhase] {
        &self.phases
    }

    /// Operator composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "operator dimension mismatch");
        let p = self.dim();
        let mut perm = Vec::with_capacity(p);
        let mut phases = Vec::with_capacity(p);
        for j in 0..p {
            let mid = other.perm[j];
            perm.push(self.perm[mid]);
            phases.push(&other.phases[j] + &self.phases[mid]);
        }
        let out = MonomialOperator { perm, phases };
        debug_assert!(out.is_unitary_form(), "composition left canonical form");
        out
    }

    /// Structural unitarity: the permutation is a bijection and every phase
    /// is canonical in `[0, 1)`.
    pub fn is_unitary_form(&self) -> bool {
        let p = self.dim();
        let mut seen = vec![false; p];
        for &img in &self.perm {
            if img >= p || seen[img] {
                return false;
            }
            seen[img] = true;
        }
        self.phases.iter().all(RationalPhase::is_canonical)
    }

    pub fn inverse(&self) -> Self {
        let p = self.dim();
        let mut perm = vec![0usize; p];
        let mut phases = vec![RationalPhase::zero(); p];
        for j in 0..p {
            perm[self.perm[j]] = j;
            phases[self.perm[j]] = -&self.phases[j];
        }
        MonomialOperator { perm, phases }
    }

    /// Exact trace: the multiset of phases over fixed points of the
    /// permutation, canonically reduced.
    pub fn trace(&self) -> CharacterValue {
        CharacterValue::from_terms(
            (0..self.dim())
                .filter(|&j| self.perm[j] == j)
                .map(|j| self.phases[j].clone())
                .collect(),
        )
    }

    /// Dense complex matrix; column `j` has `e^{2πi·phases[j]}` at row
    /// `perm[j]`.
    pub fn to_complex_matrix(&self) -> DMatrix<Complex64> {
        let p = self.dim();
        let mut m = DMatrix::<Complex64>::zeros(p, p);
        for j in 0..p {
            let (re, im) = self.phases[j].unit_complex();
            m[(self.perm[j], j)] = Complex64::new(re, im);
        }
        m
    }
}

/// An exact sum `Σ e^{2πiθ}` over a multiset of rational phases.
///
/// Construction reduces the multiset canonically: a uniform full cycle of
/// `q ≥ 2` equally spaced phases sums to zero and collapses to the empty
/// multiset. Every trace arising from [`rep_apply`] reduces to either the
/// empty sum or `p` copies of a single phase; other multisets are kept
/// verbatim and compared structurally.
///
/// Serializes as `{"terms": ["1/2", ...], "approx": [re, im]}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterValue {
    terms: Vec<RationalPhase>,
}

impl Serialize for CharacterValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (re, im) = self.approx();
        let mut st = serializer.serialize_struct("CharacterValue", 2)?;
        st.serialize_field("terms", &self.terms)?;
        st.serialize_field("approx", &[re, im])?;
        st.end()
    }
}

impl CharacterValue {
    pub fn zero() -> Self {
        CharacterValue { terms: vec![] }
    }

    /// `count` copies of a single phase.
    pub fn uniform(count: usize, phase: RationalPhase) -> Self {
        Self::from_terms(vec![phase; count])
    }

    pub fn from_terms(mut terms: Vec<RationalPhase>) -> Self {
        terms.sort();
        if Self::is_vanishing_cycle(&terms) {
            terms.clear();
        }
        CharacterValue { terms }
    }

    /// Detects `n/q` copies each of `q ≥ 2` phases spaced exactly `1/q`
    /// apart, i.e. a rotated full set of q-th roots of unity.
    fn is_vanishing_cycle(sorted: &[RationalPhase]) -> bool {
        if sorted.is_empty() {
            return false;
        }
        let mut distinct: Vec<(&RationalPhase, usize)> = vec![];
        for t in sorted {
            match distinct.last_mut() {
                Some((v, c)) if *v == t => *c += 1,
                _ => distinct.push((t, 1)),
            }
        }
        let q = distinct.len();
        if q < 2 || !distinct.iter().all(|&(_, c)| c == distinct[0].1) {
            return false;
        }
        let gap = RationalPhase::new(1, q as i64);
        distinct.windows(2).all(|w| w[1].0 - w[0].0 == gap)
    }

    pub fn terms(&self) -> &[RationalPhase] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Floating-point value of the sum, as `(re, im)`.
    pub fn approx(&self) -> (f64, f64) {
        self.terms.iter().map(|t| t.unit_complex()).fold(
            (0.0, 0.0),
            |(re, im), (tre, tim)| (re + tre, im + tim),
        )
    }
}

/// The monomial operator `ρ((m,k),s)` of the representation `params`.
pub fn rep_apply(params: &RepParams, h: HeisenbergElement) -> MonomialOperator {
    let p = params.p as i64;
    let mut perm = Vec::with_capacity(params.p);
    let mut phases = Vec::with_capacity(params.p);
    for j in 0..p {
        let jt = (j - h.s).rem_euclid(p);
        let floor = (h.s + jt).div_euclid(p);
        let theta = params.xi.scale_i64(h.m)
            + params.eta.scale_i64(h.k + jt * h.m)
            + params.alpha.scale_i64(floor);
        perm.push(jt as usize);
        phases.push(theta);
    }
    MonomialOperator { perm, phases }
}

/// Closed-form character: `p·e^{2πi(mξ+kη+(s/p)α)}` when both `s` and `m`
/// vanish mod `p`, zero otherwise. Agrees exactly with
/// `rep_apply(params, h).trace()`.
pub fn character(params: &RepParams, h: HeisenbergElement) -> CharacterValue {
    let p = params.p as i64;
    if h.m.rem_euclid(p) != 0 || h.s.rem_euclid(p) != 0 {
        return CharacterValue::zero();
    }
    let theta = params.xi.scale_i64(h.m)
        + params.eta.scale_i64(h.k)
        + params.alpha.scale_i64(h.s.div_euclid(p));
    CharacterValue::uniform(params.p, theta)
}

/// Closed-form character of `ρ ∘ φ` for the special automorphism:
/// `p·e^{2πi((s+m)ξ + (−k+m(m−1)/2+sm)η + (m/p)α)}` when both `s` and `m`
/// vanish mod `p`, zero otherwise.
pub fn character_of_precomposition(
    params: &RepParams,
    _phi: &Phi2Special,
    h: HeisenbergElement,
) -> CharacterValue {
    let p = params.p as i64;
    if h.m.rem_euclid(p) != 0 || h.s.rem_euclid(p) != 0 {
        return CharacterValue::zero();
    }
    let half_square = if h.m % 2 == 0 {
        (h.m / 2) * (h.m - 1)
    } else {
        h.m * ((h.m - 1) / 2)
    };
    let theta = params.xi.scale_i64(h.s + h.m)
        + params.eta.scale_i64(-h.k + half_square + h.s * h.m)
        + params.alpha.scale_i64(h.m.div_euclid(p));
    CharacterValue::uniform(params.p, theta)
}

/// Whether `ρ` and `ρ∘φ` have identical characters on the whole ball
/// `|m|,|k|,|s| ≤ ball_radius`, compared exactly via the closed forms.
pub fn is_fixed_rep(params: &RepParams, phi: &Phi2Special, ball_radius: i64) -> bool {
    let fixed = ball(ball_radius)
        .into_iter()
        .all(|h| character(params, h) == character_of_precomposition(params, phi, h));
    if params.p == 2 {
        // Symbolic criterion for p = 2: 2ξ − α ∈ Z and α − 1/2 ∈ Z.
        let symbolic = params.xi.scale_i64(2) == params.alpha
            && params.alpha == RationalPhase::new(1, 2);
        debug_assert_eq!(
            fixed, symbolic,
            "ball comparison disagrees with the symbolic p=2 criterion for {params:?}"
        );
    }
    fixed
}

/// Grid search for fixed representations of dimension `p`: scans all valid
/// `η` of denominator `p` and all `ξ, α` with denominator ≤ `max_denominator`.
///
/// Bounds are capped (`p ≤ 6`, `max_denominator ≤ 24`) to keep the grid at
/// desk scale; the result is exhaustive for the grid but makes no claim
/// beyond it.
pub fn fixed_rep_search(
    phi: &Phi2Special,
    p: usize,
    max_denominator: u64,
) -> Result<Vec<RepParams>, RepError> {
    fixed_rep_search_in_ball(phi, p, max_denominator, 2 * p as i64 + 2)
}

/// [`fixed_rep_search`] with an explicit comparison-ball radius.
pub fn fixed_rep_search_in_ball(
    phi: &Phi2Special,
    p: usize,
    max_denominator: u64,
    radius: i64,
) -> Result<Vec<RepParams>, RepError> {
    if p == 0 || p > 6 {
        return Err(RepError::SearchBounds(format!("p = {p} not in 1..=6")));
    }
    if max_denominator == 0 || max_denominator > 24 {
        return Err(RepError::SearchBounds(format!(
            "max denominator {max_denominator} not in 1..=24"
        )));
    }
    if radius < 2 * p as i64 {
        return Err(RepError::SearchBounds(format!(
            "comparison radius {radius} below 2p = {}",
            2 * p
        )));
    }
    let etas: Vec<RationalPhase> = if p == 1 {
        vec![RationalPhase::zero()]
    } else {
        (1..p as i64)
            .filter(|u| u.gcd(&(p as i64)) == 1)
            .map(|u| RationalPhase::new(u, p as i64))
            .collect()
    };
    let mut grid = std::collections::BTreeSet::new();
    for d in 1..=max_denominator as i64 {
        for n in 0..d {
            grid.insert(RationalPhase::new(n, d));
        }
    }
    let mut found = vec![];
    for eta in &etas {
        for xi in &grid {
            for alpha in &grid {
                let params = RepParams::new(xi.clone(), eta.clone(), alpha.clone(), p)
                    .expect("grid parameters are valid by construction");
                if is_fixed_rep(&params, phi, radius) {
                    found.push(params);
                }
            }
        }
    }
    Ok(found)
}

/// Dimension of the commutant of `{ρ(a), ρ(b), ρ(c)}` among complex `p×p`
/// matrices, via SVD of the commutation system with a relative singular
/// value threshold of 1e-9. Equals 1 exactly when `ρ` is irreducible.
pub fn commutant_dimension(params: &RepParams) -> usize {
    let p = params.p;
    let n = p * p;
    let gens = [
        HeisenbergElement::A,
        HeisenbergElement::B,
        HeisenbergElement::C,
    ];
    let mut system = DMatrix::<Complex64>::zeros(3 * n, n);
    for (gi, g) in gens.iter().enumerate() {
        let m = rep_apply(params, *g).to_complex_matrix();
        // (X·M − M·X)_{ij} = Σ_l X_{il} M_{lj} − M_{il} X_{lj}
        for i in 0..p {
            for j in 0..p {
                let row = gi * n + i * p + j;
                for l in 0..p {
                    system[(row, i * p + l)] += m[(l, j)];
                    system[(row, l * p + j)] -= m[(i, l)];
                }
            }
        }
    }
    let sv = system.svd(false, false).singular_values;
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let tol = 1e-9 * smax;
    let rank = sv.iter().filter(|&&s| s > tol).count();
    n - rank
}
