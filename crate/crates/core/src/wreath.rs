//! The wreath product `A ≀ Z` for a finitely generated abelian group `A`.
//!
//! `A ≅ Z^k ⊕ Z/d₁ ⊕ … ⊕ Z/d_t` is described by an [`AbelianSpec`]. The
//! base group `⊕_{i∈Z} A_i` is encoded with its free part as a Laurent
//! polynomial (coordinate `j` of copy `i` sits at exponent `i·k + j`) and
//! its torsion part as a sparse map of residues; the `Z` factor acts by
//! translating copies, which on the free part is multiplication by `x^k`.
//!
//! Beyond the group arithmetic this module provides the coefficient-sum
//! maps `ε_j`, the abelianization onto `Z^{k+1}`, commutant membership,
//! the `(k+1)×(k+1)` matrix induced on the abelianization by generator
//! images, and a constructive automorphism family (coordinatewise matrix ∘
//! mirror ∘ inner) used to exercise the shift-vanishing and subgroup
//! preservation properties of arbitrary automorphisms.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::matrix::IntMatrix;

#[derive(Debug, Error)]
pub enum WreathError {
    #[error("torsion order must be >= 2, got {0}")]
    InvalidTorsionOrder(i64),
    #[error("elements belong to different base-group specifications")]
    SpecMismatch,
    #[error("operation requires a torsion-free base group")]
    TorsionNotSupported,
    #[error("free part must be zero when the free rank is 0")]
    FreePartWithoutRank,
    #[error("torsion factor index {index} out of range ({count} factors)")]
    TorsionIndexOutOfRange { index: usize, count: usize },
    #[error("expected a {k}x{k} base matrix for free rank {k}")]
    BaseMatrixShape { k: usize },
    #[error("base matrix is not unimodular")]
    NotUnimodular,
    #[error("expected {expected} torsion multipliers, got {got}")]
    TorsionUnitCount { expected: usize, got: usize },
    #[error("torsion multiplier {unit} is not invertible mod {order}")]
    TorsionUnitNotInvertible { unit: i64, order: i64 },
    #[error("expected {expected} base-generator images, got {got}")]
    GeneratorImageCount { expected: usize, got: usize },
    #[error("automorphism verification failed: {0}")]
    VerificationFailed(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

/// `A ≅ Z^k ⊕ Z/d₁ ⊕ … ⊕ Z/d_t`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AbelianSpec {
    free_rank: usize,
    torsion: Vec<i64>,
}

impl AbelianSpec {
    pub fn new(free_rank: usize, torsion: Vec<i64>) -> Result<Self, WreathError> {
        for &d in &torsion {
            if d < 2 {
                return Err(WreathError::InvalidTorsionOrder(d));
            }
        }
        Ok(AbelianSpec { free_rank, torsion })
    }

    /// The torsion-free spec `Z^k`.
    pub fn free(free_rank: usize) -> Self {
        AbelianSpec {
            free_rank,
            torsion: vec![],
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Maximal order of a torsion element: `lcm(d₁, …, d_t)`, or 1.
    pub fn torsion_exponent(&self) -> i64 {
        self.torsion.iter().fold(1, |acc, &d| acc.lcm(&d))
    }
}

/// An element `(free part, torsion part, shift)` of `A ≀ Z`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WreathElement {
    spec: AbelianSpec,
    free: LaurentPoly,
    torsion: BTreeMap<(i64, usize), i64>, // (copy, factor) -> residue in [1, d)
    shift: i64,
}

/// Order of a group element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

impl WreathElement {
    pub fn identity(spec: AbelianSpec) -> Self {
        WreathElement {
            spec,
            free: LaurentPoly::zero(),
            torsion: BTreeMap::new(),
            shift: 0,
        }
    }

    /// Builds an element, reducing torsion residues mod their orders and
    /// dropping zeros.
    pub fn new(
        spec: AbelianSpec,
        free: LaurentPoly,
        torsion_entries: impl IntoIterator<Item = (i64, usize, i64)>,
        shift: i64,
    ) -> Result<Self, WreathError> {
        if spec.free_rank == 0 && !free.is_zero() {
            return Err(WreathError::FreePartWithoutRank);
        }
        let mut torsion = BTreeMap::new();
        for (copy, factor, residue) in torsion_entries {
            if factor >= spec.torsion.len() {
                return Err(WreathError::TorsionIndexOutOfRange {
                    index: factor,
                    count: spec.torsion.len(),
                });
            }
            add_torsion(&mut torsion, (copy, factor), residue, spec.torsion[factor]);
        }
        Ok(WreathElement {
            spec,
            free,
            torsion,
            shift,
        })
    }

    /// A pure `(P(x), n)` element over a torsion-free-compatible spec.
    pub fn from_poly(
        spec: AbelianSpec,
        free: LaurentPoly,
        shift: i64,
    ) -> Result<Self, WreathError> {
        Self::new(spec, free, [], shift)
    }

    pub fn spec(&self) -> &AbelianSpec {
        &self.spec
    }

    pub fn free_part(&self) -> &LaurentPoly {
        &self.free
    }

    /// Torsion entries `((copy, factor), residue)` with nonzero residues.
    pub fn torsion_part(&self) -> impl Iterator<Item = ((i64, usize), i64)> + '_ {
        self.torsion.iter().map(|(&k, &v)| (k, v))
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.free.is_zero() && self.torsion.is_empty()
    }

    /// `(P, r)(Q, s) = (P + x^{rk}·Q, r+s)`, with torsion copies of the
    /// right factor translated by `r`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, WreathError> {
        if self.spec != rhs.spec {
            return Err(WreathError::SpecMismatch);
        }
        let k = self.spec.free_rank as i64;
        let free = &self.free + &rhs.free.shift(self.shift * k);
        let mut torsion = self.torsion.clone();
        for (&(copy, factor), &res) in &rhs.torsion {
            add_torsion(
                &mut torsion,
                (copy + self.shift, factor),
                res,
                self.spec.torsion[factor],
            );
        }
        Ok(WreathElement {
            spec: self.spec.clone(),
            free,
            torsion,
            shift: self.shift + rhs.shift,
        })
    }

    /// `(P, r)⁻¹ = (−x^{−kr}·P, −r)`.
    pub fn inv(&self) -> Self {
        let k = self.spec.free_rank as i64;
        let free = (-&self.free).shift(-self.shift * k);
        let torsion = self
            .torsion
            .iter()
            .map(|(&(copy, factor), &res)| {
                ((copy - self.shift, factor), self.spec.torsion[factor] - res)
            })
            .collect();
        WreathElement {
            spec: self.spec.clone(),
            free,
            torsion,
            shift: -self.shift,
        }
    }

    /// `g₁ g₂ g₁⁻¹ g₂⁻¹`, computed directly.
    pub fn commutator(&self, rhs: &Self) -> Result<Self, WreathError> {
        self.mul(rhs)?.mul(&self.inv())?.mul(&rhs.inv())
    }

    pub fn commutes_with(&self, rhs: &Self) -> Result<bool, WreathError> {
        Ok(self.mul(rhs)? == rhs.mul(self)?)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::identity(self.spec.clone());
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base).expect("same spec");
        }
        acc
    }

    /// Finite exactly for pure torsion elements (zero shift and zero free
    /// part); the order is then the lcm of the residue orders.
    pub fn order(&self) -> ElementOrder {
        if self.shift != 0 || !self.free.is_zero() {
            return ElementOrder::Infinite;
        }
        let mut ord: i64 = 1;
        for (&(_, factor), &res) in &self.torsion {
            let d = self.spec.torsion[factor];
            ord = ord.lcm(&(d / res.gcd(&d)));
        }
        ElementOrder::Finite(ord as u64)
    }
}

fn add_torsion(map: &mut BTreeMap<(i64, usize), i64>, key: (i64, usize), amount: i64, order: i64) {
    let cur = map.get(&key).copied().unwrap_or(0);
    let next = (cur + amount).rem_euclid(order);
    if next == 0 {
        map.remove(&key);
    } else {
        map.insert(key, next);
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.free)?;
        if !self.torsion.is_empty() {
            write!(f, "; ")?;
            for (i, (&(copy, factor), &res)) in self.torsion.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "t[{copy},{factor}]={res}")?;
            }
        }
        write!(f, ", {})", self.shift)
    }
}

impl Serialize for WreathElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Tors {
            copy: i64,
            factor: usize,
            residue: i64,
        }
        let tors: Vec<Tors> = self
            .torsion
            .iter()
            .map(|(&(copy, factor), &residue)| Tors {
                copy,
                factor,
                residue,
            })
            .collect();
        let mut st = serializer.serialize_struct("WreathElement", 5)?;
        st.serialize_field("k", &self.spec.free_rank)?;
        st.serialize_field("torsion", &self.spec.torsion)?;
        st.serialize_field("free", &self.free)?;
        st.serialize_field("tors", &tors)?;
        st.serialize_field("shift", &self.shift)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for WreathElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Tors {
            copy: i64,
            factor: usize,
            residue: i64,
        }
        #[derive(Deserialize)]
        struct Raw {
            k: usize,
            #[serde(default)]
            torsion: Vec<i64>,
            #[serde(default)]
            free: LaurentPoly,
            #[serde(default)]
            tors: Vec<Tors>,
            #[serde(default)]
            shift: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        let spec = AbelianSpec::new(raw.k, raw.torsion).map_err(serde::de::Error::custom)?;
        WreathElement::new(
            spec,
            raw.free,
            raw.tors.into_iter().map(|t| (t.copy, t.factor, t.residue)),
            raw.shift,
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Coefficient sum `ε_j(P) = Σ_{n ≡ j (mod k)} a_n` for `0 ≤ j < k`.
pub fn eps(k: usize, j: usize, poly: &LaurentPoly) -> i64 {
    assert!(k >= 1, "eps requires free rank >= 1");
    assert!(j < k, "eps index out of range");
    poly.terms()
        .filter(|&(e, _)| e.rem_euclid(k as i64) == j as i64)
        .map(|(_, c)| c)
        .sum()
}

/// The canonical projection onto the abelianization `Z^{k+1}`:
/// `(P, r) ↦ (ε₀(P), …, ε_{k−1}(P), r)`. Torsion-free base groups only.
pub fn abelianize(g: &WreathElement) -> Result<Vec<i64>, WreathError> {
    if !g.spec.is_torsion_free() {
        return Err(WreathError::TorsionNotSupported);
    }
    let k = g.spec.free_rank;
    let mut out: Vec<i64> = (0..k).map(|j| eps(k, j, &g.free)).collect();
    out.push(g.shift);
    Ok(out)
}

/// Membership in the derived subgroup: zero shift and all `ε_j` vanishing.
pub fn in_commutant(g: &WreathElement) -> Result<bool, WreathError> {
    Ok(abelianize(g)?.iter().all(|&v| v == 0))
}

/// The closed-form commutator `((1 − x^{ks})P + (x^{kr} − 1)Q, 0)` of
/// `(P, r)` and `(Q, s)`. Torsion-free base groups only; agreement with
/// [`WreathElement::commutator`] is a tested invariant.
pub fn commutator_closed_form(
    g1: &WreathElement,
    g2: &WreathElement,
) -> Result<WreathElement, WreathError> {
    if g1.spec != g2.spec {
        return Err(WreathError::SpecMismatch);
    }
    if !g1.spec.is_torsion_free() {
        return Err(WreathError::TorsionNotSupported);
    }
    let k = g1.spec.free_rank as i64;
    let (r, s) = (g1.shift, g2.shift);
    let one_minus = |t: i64| LaurentPoly::from_terms([(0, 1), (t, -1)]);
    let free = &(&one_minus(k * s) * &g1.free) + &(&(-&one_minus(k * r)) * &g2.free);
    WreathElement::from_poly(g1.spec.clone(), free, 0)
}

/// Whether the polynomial identity `P(1 − x^{ks'}) = P'(1 − x^{ks})`
/// holds for `g1 = (P, s)`, `g2 = (P', s')`; this is exactly the
/// commutation condition in the torsion-free case.
pub fn commutation_identity_holds(
    g1: &WreathElement,
    g2: &WreathElement,
) -> Result<bool, WreathError> {
    if g1.spec != g2.spec {
        return Err(WreathError::SpecMismatch);
    }
    if !g1.spec.is_torsion_free() {
        return Err(WreathError::TorsionNotSupported);
    }
    let k = g1.spec.free_rank as i64;
    let one_minus = |t: i64| LaurentPoly::from_terms([(0, 1), (t, -1)]);
    let lhs = &g1.free * &one_minus(k * g2.shift);
    let rhs = &g2.free * &one_minus(k * g1.shift);
    Ok(lhs == rhs)
}

/// Images `(P_i, s_i)` of the base generators `a_i = (x^i, 0)` and `(Q, r)`
/// of the shift generator `b = (0, 1)` under some endomorphism.
#[derive(Clone, Debug)]
pub struct GeneratorImages {
    a_images: Vec<WreathElement>,
    b_image: WreathElement,
}

impl GeneratorImages {
    pub fn new(
        a_images: Vec<WreathElement>,
        b_image: WreathElement,
    ) -> Result<Self, WreathError> {
        let spec = b_image.spec.clone();
        if a_images.iter().any(|g| g.spec != spec) {
            return Err(WreathError::SpecMismatch);
        }
        if a_images.len() != spec.free_rank {
            return Err(WreathError::GeneratorImageCount {
                expected: spec.free_rank,
                got: a_images.len(),
            });
        }
        Ok(GeneratorImages { a_images, b_image })
    }

    pub fn a_images(&self) -> &[WreathElement] {
        &self.a_images
    }

    pub fn b_image(&self) -> &WreathElement {
        &self.b_image
    }

    pub fn spec(&self) -> &AbelianSpec {
        &self.b_image.spec
    }
}

/// The `(k+1)×(k+1)` integer matrix induced on the abelianization
/// `Z^k ⊕ Z` by generator images: columns `(ε₀(P_i), …, ε_{k−1}(P_i), s_i)`
/// and `(ε₀(Q), …, ε_{k−1}(Q), r)`.
pub fn pi_matrix(images: &GeneratorImages) -> IntMatrix {
    let k = images.spec().free_rank;
    let n = k + 1;
    let mut rows = vec![vec![0i64; n]; n];
    for (col, img) in images
        .a_images
        .iter()
        .chain(std::iter::once(&images.b_image))
        .enumerate()
    {
        for (row, item) in rows.iter_mut().enumerate().take(k) {
            item[col] = eps(k, row, &img.free);
        }
        rows[k][col] = img.shift;
    }
    IntMatrix::from_rows(&rows)
}

/// Checks the bottom-row minor degeneracy relations of the abelianized
/// matrix: `ε_{k−1}(P_i)·s_j = ε_{k−1}(P_j)·s_i` for all `i, j`, and
/// `ε_{k−1}(P_i)·r = ε_{k−1}(Q)·s_i`.
///
/// The relations are only derived under specific hypotheses, which are
/// enforced as preconditions: the base-generator images commute pairwise,
/// each commutes with its conjugate by the `b`-image, and every `s_i` is
/// nonzero. A violated hypothesis is reported as an error naming it.
pub fn bottom_minor_relations(images: &GeneratorImages) -> Result<bool, WreathError> {
    let k = images.spec().free_rank;
    if k == 0 {
        return Err(WreathError::HypothesisViolated(
            "no base generators for free rank 0".into(),
        ));
    }
    for (i, gi) in images.a_images.iter().enumerate() {
        for gj in &images.a_images[i + 1..] {
            if !gi.commutes_with(gj)? {
                return Err(WreathError::HypothesisViolated(
                    "base-generator images do not commute pairwise".into(),
                ));
            }
        }
        let conj = images.b_image.mul(gi)?.mul(&images.b_image.inv())?;
        if !gi.commutes_with(&conj)? {
            return Err(WreathError::HypothesisViolated(
                "a base-generator image does not commute with its b-conjugate".into(),
            ));
        }
        if gi.shift == 0 {
            return Err(WreathError::HypothesisViolated(format!(
                "generator image {i} has shift 0 (relations are derived assuming all shifts nonzero)"
            )));
        }
    }
    let last = k - 1;
    let e = |g: &WreathElement| eps(k, last, &g.free);
    let (q_eps, r) = (e(&images.b_image), images.b_image.shift);
    for gi in &images.a_images {
        for gj in &images.a_images {
            if e(gi) * gj.shift != e(gj) * gi.shift {
                return Ok(false);
            }
        }
        if e(gi) * r != q_eps * gi.shift {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A constructive automorphism of `A ≀ Z`: a unimodular matrix applied
/// coordinatewise to every copy of `Z^k`, unit multipliers on every torsion
/// factor, optionally the mirror (copy `i ↦ −i`, shift negated), followed
/// by an inner conjugation.
///
/// Construction verifies the homomorphism property on seeded random pairs
/// and unimodularity of the induced abelianization matrix, so a constructed
/// value is a checked automorphism.
#[derive(Clone, Debug)]
pub struct WreathAutomorphism {
    spec: AbelianSpec,
    base_rows: Vec<Vec<i64>>,
    mirror: bool,
    inner: WreathElement,
    inner_inv: WreathElement,
    torsion_units: Vec<i64>,
}

impl WreathAutomorphism {
    pub fn new(
        spec: AbelianSpec,
        base_rows: Vec<Vec<i64>>,
        mirror: bool,
        inner: WreathElement,
        torsion_units: Vec<i64>,
    ) -> Result<Self, WreathError> {
        let k = spec.free_rank;
        if base_rows.len() != k || base_rows.iter().any(|r| r.len() != k) {
            return Err(WreathError::BaseMatrixShape { k });
        }
        if k > 0 && !IntMatrix::from_rows(&base_rows).is_unimodular() {
            return Err(WreathError::NotUnimodular);
        }
        if torsion_units.len() != spec.torsion.len() {
            return Err(WreathError::TorsionUnitCount {
                expected: spec.torsion.len(),
                got: torsion_units.len(),
            });
        }
        for (&u, &d) in torsion_units.iter().zip(&spec.torsion) {
            if u.gcd(&d) != 1 {
                return Err(WreathError::TorsionUnitNotInvertible { unit: u, order: d });
            }
        }
        if inner.spec != spec {
            return Err(WreathError::SpecMismatch);
        }
        let aut = WreathAutomorphism {
            spec,
            base_rows,
            mirror,
            inner_inv: inner.inv(),
            inner,
            torsion_units,
        };
        aut.verify()?;
        Ok(aut)
    }

    pub fn identity(spec: AbelianSpec) -> Self {
        let k = spec.free_rank;
        let base_rows = (0..k)
            .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
            .collect();
        let units = vec![1; spec.torsion.len()];
        let inner = WreathElement::identity(spec.clone());
        Self::new(spec, base_rows, false, inner, units).expect("identity pieces are valid")
    }

    pub fn spec(&self) -> &AbelianSpec {
        &self.spec
    }

    pub fn base_rows(&self) -> &[Vec<i64>] {
        &self.base_rows
    }

    pub fn mirror(&self) -> bool {
        self.mirror
    }

    pub fn inner(&self) -> &WreathElement {
        &self.inner
    }

    pub fn torsion_units(&self) -> &[i64] {
        &self.torsion_units
    }

    pub fn apply(&self, g: &WreathElement) -> Result<WreathElement, WreathError> {
        if g.spec != self.spec {
            return Err(WreathError::SpecMismatch);
        }
        let k = self.spec.free_rank;
        // coordinatewise matrix action, copy by copy
        let free = if k == 0 {
            LaurentPoly::zero()
        } else {
            let kk = k as i64;
            let mut by_copy: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
            for (e, c) in g.free.terms() {
                let copy = e.div_euclid(kk);
                let j = e.rem_euclid(kk) as usize;
                by_copy.entry(copy).or_insert_with(|| vec![0; k])[j] = c;
            }
            let mut terms = vec![];
            for (copy, v) in by_copy {
                for (row, coeffs) in self.base_rows.iter().enumerate() {
                    let w: i64 = coeffs.iter().zip(&v).map(|(a, b)| a * b).sum();
                    terms.push((copy * kk + row as i64, w));
                }
            }
            LaurentPoly::from_terms(terms)
        };
        let mut torsion = BTreeMap::new();
        for (&(copy, factor), &res) in &g.torsion {
            add_torsion(
                &mut torsion,
                (copy, factor),
                self.torsion_units[factor] * res,
                self.spec.torsion[factor],
            );
        }
        let mut out = WreathElement {
            spec: self.spec.clone(),
            free,
            torsion,
            shift: g.shift,
        };
        if self.mirror {
            let kk = k as i64;
            let free = if k == 0 {
                LaurentPoly::zero()
            } else {
                out.free.map_exponents(|e| {
                    let copy = e.div_euclid(kk);
                    let j = e.rem_euclid(kk);
                    -copy * kk + j
                })
            };
            let torsion = out
                .torsion
                .iter()
                .map(|(&(copy, factor), &res)| ((-copy, factor), res))
                .collect();
            out = WreathElement {
                spec: self.spec.clone(),
                free,
                torsion,
                shift: -out.shift,
            };
        }
        self.inner.mul(&out)?.mul(&self.inner_inv)
    }

    /// Images of the generators `a_0, …, a_{k−1}, b`.
    pub fn generator_images(&self) -> GeneratorImages {
        let k = self.spec.free_rank;
        let a_images = (0..k)
            .map(|j| {
                let a = WreathElement::from_poly(
                    self.spec.clone(),
                    LaurentPoly::monomial(j as i64, 1),
                    0,
                )
                .expect("generator is valid");
                self.apply(&a).expect("same spec")
            })
            .collect();
        let b = WreathElement::identity(self.spec.clone());
        let b = WreathElement {
            shift: 1,
            ..b
        };
        GeneratorImages::new(a_images, self.apply(&b).expect("same spec"))
            .expect("generator images are consistent")
    }

    fn verify(&self) -> Result<(), WreathError> {
        let mut rng = StdRng::seed_from_u64(0x9e3779b97f4a7c15);
        for _ in 0..1000 {
            let g1 = random_element(&self.spec, &mut rng);
            let g2 = random_element(&self.spec, &mut rng);
            let lhs = self.apply(&g1.mul(&g2)?)?;
            let rhs = self.apply(&g1)?.mul(&self.apply(&g2)?)?;
            if lhs != rhs {
                return Err(WreathError::VerificationFailed(format!(
                    "homomorphism property fails at {g1} and {g2}"
                )));
            }
        }
        if !pi_matrix(&self.generator_images()).is_unimodular() {
            return Err(WreathError::VerificationFailed(
                "induced abelianization matrix is not unimodular".into(),
            ));
        }
        Ok(())
    }
}

/// Whether an automorphism maps every (shift-0) sample back into the base
/// subgroup. Samples with nonzero shift violate the precondition.
pub fn preserves_base(
    aut: &WreathAutomorphism,
    samples: &[WreathElement],
) -> Result<bool, WreathError> {
    for g in samples {
        if g.shift != 0 {
            return Err(WreathError::HypothesisViolated(format!(
                "sample {g} is not in the base subgroup (shift {})",
                g.shift
            )));
        }
    }
    for g in samples {
        if aut.apply(g)?.shift != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A random element with a small free support and random torsion residues,
/// for verification sampling.
pub fn random_element<R: Rng>(spec: &AbelianSpec, rng: &mut R) -> WreathElement {
    let k = spec.free_rank as i64;
    let mut free = LaurentPoly::zero();
    if k > 0 {
        let n_terms = rng.gen_range(0..=4);
        let terms = (0..n_terms).map(|_| {
            (
                rng.gen_range(-3 * k..=3 * k),
                rng.gen_range(-9i64..=9),
            )
        });
        free = LaurentPoly::from_terms(terms);
    }
    let mut torsion_entries = vec![];
    for (factor, &d) in spec.torsion.iter().enumerate() {
        for _ in 0..rng.gen_range(0..=2) {
            torsion_entries.push((rng.gen_range(-3i64..=3), factor, rng.gen_range(0..d)));
        }
    }
    let shift = rng.gen_range(-4i64..=4);
    WreathElement::new(spec.clone(), free, torsion_entries, shift).expect("valid random element")
}
