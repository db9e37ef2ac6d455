//! Deterministic random generators for property tests, verification runs
//! and diagnostics. Everything here is driven by a caller-supplied RNG so
//! that sampled checks are reproducible from a seed.

use num_integer::Integer;
use rand::Rng;

use crate::heisenberg::{heis, HeisenbergElement};
use crate::phase::RationalPhase;
use crate::reps::RepParams;
use crate::wreath::{random_element, AbelianSpec, WreathAutomorphism, WreathElement};

/// A uniform element of the component box `[-range, range]^3`.
pub fn random_heisenberg<R: Rng>(rng: &mut R, range: i64) -> HeisenbergElement {
    heis(
        rng.gen_range(-range..=range),
        rng.gen_range(-range..=range),
        rng.gen_range(-range..=range),
    )
}

/// A valid random representation parameter set with `1 ≤ p ≤ max_p` and
/// `ξ, α` of denominator at most `max_denominator`.
pub fn random_rep_params<R: Rng>(rng: &mut R, max_p: usize, max_denominator: i64) -> RepParams {
    let p = rng.gen_range(1..=max_p);
    let eta = if p == 1 {
        RationalPhase::zero()
    } else {
        let units: Vec<i64> = (1..p as i64)
            .filter(|u| u.gcd(&(p as i64)) == 1)
            .collect();
        RationalPhase::new(units[rng.gen_range(0..units.len())], p as i64)
    };
    let frac = |rng: &mut R| {
        let d = rng.gen_range(1..=max_denominator);
        RationalPhase::new(rng.gen_range(0..d), d)
    };
    let xi = frac(rng);
    let alpha = frac(rng);
    RepParams::new(xi, eta, alpha, p).expect("constructed parameters are valid")
}

/// Row representation of a random element of `GL_k(Z)`, built as a short
/// product of elementary row operations so the entries stay small.
pub fn random_unimodular_rows<R: Rng>(rng: &mut R, k: usize) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect();
    if k < 2 {
        if k == 1 && rng.gen_bool(0.5) {
            rows[0][0] = -1;
        }
        return rows;
    }
    for _ in 0..rng.gen_range(2..=6) {
        match rng.gen_range(0..3) {
            0 => {
                // add ±row j to row i
                let i = rng.gen_range(0..k);
                let mut j = rng.gen_range(0..k);
                while j == i {
                    j = rng.gen_range(0..k);
                }
                let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                let src = rows[j].clone();
                for (a, b) in rows[i].iter_mut().zip(src) {
                    *a += sign * b;
                }
            }
            1 => {
                let i = rng.gen_range(0..k);
                let mut j = rng.gen_range(0..k);
                while j == i {
                    j = rng.gen_range(0..k);
                }
                rows.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..k);
                for a in rows[i].iter_mut() {
                    *a = -*a;
                }
            }
        }
    }
    rows
}

/// A randomly composed checked automorphism of `A ≀ Z`: random unimodular
/// base matrix, random mirror bit, random inner conjugator and random unit
/// multipliers on the torsion factors.
pub fn random_wreath_automorphism<R: Rng>(rng: &mut R, spec: &AbelianSpec) -> WreathAutomorphism {
    let base = random_unimodular_rows(rng, spec.free_rank());
    let mirror = rng.gen_bool(0.5);
    let inner = random_element(spec, rng);
    let units: Vec<i64> = spec
        .torsion()
        .iter()
        .map(|&d| {
            let candidates: Vec<i64> = (1..d).filter(|u| u.gcd(&d) == 1).collect();
            candidates[rng.gen_range(0..candidates.len())]
        })
        .collect();
    WreathAutomorphism::new(spec.clone(), base, mirror, inner, units)
        .expect("randomly composed pieces form a valid automorphism")
}

/// A random element of the base subgroup (shift zero).
pub fn random_base_element<R: Rng>(rng: &mut R, spec: &AbelianSpec) -> WreathElement {
    let g = random_element(spec, rng);
    let free = g.free_part().clone();
    let torsion: Vec<(i64, usize, i64)> = g.torsion_part().map(|((c, f), r)| (c, f, r)).collect();
    WreathElement::new(spec.clone(), free, torsion, 0).expect("valid base element")
}

/// A random pure-torsion element (zero shift, zero free part).
pub fn random_torsion_element<R: Rng>(rng: &mut R, spec: &AbelianSpec) -> WreathElement {
    let g = random_element(spec, rng);
    let torsion: Vec<(i64, usize, i64)> = g.torsion_part().map(|((c, f), r)| (c, f, r)).collect();
    WreathElement::new(spec.clone(), crate::laurent::LaurentPoly::zero(), torsion, 0)
        .expect("valid torsion element")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn unimodular_samples_are_unimodular() {
        let mut rng = StdRng::seed_from_u64(1);
        for k in 1..=4 {
            for _ in 0..50 {
                let rows = random_unimodular_rows(&mut rng, k);
                assert!(IntMatrix::from_rows(&rows).is_unimodular());
            }
        }
    }

    #[test]
    fn rep_params_samples_are_valid() {
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..100 {
            let params = random_rep_params(&mut rng, 6, 24);
            assert!(params.p() >= 1 && params.p() <= 6);
            assert_eq!(params.eta().denom_u64(), params.p() as u64);
        }
    }

    #[test]
    fn base_and_torsion_samples() {
        let mut rng = StdRng::seed_from_u64(3);
        let spec = AbelianSpec::new(2, vec![2, 3]).unwrap();
        for _ in 0..50 {
            assert_eq!(random_base_element(&mut rng, &spec).shift(), 0);
            let t = random_torsion_element(&mut rng, &spec);
            assert_eq!(t.shift(), 0);
            assert!(t.free_part().is_zero());
        }
    }
}
