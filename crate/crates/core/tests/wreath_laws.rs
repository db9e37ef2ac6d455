//! Wreath-product laws on the constructive automorphism family and the
//! commutation identities on synthetic data.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tconj::laurent::LaurentPoly;
use tconj::sampling::{
    random_base_element, random_torsion_element, random_wreath_automorphism,
};
use tconj::wreath::{
    bottom_minor_relations, commutation_identity_holds, pi_matrix, preserves_base, random_element,
    AbelianSpec, GeneratorImages, WreathElement,
};

fn specs() -> Vec<AbelianSpec> {
    vec![
        AbelianSpec::free(1),
        AbelianSpec::free(2),
        AbelianSpec::new(2, vec![2, 3]).unwrap(),
    ]
}

#[test]
fn random_automorphisms_satisfy_the_characteristic_conclusions() {
    let mut rng = StdRng::seed_from_u64(200);
    for spec in specs() {
        for _ in 0..6 {
            let aut = random_wreath_automorphism(&mut rng, &spec);
            let images = aut.generator_images();
            for img in images.a_images() {
                assert_eq!(img.shift(), 0, "base-generator image left the base");
            }
            assert!(pi_matrix(&images).is_unimodular());
            let samples: Vec<WreathElement> =
                (0..100).map(|_| random_base_element(&mut rng, &spec)).collect();
            assert!(preserves_base(&aut, &samples).unwrap());
            let nmax = spec.torsion_exponent();
            for _ in 0..40 {
                let t = random_torsion_element(&mut rng, &spec);
                let img = aut.apply(&t).unwrap();
                assert_eq!(img.shift(), 0);
                assert!(img.free_part().is_zero(), "torsion image left the torsion part");
                assert!(img.pow(nmax).is_identity());
            }
        }
    }
}

#[test]
fn composed_automorphisms_are_homomorphisms() {
    let mut rng = StdRng::seed_from_u64(201);
    for spec in specs() {
        let aut = random_wreath_automorphism(&mut rng, &spec);
        for _ in 0..300 {
            let g1 = random_element(&spec, &mut rng);
            let g2 = random_element(&spec, &mut rng);
            assert_eq!(
                aut.apply(&g1.mul(&g2).unwrap()).unwrap(),
                aut.apply(&g1).unwrap().mul(&aut.apply(&g2).unwrap()).unwrap()
            );
        }
    }
}

/// Synthetic commuting families built from powers of one element satisfy
/// the bottom-minor relations of the abelianized matrix.
#[test]
fn minor_relations_on_power_families() {
    let mut rng = StdRng::seed_from_u64(202);
    for k in 1..=3usize {
        let spec = AbelianSpec::free(k);
        for _ in 0..20 {
            let n_terms = rng.gen_range(0..=3);
            let base_poly = LaurentPoly::from_terms(
                (0..n_terms).map(|_| (rng.gen_range(-4i64..=4), rng.gen_range(-5i64..=5))),
            );
            let shift = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
            let g = WreathElement::from_poly(spec.clone(), base_poly, shift).unwrap();
            let a_images: Vec<WreathElement> =
                (1..=k as i64).map(|e| g.pow(e)).collect();
            let b_image = g.pow(k as i64 + 1);
            let images = GeneratorImages::new(a_images, b_image).unwrap();
            assert!(bottom_minor_relations(&images).unwrap(), "g={g}");
        }
    }
}

/// The commutation identity of shifts-and-polynomials agrees with direct
/// commutation on random torsion-free pairs.
#[test]
fn commutation_identity_random() {
    let mut rng = StdRng::seed_from_u64(203);
    for k in 1..=2usize {
        let spec = AbelianSpec::free(k);
        let mut both = [0usize; 2];
        for _ in 0..2000 {
            let g1 = random_element(&spec, &mut rng);
            let g2 = random_element(&spec, &mut rng);
            let direct = g1.commutes_with(&g2).unwrap();
            assert_eq!(direct, commutation_identity_holds(&g1, &g2).unwrap());
            both[usize::from(direct)] += 1;
        }
        // sanity: the sample actually exercises both outcomes
        assert!(both[0] > 0 && both[1] > 0);
    }
}
