//! Representation-level laws across randomly sampled parameters.

use rand::rngs::StdRng;
use rand::SeedableRng;

use tconj::heisenberg::ball;
use tconj::reps::{
    character, character_of_precomposition, commutant_dimension, fixed_rep_search, is_fixed_rep,
    rep_apply,
};
use tconj::sampling::random_rep_params;
use tconj::twisted::{Automorphism, Phi2Special};

#[test]
fn homomorphism_for_sampled_params() {
    let mut rng = StdRng::seed_from_u64(101);
    let b = ball(2);
    for _ in 0..8 {
        let params = random_rep_params(&mut rng, 6, 24);
        let ops: Vec<_> = b.iter().map(|&h| rep_apply(&params, h)).collect();
        for (i, &h1) in b.iter().enumerate() {
            for (j, &h2) in b.iter().enumerate() {
                let lhs = rep_apply(&params, h1.mul(h2));
                let rhs = ops[i].compose(&ops[j]);
                assert_eq!(lhs, rhs, "params={params:?} h1={h1} h2={h2}");
            }
        }
    }
}

/// The full spec count of random pairs, over a wider component range than
/// the ball-pair check.
#[test]
fn homomorphism_ten_thousand_random_pairs() {
    let mut rng = StdRng::seed_from_u64(105);
    use rand::Rng;
    use tconj::heisenberg::heis;
    let params: Vec<_> = (0..4).map(|_| random_rep_params(&mut rng, 6, 24)).collect();
    for i in 0..10_000 {
        let p = &params[i % params.len()];
        let sample = |rng: &mut StdRng| {
            heis(
                rng.gen_range(-20..=20),
                rng.gen_range(-20..=20),
                rng.gen_range(-20..=20),
            )
        };
        let h1 = sample(&mut rng);
        let h2 = sample(&mut rng);
        assert_eq!(
            rep_apply(p, h1.mul(h2)),
            rep_apply(p, h1).compose(&rep_apply(p, h2)),
            "params={p:?} h1={h1} h2={h2}"
        );
    }
}

#[test]
fn characters_match_traces_for_sampled_params() {
    let mut rng = StdRng::seed_from_u64(102);
    for _ in 0..10 {
        let params = random_rep_params(&mut rng, 6, 24);
        for h in ball(5) {
            assert_eq!(
                character(&params, h),
                rep_apply(&params, h).trace(),
                "params={params:?} h={h}"
            );
        }
    }
}

#[test]
fn precomposition_closed_form_matches_trace() {
    let mut rng = StdRng::seed_from_u64(103);
    let phi = Phi2Special;
    for _ in 0..10 {
        let params = random_rep_params(&mut rng, 6, 24);
        for h in ball(4) {
            assert_eq!(
                character_of_precomposition(&params, &phi, h),
                rep_apply(&params, phi.apply(h)).trace(),
                "params={params:?} h={h}"
            );
        }
    }
}

/// Representations found fixed by the search stay fixed on a larger ball
/// than the one the search used.
#[test]
fn search_results_fixed_on_larger_ball() {
    let phi = Phi2Special;
    for p in 1..=2 {
        for params in fixed_rep_search(&phi, p, 4).unwrap() {
            assert!(is_fixed_rep(&params, &phi, 8), "params={params:?}");
            for h in ball(8) {
                assert_eq!(
                    character(&params, h),
                    character_of_precomposition(&params, &phi, h)
                );
            }
        }
    }
}

#[test]
fn sampled_params_are_irreducible() {
    let mut rng = StdRng::seed_from_u64(104);
    for _ in 0..10 {
        let params = random_rep_params(&mut rng, 6, 24);
        assert_eq!(commutant_dimension(&params), 1, "params={params:?}");
    }
}
