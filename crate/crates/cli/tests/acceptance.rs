//! Acceptance suite: one test per shipped claim, each printing a PASS line
//! (visible with `cargo test -- --nocapture`). Everything runs offline from
//! `cargo test --workspace` with fixed seeds and fixed tolerances.

use std::collections::{BTreeMap, HashMap};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tconj::heisenberg::{ball, heis, HeisenbergElement};
use tconj::laurent::LaurentPoly;
use tconj::phase::RationalPhase;
use tconj::reps::{
    character, commutant_dimension, is_fixed_rep, rep_apply, MonomialOperator, RepParams,
};
use tconj::sampling::{
    random_base_element, random_rep_params, random_torsion_element, random_wreath_automorphism,
};
use tconj::twisted::{heisenberg_interface, Phi2Special, PhiN, Q0Sign, TwistedClassLabel};
use tconj::wreath::{
    abelianize, bottom_minor_relations, commutation_identity_holds, commutator_closed_form, eps,
    in_commutant, pi_matrix, preserves_base, random_element, AbelianSpec, GeneratorImages,
    WreathElement,
};

fn pass(criterion: u32, detail: &str) {
    println!("criterion {criterion}: PASS - {detail}");
}

fn tconj_json(args: &[&str]) -> serde_json::Value {
    let out = Command::new(env!("CARGO_BIN_EXE_tconj"))
        .arg("--json")
        .args(args)
        .output()
        .expect("binary should run");
    assert!(
        out.status.success(),
        "`tconj {}` failed: {}",
        args.join(" "),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON envelope")
}

/// Twenty deterministic valid parameter sets with p <= 6, shared by the
/// representation criteria.
fn sampled_params() -> Vec<RepParams> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    (0..20).map(|_| random_rep_params(&mut rng, 6, 24)).collect()
}

/// Criterion 1: the family automorphism realizes R = 2N for N in 1..=5 via
/// the CLI, and the brute-force oracle partition of the same ball agrees
/// blockwise with the closed-form labels.
#[test]
fn criterion_01_reidemeister_family() {
    let conjugators = ball(8);
    for n in 1..=5i64 {
        let radius = 2 * n + 2;
        let started = Instant::now();
        let envelope = tconj_json(&[
            "twisted",
            "reidemeister",
            "--N",
            &n.to_string(),
            "--radius",
            &radius.to_string(),
        ]);
        let elapsed = started.elapsed();
        assert_eq!(
            envelope["result"]["reidemeister"],
            serde_json::json!(2 * n),
            "N={n}"
        );
        assert!(
            elapsed < Duration::from_secs(30),
            "N={n} run took {elapsed:?}"
        );

        let phi = PhiN::new(n).unwrap();
        let b = ball(radius);
        let partition = heisenberg_interface(phi).partition_ball(&b, &conjugators);
        let mut by_label: BTreeMap<TwistedClassLabel, Vec<HeisenbergElement>> = BTreeMap::new();
        for &h in &b {
            by_label.entry(phi.class_label(h)).or_default().push(h);
        }
        assert_eq!(partition.class_count(), by_label.len(), "N={n}");
        for members in by_label.values() {
            for pair in members.windows(2) {
                assert_eq!(
                    partition.same_block(&pair[0], &pair[1]),
                    Some(true),
                    "N={n}: label block split by the oracle"
                );
            }
        }
    }
    pass(1, "R(phi_N) = 2N for N in 1..=5; oracle partition blockwise identical");
}

/// Criterion 2: the special automorphism partitions the radius-6 ball into
/// exactly two twisted classes.
#[test]
fn criterion_02_special_automorphism_two_classes() {
    let started = Instant::now();
    let partition = heisenberg_interface(Phi2Special).partition_ball(&ball(6), &ball(8));
    let elapsed = started.elapsed();
    assert_eq!(partition.class_count(), 2);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(2, &format!("radius-6 ball splits into 2 blocks in {elapsed:.2?}"));
}

/// Criterion 3: exactly one sign reading of the quadratic correction makes
/// the family a homomorphism; the other fails within 100 random pairs.
#[test]
fn criterion_03_sign_pinning() {
    for n in 1..=5i64 {
        let phi = PhiN::new(n).unwrap();
        let mut rng = StdRng::seed_from_u64(0x5eed_0003 + n as u64);
        let mut plus_failure: Option<usize> = None;
        for i in 0..10_000 {
            let g = heis(
                rng.gen_range(-50..=50),
                rng.gen_range(-50..=50),
                rng.gen_range(-50..=50),
            );
            let h = heis(
                rng.gen_range(-50..=50),
                rng.gen_range(-50..=50),
                rng.gen_range(-50..=50),
            );
            let prod = g.mul(h);
            assert_eq!(
                phi.apply_with_sign(Q0Sign::Minus, prod),
                phi.apply_with_sign(Q0Sign::Minus, g)
                    .mul(phi.apply_with_sign(Q0Sign::Minus, h)),
                "resolved sign must be a homomorphism (N={n}, pair {i})"
            );
            if plus_failure.is_none()
                && phi.apply_with_sign(Q0Sign::Plus, prod)
                    != phi
                        .apply_with_sign(Q0Sign::Plus, g)
                        .mul(phi.apply_with_sign(Q0Sign::Plus, h))
            {
                plus_failure = Some(i);
            }
        }
        let failed_at = plus_failure.expect("opposite sign should fail");
        assert!(
            failed_at < 100,
            "N={n}: opposite sign survived {failed_at} pairs"
        );
    }
    pass(3, "minus sign passes 10^4 pairs; plus sign fails within 100, for N in 1..=5");
}

/// Criterion 4: the operator map is an exact homomorphism for 20 sampled
/// parameter sets, over every element pair of the radius-3 ball.
#[test]
fn criterion_04_operator_homomorphism() {
    let started = Instant::now();
    let b = ball(3);
    for params in sampled_params() {
        let ops: Vec<MonomialOperator> = b.iter().map(|&h| rep_apply(&params, h)).collect();
        let mut product_ops: HashMap<HeisenbergElement, MonomialOperator> = HashMap::new();
        for (i, &h1) in b.iter().enumerate() {
            for (j, &h2) in b.iter().enumerate() {
                let prod = h1.mul(h2);
                let lhs = product_ops
                    .entry(prod)
                    .or_insert_with(|| rep_apply(&params, prod));
                let rhs = ops[i].compose(&ops[j]);
                assert_eq!(*lhs, rhs, "params={params:?} h1={h1} h2={h2}");
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(4, &format!("exact homomorphism on 20 params x 343^2 pairs in {elapsed:.2?}"));
}

/// Criterion 5: the closed-form character equals the exact operator trace
/// on the radius-8 ball for every sampled parameter set.
#[test]
fn criterion_05_character_formula() {
    let b = ball(8);
    for params in sampled_params() {
        for &h in &b {
            assert_eq!(
                character(&params, h),
                rep_apply(&params, h).trace(),
                "params={params:?} h={h}"
            );
        }
    }
    pass(5, "closed form equals trace on |m|,|k|,|s| <= 8 for 20 sampled params");
}

/// Criterion 6: the fixed-representation search finds the distinguished
/// two-dimensional representation; membership answers are exact.
#[test]
fn criterion_06_fixed_representations() {
    let envelope = tconj_json(&["rep", "fixed-search", "--p", "2", "--max-den", "4"]);
    let found = envelope["result"]["found"].as_array().unwrap();
    let expected = serde_json::json!({ "xi": "1/4", "eta": "1/2", "alpha": "1/2", "p": 2 });
    assert!(
        found.contains(&expected),
        "search result {found:?} lacks {expected}"
    );

    let phi = Phi2Special;
    assert!(is_fixed_rep(&RepParams::trivial(), &phi, 6));
    let rejected = RepParams::new(
        RationalPhase::zero(),
        RationalPhase::new(1, 2),
        RationalPhase::zero(),
        2,
    )
    .unwrap();
    assert!(!is_fixed_rep(&rejected, &phi, 6));
    pass(6, "search at p=2, max-den 4 contains (1/4, 1/2, 1/2); trivial fixed; (0, 1/2, 0) not");
}

/// Criterion 7: every sampled representation is irreducible: commutant
/// dimension 1 at the 1e-9 relative singular-value threshold.
#[test]
fn criterion_07_irreducibility() {
    for params in sampled_params() {
        assert_eq!(commutant_dimension(&params), 1, "params={params:?}");
    }
    pass(7, "commutant dimension 1 for all 20 sampled params (p <= 6)");
}

/// Criterion 8: the abelianization is a homomorphism with kernel exactly
/// the derived subgroup, and the worked example projects to (8, 6).
#[test]
fn criterion_08_abelianization() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let specs = [AbelianSpec::free(1), AbelianSpec::free(2), AbelianSpec::free(3)];
    for i in 0..10_000 {
        let spec = &specs[i % specs.len()];
        let g1 = random_element(spec, &mut rng);
        let g2 = random_element(spec, &mut rng);
        let expected: Vec<i64> = abelianize(&g1)
            .unwrap()
            .iter()
            .zip(abelianize(&g2).unwrap())
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(abelianize(&g1.mul(&g2).unwrap()).unwrap(), expected);
    }
    for i in 0..1000 {
        let spec = &specs[i % specs.len()];
        let g = random_element(spec, &mut rng);
        let in_kernel = abelianize(&g).unwrap().iter().all(|&v| v == 0);
        assert_eq!(in_commutant(&g).unwrap(), in_kernel);
    }
    for i in 0..1000 {
        let spec = &specs[i % specs.len()];
        let product = random_element(spec, &mut rng)
            .commutator(&random_element(spec, &mut rng))
            .unwrap()
            .mul(
                &random_element(spec, &mut rng)
                    .commutator(&random_element(spec, &mut rng))
                    .unwrap(),
            )
            .unwrap();
        assert!(in_commutant(&product).unwrap());
        assert!(abelianize(&product).unwrap().iter().all(|&v| v == 0));
    }
    let example = LaurentPoly::from_terms([(-2, 3), (-1, -1), (0, 5), (1, 7)]);
    assert_eq!(eps(2, 0, &example), 8);
    assert_eq!(eps(2, 1, &example), 6);
    pass(8, "homomorphism on 10^4 pairs; kernel = derived subgroup both ways; example gives (8, 6)");
}

/// Criterion 9: closed-form commutators, the commutation identity, and the
/// bottom-minor relations on synthetic commuting families.
#[test]
fn criterion_09_commutation_identities() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    let specs = [AbelianSpec::free(1), AbelianSpec::free(2), AbelianSpec::free(3)];
    for i in 0..10_000 {
        let spec = &specs[i % specs.len()];
        let g1 = random_element(spec, &mut rng);
        let g2 = random_element(spec, &mut rng);
        assert_eq!(
            g1.commutator(&g2).unwrap(),
            commutator_closed_form(&g1, &g2).unwrap()
        );
    }

    // exhaustive: k=1 monomials of degree <= 2, shifts in [-2, 2]
    let spec = AbelianSpec::free(1);
    let mut elems = vec![];
    for exp in -2..=2i64 {
        for coeff in -2..=2i64 {
            for shift in -2..=2i64 {
                elems.push(
                    WreathElement::from_poly(spec.clone(), LaurentPoly::monomial(exp, coeff), shift)
                        .unwrap(),
                );
            }
        }
    }
    let mut commuting = 0usize;
    for g1 in &elems {
        for g2 in &elems {
            let direct = g1.commutes_with(g2).unwrap();
            assert_eq!(direct, commutation_identity_holds(g1, g2).unwrap());
            commuting += usize::from(direct);
        }
    }
    assert!(commuting > 0 && commuting < elems.len() * elems.len());

    // bottom-minor relations on powers of a common element
    for k in 1..=3usize {
        let spec = AbelianSpec::free(k);
        for _ in 0..10 {
            let poly = LaurentPoly::from_terms(
                (0..rng.gen_range(0..=3)).map(|_| (rng.gen_range(-4i64..=4), rng.gen_range(-5i64..=5))),
            );
            let shift = [1i64, 2, -1, -2][rng.gen_range(0..4)];
            let g = WreathElement::from_poly(spec.clone(), poly, shift).unwrap();
            let images = GeneratorImages::new(
                (1..=k as i64).map(|e| g.pow(e)).collect(),
                g.pow(k as i64 + 1),
            )
            .unwrap();
            assert!(bottom_minor_relations(&images).unwrap());
        }
    }
    pass(9, "closed form = direct on 10^4 pairs; identity <=> commuting exhaustively; minors on power families");
}

/// Criterion 10: fifty randomly composed automorphisms keep every
/// characteristic-subgroup conclusion: generator shifts vanish, the induced
/// abelianization matrix is unimodular, the base and torsion subgroups are
/// preserved, and torsion images die under the torsion exponent.
#[test]
fn criterion_10_automorphism_family() {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let specs = [
        AbelianSpec::free(1),
        AbelianSpec::free(2),
        AbelianSpec::new(2, vec![2, 3]).unwrap(),
    ];
    let mut built = 0usize;
    for spec in specs.iter().cycle().take(51) {
        let aut = random_wreath_automorphism(&mut rng, spec);
        built += 1;
        let images = aut.generator_images();
        for img in images.a_images() {
            assert_eq!(img.shift(), 0, "spec={spec:?}");
        }
        assert!(pi_matrix(&images).is_unimodular(), "spec={spec:?}");
        let samples: Vec<WreathElement> = (0..1000)
            .map(|_| random_base_element(&mut rng, spec))
            .collect();
        assert!(preserves_base(&aut, &samples).unwrap(), "spec={spec:?}");
        let nmax = spec.torsion_exponent();
        for _ in 0..50 {
            let t = random_torsion_element(&mut rng, spec);
            let img = aut.apply(&t).unwrap();
            assert_eq!(img.shift(), 0);
            assert!(img.free_part().is_zero());
            assert!(img.pow(nmax).is_identity());
        }
    }
    let elapsed = started.elapsed();
    assert!(built >= 50);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        10,
        &format!("{built} random automorphisms keep all conclusions in {elapsed:.2?}"),
    );
}

/// Criterion 11: the whole suite is one offline test command. This test
/// demonstrates that the binary needs no environment or network: it runs
/// with a fully cleared environment.
#[test]
fn criterion_11_self_contained() {
    let out = Command::new(env!("CARGO_BIN_EXE_tconj"))
        .env_clear()
        .args(["heis", "mul", "((1,2),3)", "((4,5),6)"])
        .output()
        .expect("binary should run without any environment");
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "((5,19),9)");
    pass(
        11,
        "suite = `cargo test --workspace`, offline, no environment variables required",
    );
}
