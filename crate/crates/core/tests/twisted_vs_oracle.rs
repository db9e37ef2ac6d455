//! Cross-checks of the closed-form twisted-class labels against the
//! brute-force oracle partition.

use std::collections::BTreeMap;

use tconj::heisenberg::{ball, heis, HeisenbergElement};
use tconj::twisted::{heisenberg_interface, Automorphism, Phi2Special, PhiN, TwistedClassLabel};

/// Oracle partition of a ball must coincide blockwise with the label
/// partition once the conjugator radius is generous enough.
#[test]
fn oracle_partition_equals_labels_small_ball() {
    for n in 1..=5 {
        let phi = PhiN::new(n).unwrap();
        let iface = heisenberg_interface(phi);
        let b = ball(4);
        let partition = iface.partition_ball(&b, &ball(10));

        let mut by_label: BTreeMap<TwistedClassLabel, Vec<HeisenbergElement>> = BTreeMap::new();
        for &h in &b {
            by_label.entry(phi.class_label(h)).or_default().push(h);
        }
        assert_eq!(partition.class_count(), by_label.len(), "N={n}");
        assert_eq!(partition.class_count(), 2 * n as usize, "N={n}");
        for members in by_label.values() {
            let first = &members[0];
            for other in members {
                assert_eq!(
                    partition.same_block(first, other),
                    Some(true),
                    "N={n}: {first} and {other} share a label but not a block"
                );
            }
        }
    }
}

/// The oracle partition can only refine the label partition: elements in
/// one block always carry one label.
#[test]
fn oracle_partition_refines_labels() {
    for n in [2, 4] {
        let phi = PhiN::new(n).unwrap();
        let iface = heisenberg_interface(phi);
        let b = ball(3);
        let partition = iface.partition_ball(&b, &ball(5));
        for block in partition.blocks() {
            let label = phi.class_label(block[0]);
            for &h in block {
                assert_eq!(phi.class_label(h), label);
            }
        }
    }
}

#[test]
fn one_sided_examples_for_n1() {
    let phi = PhiN::new(1).unwrap();
    let iface = heisenberg_interface(phi);
    let conjugators = ball(6);
    let e = HeisenbergElement::IDENTITY;
    assert!(iface.are_twisted_conjugate(&e, &e, &conjugators));
    // the two classes of the N=1 family never link
    assert!(!iface.are_twisted_conjugate(&e, &heis(0, 1, 0), &conjugators));
    // but parity-equal elements do
    assert!(iface.are_twisted_conjugate(&e, &heis(0, 2, 0), &conjugators));
    assert_ne!(phi.class_label(e), phi.class_label(heis(0, 1, 0)));
    assert_eq!(phi.class_label(e), phi.class_label(heis(0, 2, 0)));
}

#[test]
fn twisted_conjugate_preserves_m_residue() {
    let phi = PhiN::new(3).unwrap();
    let iface = heisenberg_interface(phi);
    for h in ball(3) {
        for g in ball(3) {
            let x = iface.twisted_conjugate(&g, &h);
            assert_eq!(x.m.rem_euclid(3), h.m.rem_euclid(3));
        }
    }
}

/// Blocks are closed under single twisted conjugations that stay inside
/// the ball, in particular by the six generator letters.
#[test]
fn blocks_closed_under_generator_conjugation() {
    let phi = PhiN::new(2).unwrap();
    let iface = heisenberg_interface(phi);
    let b = ball(3);
    let partition = iface.partition_ball(&b, &ball(4));
    let letters = [
        HeisenbergElement::A,
        HeisenbergElement::A.inv(),
        HeisenbergElement::B,
        HeisenbergElement::B.inv(),
        HeisenbergElement::C,
        HeisenbergElement::C.inv(),
    ];
    for h in &b {
        for g in letters {
            let x = iface.twisted_conjugate(&g, h);
            if b.contains(&x) {
                assert_eq!(partition.same_block(h, &x), Some(true), "h={h} g={g}");
            }
        }
    }
}

/// The special automorphism partitions a small ball into exactly two
/// blocks (the full radius-6 run lives in the acceptance suite).
#[test]
fn phi2_special_small_ball_two_blocks() {
    let iface = heisenberg_interface(Phi2Special);
    let partition = iface.partition_ball(&ball(4), &ball(8));
    assert_eq!(partition.class_count(), 2);
}

/// Applying any single twisted conjugation never escapes the label class,
/// with the automorphism accessed through the oracle interface.
#[test]
fn interface_and_direct_application_agree() {
    let phi = PhiN::new(2).unwrap();
    let iface = heisenberg_interface(phi);
    for h in ball(2) {
        assert_eq!(iface.phi(&h), phi.apply(h));
        for g in ball(2) {
            let x = iface.twisted_conjugate(&g, &h);
            let direct = g.mul(h).mul(phi.apply(g.inv()));
            assert_eq!(x, direct);
        }
    }
}
