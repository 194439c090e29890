mod common;

use chaincore::{homology, verify_differential, BigInt, Element, Label, Ring};
use common::*;
use hopfalg::{reassoc_left, reassoc_right, tensor_map, FreeAlgebra, HopfAlgebra};
use pathloop::{path_loop, PathLoop};
use shcoalg::verify_diagonal;

fn unit_only(top: usize) -> Vec<usize> {
    let mut v = vec![0; top + 1];
    v[0] = 1;
    v
}

fn assert_acyclic(pl: &PathLoop, weight: Option<i64>, top: i64, name: &str) {
    let cx = pl.hopf.complex(weight).unwrap();
    assert!(verify_differential(&cx).ok(), "{name}");
    let h = homology(&cx);
    let expected = if weight.unwrap_or(0) == 0 {
        unit_only(top as usize)
    } else {
        vec![0; top as usize + 1]
    };
    assert_eq!(
        h.betti_numbers(top).unwrap(),
        expected,
        "{name} weight {weight:?}"
    );
    assert!(
        (0..=top).all(|n| h.torsion(n).unwrap().is_empty()),
        "{name}"
    );
}

#[test]
fn sphere_path_loop_letters() {
    let ring = Ring::Integers;
    let pl = path_loop(&sphere(3, ring, 8)).unwrap();
    let x = g("x3", 3);
    assert_eq!(pl.hopf.letters(2, None).unwrap(), vec![letter(&x)]);
    assert_eq!(pl.hopf.letters(1, None).unwrap(), vec![bar_letter(&x)]);
    // d̃x = −x̄ and d(s⁻¹c) = −s⁻¹(dc) give d(s⁻¹x) = s⁻¹x̄.
    assert_eq!(
        pl.hopf.letter_differential(&letter(&x)),
        Element::basis(ring, word(&[bar_letter(&x)]))
    );
    assert!(pl.hopf.letter_differential(&bar_letter(&x)).is_zero());
}

#[test]
fn path_loop_algebras_are_acyclic_hopf_algebras() {
    for ring in [Ring::Integers, Ring::PrimeField(2)] {
        for (name, a) in finite_corpus(ring, 8) {
            let pl = path_loop(&a).unwrap();
            assert_acyclic(&pl, None, 7, name);
            assert!(verify_diagonal(&pl.hopf).ok(), "{name}");
        }
        for (name, a) in weighted_corpus(ring, 8) {
            let pl = path_loop(&a).unwrap();
            for w in 0..=12 {
                assert_acyclic(&pl, Some(w), 7, name);
            }
            assert!(verify_diagonal(&pl.hopf).ok(), "{name}");
        }
    }
}

#[test]
fn coaction_is_coassociative_and_counital() {
    let ring = Ring::Integers;
    let mut cases: Vec<(&str, PathLoop, Option<i64>)> = finite_corpus(ring, 9)
        .into_iter()
        .map(|(n, a)| (n, path_loop(&a).unwrap(), None))
        .collect();
    for (name, a) in weighted_corpus(ring, 9) {
        for w in [2, 4, 5, 7, 8] {
            cases.push((name, path_loop(&a).unwrap(), Some(w)));
        }
    }
    for (name, pl, weight) in &cases {
        let id = |l: &Label| Element::basis(ring, l.clone());
        for n in 0..=8 {
            for w in pl.hopf.basis(n, *weight).unwrap() {
                let v = pl.coaction(&w);
                let lhs = reassoc_left(&tensor_map(&v, 0, 0, |l| pl.coaction(l), id));
                let rhs = reassoc_right(&tensor_map(&v, 0, 0, id, |l| pl.base.coproduct(l)));
                assert_eq!(lhs, rhs, "{name}: coaction on {w}");
                let counit: Element = v
                    .filter(|t| t.factors()[1].is_unit())
                    .map(0, |t| id(&t.factors()[0]));
                assert_eq!(counit, id(&w), "{name}: counit on {w}");
            }
        }
    }
}

#[test]
fn kappa_lemma() {
    let ring = Ring::Integers;
    let pl = path_loop(&sphere(3, ring, 8)).unwrap();
    let x = g("x3", 3);
    let k = pl.kappa(&word(&[letter(&x)]));
    assert_eq!(
        k,
        Element::term(ring, word(&[bar_letter(&x)]), BigInt::from(-1))
    );
    assert!(pl.kappa(&Label::Unit).is_zero());
    // κ(s⁻¹x·s⁻¹x) = −s⁻¹x̄·s⁻¹x − s⁻¹x·s⁻¹x̄ since |s⁻¹x| = 2.
    let mut expected = Element::zero(ring, 3);
    expected.add_term(word(&[bar_letter(&x), letter(&x)]), BigInt::from(-1));
    expected.add_term(word(&[letter(&x), bar_letter(&x)]), BigInt::from(-1));
    assert_eq!(pl.kappa(&word(&[letter(&x), letter(&x)])), expected);

    for ring in [Ring::Integers, Ring::PrimeField(3)] {
        for (name, a) in finite_corpus(ring, 8) {
            let pl = path_loop(&a).unwrap();
            let check = pl.verify_kappa(6, None).unwrap();
            assert!(check.ok(), "{name}: {check:?}");
        }
        for (name, a) in weighted_corpus(ring, 8) {
            let pl = path_loop(&a).unwrap();
            for w in 0..=14 {
                assert!(
                    pl.verify_kappa(6, Some(w)).unwrap().ok(),
                    "{name} weight {w}"
                );
            }
        }
    }
}
