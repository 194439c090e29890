mod common;

use chaincore::{homology, verify_differential, BigInt, Element, Label, Ring};
use common::*;
use hopfalg::{sphere_model, trivial_coalgebra, verify_coalgebra, Coalgebra};
use pathloop::{extend_psi, path_object};
use shcoalg::{classify, verify_sh_family};

#[test]
fn sphere_path_object_differential() {
    let ring = Ring::Integers;
    let p = path_object(&sphere_model(3, ring, 8).unwrap()).unwrap();
    let x = g("x3", 3);
    assert_eq!(
        p.differential(&x),
        Element::term(ring, Label::bar(x.clone()), BigInt::from(-1))
    );
    assert!(p.differential(&Label::bar(x.clone())).is_zero());
    let mut expected = Element::basis(ring, pair(Label::bar(x.clone()), Label::Unit));
    expected.add_term(pair(Label::Unit, Label::bar(x.clone())), BigInt::from(1));
    assert_eq!(p.coproduct(&Label::bar(x)), expected);
    assert!(path_object(&trivial_coalgebra(ring, 8))
        .unwrap()
        .generators()
        .is_empty());
}

#[test]
fn path_objects_are_acyclic_coalgebras() {
    for ring in [Ring::Integers, Ring::PrimeField(2)] {
        let mut inputs = finite_corpus(ring, 10);
        inputs.extend(weighted_corpus(ring, 10));
        for (name, a) in inputs {
            let p = path_object(&a.coalgebra).unwrap();
            assert!(verify_coalgebra(&p, None).unwrap().ok(), "{name}");
            let cx = p.complex().unwrap();
            assert!(verify_differential(&cx).ok());
            let mut oracle = vec![0; 9];
            oracle[0] = 1;
            assert_eq!(homology(&cx).betti_numbers(8).unwrap(), oracle, "{name}");
            assert!((0..9).all(|n| homology(&cx).torsion(n).unwrap().is_empty()));
        }
    }
}

#[test]
fn extended_structure_is_coherent_and_restricts() {
    let ring = Ring::Integers;
    let mut inputs = finite_corpus(ring, 12);
    inputs.extend(weighted_corpus(ring, 12));
    for (name, a) in inputs {
        let e = extend_psi(&a).unwrap();
        let check = verify_sh_family(&e.psi);
        assert!(check.ok(), "{name}: {:?}", check.failing_generators());
        for c in a.coalgebra.generators() {
            for k in 1..=3 {
                assert_eq!(
                    e.psi.theta(k, c),
                    a.psi.theta(k, c),
                    "{name}: level {k} on {c}"
                );
            }
        }
        assert!(classify(&e).is_strict(), "{name}");
    }
}

#[test]
fn extended_structure_on_the_corpus_coalgebra() {
    let ring = Ring::Integers;
    let e = extend_psi(&corpus_n(ring, 12)).unwrap();
    let (b, eg, y) = (g("b", 4), g("e", 5), g("y", 8));
    let bar = |l: &Label| Label::bar(l.clone());
    let t = |p: Label, q: Label| Label::Tensor(vec![p, q]);
    // −D(σ) on (1⊗e)⊗(b⊗1) − (1⊗b)⊗(e⊗1); σ lands in positions 2 and 3
    // with the signs (+1, −1) and (+1, +1) from the preceding degrees.
    let mut expected = Element::zero(ring, 8);
    expected.add_term(
        t(pair(Label::Unit, bar(&eg)), pair(b.clone(), Label::Unit)),
        BigInt::from(-1),
    );
    expected.add_term(
        t(pair(Label::Unit, eg.clone()), pair(bar(&b), Label::Unit)),
        BigInt::from(1),
    );
    expected.add_term(
        t(pair(Label::Unit, bar(&b)), pair(eg.clone(), Label::Unit)),
        BigInt::from(1),
    );
    expected.add_term(
        t(pair(Label::Unit, b.clone()), pair(bar(&eg), Label::Unit)),
        BigInt::from(1),
    );
    assert_eq!(e.psi.theta(2, &bar(&y)), expected);
}
