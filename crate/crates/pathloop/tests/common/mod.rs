#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use chaincore::{BigInt, Element, Label, Ring};
use hopfalg::{sphere_model, tensor_coalgebra, DgCoalgebra};
use shcoalg::AwCoalgebra;

pub fn g(name: &str, d: i64) -> Label {
    Label::gen(name, d)
}

pub fn pair(a: Label, b: Label) -> Label {
    Label::tensor2(a, b)
}

pub fn word(letters: &[Label]) -> Label {
    Label::word(letters.to_vec())
}

pub fn letter(c: &Label) -> Label {
    Label::desusp(c.clone())
}

pub fn bar_letter(c: &Label) -> Label {
    Label::desusp(Label::bar(c.clone()))
}

pub fn sphere(n: i64, ring: Ring, cutoff: i64) -> AwCoalgebra {
    AwCoalgebra::formal(sphere_model(n, ring, cutoff).unwrap()).unwrap()
}

pub fn s2_s3(ring: Ring, cutoff: i64) -> AwCoalgebra {
    let c = tensor_coalgebra(
        &sphere_model(2, ring, cutoff).unwrap(),
        &sphere_model(3, ring, cutoff).unwrap(),
    )
    .unwrap();
    AwCoalgebra::formal(c).unwrap()
}

/// `a, b` of degree 4, `e` of degree 5 with `de = a − b`, `y` of degree 8
/// with `Δ̄y = a⊗b`, and `Ψ₂(y) = (1⊗e)⊗(b⊗1) − (1⊗b)⊗(e⊗1)`.
pub fn corpus_n(ring: Ring, cutoff: i64) -> AwCoalgebra {
    let (a, b, e, y) = (g("a", 4), g("b", 4), g("e", 5), g("y", 8));
    let mut de = Element::basis(ring, a.clone());
    de.add_term(b.clone(), BigInt::from(-1));
    let d = HashMap::from([(e.clone(), de)]);
    let delta = HashMap::from([(y.clone(), Element::basis(ring, pair(a.clone(), b.clone())))]);
    let c = DgCoalgebra::new(
        "N",
        ring,
        cutoff,
        vec![a, b.clone(), e.clone(), y.clone()],
        d,
        delta,
    )
    .unwrap();
    let mut v = Element::zero(ring, 9);
    v.add_term(
        Label::Tensor(vec![
            pair(Label::Unit, e.clone()),
            pair(b.clone(), Label::Unit),
        ]),
        BigInt::from(1),
    );
    v.add_term(
        Label::Tensor(vec![pair(Label::Unit, b), pair(e, Label::Unit)]),
        BigInt::from(-1),
    );
    AwCoalgebra::new(c, BTreeMap::from([(2, HashMap::from([(y, v)]))])).unwrap()
}

/// Corpus inputs whose path-loop algebras are of finite type.
pub fn finite_corpus(ring: Ring, cutoff: i64) -> Vec<(&'static str, AwCoalgebra)> {
    vec![
        ("S3", sphere(3, ring, cutoff)),
        ("S5", sphere(5, ring, cutoff)),
        ("N", corpus_n(ring, cutoff)),
    ]
}

/// Corpus inputs with a generator of degree 2, graded by weight.
pub fn weighted_corpus(ring: Ring, cutoff: i64) -> Vec<(&'static str, AwCoalgebra)> {
    vec![
        ("S2", sphere(2, ring, cutoff)),
        ("S2xS3", s2_s3(ring, cutoff)),
    ]
}

/// Monomial counts of a graded polynomial algebra through `top`.
pub fn polynomial_betti(gens: &[i64], top: i64) -> Vec<usize> {
    let mut counts = vec![0usize; top as usize + 1];
    counts[0] = 1;
    for &g in gens {
        for n in g..=top {
            counts[n as usize] += counts[(n - g) as usize];
        }
    }
    counts
}
