use std::collections::BTreeMap;

use chaincore::{sign, BigInt, Element, Error, Label, Result, Ring};
use hopfalg::{concat, Multiplication, Words};
use shcoalg::AwCoalgebra;

/// `s⁻¹c` and `s⁻¹c̄` for the generators `c` of a formal primitive input,
/// after checking the hypotheses of the bracket model.
pub(crate) fn alphabets(a: &AwCoalgebra) -> Result<(Vec<Label>, Vec<Label>)> {
    let ring = a.ring();
    if ring == Ring::Integers {
        return Err(Error::Invalid(
            "the bracket model needs a field of characteristic 2 or a ring in which 2 is a unit; use Q or F_p".into(),
        ));
    }
    let c = &a.coalgebra;
    if !(a.is_formal() && c.is_primitive() && c.has_zero_differential()) {
        return Err(Error::Invalid(format!(
            "{} is not formal with primitive generators; use the kernel-computed double-loop model",
            c.name
        )));
    }
    if let Some(g) = c.generators().iter().find(|g| g.degree() < 2) {
        return Err(Error::Invalid(format!("generator {g} has degree below 2")));
    }
    let v = c
        .generators()
        .iter()
        .map(|g| Label::desusp(g.clone()))
        .collect();
    let w = c
        .generators()
        .iter()
        .map(|g| Label::desusp(Label::bar(g.clone())))
        .collect();
    Ok((v, w))
}

/// The bracket words `[v₁,[v₂,[…[v_m, w]…]]]` of degree at most `cutoff`,
/// by degree, each list sorted.
pub fn bracket_basis(a: &AwCoalgebra, cutoff: i64) -> Result<BTreeMap<i64, Vec<Label>>> {
    let (v, w) = alphabets(a)?;
    let mut out: BTreeMap<i64, Vec<Label>> = (0..=cutoff).map(|n| (n, Vec::new())).collect();
    let mut frontier: Vec<(Vec<Label>, i64)> = vec![(Vec::new(), 0)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (inputs, deg) in frontier {
            for t in &w {
                let n = deg + t.degree();
                if n <= cutoff {
                    out.get_mut(&n)
                        .unwrap()
                        .push(Label::Bracket(inputs.clone(), Box::new(t.clone())));
                }
            }
            for x in &v {
                let n = deg + x.degree();
                if n + w.iter().map(Label::degree).min().unwrap_or(0) <= cutoff {
                    let mut more = inputs.clone();
                    more.push(x.clone());
                    next.push((more, n));
                }
            }
        }
        frontier = next;
    }
    for list in out.values_mut() {
        list.sort();
    }
    Ok(out)
}

/// `[a, b] = ab − (−1)^{|a||b|} ba` on words.
pub fn commutator(a: &Element, b: &Element) -> Element {
    let ring = a.ring();
    let mut out = Element::zero(ring, a.degree() + b.degree());
    for (x, kx) in a.iter() {
        for (y, ky) in b.iter() {
            let k = kx * ky;
            out.add_term(concat(x, y), k.clone());
            out.add_term(
                concat(y, x),
                -k * BigInt::from(sign(x.degree() * y.degree())),
            );
        }
    }
    out
}

/// A bracket generator as an element of the tensor algebra on its letters.
pub fn expand_bracket(ring: Ring, b: &Label) -> Element {
    match b {
        Label::Bracket(inputs, tail) => {
            let mut e = Element::basis(ring, Label::word(vec![tail.as_ref().clone()]));
            for x in inputs.iter().rev() {
                e = commutator(&Element::basis(ring, Label::word(vec![x.clone()])), &e);
            }
            e
        }
        other => panic!("{other} is not a bracket"),
    }
}

/// A word in bracket generators, expanded multiplicatively.
pub fn expand_word(ring: Ring, w: &Label) -> Element {
    let mut e = Element::unit(ring);
    for b in w.letters() {
        e = Words(ring).mul(&e, &expand_bracket(ring, b));
    }
    e
}
