use chaincore::{sign, BigInt, Element, Error, Label, Result, Ring};
use hopfalg::{Coalgebra, FreeAlgebra};

/// The cobar construction `ΩC = (T s⁻¹C₊, d_Ω)` with
/// `d_Ω(s⁻¹c) = −s⁻¹(dc) + Σ (−1)^{|c_i|} s⁻¹c_i·s⁻¹c^i` for `Δ̄c = Σ c_i⊗c^i`.
///
/// Letters are `Desusp(c)` for positive basis labels `c`.
#[derive(Clone, Debug)]
pub struct Cobar<C> {
    pub coalgebra: C,
}

/// Cobar construction of a simply connected coalgebra.
pub fn cobar<C: Coalgebra>(c: C) -> Result<Cobar<C>> {
    match c.positive_basis(1, None) {
        Ok(b) if b.is_empty() => Ok(Cobar { coalgebra: c }),
        Ok(b) => Err(Error::Invalid(format!(
            "coalgebra is not simply connected: degree 1 contains {}",
            b[0]
        ))),
        Err(Error::NotFiniteType(_)) => {
            Err(Error::Invalid("coalgebra is not simply connected".into()))
        }
        Err(e) => Err(e),
    }
}

/// Extended cobar construction: the same formula without the simple
/// connectivity requirement. Degree-0 letters then force weight-graded
/// enumeration.
pub fn extended_cobar<C: Coalgebra>(c: C) -> Cobar<C> {
    Cobar { coalgebra: c }
}

/// `s⁻¹` on a coalgebra element, as single-letter words. `s⁻¹1 = 0`.
pub fn desusp(e: &Element) -> Element {
    let ring = e.ring();
    let mut out = Element::zero(ring, e.degree() - 1);
    for (l, c) in e.iter() {
        if !l.is_unit() {
            out.add_term(Label::word(vec![Label::desusp(l.clone())]), c.clone());
        }
    }
    out
}

/// The label `c` under a letter `s⁻¹c`.
pub fn undesusp(letter: &Label) -> &Label {
    match letter {
        Label::Desusp(c) => c,
        other => panic!("{other} is not a cobar letter"),
    }
}

/// `Σ k·s⁻¹a⊗s⁻¹b ↦ Σ k·(−1)^{|a|} s⁻¹a·s⁻¹b` on a reduced coproduct.
pub fn quadratic_part(ring: Ring, reduced: &Element) -> Element {
    let mut out = Element::zero(ring, reduced.degree() - 2);
    for (t, k) in reduced.iter() {
        let f = t.factors();
        let (a, b) = (&f[0], &f[1]);
        let w = Label::word(vec![Label::desusp(a.clone()), Label::desusp(b.clone())]);
        out.add_term(w, k * BigInt::from(sign(a.degree())));
    }
    out
}

impl<C: Coalgebra> FreeAlgebra for Cobar<C> {
    fn ring(&self) -> Ring {
        self.coalgebra.ring()
    }

    fn cutoff(&self) -> i64 {
        self.coalgebra.cutoff()
    }

    fn letters(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        Ok(self
            .coalgebra
            .positive_basis(degree + 1, weight)?
            .into_iter()
            .map(Label::desusp)
            .collect())
    }

    fn letter_differential(&self, letter: &Label) -> Element {
        let c = undesusp(letter);
        let ring = self.ring();
        let mut out = desusp(&self.coalgebra.differential(c)).neg();
        out.add_assign(&quadratic_part(ring, &self.coalgebra.reduced_coproduct(c)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfalg::{sphere_model, DgCoalgebra};
    use std::collections::HashMap;

    #[test]
    fn sign_of_quadratic_term() {
        let r = Ring::Integers;
        let a = Label::gen("a", 2);
        let b = Label::gen("b", 3);
        let y = Label::gen("y", 5);
        let mut delta = HashMap::new();
        delta.insert(
            y.clone(),
            Element::basis(r, Label::tensor2(a.clone(), b.clone())),
        );
        let c = DgCoalgebra::new(
            "N",
            r,
            8,
            vec![a.clone(), b.clone(), y.clone()],
            HashMap::new(),
            delta,
        )
        .unwrap();
        let om = cobar(&c).unwrap();
        let d = om.letter_differential(&Label::desusp(y));
        let expected = Element::basis(r, Label::word(vec![Label::desusp(a), Label::desusp(b)]));
        assert_eq!(d, expected);
    }

    #[test]
    fn degree_one_rejected() {
        let r = Ring::Integers;
        let c = DgCoalgebra::new(
            "T",
            r,
            4,
            vec![Label::gen("t", 1)],
            HashMap::new(),
            HashMap::new(),
        )
        .unwrap();
        assert!(cobar(&c).is_err());
        assert!(cobar(sphere_model(2, r, 4).unwrap()).is_ok());
    }
}
