use chaincore::{sign, BigInt, ChainComplex, Element, Error, GradedBasis, Label, Result, Ring};
use hopfalg::{concat, split2, verify_coaction, Coalgebra, Comodule, FreeAlgebra, Side};

use crate::cobar::{extended_cobar, Cobar};

/// One-sided cobar construction `M ⊗_{tΩ} ΩC` (right comodule) or
/// `ΩC ⊗_{tΩ} M` (left comodule).
///
/// Right: `D(x⊗w) = dx⊗w + (−1)^{|x|} x⊗d_Ω w − Σ (−1)^{|x_i|} x_i⊗s⁻¹c^i·w`
/// for `ν(x) − x⊗1 = Σ x_i⊗c^i`.
///
/// Left: `D(w⊗x) = d_Ω w⊗x + (−1)^{|w|} w·(1⊗dx + Σ s⁻¹c_j⊗x_j)` for
/// `ν(x) − 1⊗x = Σ c_j⊗x_j`.
pub struct TwistedTensor<M, C> {
    pub module: M,
    pub cobar: Cobar<C>,
    pub side: Side,
}

/// Builds the one-sided cobar construction after checking that the
/// coaction is coassociative through the cutoff.
pub fn one_sided_cobar<M: Comodule, C: Coalgebra>(
    module: M,
    coalgebra: C,
    weight: Option<i64>,
) -> Result<TwistedTensor<M, C>> {
    let bad = verify_coaction(
        &module,
        &coalgebra,
        module.cutoff().min(coalgebra.cutoff()),
        weight,
    )?;
    if let Some((x, r)) = bad.first() {
        return Err(Error::Invalid(format!(
            "coaction is not coassociative at {x}: residue {r}"
        )));
    }
    Ok(unchecked_one_sided(module, coalgebra))
}

/// Builds the one-sided cobar construction without checking the coaction.
pub fn unchecked_one_sided<M: Comodule, C: Coalgebra>(
    module: M,
    coalgebra: C,
) -> TwistedTensor<M, C> {
    let side = module.side();
    TwistedTensor {
        module,
        cobar: extended_cobar(coalgebra),
        side,
    }
}

impl<M: Comodule, C: Coalgebra> TwistedTensor<M, C> {
    pub fn ring(&self) -> Ring {
        self.module.ring()
    }

    pub fn cutoff(&self) -> i64 {
        self.module.cutoff().min(self.cobar.cutoff())
    }

    fn pair(&self, x: &Label, w: &Label) -> Label {
        match self.side {
            Side::Right => Label::tensor2(x.clone(), w.clone()),
            Side::Left => Label::tensor2(w.clone(), x.clone()),
        }
    }

    /// Basis labels of exact degree (and weight).
    pub fn basis(&self, n: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        let mut out = Vec::new();
        for k in 0..=n {
            match weight {
                None => {
                    let xs = self.module.basis(k, None)?;
                    if xs.is_empty() {
                        continue;
                    }
                    let ws = self.cobar.basis(n - k, None)?;
                    for x in &xs {
                        for w in &ws {
                            out.push(self.pair(x, w));
                        }
                    }
                }
                Some(wt) => {
                    for v in 0..=wt {
                        let xs = self.module.basis(k, Some(v))?;
                        if xs.is_empty() {
                            continue;
                        }
                        let ws = self.cobar.basis(n - k, Some(wt - v))?;
                        for x in &xs {
                            for w in &ws {
                                out.push(self.pair(x, w));
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn differential(&self, l: &Label) -> Element {
        let ring = self.ring();
        let mut out = Element::zero(ring, l.degree() - 1);
        match self.side {
            Side::Right => {
                let (x, w) = split2(l);
                for (t, c) in self.module.differential(x).iter() {
                    out.add_term(Label::tensor2(t.clone(), w.clone()), c.clone());
                }
                let s = BigInt::from(sign(x.degree()));
                for (t, c) in self.cobar.differential(w).iter() {
                    out.add_term(Label::tensor2(x.clone(), t.clone()), c * &s);
                }
                for (t, c) in self.module.reduced_coaction(x).iter() {
                    let (xi, ci) = split2(t);
                    let letter = Label::word(vec![Label::desusp(ci.clone())]);
                    let s = BigInt::from(-sign(xi.degree()));
                    out.add_term(Label::tensor2(xi.clone(), concat(&letter, w)), c * &s);
                }
            }
            Side::Left => {
                let (w, x) = split2(l);
                for (t, c) in self.cobar.differential(w).iter() {
                    out.add_term(Label::tensor2(t.clone(), x.clone()), c.clone());
                }
                let s = BigInt::from(sign(w.degree()));
                for (t, c) in self.module.differential(x).iter() {
                    out.add_term(Label::tensor2(w.clone(), t.clone()), c * &s);
                }
                for (t, c) in self.module.reduced_coaction(x).iter() {
                    let (cj, xj) = split2(t);
                    let letter = Label::word(vec![Label::desusp(cj.clone())]);
                    out.add_term(Label::tensor2(concat(w, &letter), xj.clone()), c * &s);
                }
            }
        }
        out
    }

    pub fn d(&self, e: &Element) -> Element {
        e.map(-1, |l| self.differential(l))
    }

    pub fn graded_basis(&self, weight: Option<i64>) -> Result<GradedBasis> {
        let mut labels = Vec::new();
        for n in 0..=self.cutoff() {
            labels.extend(self.basis(n, weight)?);
        }
        Ok(GradedBasis::new(self.cutoff(), labels))
    }

    pub fn complex(&self, weight: Option<i64>) -> Result<ChainComplex> {
        let basis = self.graded_basis(weight)?;
        ChainComplex::build(self.ring(), basis, |l| {
            let v = self.differential(l);
            if let Some(w) = weight {
                v.check_weight(w)?;
            }
            Ok(v)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chaincore::{homology, verify_differential};
    use hopfalg::{sphere_model, RegularComodule, TrivialComodule};

    #[test]
    fn trivial_module_gives_cobar() {
        let r = Ring::Integers;
        let c = sphere_model(3, r, 8).unwrap();
        let m = TrivialComodule {
            ring: r,
            cutoff: 8,
            side: Side::Right,
        };
        let t = one_sided_cobar(m, &c, None).unwrap();
        let cx = t.complex(None).unwrap();
        assert!(verify_differential(&cx).ok());
        assert_eq!(
            homology(&cx).betti_numbers(7).unwrap(),
            vec![1, 0, 1, 0, 1, 0, 1, 0]
        );
    }

    #[test]
    fn acyclic_sphere() {
        let r = Ring::Integers;
        let c = sphere_model(3, r, 8).unwrap();
        for side in [Side::Left, Side::Right] {
            let m = RegularComodule {
                coalgebra: &c,
                side,
            };
            let t = one_sided_cobar(m, &c, None).unwrap();
            let cx = t.complex(None).unwrap();
            assert!(verify_differential(&cx).ok());
            assert_eq!(
                homology(&cx).betti_numbers(7).unwrap(),
                vec![1, 0, 0, 0, 0, 0, 0, 0]
            );
        }
    }
}
