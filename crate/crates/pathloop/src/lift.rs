use std::collections::HashMap;

use chaincore::{sign, BigInt, Element, Error, Label, Result, Ring};
use cobar::{unchecked_one_sided, LeftTwisted, TwistedTensor};
use hopfalg::{
    multiplicative_extend, reassoc_left, split2, tensor_map, FreeAlgebra, HopfAlgebra,
    HopfAsCoalgebra, Multiplication, RegularComodule, Side, Words,
};

use crate::pathloop::{is_barred_letter, PathLoop};

type Acyclic<'a, H> =
    TwistedTensor<RegularComodule<HopfAsCoalgebra<&'a H>>, HopfAsCoalgebra<&'a H>>;

/// The lift `θ̃ : 𝔓𝔏(C, Ψ) → ΩH ⊗_{tΩ} H` of a strict model
/// `θ : Ω̃(C, Ψ) → H`, with `θ̃(s⁻¹c) = 𝔰θ(s⁻¹c)` and
/// `θ̃(s⁻¹c̄) = 𝔥θ(s⁻¹c)`.
pub struct Lift<'a, H: HopfAlgebra> {
    pub path_loop: &'a PathLoop,
    pub hopf: &'a H,
    theta: HashMap<Label, Element>,
    acyclic: Acyclic<'a, H>,
    words: Words,
}

/// Builds the lift after checking that `θ` commutes with differentials and
/// diagonals on letters.
pub fn lift_theta<'a, H: HopfAlgebra>(
    pl: &'a PathLoop,
    hopf: &'a H,
    theta: HashMap<Label, Element>,
) -> Result<Lift<'a, H>> {
    let module = RegularComodule {
        coalgebra: HopfAsCoalgebra(hopf),
        side: Side::Left,
    };
    let acyclic = unchecked_one_sided(module, HopfAsCoalgebra(hopf));
    let lift = Lift {
        path_loop: pl,
        hopf,
        theta,
        acyclic,
        words: Words(hopf.ring()),
    };
    if let Some(l) = lift.model_failures().first() {
        return Err(Error::Invalid(format!("θ is not a strict model on {l}")));
    }
    Ok(lift)
}

/// Violations of the lift identities, by word.
#[derive(Clone, Debug, Default)]
pub struct LiftCheck {
    pub chain_map: Vec<(Label, Element)>,
    pub comodule: Vec<(Label, Element)>,
}

impl LiftCheck {
    pub fn ok(&self) -> bool {
        self.chain_map.is_empty() && self.comodule.is_empty()
    }
}

/// Violations of the `𝔰` and `𝔥` identities, by word of `H`.
#[derive(Clone, Debug, Default)]
pub struct SectionCheck {
    pub section: Vec<Label>,
    pub multiplicative: Vec<(Label, Label)>,
    pub homotopy_projection: Vec<Label>,
    pub homotopy_differential: Vec<Label>,
    pub homotopy_defect: Vec<Label>,
    pub derivation: Vec<(Label, Label)>,
    pub comodule: Vec<Label>,
}

impl SectionCheck {
    pub fn ok(&self) -> bool {
        self.section.is_empty()
            && self.multiplicative.is_empty()
            && self.homotopy_projection.is_empty()
            && self.homotopy_differential.is_empty()
            && self.homotopy_defect.is_empty()
            && self.derivation.is_empty()
            && self.comodule.is_empty()
    }
}

impl<'a, H: HopfAlgebra> Lift<'a, H> {
    pub fn ring(&self) -> Ring {
        self.hopf.ring()
    }

    /// The product of `ΩH ⊗_{tΩ} H`.
    pub fn product(&self) -> LeftTwisted<'_, RegularComodule<HopfAsCoalgebra<&'a H>>, Words> {
        LeftTwisted {
            comodule: &self.acyclic.module,
            algebra: &self.words,
        }
    }

    /// The differential of `ΩH ⊗_{tΩ} H`.
    pub fn target_d(&self, e: &Element) -> Element {
        self.acyclic.d(e)
    }

    /// `θ` on a word of `ΩC`.
    pub fn theta_word(&self, w: &Label) -> Element {
        let ring = self.ring();
        multiplicative_extend(&self.words, w, |l| {
            self.theta
                .get(l)
                .cloned()
                .unwrap_or_else(|| Element::zero(ring, l.degree()))
        })
    }

    pub fn theta(&self, e: &Element) -> Element {
        e.map(0, |w| self.theta_word(w))
    }

    /// Letters of `ΩC` on which `θ` fails to commute with the differential
    /// or the diagonal.
    pub fn model_failures(&self) -> Vec<Label> {
        let base = &self.path_loop.base;
        let mut bad = Vec::new();
        for g in base.coalgebra().generators() {
            let letter = Label::desusp(g.clone());
            let w = Label::word(vec![letter.clone()]);
            let tw = self.theta_word(&w);
            let d_ok = self.hopf.d(&tw) == self.theta(&base.differential(&w));
            let f = |l: &Label| self.theta_word(l);
            let psi_ok = self.hopf.coproduct_of(&tw) == tensor_map(&base.coproduct(&w), 0, 0, f, f);
            if !(d_ok && psi_ok) {
                bad.push(letter);
            }
        }
        bad
    }

    /// `𝔰(x) = 1⊗x`.
    pub fn section(&self, e: &Element) -> Element {
        e.map(0, |h| {
            Element::basis(self.ring(), Label::tensor2(Label::Unit, h.clone()))
        })
    }

    /// `𝔥(x) = Σ s⁻¹x′⊗x″` over `ψ(x) − 1⊗x = Σ x′⊗x″`, which equals
    /// `D𝔰(x) − 𝔰(dx)`.
    pub fn homotopy(&self, e: &Element) -> Element {
        let ring = self.ring();
        e.map(-1, |h| {
            let mut out = Element::zero(ring, h.degree() - 1);
            if h.is_unit() {
                return out;
            }
            for (t, c) in self.hopf.coproduct(h).iter() {
                let (a, b) = split2(t);
                if a.is_unit() {
                    continue;
                }
                out.add_term(
                    Label::tensor2(Label::word(vec![Label::desusp(a.clone())]), b.clone()),
                    c.clone(),
                );
            }
            out
        })
    }

    /// `π(w⊗x) = ε(w)x`.
    pub fn projection(&self, e: &Element) -> Element {
        let ring = self.ring();
        e.map(0, |t| {
            let (w, x) = split2(t);
            if w.is_unit() {
                Element::basis(ring, x.clone())
            } else {
                Element::zero(ring, t.degree())
            }
        })
    }

    /// `θ̃` on a letter of `𝔓𝔏`.
    pub fn lift_letter(&self, l: &Label) -> Element {
        let ring = self.ring();
        let c = match l {
            Label::Desusp(c) => c.as_ref(),
            other => panic!("{other} is not a cobar letter"),
        };
        if is_barred_letter(l) {
            let Label::Bar(inner) = c else { unreachable!() };
            let w = Label::word(vec![Label::desusp(inner.as_ref().clone())]);
            self.homotopy(&self.theta_word(&w))
        } else {
            let w = Label::word(vec![Label::desusp(c.clone())]);
            let v = self.section(&self.theta_word(&w));
            if v.is_zero() {
                Element::zero(ring, l.degree())
            } else {
                v
            }
        }
    }

    /// `θ̃` on a word of `𝔓𝔏`, extended multiplicatively.
    pub fn lift_word(&self, w: &Label) -> Element {
        multiplicative_extend(&self.product(), w, |l| self.lift_letter(l))
    }

    pub fn lift(&self, e: &Element) -> Element {
        e.map(0, |w| self.lift_word(w))
    }

    /// `(1⊗ψ_H)` on `ΩH ⊗_{tΩ} H`, on labels `Tensor([w, x′, x″])`.
    fn target_coaction(&self, e: &Element) -> Element {
        let ring = self.ring();
        e.map(0, |t| {
            let (w, x) = split2(t);
            self.hopf.coproduct(x).map(w.degree(), |p| {
                let (a, b) = split2(p);
                Element::basis(ring, Label::Tensor(vec![w.clone(), a.clone(), b.clone()]))
            })
        })
    }

    /// Checks on every word of `𝔓𝔏` of degree at most `top`:
    /// `Dθ̃ = θ̃d` and `(θ̃⊗θ)ν = (1⊗ψ_H)θ̃`.
    pub fn verify(&self, top: i64, weight: Option<i64>) -> Result<LiftCheck> {
        let pl = self.path_loop;
        let mut out = LiftCheck::default();
        for n in 0..=top {
            for w in pl.hopf.basis(n, weight)? {
                let tw = self.lift_word(&w);
                let r = self
                    .target_d(&tw)
                    .minus(&self.lift(&pl.hopf.differential(&w)));
                if !r.is_zero() {
                    out.chain_map.push((w.clone(), r));
                }
                let lhs = reassoc_left(&tensor_map(
                    &pl.coaction(&w),
                    0,
                    0,
                    |l| self.lift_word(l),
                    |l| self.theta_word(l),
                ));
                let r = lhs.minus(&self.target_coaction(&tw));
                if !r.is_zero() {
                    out.comodule.push((w, r));
                }
            }
        }
        Ok(out)
    }

    /// Checks the identities of `𝔰` and `𝔥` on words of `H` of degree at
    /// most `top`: `π𝔰 = id`, `𝔰` multiplicative, `π𝔥 = 0`, `D𝔥 = −𝔥d`,
    /// `𝔥 = D𝔰 − 𝔰d`, `𝔥(ab) = 𝔥(a)𝔰(b) + (−1)^{|a|}𝔰(a)𝔥(b)`, and both
    /// maps commuting with the right `H`-coactions.
    pub fn verify_section(&self, top: i64, weight: Option<i64>) -> Result<SectionCheck> {
        let ring = self.ring();
        let mult = self.product();
        let mut out = SectionCheck::default();
        let mut all = Vec::new();
        for n in 0..=top {
            all.extend(self.hopf.basis(n, weight)?);
        }
        for x in &all {
            let e = Element::basis(ring, x.clone());
            let s = self.section(&e);
            let h = self.homotopy(&e);
            if self.projection(&s) != e {
                out.section.push(x.clone());
            }
            if !self.projection(&h).is_zero() {
                out.homotopy_projection.push(x.clone());
            }
            if self.target_d(&h) != self.homotopy(&self.hopf.d(&e)).neg() {
                out.homotopy_differential.push(x.clone());
            }
            if h != self.target_d(&s).minus(&self.section(&self.hopf.d(&e))) {
                out.homotopy_defect.push(x.clone());
            }
            let psi = self.hopf.coproduct(x);
            let id = |l: &Label| Element::basis(ring, l.clone());
            let sec = |l: &Label| self.section(&Element::basis(ring, l.clone()));
            let hom = |l: &Label| self.homotopy(&Element::basis(ring, l.clone()));
            let s_ok = self.target_coaction(&s) == reassoc_left(&tensor_map(&psi, 0, 0, sec, id));
            let h_ok = self.target_coaction(&h) == reassoc_left(&tensor_map(&psi, -1, 0, hom, id));
            if !(s_ok && h_ok) {
                out.comodule.push(x.clone());
            }
        }
        for a in &all {
            for b in &all {
                if a.degree() + b.degree() > top {
                    continue;
                }
                let (ea, eb) = (
                    Element::basis(ring, a.clone()),
                    Element::basis(ring, b.clone()),
                );
                let ab = self.words.mul(&ea, &eb);
                let (sa, sb) = (self.section(&ea), self.section(&eb));
                if self.section(&ab) != mult.mul(&sa, &sb) {
                    out.multiplicative.push((a.clone(), b.clone()));
                }
                let mut rhs = mult.mul(&self.homotopy(&ea), &sb);
                rhs.add_scaled(
                    &mult.mul(&sa, &self.homotopy(&eb)),
                    &BigInt::from(sign(a.degree())),
                );
                if self.homotopy(&ab) != rhs {
                    out.derivation.push((a.clone(), b.clone()));
                }
            }
        }
        Ok(out)
    }
}

/// `θ = id` on the letters of `Ω̃(C, Ψ)`, the identity model of the
/// path-loop algebra's base.
pub fn identity_model(pl: &PathLoop) -> HashMap<Label, Element> {
    let ring = pl.ring();
    pl.base
        .coalgebra()
        .generators()
        .iter()
        .map(|g| {
            let l = Label::desusp(g.clone());
            (l.clone(), Element::basis(ring, Label::word(vec![l])))
        })
        .collect()
}
