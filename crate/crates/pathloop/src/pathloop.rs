use std::sync::Arc;

use chaincore::{BigInt, Element, Label, Result, Ring};
use cobar::{extended_cobar, Cobar};
use hopfalg::{
    derivation_extend, multiplicative_extend, tensor_map, DgCoalgebra, FreeAlgebra, HopfAlgebra,
    TensorProduct, Words,
};
use shcoalg::{induced_diagonal, AwCoalgebra, InducedHopf};

use crate::path::extend_psi;

/// The path-loop algebra `𝔓𝔏(C, Ψ) = Ω̃(𝔓(C), Ψ̃)` with its right
/// `Ω̃(C, Ψ)`-coaction `ν = (1⊗Ωπ)ψ̃`.
pub struct PathLoop {
    pub aw: AwCoalgebra,
    pub extended: AwCoalgebra,
    pub hopf: InducedHopf,
    pub base: InducedHopf,
}

pub fn path_loop(a: &AwCoalgebra) -> Result<PathLoop> {
    let extended = extend_psi(a)?;
    let hopf = induced_diagonal(&extended);
    let base = induced_diagonal(a);
    Ok(PathLoop {
        aw: a.clone(),
        extended,
        hopf,
        base,
    })
}

/// Whether a cobar letter is `s⁻¹c̄`.
pub fn is_barred_letter(l: &Label) -> bool {
    matches!(l, Label::Desusp(c) if matches!(c.as_ref(), Label::Bar(_)))
}

/// Violations of the κ identities, by word.
#[derive(Clone, Debug, Default)]
pub struct KappaCheck {
    pub differential: Vec<(Label, Element)>,
    pub diagonal: Vec<(Label, Element)>,
    pub coaction: Vec<(Label, Element)>,
}

impl KappaCheck {
    pub fn ok(&self) -> bool {
        self.differential.is_empty() && self.diagonal.is_empty() && self.coaction.is_empty()
    }
}

impl PathLoop {
    pub fn ring(&self) -> Ring {
        self.hopf.ring()
    }

    pub fn cutoff(&self) -> i64 {
        self.hopf.cutoff()
    }

    pub fn coalgebra(&self) -> &Arc<DgCoalgebra> {
        &self.aw.coalgebra
    }

    /// `Ω(C)` as a plain cobar construction.
    pub fn base_cobar(&self) -> Cobar<Arc<DgCoalgebra>> {
        extended_cobar(self.aw.coalgebra.clone())
    }

    /// `Ωπ` on a word: `s⁻¹c ↦ s⁻¹c`, `s⁻¹c̄ ↦ 0`.
    pub fn project_word(&self, w: &Label) -> Element {
        let ring = self.ring();
        if w.letters().iter().any(is_barred_letter) {
            Element::zero(ring, w.degree())
        } else {
            Element::basis(ring, w.clone())
        }
    }

    /// `ν(w) = (1⊗Ωπ)ψ̃(w)`, on labels `Tensor([w', v])` with `v` a word of
    /// `ΩC`.
    pub fn coaction(&self, w: &Label) -> Element {
        let ring = self.ring();
        multiplicative_extend(&TensorProduct(Words(ring), Words(ring)), w, |l| {
            tensor_map(
                &self.hopf.letter_coproduct(l),
                0,
                0,
                |x| Element::basis(ring, x.clone()),
                |x| self.project_word(x),
            )
        })
    }

    /// `ν̄(w) = ν(w) − w⊗1`.
    pub fn reduced_coaction(&self, w: &Label) -> Element {
        let mut v = self.coaction(w);
        v.add_term(Label::tensor2(w.clone(), Label::Unit), BigInt::from(-1));
        v
    }

    /// `κ`: the `(ι, ι)`-derivation of degree `−1` with `κ(s⁻¹c) = −s⁻¹c̄`.
    pub fn kappa(&self, w: &Label) -> Element {
        let ring = self.ring();
        derivation_extend(ring, w, -1, |l| match l {
            Label::Desusp(c) if !matches!(c.as_ref(), Label::Bar(_)) => {
                let bar = Label::word(vec![Label::desusp(Label::bar(c.as_ref().clone()))]);
                Element::term(ring, bar, BigInt::from(-1))
            }
            other => panic!("κ is defined on ΩC, not on {other}"),
        })
    }

    pub fn kappa_of(&self, e: &Element) -> Element {
        e.map(-1, |l| self.kappa(l))
    }

    /// Checks on every word `w` of `ΩC` of degree at most `top`:
    /// `κd(w) = −d̃κ(w)`, `ψ̃κ(w) = (κ⊗ι + ι⊗κ)ψ(w)` and `νκ(w) = (κ⊗1)ψ(w)`.
    pub fn verify_kappa(&self, top: i64, weight: Option<i64>) -> Result<KappaCheck> {
        let ring = self.ring();
        let id = |l: &Label| Element::basis(ring, l.clone());
        let kap = |l: &Label| self.kappa(l);
        let mut out = KappaCheck::default();
        for n in 0..=top {
            for w in self.base.basis(n, weight)? {
                if w.is_unit() {
                    continue;
                }
                let kw = self.kappa(&w);
                let r = self
                    .kappa_of(&self.base.differential(&w))
                    .plus(&self.hopf.d(&kw));
                if !r.is_zero() {
                    out.differential.push((w.clone(), r));
                }
                let psi = self.base.coproduct(&w);
                let lhs = self.hopf.coproduct_of(&kw);
                let mut rhs = tensor_map(&psi, -1, 0, kap, id);
                rhs.add_assign(&tensor_map(&psi, 0, -1, id, kap));
                let r = lhs.minus(&rhs);
                if !r.is_zero() {
                    out.diagonal.push((w.clone(), r));
                }
                let lhs = kw.map(0, |l| self.coaction(l));
                let r = lhs.minus(&tensor_map(&psi, -1, 0, kap, id));
                if !r.is_zero() {
                    out.coaction.push((w, r));
                }
            }
        }
        Ok(out)
    }
}
