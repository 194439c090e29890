use std::sync::Arc;

use chaincore::{sign, tensor_complex, BigInt, ChainComplex, Element, Error, Label, Result, Ring};
use cobar::{cobar, Cobar};
use hopfalg::{
    multiplicative_extend, split2, tensor_coalgebra, DgCoalgebra, FreeAlgebra, Multiplication,
    TensorProduct, Words,
};

/// Milgram's map on one letter of `Ω(C⊗C')`:
/// `s⁻¹(c⊗1) ↦ s⁻¹c⊗1`, `s⁻¹(1⊗c') ↦ 1⊗s⁻¹c'`, `s⁻¹(c⊗c') ↦ 0`.
pub fn milgram_letter(ring: Ring, letter: &Label) -> Element {
    let inner = match letter {
        Label::Desusp(c) => c.as_ref(),
        other => panic!("{other} is not a cobar letter"),
    };
    let (a, b) = split2(inner);
    let mut out = Element::zero(ring, letter.degree());
    if b.is_unit() {
        out.add_term(
            Label::tensor2(Label::word(vec![Label::desusp(a.clone())]), Label::Unit),
            BigInt::from(1),
        );
    } else if a.is_unit() {
        out.add_term(
            Label::tensor2(Label::Unit, Label::word(vec![Label::desusp(b.clone())])),
            BigInt::from(1),
        );
    }
    out
}

/// The algebra `ΩC ⊗ ΩC'` on labels `Tensor([w, w'])`.
pub fn tensor_of_words(ring: Ring) -> TensorProduct<Words, Words> {
    TensorProduct(Words(ring), Words(ring))
}

/// Milgram's map extended multiplicatively.
pub fn milgram_apply(ring: Ring, e: &Element) -> Element {
    let m = tensor_of_words(ring);
    e.map(0, |w| {
        multiplicative_extend(&m, w, |l| milgram_letter(ring, l))
    })
}

/// `d(w⊗w') = dw⊗w' + (−1)^{|w|} w⊗dw'` on `ΩC ⊗ ΩC'`.
pub fn tensor_cobar_differential<A: FreeAlgebra, B: FreeAlgebra>(
    a: &A,
    b: &B,
    l: &Label,
) -> Element {
    let ring = a.ring();
    let (w, w2) = split2(l);
    let mut out = Element::zero(ring, l.degree() - 1);
    for (t, c) in a.differential(w).iter() {
        out.add_term(Label::tensor2(t.clone(), w2.clone()), c.clone());
    }
    let s = BigInt::from(sign(w.degree()));
    for (t, c) in b.differential(w2).iter() {
        out.add_term(Label::tensor2(w.clone(), t.clone()), c * &s);
    }
    out
}

/// Milgram's equivalence `q : Ω(C⊗C') → ΩC ⊗ ΩC'`.
pub struct Milgram {
    pub left: Cobar<Arc<DgCoalgebra>>,
    pub right: Cobar<Arc<DgCoalgebra>>,
    pub product: Cobar<Arc<DgCoalgebra>>,
}

/// Builds Milgram's map for simply connected `C` and `C'`.
pub fn milgram_q(c: &DgCoalgebra, c2: &DgCoalgebra) -> Result<Milgram> {
    if !c.is_simply_connected() || !c2.is_simply_connected() {
        return Err(Error::Invalid(
            "Milgram's map needs simply connected coalgebras".into(),
        ));
    }
    let product = Arc::new(tensor_coalgebra(c, c2)?);
    let cutoff = product.cutoff;
    Ok(Milgram {
        left: cobar(Arc::new(c.with(c.ring, cutoff)))?,
        right: cobar(Arc::new(c2.with(c2.ring, cutoff)))?,
        product: cobar(product)?,
    })
}

impl Milgram {
    pub fn ring(&self) -> Ring {
        self.product.ring()
    }

    pub fn cutoff(&self) -> i64 {
        self.product.cutoff()
    }

    pub fn apply(&self, e: &Element) -> Element {
        milgram_apply(self.ring(), e)
    }

    /// `d q(w) − q(d w)` on every word of `Ω(C⊗C')` of degree at most `top`
    /// with a nonzero residue.
    pub fn chain_map_residues(&self, top: i64) -> Result<Vec<(Label, Element)>> {
        let ring = self.ring();
        let mut bad = Vec::new();
        for n in 0..=top {
            for w in self.product.basis(n, None)? {
                let qw = self.apply(&Element::basis(ring, w.clone()));
                let lhs = qw.map(-1, |t| {
                    tensor_cobar_differential(&self.left, &self.right, t)
                });
                let rhs = self.apply(&self.product.differential(&w));
                let r = lhs.minus(&rhs);
                if !r.is_zero() {
                    bad.push((w, r));
                }
            }
        }
        Ok(bad)
    }

    /// Whether `q` is multiplicative on pairs of words through `top`.
    pub fn multiplicativity_residues(&self, top: i64) -> Result<Vec<(Label, Label)>> {
        let ring = self.ring();
        let m = tensor_of_words(ring);
        let words = Words(ring);
        let mut all = Vec::new();
        for n in 0..=top {
            all.extend(self.product.basis(n, None)?);
        }
        let mut bad = Vec::new();
        for a in &all {
            for b in &all {
                if a.degree() + b.degree() > top {
                    continue;
                }
                let ea = Element::basis(ring, a.clone());
                let eb = Element::basis(ring, b.clone());
                if self.apply(&words.mul(&ea, &eb)) != m.mul(&self.apply(&ea), &self.apply(&eb)) {
                    bad.push((a.clone(), b.clone()));
                }
            }
        }
        Ok(bad)
    }

    pub fn source_complex(&self) -> Result<ChainComplex> {
        self.product.complex(None)
    }

    pub fn target_complex(&self) -> Result<ChainComplex> {
        tensor_complex(
            &self.left.complex(None)?,
            &self.right.complex(None)?,
            self.cutoff(),
        )
    }
}
