use std::collections::BTreeMap;

use chaincore::{
    convolve, homology, ChainComplex, Element, Error, HomologyTable, Label, Result, Ring,
};
use hopfalg::{multiplicative_extend, tensor_map, FreeAlgebra, HopfAlgebra, TensorProduct, Words};
use shcoalg::{
    aw_coproduct, induced_diagonal, verify_sh_family, AwCoalgebra, InducedHopf, ShFamily,
};

use crate::cofixed::{cofixed_subalgebra, Cofixed};
use crate::path::extend_psi;
use crate::pathloop::{is_barred_letter, PathLoop};

/// A cofixed subalgebra together with its restricted differential.
#[derive(Clone, Debug)]
pub struct CofixedModel {
    pub cofixed: Cofixed,
    pub complex: ChainComplex,
}

impl CofixedModel {
    pub fn ranks(&self, top: i64) -> Vec<usize> {
        self.cofixed.ranks(top)
    }

    pub fn homology(&self) -> HomologyTable {
        homology(&self.complex)
    }
}

/// The double-loop model `𝔇𝔏(C, Ψ) = 𝔓𝔏(C, Ψ) □_{Ω̃(C,Ψ)} R` in one weight
/// block (all weights when `None`).
pub fn double_loop(pl: &PathLoop, weight: Option<i64>) -> Result<CofixedModel> {
    let cofixed = cofixed_subalgebra(
        pl.ring(),
        pl.cutoff(),
        weight,
        |n, w| pl.hopf.basis(n, w),
        |l| pl.reduced_coaction(l),
    )?;
    let complex = cofixed.complex(|e| pl.hopf.d(e))?;
    Ok(CofixedModel { cofixed, complex })
}

/// Ranks of `𝔓𝔏` against `Σ_{p+q=n} rank_p(𝔇𝔏)·rank_q(ΩC)` through
/// `top`, in one weight (summing over weight splittings) or unweighted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofreenessCheck {
    pub path_loop: Vec<usize>,
    pub predicted: Vec<usize>,
}

impl CofreenessCheck {
    pub fn ok(&self) -> bool {
        self.path_loop == self.predicted
    }
}

pub fn verify_cofreeness(pl: &PathLoop, top: i64, weight: Option<i64>) -> Result<CofreenessCheck> {
    let ranks =
        |alg: &dyn Fn(i64) -> Result<usize>| -> Result<Vec<usize>> { (0..=top).map(alg).collect() };
    let path_loop = ranks(&|n| Ok(pl.hopf.basis(n, weight)?.len()))?;
    let predicted = match weight {
        None => {
            let dl = double_loop(pl, None)?.ranks(top);
            let base = ranks(&|n| Ok(pl.base.basis(n, None)?.len()))?;
            convolve(&dl, &base)
        }
        Some(w) => {
            let mut total = vec![0; top as usize + 1];
            for w1 in 0..=w {
                let dl = double_loop(pl, Some(w1))?.ranks(top);
                let base = ranks(&|n| Ok(pl.base.basis(n, Some(w - w1))?.len()))?;
                for (t, v) in total.iter_mut().zip(convolve(&dl, &base)) {
                    *t += v;
                }
            }
            total
        }
    };
    let predicted = predicted.into_iter().take(top as usize + 1).collect();
    Ok(CofreenessCheck {
        path_loop,
        predicted,
    })
}

/// Letters of the source on which `Ω̃ω` fails to commute with the induced
/// diagonals: `(Ω̃ω⊗Ω̃ω)ψ′ ≠ ψΩ̃ω`.
pub fn diagonal_failures(
    source: &InducedHopf,
    target: &InducedHopf,
    omega: &ShFamily,
) -> Vec<Label> {
    let ring = omega.ring();
    let words = Words(ring);
    let f = |w: &Label| multiplicative_extend(&words, w, |l| omega.induce_letter(l));
    let mut bad = Vec::new();
    for g in source.coalgebra().generators() {
        if g.degree() > omega.cutoff() {
            continue;
        }
        let letter = Label::desusp(g.clone());
        let lhs = tensor_map(source.letter_diagonal(&letter), 0, 0, f, f);
        let rhs = target.coproduct_of(&omega.induce_letter(&letter));
        if lhs != rhs {
            bad.push(letter);
        }
    }
    bad
}

/// The loop-fiber model `𝔥𝔣(ω) = Ω̃(C′ ⨿ 𝔓(C)) □_{ΩC} R` of a morphism
/// `ω : (C′, Ψ′) → (C, Ψ)`.
pub struct LoopFiber {
    pub total: AwCoalgebra,
    pub hopf: InducedHopf,
    pub base: InducedHopf,
    pub omega: ShFamily,
}

pub fn loop_fiber(
    source: &AwCoalgebra,
    target: &AwCoalgebra,
    omega: &ShFamily,
) -> Result<LoopFiber> {
    let check = verify_sh_family(omega);
    if !check.ok() {
        return Err(Error::Invalid(format!(
            "ω fails the coherence equations on {}",
            check
                .failing_generators()
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let base = induced_diagonal(target);
    let bad = diagonal_failures(&induced_diagonal(source), &base, omega);
    if let Some(l) = bad.first() {
        return Err(Error::Invalid(format!(
            "Ω̃ω does not preserve the induced diagonals on {l}"
        )));
    }
    let total = aw_coproduct(source, &extend_psi(target)?)?;
    let hopf = induced_diagonal(&total);
    Ok(LoopFiber {
        total,
        hopf,
        base,
        omega: omega.clone(),
    })
}

impl LoopFiber {
    pub fn ring(&self) -> Ring {
        self.hopf.ring()
    }

    pub fn cutoff(&self) -> i64 {
        self.hopf.cutoff()
    }

    /// `Ω(ω + π)` on a letter of `Ω(C′ ⊕ 𝔓(C))`.
    pub fn project_letter(&self, l: &Label) -> Element {
        let ring = self.ring();
        let inner = match l {
            Label::Desusp(c) => c.as_ref(),
            other => panic!("{other} is not a cobar letter"),
        };
        match inner {
            Label::Inj(0, c) => self.omega.induce_letter(&Label::desusp(c.as_ref().clone())),
            Label::Inj(1, c) => {
                let letter = Label::desusp(c.as_ref().clone());
                if is_barred_letter(&letter) {
                    Element::zero(ring, l.degree())
                } else {
                    Element::basis(ring, Label::word(vec![letter]))
                }
            }
            other => panic!("{other} is not a summand label"),
        }
    }

    pub fn project_word(&self, w: &Label) -> Element {
        multiplicative_extend(&Words(self.ring()), w, |l| self.project_letter(l))
    }

    pub fn reduced_coaction(&self, w: &Label) -> Element {
        let ring = self.ring();
        let mut v = multiplicative_extend(&TensorProduct(Words(ring), Words(ring)), w, |l| {
            tensor_map(
                &self.hopf.letter_coproduct(l),
                0,
                0,
                |x| Element::basis(ring, x.clone()),
                |x| self.project_word(x),
            )
        });
        v.add_term(
            Label::tensor2(w.clone(), Label::Unit),
            chaincore::BigInt::from(-1),
        );
        v
    }

    pub fn model(&self, weight: Option<i64>) -> Result<CofixedModel> {
        let cofixed = cofixed_subalgebra(
            self.ring(),
            self.cutoff(),
            weight,
            |n, w| self.hopf.basis(n, w),
            |l| self.reduced_coaction(l),
        )?;
        let complex = cofixed.complex(|e| self.hopf.d(e))?;
        Ok(CofixedModel { cofixed, complex })
    }
}

/// Betti numbers through `top` of every weight block up to `max_weight`.
pub fn weighted_betti<F>(max_weight: i64, top: i64, block: F) -> Result<BTreeMap<i64, Vec<usize>>>
where
    F: Fn(i64) -> Result<HomologyTable>,
{
    (0..=max_weight)
        .map(|w| Ok((w, block(w)?.betti_numbers(top)?)))
        .collect()
}
