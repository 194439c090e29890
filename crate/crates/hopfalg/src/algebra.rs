use std::collections::HashMap;

use chaincore::{BigInt, ChainComplex, Element, Error, GradedBasis, Label, Result, Ring};

use crate::coalgebra::{reassoc_left, reassoc_right, tensor_differential, tensor_map, Coalgebra};
use crate::words::{
    derivation_extend, enumerate_words, multiplicative_extend, Multiplication, TensorProduct, Words,
};

/// Free graded algebra `T(V)` on a degreewise finite alphabet with a
/// differential given on letters and extended as a derivation.
pub trait FreeAlgebra: Sync {
    fn ring(&self) -> Ring;
    fn cutoff(&self) -> i64;
    /// Letters of exact degree, and of exact weight when given.
    fn letters(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>>;
    fn letter_differential(&self, letter: &Label) -> Element;

    fn differential(&self, w: &Label) -> Element {
        derivation_extend(self.ring(), w, -1, |l| self.letter_differential(l))
    }

    fn d(&self, e: &Element) -> Element {
        e.map(-1, |l| self.differential(l))
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        Words(self.ring()).mul(a, b)
    }

    /// Words of exact degree (and weight).
    fn basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        enumerate_words(|k, w| self.letters(k, w), degree, weight)
    }

    fn graded_basis(&self, weight: Option<i64>) -> Result<GradedBasis> {
        let mut labels = Vec::new();
        for n in 0..=self.cutoff() {
            labels.extend(self.basis(n, weight)?);
        }
        Ok(GradedBasis::new(self.cutoff(), labels))
    }

    /// The chain complex through the cutoff. With a weight the complex is
    /// the weight-homogeneous block and the differential is checked to
    /// preserve it.
    fn complex(&self, weight: Option<i64>) -> Result<ChainComplex> {
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

/// `T(V)` on a finite alphabet.
#[derive(Clone, Debug)]
pub struct TensorAlgebraDga {
    pub ring: Ring,
    pub cutoff: i64,
    alphabet: Vec<Label>,
    d: HashMap<Label, Element>,
}

impl TensorAlgebraDga {
    pub fn new(
        ring: Ring,
        cutoff: i64,
        alphabet: Vec<Label>,
        d: HashMap<Label, Element>,
    ) -> Result<Self> {
        let mut alphabet = alphabet;
        alphabet.sort();
        alphabet.dedup();
        for (l, v) in &d {
            if alphabet.binary_search(l).is_err() {
                return Err(Error::Invalid(format!(
                    "differential on unknown letter {l}"
                )));
            }
            if !v.is_zero() && v.degree() != l.degree() - 1 {
                return Err(Error::Degree {
                    label: l.clone(),
                    expected: l.degree() - 1,
                    found: v.degree(),
                });
            }
        }
        Ok(TensorAlgebraDga {
            ring,
            cutoff,
            alphabet,
            d,
        })
    }

    pub fn alphabet(&self) -> &[Label] {
        &self.alphabet
    }
}

impl FreeAlgebra for TensorAlgebraDga {
    fn ring(&self) -> Ring {
        self.ring
    }

    fn cutoff(&self) -> i64 {
        self.cutoff
    }

    fn letters(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        Ok(self
            .alphabet
            .iter()
            .filter(|l| l.degree() == degree && weight.is_none_or(|w| l.weight() == w))
            .cloned()
            .collect())
    }

    fn letter_differential(&self, letter: &Label) -> Element {
        self.d
            .get(letter)
            .cloned()
            .unwrap_or_else(|| Element::zero(self.ring, letter.degree() - 1))
    }
}

/// Free algebra with a coproduct given on letters and extended as an
/// algebra map into `T(V) ⊗ T(V)` (labels `Tensor([word, word])`).
pub trait HopfAlgebra: FreeAlgebra {
    fn letter_coproduct(&self, letter: &Label) -> Element;

    fn coproduct(&self, w: &Label) -> Element {
        let ring = self.ring();
        multiplicative_extend(&TensorProduct(Words(ring), Words(ring)), w, |l| {
            self.letter_coproduct(l)
        })
    }

    fn coproduct_of(&self, e: &Element) -> Element {
        e.map(0, |l| self.coproduct(l))
    }
}

/// `T(V)` with an explicit coproduct on letters.
#[derive(Clone, Debug)]
pub struct PresentedHopf {
    pub algebra: TensorAlgebraDga,
    psi: HashMap<Label, Element>,
}

impl PresentedHopf {
    /// `psi` lists the reduced part on letters; the primitive part
    /// `v⊗1 + 1⊗v` is added automatically.
    pub fn new(algebra: TensorAlgebraDga, reduced: HashMap<Label, Element>) -> Result<Self> {
        let ring = algebra.ring;
        let mut psi = HashMap::new();
        for l in algebra.alphabet() {
            let mut e = reduced
                .get(l)
                .cloned()
                .unwrap_or_else(|| Element::zero(ring, l.degree()));
            e.add_term(
                Label::tensor2(Label::word(vec![l.clone()]), Label::Unit),
                BigInt::from(1),
            );
            e.add_term(
                Label::tensor2(Label::Unit, Label::word(vec![l.clone()])),
                BigInt::from(1),
            );
            psi.insert(l.clone(), e);
        }
        Ok(PresentedHopf { algebra, psi })
    }

    /// `T(y)` with `y` primitive of the given degree.
    pub fn primitive_tensor_algebra(ring: Ring, cutoff: i64, name: &str, degree: i64) -> Self {
        let alg =
            TensorAlgebraDga::new(ring, cutoff, vec![Label::gen(name, degree)], HashMap::new())
                .expect("single letter");
        PresentedHopf::new(alg, HashMap::new()).expect("primitive letter")
    }
}

impl FreeAlgebra for PresentedHopf {
    fn ring(&self) -> Ring {
        self.algebra.ring
    }

    fn cutoff(&self) -> i64 {
        self.algebra.cutoff
    }

    fn letters(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        self.algebra.letters(degree, weight)
    }

    fn letter_differential(&self, letter: &Label) -> Element {
        self.algebra.letter_differential(letter)
    }
}

impl HopfAlgebra for PresentedHopf {
    fn letter_coproduct(&self, letter: &Label) -> Element {
        self.psi[letter].clone()
    }
}

/// Violations of the Hopf axioms on letters.
#[derive(Clone, Debug, Default)]
pub struct HopfCheck {
    pub chain_map: Vec<(Label, Element)>,
    pub coassociativity: Vec<(Label, Element)>,
    pub counit: Vec<(Label, Element)>,
}

impl HopfCheck {
    pub fn ok(&self) -> bool {
        self.chain_map.is_empty() && self.coassociativity.is_empty() && self.counit.is_empty()
    }
}

/// Checks that the coproduct is a counital, coassociative chain map on
/// every word of degree at most `top` (weight-filtered when given).
pub fn verify_hopf<H: HopfAlgebra + ?Sized>(
    h: &H,
    top: i64,
    weight: Option<i64>,
) -> Result<HopfCheck> {
    let ring = h.ring();
    let mut out = HopfCheck::default();
    let id = |l: &Label| Element::basis(ring, l.clone());
    let psi = |l: &Label| h.coproduct(l);
    for n in 1..=top {
        for w in h.basis(n, weight)? {
            let lhs = h.differential(&w).map(0, psi);
            let rhs = tensor_differential(&h.coproduct(&w), |l| h.differential(l));
            let diff = lhs.minus(&rhs);
            if !diff.is_zero() {
                out.chain_map.push((w.clone(), diff));
            }
            let p = h.coproduct(&w);
            let left = reassoc_left(&tensor_map(&p, 0, 0, psi, id));
            let right = reassoc_right(&tensor_map(&p, 0, 0, id, psi));
            let diff = left.minus(&right);
            if !diff.is_zero() {
                out.coassociativity.push((w.clone(), diff));
            }
            let mut eps_left = Element::zero(ring, n);
            let mut eps_right = Element::zero(ring, n);
            for (t, c) in p.iter() {
                let f = t.factors();
                if f[0].is_unit() {
                    eps_left.add_term(f[1].clone(), c.clone());
                }
                if f[1].is_unit() {
                    eps_right.add_term(f[0].clone(), c.clone());
                }
            }
            let target = Element::basis(ring, w.clone());
            let diff = eps_left.minus(&target).plus(&eps_right.minus(&target));
            if !(eps_left == target && eps_right == target) {
                out.counit.push((w, diff));
            }
        }
    }
    Ok(out)
}

/// A Hopf algebra viewed as a coalgebra: positive words with the reduced
/// coproduct `ψ̄(w) = ψ(w) − w⊗1 − 1⊗w`.
pub struct HopfAsCoalgebra<H>(pub H);

impl<H: HopfAlgebra> Coalgebra for HopfAsCoalgebra<H> {
    fn ring(&self) -> Ring {
        self.0.ring()
    }

    fn cutoff(&self) -> i64 {
        self.0.cutoff()
    }

    fn positive_basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        let mut b = self.0.basis(degree, weight)?;
        b.retain(|l| !l.is_unit());
        Ok(b)
    }

    fn differential(&self, c: &Label) -> Element {
        self.0.differential(c)
    }

    fn reduced_coproduct(&self, c: &Label) -> Element {
        self.0
            .coproduct(c)
            .filter(|t| !t.factors().iter().any(Label::is_unit))
    }
}

/// Side of a coaction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Comodule over a coalgebra, given by a reduced coaction.
///
/// For a right comodule the reduced coaction is `ν(x) − x⊗1`, with labels
/// `Tensor([x_i, c^i])` and every `c^i` positive. For a left comodule it is
/// `ν(x) − 1⊗x` with labels `Tensor([c_j, x_j])`.
pub trait Comodule: Sync {
    fn ring(&self) -> Ring;
    fn cutoff(&self) -> i64;
    fn side(&self) -> Side;
    fn basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>>;
    fn differential(&self, x: &Label) -> Element;
    fn reduced_coaction(&self, x: &Label) -> Element;

    fn coaction(&self, x: &Label) -> Element {
        let mut e = self.reduced_coaction(x);
        let t = match self.side() {
            Side::Right => Label::tensor2(x.clone(), Label::Unit),
            Side::Left => Label::tensor2(Label::Unit, x.clone()),
        };
        e.add_term(t, BigInt::from(1));
        e
    }
}

/// The trivial comodule `R`.
pub struct TrivialComodule {
    pub ring: Ring,
    pub cutoff: i64,
    pub side: Side,
}

impl Comodule for TrivialComodule {
    fn ring(&self) -> Ring {
        self.ring
    }

    fn cutoff(&self) -> i64 {
        self.cutoff
    }

    fn side(&self) -> Side {
        self.side
    }

    fn basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        Ok(if degree == 0 && weight.unwrap_or(0) == 0 {
            vec![Label::Unit]
        } else {
            Vec::new()
        })
    }

    fn differential(&self, _x: &Label) -> Element {
        Element::zero(self.ring, -1)
    }

    fn reduced_coaction(&self, _x: &Label) -> Element {
        Element::zero(self.ring, 0)
    }
}

/// A coalgebra as a comodule over itself through its coproduct.
pub struct RegularComodule<C> {
    pub coalgebra: C,
    pub side: Side,
}

impl<C: Coalgebra> Comodule for RegularComodule<C> {
    fn ring(&self) -> Ring {
        self.coalgebra.ring()
    }

    fn cutoff(&self) -> i64 {
        self.coalgebra.cutoff()
    }

    fn side(&self) -> Side {
        self.side
    }

    fn basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        if degree == 0 && weight.unwrap_or(0) == 0 {
            let mut v = vec![Label::Unit];
            v.extend(self.coalgebra.positive_basis(0, weight)?);
            return Ok(v);
        }
        self.coalgebra.positive_basis(degree, weight)
    }

    fn differential(&self, x: &Label) -> Element {
        if x.is_unit() {
            return Element::zero(self.ring(), -1);
        }
        self.coalgebra.differential(x)
    }

    fn reduced_coaction(&self, x: &Label) -> Element {
        if x.is_unit() {
            return Element::zero(self.ring(), 0);
        }
        let mut e = self.coalgebra.reduced_coproduct(x);
        let t = match self.side {
            Side::Right => Label::tensor2(Label::Unit, x.clone()),
            Side::Left => Label::tensor2(x.clone(), Label::Unit),
        };
        e.add_term(t, BigInt::from(1));
        e
    }
}

/// Checks coassociativity of a coaction against the coalgebra coproduct on
/// every basis label of degree at most `top`:
/// `(ν⊗1)ν = (1⊗Δ)ν` on the right, `(1⊗ν)ν = (Δ⊗1)ν` on the left.
pub fn verify_coaction<M, C>(
    m: &M,
    c: &C,
    top: i64,
    weight: Option<i64>,
) -> Result<Vec<(Label, Element)>>
where
    M: Comodule + ?Sized,
    C: Coalgebra + ?Sized,
{
    let ring = m.ring();
    let id = |l: &Label| Element::basis(ring, l.clone());
    let nu = |l: &Label| m.coaction(l);
    let delta = |l: &Label| c.coproduct(l);
    let mut bad = Vec::new();
    for n in 0..=top {
        for x in m.basis(n, weight)? {
            let v = m.coaction(&x);
            let (lhs, rhs) = match m.side() {
                Side::Right => (
                    tensor_map(&v, 0, 0, nu, id),
                    tensor_map(&v, 0, 0, id, delta),
                ),
                Side::Left => (
                    tensor_map(&v, 0, 0, id, nu),
                    tensor_map(&v, 0, 0, delta, id),
                ),
            };
            let diff = match m.side() {
                Side::Right => reassoc_left(&lhs).minus(&reassoc_right(&rhs)),
                Side::Left => reassoc_right(&lhs).minus(&reassoc_left(&rhs)),
            };
            if !diff.is_zero() {
                bad.push((x, diff));
            }
        }
    }
    Ok(bad)
}

impl<T: FreeAlgebra + ?Sized> FreeAlgebra for &T {
    fn ring(&self) -> Ring {
        (**self).ring()
    }

    fn cutoff(&self) -> i64 {
        (**self).cutoff()
    }

    fn letters(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        (**self).letters(degree, weight)
    }

    fn letter_differential(&self, letter: &Label) -> Element {
        (**self).letter_differential(letter)
    }
}

impl<T: HopfAlgebra + ?Sized> HopfAlgebra for &T {
    fn letter_coproduct(&self, letter: &Label) -> Element {
        (**self).letter_coproduct(letter)
    }
}

impl<T: Comodule + ?Sized> Comodule for &T {
    fn ring(&self) -> Ring {
        (**self).ring()
    }

    fn cutoff(&self) -> i64 {
        (**self).cutoff()
    }

    fn side(&self) -> Side {
        (**self).side()
    }

    fn basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        (**self).basis(degree, weight)
    }

    fn differential(&self, x: &Label) -> Element {
        (**self).differential(x)
    }

    fn reduced_coaction(&self, x: &Label) -> Element {
        (**self).reduced_coaction(x)
    }
}
