use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use chaincore::{Element, Error, Label, Result, Ring};
use cobar::{extended_cobar, Cobar};
use hopfalg::{
    direct_sum, reassoc_left, reassoc_right, split2, tensor_coalgebra, tensor_differential,
    tensor_map, Coalgebra, CoalgebraDocument, DgCoalgebra, FreeAlgebra, HopfAlgebra, HopfCheck,
};

use crate::family::{solve_family, verify_sh_family, ShCheck, ShFamily};
use crate::milgram::milgram_apply;

/// An Alexander-Whitney coalgebra `(C, Ψ)`: a family `Ψ_k : C → (C⊗C)^{⊗k}`
/// with `Ψ_1 = Δ`.
#[derive(Clone, Debug)]
pub struct AwCoalgebra {
    pub coalgebra: Arc<DgCoalgebra>,
    pub psi: ShFamily,
}

fn diagonal_level(c: &DgCoalgebra) -> HashMap<Label, Element> {
    c.generators()
        .iter()
        .map(|g| (g.clone(), c.coproduct(g)))
        .collect()
}

impl AwCoalgebra {
    /// `Ψ_1 = Δ` together with the given higher levels (`k ≥ 2`).
    pub fn new(
        c: DgCoalgebra,
        higher: BTreeMap<usize, HashMap<Label, Element>>,
    ) -> Result<AwCoalgebra> {
        let c = Arc::new(c);
        let square = Arc::new(tensor_coalgebra(&c, &c)?);
        let mut maps = higher;
        if maps.contains_key(&1) {
            return Err(Error::Invalid("level 1 of Ψ is the coproduct".into()));
        }
        maps.insert(1, diagonal_level(&c));
        let psi = ShFamily::new(c.clone(), square, maps)?;
        Ok(AwCoalgebra { coalgebra: c, psi })
    }

    /// The formal structure: `Ψ_1 = Δ`, higher levels zero.
    pub fn formal(c: DgCoalgebra) -> Result<AwCoalgebra> {
        AwCoalgebra::new(c, BTreeMap::new())
    }

    pub fn from_document(doc: &CoalgebraDocument) -> Result<AwCoalgebra> {
        AwCoalgebra::new(doc.coalgebra.clone(), doc.psi.clone())
    }

    /// Solves for the higher levels through `top_level` starting from `Δ`.
    pub fn solve(c: DgCoalgebra, top_level: usize) -> Result<AwCoalgebra> {
        let c = Arc::new(c);
        let square = Arc::new(tensor_coalgebra(&c, &c)?);
        let psi = solve_family(c.clone(), square, diagonal_level(&c), top_level)?;
        Ok(AwCoalgebra { coalgebra: c, psi })
    }

    /// Document form, with the higher levels in the `psi` block.
    pub fn to_document(&self) -> CoalgebraDocument {
        let psi = self
            .psi
            .levels()
            .filter(|(k, m)| *k >= 2 && !m.is_empty())
            .map(|(k, m)| (k, m.clone()))
            .collect();
        CoalgebraDocument {
            name: self.coalgebra.name.clone(),
            ring: self.ring(),
            cutoff: self.cutoff(),
            coalgebra: (*self.coalgebra).clone(),
            psi,
        }
    }

    pub fn ring(&self) -> Ring {
        self.coalgebra.ring
    }

    pub fn cutoff(&self) -> i64 {
        self.coalgebra.cutoff
    }

    /// Higher levels of `Ψ`, `k ≥ 2`.
    pub fn higher(&self) -> BTreeMap<usize, HashMap<Label, Element>> {
        self.psi
            .levels()
            .filter(|(k, _)| *k >= 2)
            .map(|(k, m)| (k, m.clone()))
            .collect()
    }

    pub fn is_formal(&self) -> bool {
        self.psi.is_strict()
    }
}

/// The cobar construction with the diagonal `ψ = q ∘ Ω̃(Ψ)`.
pub struct InducedHopf {
    pub cobar: Cobar<Arc<DgCoalgebra>>,
    diagonal: HashMap<Label, Element>,
}

impl InducedHopf {
    pub fn coalgebra(&self) -> &DgCoalgebra {
        &self.cobar.coalgebra
    }

    /// `ψ` on a letter `s⁻¹c`.
    pub fn letter_diagonal(&self, letter: &Label) -> &Element {
        &self.diagonal[letter]
    }
}

impl FreeAlgebra for InducedHopf {
    fn ring(&self) -> Ring {
        self.cobar.ring()
    }

    fn cutoff(&self) -> i64 {
        self.cobar.cutoff()
    }

    fn letters(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        self.cobar.letters(degree, weight)
    }

    fn letter_differential(&self, letter: &Label) -> Element {
        self.cobar.letter_differential(letter)
    }
}

impl HopfAlgebra for InducedHopf {
    fn letter_coproduct(&self, letter: &Label) -> Element {
        self.diagonal[letter].clone()
    }
}

/// `Ω̃(C, Ψ) = (ΩC, q Ω̃(Ψ))`.
pub fn induced_diagonal(a: &AwCoalgebra) -> InducedHopf {
    let ring = a.ring();
    let mut diagonal = HashMap::new();
    for g in a.coalgebra.generators() {
        let letter = Label::desusp(g.clone());
        let v = milgram_apply(ring, &a.psi.induce_letter(&letter));
        diagonal.insert(letter, v);
    }
    InducedHopf {
        cobar: extended_cobar(a.coalgebra.clone()),
        diagonal,
    }
}

/// Checks the Hopf axioms of an induced diagonal on letters. Every axiom
/// compares two algebra maps, so letters suffice.
pub fn verify_diagonal(h: &InducedHopf) -> HopfCheck {
    let ring = h.ring();
    let mut out = HopfCheck::default();
    let id = |l: &Label| Element::basis(ring, l.clone());
    let psi = |l: &Label| h.coproduct(l);
    for g in h.coalgebra().generators() {
        let letter = Label::desusp(g.clone());
        let p = h.letter_coproduct(&letter);
        let lhs = h.letter_differential(&letter).map(0, psi);
        let rhs = tensor_differential(&p, |l| h.differential(l));
        let diff = lhs.minus(&rhs);
        if !diff.is_zero() {
            out.chain_map.push((letter.clone(), diff));
        }
        let left = reassoc_left(&tensor_map(&p, 0, 0, psi, id));
        let right = reassoc_right(&tensor_map(&p, 0, 0, id, psi));
        let diff = left.minus(&right);
        if !diff.is_zero() {
            out.coassociativity.push((letter.clone(), diff));
        }
        let mut eps_left = Element::zero(ring, letter.degree());
        let mut eps_right = Element::zero(ring, letter.degree());
        for (t, c) in p.iter() {
            let (x, y) = split2(t);
            if x.is_unit() {
                eps_left.add_term(y.clone(), c.clone());
            }
            if y.is_unit() {
                eps_right.add_term(x.clone(), c.clone());
            }
        }
        let target = Element::basis(ring, Label::word(vec![letter.clone()]));
        if eps_left != target || eps_right != target {
            out.counit.push((
                letter,
                eps_left.minus(&target).plus(&eps_right.minus(&target)),
            ));
        }
    }
    out
}

/// Where an Alexander-Whitney structure sits.
#[derive(Clone, Debug)]
pub enum Membership {
    /// `Ψ` fails the coherence equations.
    Incoherent(ShCheck),
    /// Coherent, but the induced diagonal is not coassociative (or not a
    /// counital chain map): an object of the weak category only.
    Weak(HopfCheck),
    /// Coherent with a strictly coassociative induced diagonal.
    Strict,
}

impl Membership {
    pub fn is_strict(&self) -> bool {
        matches!(self, Membership::Strict)
    }
}

pub fn classify(a: &AwCoalgebra) -> Membership {
    let check = verify_sh_family(&a.psi);
    if !check.ok() {
        return Membership::Incoherent(check);
    }
    let h = induced_diagonal(a);
    let hc = verify_diagonal(&h);
    if hc.ok() {
        Membership::Strict
    } else {
        Membership::Weak(hc)
    }
}

fn tag_pairs(level: usize, l: &Label, i: u8) -> Label {
    let tag_pair = |p: &Label| {
        let (a, b) = split2(p);
        let t = |x: &Label| {
            if x.is_unit() {
                Label::Unit
            } else {
                Label::inj(i, x.clone())
            }
        };
        Label::tensor2(t(a), t(b))
    };
    if level == 1 {
        tag_pair(l)
    } else {
        Label::Tensor(l.factors().iter().map(tag_pair).collect())
    }
}

/// Coproduct `(C, Ψ) ⨿ (C', Ψ')` on `C ⊕ C'`, with `Ψ''` restricting to `Ψ`
/// and `Ψ'` through the summand inclusions.
pub fn aw_coproduct(a: &AwCoalgebra, b: &AwCoalgebra) -> Result<AwCoalgebra> {
    let sum = direct_sum(&a.coalgebra, &b.coalgebra)?;
    let mut higher: BTreeMap<usize, HashMap<Label, Element>> = BTreeMap::new();
    for (i, part) in [a, b].into_iter().enumerate() {
        let i = i as u8;
        for (k, m) in part.psi.levels() {
            if k < 2 {
                continue;
            }
            let level = higher.entry(k).or_default();
            for (g, v) in m {
                level.insert(
                    Label::inj(i, g.clone()),
                    v.map(0, |l| Element::basis(v.ring(), tag_pairs(k, l, i))),
                );
            }
        }
    }
    AwCoalgebra::new(sum, higher)
}
