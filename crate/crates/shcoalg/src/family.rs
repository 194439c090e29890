use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use chaincore::{sign, BigInt, Element, Error, Label, Result, Ring, Span};
use cobar::{extended_cobar, Cobar};
use hopfalg::{enumerate_words, multiplicative_extend, DgCoalgebra, FreeAlgebra, Words};

/// A family `θ_k : C₊ → (C'₊)^{⊗k}` of maps of degree `k − 1`.
///
/// `θ_1` takes values in target labels; `θ_k` for `k ≥ 2` takes values in
/// labels `Tensor([l₁, …, l_k])` of positive target labels.
#[derive(Clone, Debug)]
pub struct ShFamily {
    pub source: Arc<DgCoalgebra>,
    pub target: Arc<DgCoalgebra>,
    maps: BTreeMap<usize, HashMap<Label, Element>>,
}

/// Coherence residues of a family, by generator and word length.
#[derive(Clone, Debug, Default)]
pub struct ShCheck {
    pub residues: Vec<(Label, BTreeMap<usize, Element>)>,
}

impl ShCheck {
    pub fn ok(&self) -> bool {
        self.residues.is_empty()
    }

    /// Generators with a nonzero residue.
    pub fn failing_generators(&self) -> Vec<&Label> {
        self.residues.iter().map(|(l, _)| l).collect()
    }
}

fn factors_of(level: usize, l: &Label) -> Vec<Label> {
    if level == 1 {
        vec![l.clone()]
    } else {
        l.factors().to_vec()
    }
}

/// Sign of `(s⁻¹)^{⊗k}` on `l₁⊗…⊗l_k`: `(−1)^{Σ_j (k−j)|l_j|}`.
pub fn desuspension_sign(factors: &[Label]) -> i64 {
    let k = factors.len() as i64;
    sign(
        factors
            .iter()
            .enumerate()
            .map(|(j, l)| (k - 1 - j as i64) * l.degree())
            .sum(),
    )
}

impl ShFamily {
    /// Validates degrees and labels. Levels whose degree shift exceeds the
    /// cutoff are dropped.
    pub fn new(
        source: Arc<DgCoalgebra>,
        target: Arc<DgCoalgebra>,
        maps: BTreeMap<usize, HashMap<Label, Element>>,
    ) -> Result<ShFamily> {
        if source.ring != target.ring {
            return Err(Error::Invalid(
                "family between coalgebras over different rings".into(),
            ));
        }
        let cutoff = source.cutoff.min(target.cutoff);
        let mut kept = BTreeMap::new();
        for (k, m) in maps {
            if k == 0 {
                return Err(Error::Invalid("family levels start at 1".into()));
            }
            if k as i64 - 1 > cutoff {
                continue;
            }
            let mut level = HashMap::new();
            for (c, v) in m {
                if source.generators().binary_search(&c).is_err() {
                    return Err(Error::Invalid(format!(
                        "θ_{k} given on {c}, which is not a source generator"
                    )));
                }
                if v.is_zero() {
                    continue;
                }
                let expected = c.degree() + k as i64 - 1;
                if v.degree() != expected {
                    return Err(Error::Degree {
                        label: c,
                        expected,
                        found: v.degree(),
                    });
                }
                for t in v.terms().keys() {
                    let fs = factors_of(k, t);
                    if fs.len() != k
                        || fs
                            .iter()
                            .any(|f| target.generators().binary_search(f).is_err())
                    {
                        return Err(Error::NotClosed {
                            source_label: c.clone(),
                            target: t.clone(),
                        });
                    }
                }
                level.insert(c, v);
            }
            kept.insert(k, level);
        }
        Ok(ShFamily {
            source,
            target,
            maps: kept,
        })
    }

    /// A strict map: `θ_1 = f`, higher levels zero.
    pub fn strict(
        source: Arc<DgCoalgebra>,
        target: Arc<DgCoalgebra>,
        f: HashMap<Label, Element>,
    ) -> Result<ShFamily> {
        ShFamily::new(source, target, BTreeMap::from([(1, f)]))
    }

    pub fn identity(c: Arc<DgCoalgebra>) -> ShFamily {
        let ring = c.ring;
        let f = c
            .generators()
            .iter()
            .map(|g| (g.clone(), Element::basis(ring, g.clone())))
            .collect();
        ShFamily::strict(c.clone(), c, f).expect("identity is well formed")
    }

    /// The map sending every positive generator to zero.
    pub fn trivial(source: Arc<DgCoalgebra>, target: Arc<DgCoalgebra>) -> Result<ShFamily> {
        ShFamily::new(source, target, BTreeMap::new())
    }

    pub fn ring(&self) -> Ring {
        self.source.ring
    }

    pub fn cutoff(&self) -> i64 {
        self.source.cutoff.min(self.target.cutoff)
    }

    pub fn levels(&self) -> impl Iterator<Item = (usize, &HashMap<Label, Element>)> {
        self.maps.iter().map(|(k, m)| (*k, m))
    }

    /// Highest level with a nonzero value.
    pub fn max_level(&self) -> usize {
        self.maps
            .iter()
            .filter(|(_, m)| !m.is_empty())
            .map(|(k, _)| *k)
            .max()
            .unwrap_or(0)
    }

    pub fn theta(&self, k: usize, c: &Label) -> Element {
        self.maps
            .get(&k)
            .and_then(|m| m.get(c))
            .cloned()
            .unwrap_or_else(|| Element::zero(self.ring(), c.degree() + k as i64 - 1))
    }

    /// Whether all levels above the first vanish.
    pub fn is_strict(&self) -> bool {
        self.max_level() <= 1
    }

    /// `Ω̃(θ)(s⁻¹c) = Σ_k (s⁻¹)^{⊗k} θ_k(c)` as an element of `ΩC'`.
    pub fn induce_letter(&self, letter: &Label) -> Element {
        let ring = self.ring();
        let c = match letter {
            Label::Desusp(c) => c.as_ref(),
            other => panic!("{other} is not a cobar letter"),
        };
        let mut out = Element::zero(ring, letter.degree());
        for (k, m) in &self.maps {
            if let Some(v) = m.get(c) {
                for (t, coeff) in v.iter() {
                    let fs = factors_of(*k, t);
                    let s = BigInt::from(desuspension_sign(&fs));
                    let w = Label::word(fs.into_iter().map(Label::desusp).collect());
                    out.add_term(w, coeff * s);
                }
            }
        }
        out
    }

    /// The induced chain algebra map `ΩC → ΩC'` on an element.
    pub fn induce(&self, e: &Element) -> Element {
        let words = Words(self.ring());
        e.map(0, |w| {
            multiplicative_extend(&words, w, |l| self.induce_letter(l))
        })
    }

    /// Composite `g ∘ f` of strict families.
    pub fn compose_strict(&self, g: &ShFamily) -> Result<ShFamily> {
        if !self.is_strict() || !g.is_strict() {
            return Err(Error::Invalid(
                "composition is implemented for strict maps".into(),
            ));
        }
        let mut f = HashMap::new();
        for c in self.source.generators() {
            let v = self.theta(1, c).map(0, |l| g.theta(1, l));
            f.insert(c.clone(), v);
        }
        ShFamily::strict(self.source.clone(), g.target.clone(), f)
    }
}

fn source_cobar(f: &ShFamily) -> Cobar<Arc<DgCoalgebra>> {
    extended_cobar(f.source.clone())
}

fn target_cobar(f: &ShFamily) -> Cobar<Arc<DgCoalgebra>> {
    extended_cobar(f.target.clone())
}

fn by_length(e: &Element) -> BTreeMap<usize, Element> {
    let mut out: BTreeMap<usize, Element> = BTreeMap::new();
    for (w, c) in e.iter() {
        out.entry(w.letters().len())
            .or_insert_with(|| Element::zero(e.ring(), e.degree()))
            .add_term(w.clone(), c.clone());
    }
    out
}

/// Chain-map residue `d'Ω̃(θ)(s⁻¹c) − Ω̃(θ)(d s⁻¹c)` for one generator,
/// split by word length. The length-`k` part is the level-`k` coherence
/// equation carried through the desuspensions.
pub fn coherence_residue(f: &ShFamily, c: &Label) -> BTreeMap<usize, Element> {
    let omega = source_cobar(f);
    let omega2 = target_cobar(f);
    let letter = Label::desusp(c.clone());
    let lhs = omega2.d(&f.induce_letter(&letter));
    let rhs = f.induce(&omega.letter_differential(&letter));
    by_length(&lhs.minus(&rhs))
}

/// Checks the coherence equations on every source generator.
pub fn verify_sh_family(f: &ShFamily) -> ShCheck {
    let mut out = ShCheck::default();
    for c in f.source.generators() {
        if c.degree() > f.cutoff() {
            continue;
        }
        let r = coherence_residue(f, c);
        if !r.is_empty() {
            out.residues.push((c.clone(), r));
        }
    }
    out
}

/// Words of exact degree and length in the target cobar construction.
fn words_of_length(
    omega: &Cobar<Arc<DgCoalgebra>>,
    degree: i64,
    length: usize,
    weight: i64,
) -> Result<Vec<Label>> {
    let all = match omega.basis(degree, None) {
        Ok(ws) => ws,
        Err(Error::NotFiniteType(_)) => {
            enumerate_words(|n, w| omega.letters(n, w), degree, Some(weight))?
        }
        Err(e) => return Err(e),
    };
    Ok(all
        .into_iter()
        .filter(|w| w.letters().len() == length)
        .collect())
}

/// Extends `θ_1` to a coherent family by solving the coherence equations
/// level by level through `top_level`, generators in increasing degree.
/// Each level is solved exactly against the linear part of the target
/// cobar differential; an unsolvable level is an error.
pub fn solve_family(
    source: Arc<DgCoalgebra>,
    target: Arc<DgCoalgebra>,
    theta1: HashMap<Label, Element>,
    top_level: usize,
) -> Result<ShFamily> {
    let ring = source.ring;
    let mut maps: BTreeMap<usize, HashMap<Label, Element>> = BTreeMap::from([(1, theta1)]);
    let mut gens: Vec<Label> = source.generators().to_vec();
    gens.sort_by_key(|g| (g.degree(), g.clone()));
    for k in 2..=top_level {
        maps.insert(k, HashMap::new());
        for c in &gens {
            if c.degree() > source.cutoff.min(target.cutoff) {
                continue;
            }
            let fam = ShFamily::new(source.clone(), target.clone(), maps.clone())?;
            let residue = coherence_residue(&fam, c);
            let Some(rk) = residue.get(&k) else { continue };
            let omega2 = target_cobar(&fam);
            let degree = c.degree() - 1;
            let candidates = words_of_length(&omega2, degree, k, c.weight())?;
            let images: Vec<Element> = candidates
                .iter()
                .map(|w| {
                    let dw = omega2.differential(w);
                    dw.filter(|t| t.letters().len() == k)
                })
                .collect();
            let span = Span::new(ring, degree - 1, images);
            let x = span.coordinates(&rk.neg()).map_err(|_| {
                Error::Invalid(format!(
                    "coherence at level {k} has no solution on generator {c}"
                ))
            })?;
            let mut value = Element::zero(ring, c.degree() + k as i64 - 1);
            for (w, coeff) in candidates.iter().zip(x) {
                if coeff == BigInt::from(0) {
                    continue;
                }
                let fs: Vec<Label> = w
                    .letters()
                    .iter()
                    .map(|l| match l {
                        Label::Desusp(inner) => inner.as_ref().clone(),
                        other => panic!("{other} is not a cobar letter"),
                    })
                    .collect();
                let s = BigInt::from(desuspension_sign(&fs));
                value.add_term(Label::Tensor(fs), coeff * s);
            }
            maps.get_mut(&k)
                .expect("level inserted")
                .insert(c.clone(), value);
        }
    }
    ShFamily::new(source, target, maps)
}
