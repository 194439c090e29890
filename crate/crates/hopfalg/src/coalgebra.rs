use std::collections::{BTreeMap, HashMap};

use chaincore::{sign, BigInt, ChainComplex, Element, Error, GradedBasis, Label, Result, Ring};

use crate::words::split2;

/// A coaugmented chain coalgebra seen through its positive part.
///
/// The reduced coproduct has labels `Tensor([a, b])` with `a`, `b`
/// positive basis labels. The full coproduct is
/// `Δc = c⊗1 + 1⊗c + Δ̄c`.
pub trait Coalgebra: Sync {
    fn ring(&self) -> Ring;
    fn cutoff(&self) -> i64;
    /// Positive-degree basis labels of exact degree, and of exact weight
    /// when a weight is given.
    fn positive_basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>>;
    fn differential(&self, c: &Label) -> Element;
    fn reduced_coproduct(&self, c: &Label) -> Element;

    /// Full coproduct with the primitive part restored.
    fn coproduct(&self, c: &Label) -> Element {
        let ring = self.ring();
        if c.is_unit() {
            return Element::basis(ring, Label::tensor2(Label::Unit, Label::Unit));
        }
        let mut e = self.reduced_coproduct(c);
        e.add_term(Label::tensor2(c.clone(), Label::Unit), BigInt::from(1));
        e.add_term(Label::tensor2(Label::Unit, c.clone()), BigInt::from(1));
        e
    }
}

/// Finite presentation of a chain coalgebra: a positive basis with the
/// differential and reduced coproduct on each basis label.
#[derive(Clone, Debug)]
pub struct DgCoalgebra {
    pub name: String,
    pub ring: Ring,
    pub cutoff: i64,
    generators: Vec<Label>,
    d: HashMap<Label, Element>,
    delta: HashMap<Label, Element>,
}

/// Violations found by [`verify_coalgebra`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoalgebraCheck {
    pub square: Vec<(Label, Element)>,
    pub co_leibniz: Vec<(Label, Element)>,
    pub coassociativity: Vec<(Label, Element)>,
}

impl CoalgebraCheck {
    pub fn ok(&self) -> bool {
        self.square.is_empty() && self.co_leibniz.is_empty() && self.coassociativity.is_empty()
    }
}

impl DgCoalgebra {
    /// Builds a presentation. Generators must have positive degree and all
    /// values must be homogeneous of the right degree and stay inside the
    /// positive basis.
    pub fn new(
        name: impl Into<String>,
        ring: Ring,
        cutoff: i64,
        generators: Vec<Label>,
        d: HashMap<Label, Element>,
        delta: HashMap<Label, Element>,
    ) -> Result<DgCoalgebra> {
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        for g in &generators {
            if g.degree() < 1 || g.is_unit() {
                return Err(Error::Invalid(format!(
                    "generator {g} must have positive degree"
                )));
            }
        }
        let known = |l: &Label| generators.binary_search(l).is_ok();
        for (g, v) in &d {
            if !known(g) {
                return Err(Error::Invalid(format!(
                    "differential given on undeclared label {g}"
                )));
            }
            if !v.is_zero() && v.degree() != g.degree() - 1 {
                return Err(Error::Degree {
                    label: g.clone(),
                    expected: g.degree() - 1,
                    found: v.degree(),
                });
            }
            if let Some(t) = v.terms().keys().find(|t| !known(t)) {
                return Err(Error::NotClosed {
                    source_label: g.clone(),
                    target: t.clone(),
                });
            }
        }
        for (g, v) in &delta {
            if !known(g) {
                return Err(Error::Invalid(format!(
                    "coproduct given on undeclared label {g}"
                )));
            }
            if !v.is_zero() && v.degree() != g.degree() {
                return Err(Error::Degree {
                    label: g.clone(),
                    expected: g.degree(),
                    found: v.degree(),
                });
            }
            for t in v.terms().keys() {
                let (a, b) = match t {
                    Label::Tensor(f) if f.len() == 2 => (&f[0], &f[1]),
                    _ => {
                        return Err(Error::NotClosed {
                            source_label: g.clone(),
                            target: t.clone(),
                        })
                    }
                };
                if !known(a) || !known(b) {
                    return Err(Error::NotClosed {
                        source_label: g.clone(),
                        target: t.clone(),
                    });
                }
            }
        }
        let d = d.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let delta = delta.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(DgCoalgebra {
            name: name.into(),
            ring,
            cutoff,
            generators,
            d,
            delta,
        })
    }

    pub fn generators(&self) -> &[Label] {
        &self.generators
    }

    pub fn is_simply_connected(&self) -> bool {
        self.generators.iter().all(|g| g.degree() >= 2)
    }

    pub fn is_primitive(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn has_zero_differential(&self) -> bool {
        self.d.is_empty()
    }

    /// Same presentation with a new ring and cutoff.
    pub fn with(&self, ring: Ring, cutoff: i64) -> DgCoalgebra {
        let conv = |m: &HashMap<Label, Element>| -> HashMap<Label, Element> {
            m.iter()
                .map(|(l, e)| {
                    let mut f = Element::zero(ring, e.degree());
                    for (t, c) in e.iter() {
                        f.add_term(t.clone(), c.clone());
                    }
                    (l.clone(), f)
                })
                .filter(|(_, e)| !e.is_zero())
                .collect()
        };
        DgCoalgebra {
            name: self.name.clone(),
            ring,
            cutoff,
            generators: self.generators.clone(),
            d: conv(&self.d),
            delta: conv(&self.delta),
        }
    }

    /// The underlying chain complex, with the unit in degree 0.
    pub fn complex(&self) -> Result<ChainComplex> {
        let mut labels = vec![Label::Unit];
        labels.extend(self.generators.iter().cloned());
        let basis = GradedBasis::new(self.cutoff, labels);
        ChainComplex::build(self.ring, basis, |l| Ok(Coalgebra::differential(self, l)))
    }

    pub fn max_degree(&self) -> i64 {
        self.generators.iter().map(Label::degree).max().unwrap_or(0)
    }
}

impl Coalgebra for DgCoalgebra {
    fn ring(&self) -> Ring {
        self.ring
    }

    fn cutoff(&self) -> i64 {
        self.cutoff
    }

    fn positive_basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        Ok(self
            .generators
            .iter()
            .filter(|g| g.degree() == degree && weight.is_none_or(|w| g.weight() == w))
            .cloned()
            .collect())
    }

    fn differential(&self, c: &Label) -> Element {
        self.d
            .get(c)
            .cloned()
            .unwrap_or_else(|| Element::zero(self.ring, c.degree() - 1))
    }

    fn reduced_coproduct(&self, c: &Label) -> Element {
        self.delta
            .get(c)
            .cloned()
            .unwrap_or_else(|| Element::zero(self.ring, c.degree()))
    }
}

/// Applies `f ⊗ g` with the Koszul sign `(−1)^{|g||a|}` to binary tensor
/// labels, where `g` has degree `g_shift`.
pub fn tensor_map<F, G>(e: &Element, f_shift: i64, g_shift: i64, f: F, g: G) -> Element
where
    F: Fn(&Label) -> Element,
    G: Fn(&Label) -> Element,
{
    e.map(f_shift + g_shift, |t| {
        let (a, b) = split2(t);
        let fa = f(a);
        if fa.is_zero() {
            return Element::zero(e.ring(), t.degree() + f_shift + g_shift);
        }
        let gb = g(b);
        fa.tensor(&gb)
            .scaled(&BigInt::from(sign(g_shift * a.degree())))
    })
}

/// `(d⊗1 + 1⊗d)` on binary tensors.
pub fn tensor_differential<F>(e: &Element, d: F) -> Element
where
    F: Fn(&Label) -> Element,
{
    let ring = e.ring();
    let id = |l: &Label| Element::basis(ring, l.clone());
    let mut out = tensor_map(e, -1, 0, &d, id);
    out.add_assign(&tensor_map(e, 0, -1, id, &d));
    out
}

/// `(p⊗q)⊗r ↦ p⊗q⊗r` on labels.
pub fn reassoc_left(e: &Element) -> Element {
    e.map(0, |l| {
        let (pq, r) = split2(l);
        let (p, q) = split2(pq);
        Element::basis(
            e.ring(),
            Label::Tensor(vec![p.clone(), q.clone(), r.clone()]),
        )
    })
}

/// `p⊗(q⊗r) ↦ p⊗q⊗r` on labels.
pub fn reassoc_right(e: &Element) -> Element {
    e.map(0, |l| {
        let (p, qr) = split2(l);
        let (q, r) = split2(qr);
        Element::basis(
            e.ring(),
            Label::Tensor(vec![p.clone(), q.clone(), r.clone()]),
        )
    })
}

/// Checks `d² = 0`, the co-Leibniz rule `Δ̄d = (d⊗1 + 1⊗d)Δ̄` and
/// coassociativity `(Δ̄⊗1)Δ̄ = (1⊗Δ̄)Δ̄` on every positive basis label up to
/// the cutoff.
pub fn verify_coalgebra<C: Coalgebra + ?Sized>(
    c: &C,
    weight: Option<i64>,
) -> Result<CoalgebraCheck> {
    let mut out = CoalgebraCheck::default();
    let ring = c.ring();
    let d = |l: &Label| c.differential(l);
    let id = |l: &Label| Element::basis(ring, l.clone());
    let delta = |l: &Label| c.reduced_coproduct(l);
    for n in 1..=c.cutoff() {
        for g in c.positive_basis(n, weight)? {
            let dd = c.differential(&g).map(-1, d);
            if !dd.is_zero() {
                out.square.push((g.clone(), dd));
            }
            let lhs = c.differential(&g).map(0, delta);
            let rhs = tensor_differential(&c.reduced_coproduct(&g), d);
            let diff = lhs.minus(&rhs);
            if !diff.is_zero() {
                out.co_leibniz.push((g.clone(), diff));
            }
            let dg = c.reduced_coproduct(&g);
            let left = reassoc_left(&tensor_map(&dg, 0, 0, delta, id));
            let right = reassoc_right(&tensor_map(&dg, 0, 0, id, delta));
            let diff = left.minus(&right);
            if !diff.is_zero() {
                out.coassociativity.push((g, diff));
            }
        }
    }
    Ok(out)
}

/// Model `R ⊕ R·x_n` with `x_n` primitive.
pub fn sphere_model(n: i64, ring: Ring, cutoff: i64) -> Result<DgCoalgebra> {
    if n < 2 {
        return Err(Error::Invalid(format!("sphere model needs n ≥ 2, got {n}")));
    }
    DgCoalgebra::new(
        format!("S{n}"),
        ring,
        cutoff,
        vec![Label::gen(&format!("x{n}"), n)],
        HashMap::new(),
        HashMap::new(),
    )
}

/// The trivial coalgebra `R`.
pub fn trivial_coalgebra(ring: Ring, cutoff: i64) -> DgCoalgebra {
    DgCoalgebra::new(
        "R",
        ring,
        cutoff,
        Vec::new(),
        HashMap::new(),
        HashMap::new(),
    )
    .expect("empty presentation")
}

/// Normalizes a tensor of two coalgebra labels: `1⊗1` is the unit.
fn pair(a: &Label, b: &Label) -> Label {
    if a.is_unit() && b.is_unit() {
        Label::Unit
    } else {
        Label::tensor2(a.clone(), b.clone())
    }
}

fn full_terms(c: &DgCoalgebra, l: &Label) -> Vec<(Label, Label, BigInt)> {
    c.coproduct(l)
        .iter()
        .map(|(t, k)| {
            let (a, b) = split2(t);
            (a.clone(), b.clone(), k.clone())
        })
        .collect()
}

/// Tensor product coalgebra `C ⊗ C'` on labels `Tensor([a, b])`, with the
/// Koszul differential and the shuffled coproduct
/// `Δ(a⊗b) = Σ (−1)^{|a''||b'|} (a'⊗b')⊗(a''⊗b'')`. The cutoff is the
/// smaller of the two.
pub fn tensor_coalgebra(c: &DgCoalgebra, c2: &DgCoalgebra) -> Result<DgCoalgebra> {
    if c.ring != c2.ring {
        return Err(Error::Invalid(
            "tensor product of coalgebras over different rings".into(),
        ));
    }
    let ring = c.ring;
    let cutoff = c.cutoff.min(c2.cutoff);
    let mut left = vec![Label::Unit];
    left.extend(c.generators.iter().cloned());
    let mut right = vec![Label::Unit];
    right.extend(c2.generators.iter().cloned());
    let mut generators = Vec::new();
    let mut d = HashMap::new();
    let mut delta = HashMap::new();
    for a in &left {
        for b in &right {
            if a.is_unit() && b.is_unit() {
                continue;
            }
            let g = Label::tensor2(a.clone(), b.clone());
            let mut dg = Element::zero(ring, g.degree() - 1);
            for (t, k) in Coalgebra::differential(c, a).iter() {
                dg.add_term(pair(t, b), k.clone());
            }
            let s = BigInt::from(sign(a.degree()));
            for (t, k) in Coalgebra::differential(c2, b).iter() {
                dg.add_term(pair(a, t), k * &s);
            }
            let mut full = Element::zero(ring, g.degree());
            for (a1, a2, ka) in full_terms(c, a) {
                for (b1, b2, kb) in full_terms(c2, b) {
                    let s = sign(a2.degree() * b1.degree());
                    let p = pair(&a1, &b1);
                    let q = pair(&a2, &b2);
                    if p.is_unit() || q.is_unit() {
                        continue;
                    }
                    full.add_term(Label::tensor2(p, q), &ka * &kb * BigInt::from(s));
                }
            }
            d.insert(g.clone(), dg);
            delta.insert(g.clone(), full);
            generators.push(g);
        }
    }
    DgCoalgebra::new(
        format!("{}⊗{}", c.name, c2.name),
        ring,
        cutoff,
        generators,
        d,
        delta,
    )
}

/// Applies `f` to every factor of a binary tensor label, keeping units.
fn map_pair(l: &Label, f: &impl Fn(&Label) -> Label) -> Label {
    let (a, b) = split2(l);
    let g = |x: &Label| if x.is_unit() { Label::Unit } else { f(x) };
    Label::tensor2(g(a), g(b))
}

/// Direct sum `C ⊕ C'` of coalgebras (identifying the units), on labels
/// `Inj(0, c)` and `Inj(1, c')`. The cutoff is the smaller of the two.
pub fn direct_sum(c: &DgCoalgebra, c2: &DgCoalgebra) -> Result<DgCoalgebra> {
    if c.ring != c2.ring {
        return Err(Error::Invalid(
            "direct sum of coalgebras over different rings".into(),
        ));
    }
    let ring = c.ring;
    let mut generators = Vec::new();
    let mut d = HashMap::new();
    let mut delta = HashMap::new();
    for (i, part) in [c, c2].into_iter().enumerate() {
        let tag = |l: &Label| Label::inj(i as u8, l.clone());
        for g in &part.generators {
            let t = tag(g);
            d.insert(
                t.clone(),
                Coalgebra::differential(part, g).map(0, |l| Element::basis(ring, tag(l))),
            );
            delta.insert(
                t.clone(),
                part.reduced_coproduct(g)
                    .map(0, |l| Element::basis(ring, map_pair(l, &tag))),
            );
            generators.push(t);
        }
    }
    DgCoalgebra::new(
        format!("{}⊕{}", c.name, c2.name),
        ring,
        c.cutoff.min(c2.cutoff),
        generators,
        d,
        delta,
    )
}

/// Degree-indexed listing of the positive basis, for reports.
pub fn basis_table<C: Coalgebra + ?Sized>(
    c: &C,
    weight: Option<i64>,
) -> Result<BTreeMap<i64, Vec<Label>>> {
    let mut out = BTreeMap::new();
    for n in 1..=c.cutoff() {
        let b = c.positive_basis(n, weight)?;
        if !b.is_empty() {
            out.insert(n, b);
        }
    }
    Ok(out)
}

impl<T: Coalgebra + ?Sized> Coalgebra for &T {
    fn ring(&self) -> Ring {
        (**self).ring()
    }

    fn cutoff(&self) -> i64 {
        (**self).cutoff()
    }

    fn positive_basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        (**self).positive_basis(degree, weight)
    }

    fn differential(&self, c: &Label) -> Element {
        (**self).differential(c)
    }

    fn reduced_coproduct(&self, c: &Label) -> Element {
        (**self).reduced_coproduct(c)
    }
}

impl<T: Coalgebra + ?Sized + Send> Coalgebra for std::sync::Arc<T> {
    fn ring(&self) -> Ring {
        (**self).ring()
    }

    fn cutoff(&self) -> i64 {
        (**self).cutoff()
    }

    fn positive_basis(&self, degree: i64, weight: Option<i64>) -> Result<Vec<Label>> {
        (**self).positive_basis(degree, weight)
    }

    fn differential(&self, c: &Label) -> Element {
        (**self).differential(c)
    }

    fn reduced_coproduct(&self, c: &Label) -> Element {
        (**self).reduced_coproduct(c)
    }
}
