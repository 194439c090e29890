use std::collections::{BTreeMap, HashMap};

use chaincore::{sign, BigInt, Element, Label, Result};
use hopfalg::{split2, Coalgebra, DgCoalgebra};
use shcoalg::AwCoalgebra;

/// `σ` on a single label: `c ↦ c̄`, `1 ↦ 0`.
fn bar_label(l: &Label) -> Option<Label> {
    if l.is_unit() {
        None
    } else {
        Some(Label::bar(l.clone()))
    }
}

fn bar_element(e: &Element) -> Element {
    let mut out = Element::zero(e.ring(), e.degree() - 1);
    for (l, c) in e.iter() {
        if let Some(b) = bar_label(l) {
            out.add_term(b, c.clone());
        }
    }
    out
}

/// `D(σ)` on a tensor of labels `x₁⊗…⊗x_m`:
/// `Σ_j (−1)^{|x₁|+⋯+|x_{j−1}|} x₁⊗…⊗σx_j⊗…⊗x_m`.
pub fn sigma_derivation(factors: &[Label]) -> Vec<(Vec<Label>, i64)> {
    let mut out = Vec::new();
    let mut prefix = 0;
    for (j, x) in factors.iter().enumerate() {
        if let Some(b) = bar_label(x) {
            let mut v = factors.to_vec();
            v[j] = b;
            out.push((v, sign(prefix)));
        }
        prefix += x.degree();
    }
    out
}

/// The based-path object `𝔓(C)` on `C₊ ⊕ C̄₊`, with
/// `d̃c = dc − c̄`, `d̃c̄ = −(dc)‾`, `D̃ι = (ι⊗ι)Δ` and `D̃σ = (σ⊗ι + ι⊗σ)Δ`.
/// The `ι`-copy keeps the labels of `C`; `σ`-copies are `Bar` labels.
pub fn path_object(c: &DgCoalgebra) -> Result<DgCoalgebra> {
    let ring = c.ring;
    let mut generators = Vec::new();
    let mut d = HashMap::new();
    let mut delta = HashMap::new();
    for g in c.generators() {
        let bar = Label::bar(g.clone());
        let dg = Coalgebra::differential(c, g);
        let mut dt = dg.clone();
        dt.add_term(bar.clone(), BigInt::from(-1));
        d.insert(g.clone(), dt);
        d.insert(bar.clone(), bar_element(&dg).neg());
        let reduced = c.reduced_coproduct(g);
        delta.insert(g.clone(), reduced.clone());
        let mut rb = Element::zero(ring, bar.degree());
        for (t, k) in reduced.iter() {
            let (a, b) = split2(t);
            for (v, s) in sigma_derivation(&[a.clone(), b.clone()]) {
                rb.add_term(Label::Tensor(v), k * BigInt::from(s));
            }
        }
        delta.insert(bar.clone(), rb);
        generators.push(g.clone());
        generators.push(bar);
    }
    DgCoalgebra::new(
        format!("P({})", c.name),
        ring,
        c.cutoff,
        generators,
        d,
        delta,
    )
}

/// `Ψ̃` on `𝔓(C)`: `Ψ̃_k(ιc) = ι^{⊗2k}Ψ_k(c)` and
/// `Ψ̃_k(c̄) = (−1)^{k−1} D(σ)Ψ_k(c)` over the `2k` flattened factors. The
/// sign `(−1)^{k−1}` moves `σ` past the `k − 1` degrees of `Ψ_k`.
pub fn extend_psi(a: &AwCoalgebra) -> Result<AwCoalgebra> {
    let ring = a.ring();
    let p = path_object(&a.coalgebra)?;
    let mut higher: BTreeMap<usize, HashMap<Label, Element>> = BTreeMap::new();
    for (k, m) in a.higher() {
        let level = higher.entry(k).or_default();
        for (c, v) in m {
            let bar = Label::bar(c.clone());
            let mut vb = Element::zero(ring, bar.degree() + k as i64 - 1);
            for (t, coeff) in v.iter() {
                let flat: Vec<Label> = t
                    .factors()
                    .iter()
                    .flat_map(|pair| pair.factors().to_vec())
                    .collect();
                for (f, s) in sigma_derivation(&flat) {
                    let s = s * sign(k as i64 - 1);
                    let pairs = f
                        .chunks(2)
                        .map(|ch| Label::tensor2(ch[0].clone(), ch[1].clone()))
                        .collect();
                    vb.add_term(Label::Tensor(pairs), coeff * BigInt::from(s));
                }
            }
            level.insert(c.clone(), v.clone());
            level.insert(bar, vb);
        }
    }
    AwCoalgebra::new(p, higher)
}
