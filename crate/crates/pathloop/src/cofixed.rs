use std::collections::BTreeMap;

use chaincore::{kernel_of, ChainComplex, Element, Error, GradedBasis, Label, Result, Ring, Span};
use rayon::prelude::*;

/// Cofixed points `ker(ν̄)`, `ν̄ = ν − (id⊗1)`, of a right coaction, one
/// saturated basis per degree, inside a fixed weight block when a weight
/// is given.
///
/// Basis vectors are named `Coord(n, w, i)` with `w` the block weight (0
/// without a weight).
#[derive(Clone, Debug)]
pub struct Cofixed {
    pub ring: Ring,
    pub cutoff: i64,
    pub weight: Option<i64>,
    spans: BTreeMap<i64, Span>,
}

/// Extracts `ker(ν̄)` degreewise through the cutoff. `basis` lists the
/// source basis of a degree and weight; `reduced` is `ν̄` on a basis label.
pub fn cofixed_subalgebra<B, N>(
    ring: Ring,
    cutoff: i64,
    weight: Option<i64>,
    basis: B,
    reduced: N,
) -> Result<Cofixed>
where
    B: Fn(i64, Option<i64>) -> Result<Vec<Label>> + Sync,
    N: Fn(&Label) -> Element + Sync,
{
    let spans = (0..=cutoff)
        .into_par_iter()
        .map(|n| {
            let labels = basis(n, weight)?;
            let vectors = kernel_of(ring, &labels, n, &reduced);
            Ok((n, Span::new(ring, n, vectors)))
        })
        .collect::<Result<BTreeMap<i64, Span>>>()?;
    Ok(Cofixed {
        ring,
        cutoff,
        weight,
        spans,
    })
}

impl Cofixed {
    pub fn rank(&self, n: i64) -> usize {
        self.spans.get(&n).map_or(0, Span::len)
    }

    pub fn ranks(&self, top: i64) -> Vec<usize> {
        (0..=top).map(|n| self.rank(n)).collect()
    }

    pub fn span(&self, n: i64) -> Option<&Span> {
        self.spans.get(&n)
    }

    pub fn vectors(&self, n: i64) -> &[Element] {
        self.spans.get(&n).map_or(&[], Span::vectors)
    }

    pub fn label(&self, n: i64, i: usize) -> Label {
        Label::Coord(n, self.weight.unwrap_or(0), i as u32)
    }

    /// The source element named by a `Coord` label of this block.
    pub fn element(&self, l: &Label) -> &Element {
        match l {
            Label::Coord(n, _, i) => &self.vectors(*n)[*i as usize],
            other => panic!("{other} is not a coordinate label"),
        }
    }

    /// Coordinates of a source element lying in the subspace, as an element
    /// on `Coord` labels.
    pub fn express(&self, e: &Element) -> Result<Element> {
        let n = e.degree();
        let mut out = Element::zero(self.ring, n);
        if e.is_zero() {
            return Ok(out);
        }
        let span = self.spans.get(&n).ok_or(Error::TruncationBoundary {
            degree: n,
            cutoff: self.cutoff,
        })?;
        for (i, c) in span.coordinates(e)?.into_iter().enumerate() {
            out.add_term(self.label(n, i), c);
        }
        Ok(out)
    }

    /// Expands an element on `Coord` labels back into the source.
    pub fn expand(&self, e: &Element) -> Element {
        e.map(0, |l| self.element(l).clone())
    }

    pub fn graded_basis(&self) -> GradedBasis {
        let labels = self
            .spans
            .iter()
            .flat_map(|(n, s)| (0..s.len()).map(move |i| self.label(*n, i)));
        GradedBasis::new(self.cutoff, labels)
    }

    /// The subcomplex for a source differential `d`, failing if `d` leaves
    /// the subspace.
    pub fn complex<D>(&self, d: D) -> Result<ChainComplex>
    where
        D: Fn(&Element) -> Element + Sync,
    {
        ChainComplex::build(self.ring, self.graded_basis(), |l| {
            let v = self.element(l);
            if v.degree() == 0 {
                return Ok(Element::zero(self.ring, -1));
            }
            self.express(&d(v))
        })
    }

    /// Basis pairs in degrees `p + q ≤ top` whose product leaves `target`.
    /// For a block `self` of weight `w` and `other` of weight `w'`, `target`
    /// is the block of weight `w + w'`.
    pub fn product_closure_failures<M>(
        &self,
        other: &Cofixed,
        target: &Cofixed,
        top: i64,
        mul: M,
    ) -> Vec<(Label, Label)>
    where
        M: Fn(&Element, &Element) -> Element,
    {
        let mut bad = Vec::new();
        for p in 0..=top {
            for q in 0..=top - p {
                for (i, a) in self.vectors(p).iter().enumerate() {
                    for (j, b) in other.vectors(q).iter().enumerate() {
                        let ab = mul(a, b);
                        if !ab.is_zero() && target.express(&ab).is_err() {
                            bad.push((self.label(p, i), other.label(q, j)));
                        }
                    }
                }
            }
        }
        bad
    }

    /// Whether a source element lies in the subspace.
    pub fn contains(&self, e: &Element) -> bool {
        e.is_zero() || self.spans.get(&e.degree()).is_some_and(|s| s.contains(e))
    }
}
