use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::complex::{ChainComplex, GradedBasis};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::matrix::{smith_normal_form, Matrix, Snf};
use crate::ring::{sign, Ring};
use crate::BigInt;

/// Span of a list of homogeneous vectors of one degree, with exact
/// coordinates for elements of the span.
#[derive(Clone, Debug)]
pub struct Span {
    ring: Ring,
    degree: i64,
    vectors: Vec<Element>,
    rows: HashMap<Label, usize>,
    snf: Snf,
}

impl Span {
    pub fn new(ring: Ring, degree: i64, vectors: Vec<Element>) -> Span {
        let labels: BTreeSet<&Label> = vectors.iter().flat_map(|v| v.terms().keys()).collect();
        let rows: HashMap<Label, usize> = labels
            .into_iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        let mut m = Matrix::zeros(rows.len(), vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            for (t, c) in v.iter() {
                m.set(rows[t], j, c.clone());
            }
        }
        let snf = smith_normal_form(&m, ring);
        Span {
            ring,
            degree,
            vectors,
            rows,
            snf,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn vectors(&self) -> &[Element] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Rank of the span.
    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    /// Whether the vectors are linearly independent.
    pub fn is_independent(&self) -> bool {
        self.rank() == self.vectors.len()
    }

    /// Coefficients `x` with `Σ x_j v_j = e`. Over ℤ and ℚ the solution must
    /// be integral; otherwise `NotInSpan` is returned.
    pub fn coordinates(&self, e: &Element) -> Result<Vec<BigInt>> {
        let ring = self.ring;
        let mut b = vec![BigInt::zero(); self.rows.len()];
        for (l, c) in e.iter() {
            match self.rows.get(l) {
                Some(&i) => b[i] = c.clone(),
                None => return Err(Error::NotInSpan),
            }
        }
        let c = if b.is_empty() {
            b
        } else {
            self.snf.u.mul_vec(&b, ring)
        };
        let r = self.rank();
        if c[r.min(c.len())..].iter().any(|x| !x.is_zero()) {
            return Err(Error::NotInSpan);
        }
        let mut y = vec![BigInt::zero(); self.vectors.len()];
        for i in 0..r {
            let d = &self.snf.factors[i];
            y[i] = match ring {
                Ring::PrimeField(_) => ring.mul(&c[i], &ring.inverse(d)),
                _ => {
                    if !(&c[i] % d).is_zero() {
                        return Err(Error::NotInSpan);
                    }
                    &c[i] / d
                }
            };
        }
        if y.is_empty() {
            return Ok(y);
        }
        Ok(self.snf.v.mul_vec(&y, ring))
    }

    /// Whether `e` lies in the span with admissible coefficients.
    pub fn contains(&self, e: &Element) -> bool {
        self.coordinates(e).is_ok()
    }

    /// `Σ x_j v_j`.
    pub fn combine(&self, x: &[BigInt]) -> Element {
        let mut out = Element::zero(self.ring, self.degree);
        for (v, c) in self.vectors.iter().zip(x) {
            if !c.is_zero() {
                out.add_scaled(v, c);
            }
        }
        out
    }
}

/// Tensor product of two complexes on labels `Tensor([a, b])`, with
/// `d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db`, truncated at `cutoff` (clamped to
/// the factors' cutoffs).
pub fn tensor_complex(a: &ChainComplex, b: &ChainComplex, cutoff: i64) -> Result<ChainComplex> {
    let ring = a.ring;
    let cutoff = cutoff.min(a.cutoff()).min(b.cutoff());
    if b.ring != ring {
        return Err(Error::Invalid(
            "tensor product of complexes over different rings".into(),
        ));
    }
    let mut labels = Vec::new();
    for p in a.basis.degrees() {
        for q in b.basis.degrees() {
            if p + q > cutoff {
                continue;
            }
            for x in a.basis.in_degree(p) {
                for y in b.basis.in_degree(q) {
                    labels.push(Label::tensor2(x.clone(), y.clone()));
                }
            }
        }
    }
    let basis = GradedBasis::new(cutoff, labels);
    ChainComplex::build(ring, basis, |t| {
        let f = t.factors();
        let (x, y) = (&f[0], &f[1]);
        let mut out = Element::zero(ring, t.degree() - 1);
        let dx = a.d(&Element::basis(ring, x.clone()));
        for (u, c) in dx.iter() {
            out.add_term(Label::tensor2(u.clone(), y.clone()), c.clone());
        }
        let s = BigInt::from(sign(x.degree()));
        let dy = b.d(&Element::basis(ring, y.clone()));
        for (u, c) in dy.iter() {
            out.add_term(Label::tensor2(x.clone(), u.clone()), c * &s);
        }
        Ok(out)
    })
}

/// Betti numbers of a tensor product predicted by convolution of free
/// ranks.
pub fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum())
        .collect()
}
