use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::ring::Ring;

/// Sparse homogeneous linear combination of labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    ring: Ring,
    degree: i64,
    terms: BTreeMap<Label, BigInt>,
}

impl Element {
    pub fn zero(ring: Ring, degree: i64) -> Element {
        Element {
            ring,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(ring: Ring) -> Element {
        Element::basis(ring, Label::Unit)
    }

    pub fn basis(ring: Ring, label: Label) -> Element {
        Element::term(ring, label, BigInt::one())
    }

    pub fn term(ring: Ring, label: Label, coeff: BigInt) -> Element {
        let mut e = Element::zero(ring, label.degree());
        e.add_term(label, coeff);
        e
    }

    /// Builds an element from terms, checking that every label has the
    /// requested degree.
    pub fn from_terms<I>(ring: Ring, degree: i64, terms: I) -> Result<Element>
    where
        I: IntoIterator<Item = (Label, BigInt)>,
    {
        let mut e = Element::zero(ring, degree);
        for (l, c) in terms {
            if l.degree() != degree {
                return Err(Error::Degree {
                    expected: degree,
                    found: l.degree(),
                    label: l,
                });
            }
            e.add_term(l, c);
        }
        Ok(e)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Label, BigInt> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &Label) -> BigInt {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    /// Adds `coeff·label`. Panics when the label has the wrong degree.
    pub fn add_term(&mut self, label: Label, coeff: BigInt) {
        assert_eq!(
            label.degree(),
            self.degree,
            "label {label} has wrong degree"
        );
        let c = self.ring.reduce(coeff);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(label);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, coeff: &BigInt) {
        if other.is_zero() || coeff.is_zero() {
            return;
        }
        assert_eq!(other.degree, self.degree, "degree mismatch in sum");
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c * coeff);
        }
    }

    pub fn add_assign(&mut self, other: &Element) {
        self.add_scaled(other, &BigInt::one());
    }

    pub fn sub_assign(&mut self, other: &Element) {
        self.add_scaled(other, &-BigInt::one());
    }

    pub fn scaled(&self, coeff: &BigInt) -> Element {
        let mut e = Element::zero(self.ring, self.degree);
        e.add_scaled(self, coeff);
        e
    }

    pub fn neg(&self) -> Element {
        self.scaled(&-BigInt::one())
    }

    pub fn plus(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.add_assign(other);
        e
    }

    pub fn minus(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.sub_assign(other);
        e
    }

    /// Applies a label-level linear function, producing an element of
    /// degree `self.degree + shift`.
    pub fn map<F>(&self, shift: i64, mut f: F) -> Element
    where
        F: FnMut(&Label) -> Element,
    {
        let mut out = Element::zero(self.ring, self.degree + shift);
        for (l, c) in &self.terms {
            let v = f(l);
            if !v.is_zero() {
                out.add_scaled(&v, c);
            }
        }
        out
    }

    /// Applies a bilinear label function to `self ⊗ other`.
    pub fn bimap<F>(&self, other: &Element, shift: i64, mut f: F) -> Element
    where
        F: FnMut(&Label, &Label) -> Element,
    {
        let mut out = Element::zero(self.ring, self.degree + other.degree + shift);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let v = f(a, b);
                if !v.is_zero() {
                    out.add_scaled(&v, &(ca * cb));
                }
            }
        }
        out
    }

    /// Tensor product with labels `Tensor([a, b])`.
    pub fn tensor(&self, other: &Element) -> Element {
        self.bimap(other, 0, |a, b| {
            Element::basis(self.ring, Label::tensor2(a.clone(), b.clone()))
        })
    }

    /// Keeps only the terms satisfying the predicate.
    pub fn filter<F: Fn(&Label) -> bool>(&self, pred: F) -> Element {
        let mut e = Element::zero(self.ring, self.degree);
        for (l, c) in &self.terms {
            if pred(l) {
                e.terms.insert(l.clone(), c.clone());
            }
        }
        e
    }

    /// Checks that every term has the given weight.
    pub fn check_weight(&self, weight: i64) -> Result<()> {
        for l in self.terms.keys() {
            if l.weight() != weight {
                return Err(Error::Weight {
                    label: l.clone(),
                    expected: weight,
                    found: l.weight(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if a.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "{a}·{l}")?;
            }
        }
        Ok(())
    }
}
