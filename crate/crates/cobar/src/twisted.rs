use chaincore::{sign, BigInt, Element, Label, Ring};
use hopfalg::{concat, split2, Comodule, Multiplication, Words};

use crate::cobar::undesusp;

/// Product on `ΩH ⊗_{tΩ} B` for a left `H`-comodule algebra `B` over a
/// free Hopf algebra `H`.
///
/// `ΩH` acts freely on the left, `1⊗B` is a subalgebra, and
/// `(1⊗b)(s⁻¹a⊗1) = Σ (−1)^{|b'| + (|a|+1)|b''|} s⁻¹(b'·a)⊗b''`
/// over the full coaction `ν(b) = Σ b'⊗b''`.
pub struct LeftTwisted<'a, B: ?Sized, MB: ?Sized> {
    pub comodule: &'a B,
    pub algebra: &'a MB,
}

impl<B: Comodule + ?Sized, MB: Multiplication + ?Sized> LeftTwisted<'_, B, MB> {
    /// `(1⊗b)(W⊗1)` for a word `W` in `ΩH`.
    pub fn commute(&self, b: &Label, w: &Label) -> Element {
        let ring = self.comodule.ring();
        let degree = b.degree() + w.degree();
        if b.is_unit() || w.is_unit() {
            return Element::basis(ring, Label::tensor2(w.clone(), b.clone()));
        }
        let letters = w.letters();
        let a = undesusp(&letters[0]);
        let rest = Label::word(letters[1..].to_vec());
        let words = Words(ring);
        let mut out = Element::zero(ring, degree);
        for (t, k) in self.comodule.coaction(b).iter() {
            let (b1, b2) = split2(t);
            let s = sign(b1.degree() + (a.degree() + 1) * b2.degree());
            let tail = self.commute(b2, &rest);
            for (p, kp) in words.mul_basis(b1, a).iter() {
                let letter = Label::word(vec![Label::desusp(p.clone())]);
                for (u, ku) in tail.iter() {
                    let (uw, ub) = split2(u);
                    out.add_term(
                        Label::tensor2(concat(&letter, uw), ub.clone()),
                        k * kp * ku * BigInt::from(s),
                    );
                }
            }
        }
        out
    }
}

impl<B: Comodule + ?Sized, MB: Multiplication + ?Sized> Multiplication for LeftTwisted<'_, B, MB> {
    fn ring(&self) -> Ring {
        self.comodule.ring()
    }

    fn unit(&self) -> Label {
        Label::tensor2(Label::Unit, Label::Unit)
    }

    fn mul_basis(&self, x: &Label, y: &Label) -> Element {
        let ring = self.ring();
        let (w, b) = split2(x);
        let (w2, b2) = split2(y);
        let mut out = Element::zero(ring, x.degree() + y.degree());
        for (t, k) in self.commute(b, w2).iter() {
            let (u, c) = split2(t);
            let prefix = concat(w, u);
            for (p, kp) in self.algebra.mul_basis(c, b2).iter() {
                out.add_term(Label::tensor2(prefix.clone(), p.clone()), k * kp);
            }
        }
        out
    }
}

/// Product on `B ⊗_{tΩ} ΩH` for a right `H`-comodule algebra `B`.
///
/// `ΩH` acts freely on the right, `B⊗1` is a subalgebra, and
/// `(1⊗s⁻¹a)(b⊗1) = Σ (−1)^{(|a|+1)|b₀|} b₀⊗s⁻¹(a·b₁)` over the full
/// coaction `ν(b) = Σ b₀⊗b₁`.
pub struct RightTwisted<'a, B: ?Sized, MB: ?Sized> {
    pub comodule: &'a B,
    pub algebra: &'a MB,
}

impl<B: Comodule + ?Sized, MB: Multiplication + ?Sized> RightTwisted<'_, B, MB> {
    /// `(1⊗W)(b⊗1)` for a word `W` in `ΩH`.
    pub fn commute(&self, w: &Label, b: &Label) -> Element {
        let ring = self.comodule.ring();
        let degree = b.degree() + w.degree();
        if b.is_unit() || w.is_unit() {
            return Element::basis(ring, Label::tensor2(b.clone(), w.clone()));
        }
        let letters = w.letters();
        let last = letters.len() - 1;
        let a = undesusp(&letters[last]);
        let rest = Label::word(letters[..last].to_vec());
        let words = Words(ring);
        let mut out = Element::zero(ring, degree);
        for (t, k) in self.comodule.coaction(b).iter() {
            let (b0, b1) = split2(t);
            let s = sign((a.degree() + 1) * b0.degree());
            let head = self.commute(&rest, b0);
            for (p, kp) in words.mul_basis(a, b1).iter() {
                let letter = Label::word(vec![Label::desusp(p.clone())]);
                for (u, ku) in head.iter() {
                    let (ub, uw) = split2(u);
                    out.add_term(
                        Label::tensor2(ub.clone(), concat(uw, &letter)),
                        k * kp * ku * BigInt::from(s),
                    );
                }
            }
        }
        out
    }
}

impl<B: Comodule + ?Sized, MB: Multiplication + ?Sized> Multiplication for RightTwisted<'_, B, MB> {
    fn ring(&self) -> Ring {
        self.comodule.ring()
    }

    fn unit(&self) -> Label {
        Label::tensor2(Label::Unit, Label::Unit)
    }

    fn mul_basis(&self, x: &Label, y: &Label) -> Element {
        let ring = self.ring();
        let (b, w) = split2(x);
        let (b2, w2) = split2(y);
        let mut out = Element::zero(ring, x.degree() + y.degree());
        for (t, k) in self.commute(w, b2).iter() {
            let (c, u) = split2(t);
            let suffix = concat(u, w2);
            for (p, kp) in self.algebra.mul_basis(b, c).iter() {
                out.add_term(Label::tensor2(p.clone(), suffix.clone()), k * kp);
            }
        }
        out
    }
}

/// The ground ring as an algebra on the single label `Unit`.
#[derive(Clone, Copy, Debug)]
pub struct GroundRing(pub Ring);

impl Multiplication for GroundRing {
    fn ring(&self) -> Ring {
        self.0
    }

    fn unit(&self) -> Label {
        Label::Unit
    }

    fn mul_basis(&self, _a: &Label, _b: &Label) -> Element {
        Element::basis(self.0, Label::Unit)
    }
}

/// `D(xy) − D(x)y − (−1)^{|x|} x D(y)`.
pub fn leibniz_residue<M, D>(mult: &M, d: D, x: &Element, y: &Element) -> Element
where
    M: Multiplication + ?Sized,
    D: Fn(&Element) -> Element,
{
    let lhs = d(&mult.mul(x, y));
    let mut r = lhs.minus(&mult.mul(&d(x), y));
    r.sub_assign(&mult.mul(x, &d(y)).scaled(&BigInt::from(sign(x.degree()))));
    r
}
