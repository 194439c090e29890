use std::collections::HashMap;

use chaincore::{sign, BigInt, Element, Error, Label, Result, Ring};

/// Bilinear multiplication on a labelled basis.
pub trait Multiplication: Sync {
    fn ring(&self) -> Ring;
    fn unit(&self) -> Label;
    fn mul_basis(&self, a: &Label, b: &Label) -> Element;

    fn mul(&self, a: &Element, b: &Element) -> Element {
        a.bimap(b, 0, |x, y| self.mul_basis(x, y))
    }

    fn unit_element(&self) -> Element {
        Element::basis(self.ring(), self.unit())
    }

    fn product(&self, factors: &[Element]) -> Element {
        let mut acc = self.unit_element();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }
}

/// Concatenation of words.
#[derive(Clone, Copy, Debug)]
pub struct Words(pub Ring);

impl Multiplication for Words {
    fn ring(&self) -> Ring {
        self.0
    }

    fn unit(&self) -> Label {
        Label::Unit
    }

    fn mul_basis(&self, a: &Label, b: &Label) -> Element {
        Element::basis(self.0, concat(a, b))
    }
}

pub fn concat(a: &Label, b: &Label) -> Label {
    let mut v = a.letters().to_vec();
    v.extend_from_slice(b.letters());
    Label::word(v)
}

/// Graded tensor product of two algebras on labels `Tensor([x, y])`:
/// `(x⊗y)(x'⊗y') = (−1)^{|y||x'|} xx'⊗yy'`.
#[derive(Clone, Copy, Debug)]
pub struct TensorProduct<A, B>(pub A, pub B);

impl<A: Multiplication, B: Multiplication> Multiplication for TensorProduct<A, B> {
    fn ring(&self) -> Ring {
        self.0.ring()
    }

    fn unit(&self) -> Label {
        Label::tensor2(self.0.unit(), self.1.unit())
    }

    fn mul_basis(&self, a: &Label, b: &Label) -> Element {
        let (x, y) = split2(a);
        let (x2, y2) = split2(b);
        let s = sign(y.degree() * x2.degree());
        let left = self.0.mul_basis(x, x2);
        let right = self.1.mul_basis(y, y2);
        left.tensor(&right).scaled(&BigInt::from(s))
    }
}

/// The two factors of a binary tensor label.
pub fn split2(l: &Label) -> (&Label, &Label) {
    match l {
        Label::Tensor(v) if v.len() == 2 => (&v[0], &v[1]),
        other => panic!("expected a binary tensor label, found {other}"),
    }
}

/// Extends `f` on letters to a map of degree `shift` on words by the
/// derivation rule
/// `D(v₁⋯v_k) = Σ_j (−1)^{shift·(|v₁|+⋯+|v_{j−1}|)} l(v₁)⋯l(v_{j−1})·f(v_j)·r(v_{j+1})⋯r(v_k)`,
/// with products taken in `mult`.
pub fn derivation_extend_with<M, L, F, R>(
    mult: &M,
    word: &Label,
    shift: i64,
    left: L,
    f: F,
    right: R,
) -> Element
where
    M: Multiplication + ?Sized,
    L: Fn(&Label) -> Element,
    F: Fn(&Label) -> Element,
    R: Fn(&Label) -> Element,
{
    let ring = mult.ring();
    let letters = word.letters();
    let mut out = Element::zero(ring, word.degree() + shift);
    let lefts: Vec<Element> = letters.iter().map(&left).collect();
    let rights: Vec<Element> = letters.iter().map(&right).collect();
    let mut prefix = mult.unit_element();
    let mut prefix_degree = 0;
    for (j, v) in letters.iter().enumerate() {
        let mid = f(v);
        if !mid.is_zero() && !prefix.is_zero() {
            let mut term = mult.mul(&prefix, &mid);
            for r in &rights[j + 1..] {
                if term.is_zero() {
                    break;
                }
                term = mult.mul(&term, r);
            }
            out.add_scaled(&term, &BigInt::from(sign(shift * prefix_degree)));
        }
        prefix = mult.mul(&prefix, &lefts[j]);
        prefix_degree += v.degree();
    }
    out
}

/// Derivation extension into words by concatenation.
pub fn derivation_extend<F>(ring: Ring, word: &Label, shift: i64, f: F) -> Element
where
    F: Fn(&Label) -> Element,
{
    let letters = word.letters();
    let mut out = Element::zero(ring, word.degree() + shift);
    let mut prefix_degree = 0;
    for (j, v) in letters.iter().enumerate() {
        let mid = f(v);
        if !mid.is_zero() {
            let s = BigInt::from(sign(shift * prefix_degree));
            for (m, c) in mid.iter() {
                let mut letters_new = letters[..j].to_vec();
                letters_new.extend_from_slice(m.letters());
                letters_new.extend_from_slice(&letters[j + 1..]);
                out.add_term(Label::word(letters_new), c * &s);
            }
        }
        prefix_degree += v.degree();
    }
    out
}

/// Extends `f` on letters multiplicatively: `w ↦ f(v₁)⋯f(v_k)`.
pub fn multiplicative_extend<M, F>(mult: &M, word: &Label, f: F) -> Element
where
    M: Multiplication + ?Sized,
    F: Fn(&Label) -> Element,
{
    let mut acc = mult.unit_element();
    for v in word.letters() {
        if acc.is_zero() {
            break;
        }
        acc = mult.mul(&acc, &f(v));
    }
    acc
}

/// Enumerates words of exact degree `n` in an alphabet given degreewise.
///
/// Without a weight bound every letter must have positive degree. With a
/// weight bound the words of exact weight `w` are returned; letters must
/// then have positive weight.
pub fn enumerate_words<F>(letters: F, n: i64, weight: Option<i64>) -> Result<Vec<Label>>
where
    F: Fn(i64, Option<i64>) -> Result<Vec<Label>>,
{
    if n < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    match weight {
        None => {
            if !letters(0, None)?.is_empty() {
                return Err(Error::NotFiniteType(n));
            }
            let table: Vec<Vec<Label>> =
                (0..=n).map(|k| letters(k, None)).collect::<Result<_>>()?;
            let mut stack = Vec::new();
            words_by_degree(&table, n, &mut stack, &mut out);
        }
        Some(w) => {
            if w < 0 {
                return Ok(Vec::new());
            }
            let mut table: HashMap<(i64, i64), Vec<Label>> = HashMap::new();
            for k in 0..=n {
                for v in 1..=w {
                    let ls = letters(k, Some(v))?;
                    if !ls.is_empty() {
                        table.insert((k, v), ls);
                    }
                }
            }
            let mut keys: Vec<(i64, i64)> = table.keys().copied().collect();
            keys.sort();
            let mut stack = Vec::new();
            words_by_bidegree(&table, &keys, n, w, &mut stack, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

fn words_by_degree(table: &[Vec<Label>], n: i64, stack: &mut Vec<Label>, out: &mut Vec<Label>) {
    if n == 0 {
        out.push(Label::word(stack.clone()));
        return;
    }
    for k in 1..=n {
        for l in &table[k as usize] {
            stack.push(l.clone());
            words_by_degree(table, n - k, stack, out);
            stack.pop();
        }
    }
}

fn words_by_bidegree(
    table: &HashMap<(i64, i64), Vec<Label>>,
    keys: &[(i64, i64)],
    n: i64,
    w: i64,
    stack: &mut Vec<Label>,
    out: &mut Vec<Label>,
) {
    if n == 0 && w == 0 {
        out.push(Label::word(stack.clone()));
        return;
    }
    for &(k, v) in keys {
        if k > n || v > w {
            continue;
        }
        for l in &table[&(k, v)] {
            stack.push(l.clone());
            words_by_bidegree(table, keys, n - k, w - v, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alphabet(k: i64, _w: Option<i64>) -> Result<Vec<Label>> {
        Ok(match k {
            1 => vec![Label::gen("a", 1)],
            2 => vec![Label::gen("b", 2)],
            _ => vec![],
        })
    }

    #[test]
    fn fibonacci_counts() {
        let counts: Vec<usize> = (0..7)
            .map(|n| enumerate_words(alphabet, n, None).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn degree_zero_letters_need_weight() {
        let zero = |k: i64, w: Option<i64>| -> Result<Vec<Label>> {
            Ok(match (k, w) {
                (0, None) | (0, Some(2)) => vec![Label::desusp(Label::gen("u", 1))],
                _ => vec![],
            })
        };
        assert_eq!(enumerate_words(zero, 0, None), Err(Error::NotFiniteType(0)));
        assert_eq!(enumerate_words(zero, 0, Some(6)).unwrap().len(), 1);
    }

    #[test]
    fn two_letter_koszul_sign() {
        let r = Ring::Integers;
        let v = Label::gen("v", 3);
        let w = Label::gen("w", 2);
        let vv = Label::word(vec![v.clone(), v.clone()]);
        let d = derivation_extend(r, &vv, -1, |l| {
            if l == &v {
                Element::basis(r, w.clone())
            } else {
                Element::zero(r, l.degree() - 1)
            }
        });
        let mut expected = Element::zero(r, 5);
        expected.add_term(Label::word(vec![w.clone(), v.clone()]), BigInt::from(1));
        expected.add_term(Label::word(vec![v.clone(), w.clone()]), BigInt::from(-1));
        assert_eq!(d, expected);
    }
}
