use std::fmt;
use std::sync::Arc;

/// Structured basis label.
///
/// Every basis element in the library is named by a `Label`. Labels carry
/// enough structure to recover their degree and weight without any outside
/// context, and the derived ordering is the canonical per-degree order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// The unit (or counit) element, degree 0.
    Unit,
    /// A named generator with its degree.
    Gen(Arc<str>, i64),
    /// Path-object partner `c̄` of a label, one degree lower.
    Bar(Box<Label>),
    /// Desuspension `s⁻¹c`, one degree lower.
    Desusp(Box<Label>),
    /// Product of letters in a free algebra. Never empty.
    Word(Vec<Label>),
    /// Tensor of factors. Factors may be `Unit`.
    Tensor(Vec<Label>),
    /// Summand tag in a direct sum.
    Inj(u8, Box<Label>),
    /// Coordinate vector of a subcomplex basis: degree, weight, index.
    Coord(i64, i64, u32),
    /// Iterated commutator `[x₁,[x₂,[…[x_m, t]…]]]`.
    Bracket(Vec<Label>, Box<Label>),
}

impl Label {
    pub fn gen(name: &str, degree: i64) -> Label {
        Label::Gen(Arc::from(name), degree)
    }

    pub fn bar(l: Label) -> Label {
        Label::Bar(Box::new(l))
    }

    pub fn desusp(l: Label) -> Label {
        Label::Desusp(Box::new(l))
    }

    pub fn inj(i: u8, l: Label) -> Label {
        Label::Inj(i, Box::new(l))
    }

    /// Word from letters; the empty word is the unit and a unit letter is
    /// dropped.
    pub fn word(letters: Vec<Label>) -> Label {
        let letters: Vec<Label> = letters.into_iter().filter(|l| !l.is_unit()).collect();
        if letters.is_empty() {
            Label::Unit
        } else {
            Label::Word(letters)
        }
    }

    pub fn tensor2(a: Label, b: Label) -> Label {
        Label::Tensor(vec![a, b])
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Label::Unit)
    }

    pub fn degree(&self) -> i64 {
        match self {
            Label::Unit => 0,
            Label::Gen(_, d) => *d,
            Label::Bar(l) | Label::Desusp(l) => l.degree() - 1,
            Label::Word(v) | Label::Tensor(v) => v.iter().map(Label::degree).sum(),
            Label::Inj(_, l) => l.degree(),
            Label::Coord(d, _, _) => *d,
            Label::Bracket(xs, t) => xs.iter().map(Label::degree).sum::<i64>() + t.degree(),
        }
    }

    /// Sum of the generator degrees occurring in the label.
    pub fn weight(&self) -> i64 {
        match self {
            Label::Unit => 0,
            Label::Gen(_, d) => *d,
            Label::Bar(l) | Label::Desusp(l) | Label::Inj(_, l) => l.weight(),
            Label::Word(v) | Label::Tensor(v) => v.iter().map(Label::weight).sum(),
            Label::Coord(_, w, _) => *w,
            Label::Bracket(xs, t) => xs.iter().map(Label::weight).sum::<i64>() + t.weight(),
        }
    }

    /// Letters of a word label. The unit has no letters and any other
    /// non-word label is a single letter.
    pub fn letters(&self) -> &[Label] {
        match self {
            Label::Unit => &[],
            Label::Word(v) => v,
            other => std::slice::from_ref(other),
        }
    }

    /// Factors of a tensor label.
    pub fn factors(&self) -> &[Label] {
        match self {
            Label::Tensor(v) => v,
            other => std::slice::from_ref(other),
        }
    }

    /// Number of letters in a barred position, counted recursively.
    pub fn bar_count(&self) -> usize {
        match self {
            Label::Unit | Label::Gen(..) | Label::Coord(..) => 0,
            Label::Bar(l) => 1 + l.bar_count(),
            Label::Desusp(l) | Label::Inj(_, l) => l.bar_count(),
            Label::Word(v) | Label::Tensor(v) => v.iter().map(Label::bar_count).sum(),
            Label::Bracket(xs, t) => xs.iter().map(Label::bar_count).sum::<usize>() + t.bar_count(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Unit => write!(f, "1"),
            Label::Gen(name, _) => write!(f, "{name}"),
            Label::Bar(l) => match l.as_ref() {
                Label::Gen(name, _) => write!(f, "{name}\u{304}"),
                other => write!(f, "bar({other})"),
            },
            Label::Desusp(l) => match l.as_ref() {
                Label::Gen(..) | Label::Bar(_) => write!(f, "s⁻¹{l}"),
                other => write!(f, "s⁻¹({other})"),
            },
            Label::Word(v) => {
                for (i, l) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, "·")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
            Label::Tensor(v) => {
                write!(f, "(")?;
                for (i, l) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, "⊗")?;
                    }
                    write!(f, "{l}")?;
                }
                write!(f, ")")
            }
            Label::Inj(i, l) => write!(f, "in{i}({l})"),
            Label::Coord(d, w, i) => write!(f, "e[{d},{w},{i}]"),
            Label::Bracket(xs, t) => {
                for x in xs {
                    write!(f, "[{x},")?;
                }
                write!(f, "{t}")?;
                for _ in xs {
                    write!(f, "]")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_weights() {
        let x = Label::gen("x", 3);
        let sx = Label::desusp(x.clone());
        let sxb = Label::desusp(Label::bar(x.clone()));
        assert_eq!(sx.degree(), 2);
        assert_eq!(sxb.degree(), 1);
        let w = Label::word(vec![sx.clone(), sxb.clone()]);
        assert_eq!(w.degree(), 3);
        assert_eq!(w.weight(), 6);
        assert_eq!(w.bar_count(), 1);
        assert_eq!(Label::word(vec![]), Label::Unit);
        assert_eq!(Label::tensor2(Label::Unit, x).degree(), 3);
    }

    #[test]
    fn display() {
        let x = Label::gen("x", 3);
        let w = Label::word(vec![
            Label::desusp(x.clone()),
            Label::desusp(Label::bar(x.clone())),
        ]);
        assert_eq!(w.to_string(), "s⁻¹x·s⁻¹x\u{304}");
        assert_eq!(Label::tensor2(Label::Unit, x).to_string(), "(1⊗x)");
    }
}
