use std::collections::HashMap;

use chaincore::{homology, ChainComplex, Element, HomologyTable, Label, Result, Ring, Span};
use hopfalg::{FreeAlgebra, TensorAlgebraDga};
use pathloop::{path_loop, PathLoop};
use rayon::prelude::*;
use shcoalg::AwCoalgebra;

use crate::bracket::{bracket_basis, expand_bracket, expand_word};

/// `T(𝔄(s⁻¹C)(s⁻¹C̄))` with the differential transported from the
/// path-loop algebra through the bracket expansion.
pub struct FormalDlModel {
    pub path_loop: PathLoop,
    pub algebra: TensorAlgebraDga,
}

pub fn formal_dl(a: &AwCoalgebra) -> Result<FormalDlModel> {
    let ring = a.ring();
    let cutoff = a.cutoff();
    let letters: Vec<Label> = bracket_basis(a, cutoff)?.into_values().flatten().collect();
    let pl = path_loop(a)?;
    let bare = TensorAlgebraDga::new(ring, cutoff, letters.clone(), HashMap::new())?;
    let d = letters
        .par_iter()
        .map(|b| {
            let target = pl.hopf.d(&expand_bracket(ring, b));
            if target.is_zero() {
                return Ok(None);
            }
            let words = bare.basis(b.degree() - 1, Some(b.weight()))?;
            let span = Span::new(
                ring,
                b.degree() - 1,
                words.iter().map(|w| expand_word(ring, w)).collect(),
            );
            let x = span.coordinates(&target)?;
            let mut v = Element::zero(ring, b.degree() - 1);
            for (w, c) in words.iter().zip(x) {
                v.add_term(w.clone(), c);
            }
            Ok(Some((b.clone(), v)))
        })
        .collect::<Result<Vec<_>>>()?;
    let algebra = TensorAlgebraDga::new(ring, cutoff, letters, d.into_iter().flatten().collect())?;
    Ok(FormalDlModel {
        path_loop: pl,
        algebra,
    })
}

impl FormalDlModel {
    pub fn ring(&self) -> Ring {
        self.algebra.ring
    }

    pub fn cutoff(&self) -> i64 {
        self.algebra.cutoff
    }

    pub fn letters(&self) -> &[Label] {
        self.algebra.alphabet()
    }

    /// Image in the path-loop algebra.
    pub fn expand(&self, e: &Element) -> Element {
        e.map(0, |w| expand_word(self.ring(), w))
    }

    pub fn ranks(&self, top: i64, weight: Option<i64>) -> Result<Vec<usize>> {
        (0..=top)
            .map(|n| Ok(self.algebra.basis(n, weight)?.len()))
            .collect()
    }

    pub fn complex(&self, weight: Option<i64>) -> Result<ChainComplex> {
        self.algebra.complex(weight)
    }

    pub fn homology(&self, weight: Option<i64>) -> Result<HomologyTable> {
        Ok(homology(&self.complex(weight)?))
    }
}
