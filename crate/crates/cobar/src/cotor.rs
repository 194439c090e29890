use std::collections::BTreeMap;

use chaincore::{homology, verify_differential, BigInt, Error, HomologyTable, Result};
use hopfalg::{Comodule, HopfAlgebra, HopfAsCoalgebra, Multiplication, Side};

use crate::one_sided::one_sided_cobar;
use crate::twisted::RightTwisted;

/// Homology with the structure constants of its induced product.
#[derive(Clone, Debug)]
pub struct AlgebraOnHomology {
    pub table: HomologyTable,
    /// `(p, i, q, j) ↦ coordinates of [z_{p,i}·z_{q,j}]` in degree `p + q`,
    /// against the representatives of `table`.
    pub products: BTreeMap<(i64, usize, i64, usize), Vec<BigInt>>,
    pub budget: i64,
}

impl AlgebraOnHomology {
    pub fn product(&self, p: i64, i: usize, q: i64, j: usize) -> Option<&Vec<BigInt>> {
        self.products.get(&(p, i, q, j))
    }
}

/// `Cotor^H(B, R) = H(B ⊗_{tΩ} ΩH)` for a right `H`-comodule algebra `B`,
/// with products of representatives classified up to degree `budget`
/// (clamped below the cutoff).
pub fn cotor<H, B, MB>(h: &H, b: &B, b_mult: &MB, budget: i64) -> Result<AlgebraOnHomology>
where
    H: HopfAlgebra,
    B: Comodule,
    MB: Multiplication,
{
    if b.side() != Side::Right {
        return Err(Error::Invalid(
            "Cotor expects a right comodule algebra".into(),
        ));
    }
    let tt = one_sided_cobar(b, HopfAsCoalgebra(h), None)?;
    let complex = tt.complex(None)?;
    let check = verify_differential(&complex);
    if let Some((l, r)) = check.counterexample {
        return Err(Error::Invalid(format!(
            "twisted differential squares to {r} on {l}"
        )));
    }
    let table = homology(&complex);
    let budget = budget.min(table.cutoff - 1);
    let mult = RightTwisted {
        comodule: b,
        algebra: b_mult,
    };
    let mut products = BTreeMap::new();
    let groups: Vec<_> = table.groups().collect();
    for gp in &groups {
        for gq in &groups {
            let n = gp.degree + gq.degree;
            if n > budget {
                continue;
            }
            let target = table.group(n)?;
            for (i, zi) in gp.representatives.iter().enumerate() {
                for (j, zj) in gq.representatives.iter().enumerate() {
                    let prod = mult.mul(zi, zj);
                    products.insert((gp.degree, i, gq.degree, j), target.classify(&prod)?);
                }
            }
        }
    }
    Ok(AlgebraOnHomology {
        table,
        products,
        budget,
    })
}
