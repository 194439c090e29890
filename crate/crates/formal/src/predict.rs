use chaincore::{Error, Label, Result};
use shcoalg::AwCoalgebra;

use crate::bracket::alphabets;

/// A predicted polynomial generator `ad^{2^k−1}(x)(x̄)` of the mod-2
/// homology of the double-loop model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedGenerator {
    pub bracket: Label,
    pub k: u32,
    pub degree: i64,
    pub weight: i64,
}

/// `ad^{2^k−1}(s⁻¹x)(s⁻¹x̄)` for each generator `x` and `k ≥ 0` of degree at
/// most `cutoff`, sorted by degree and weight.
pub fn mod2_predicted_generators(a: &AwCoalgebra, cutoff: i64) -> Result<Vec<PredictedGenerator>> {
    if a.ring().characteristic() != 2 {
        return Err(Error::Invalid(
            "the polynomial prediction is stated over F2".into(),
        ));
    }
    let (v, w) = alphabets(a)?;
    let mut out = Vec::new();
    for (x, xbar) in v.iter().zip(&w) {
        for k in 0.. {
            let m = (1usize << k) - 1;
            let degree = m as i64 * x.degree() + xbar.degree();
            if degree > cutoff {
                break;
            }
            let bracket = Label::Bracket(vec![x.clone(); m], Box::new(xbar.clone()));
            let weight = bracket.weight();
            out.push(PredictedGenerator {
                bracket,
                k,
                degree,
                weight,
            });
        }
    }
    out.sort_by_key(|g| (g.degree, g.weight, g.bracket.clone()));
    Ok(out)
}

/// Monomial counts of the graded polynomial algebra on the generators,
/// by degree through `top`, in one weight or summed over all weights.
pub fn predicted_betti(
    gens: &[PredictedGenerator],
    top: i64,
    weight: Option<i64>,
) -> Result<Vec<usize>> {
    if weight.is_none() {
        if let Some(g) = gens.iter().find(|g| g.degree == 0) {
            return Err(Error::NotFiniteType(g.degree));
        }
    }
    let max_w = weight.unwrap_or(0).max(0) as usize;
    // counts[n][w]; without a weight all weights collapse to index 0.
    let mut counts = vec![vec![0usize; max_w + 1]; top as usize + 1];
    counts[0][0] = 1;
    for g in gens {
        let (gd, gw) = (
            g.degree as usize,
            if weight.is_some() {
                g.weight as usize
            } else {
                0
            },
        );
        if weight.is_some() && gw == 0 {
            return Err(Error::Invalid(format!(
                "generator {} has weight 0",
                g.bracket
            )));
        }
        for n in gd..=top as usize {
            for w in gw..=max_w {
                counts[n][w] += counts[n - gd][w - gw];
            }
        }
    }
    Ok(counts.into_iter().map(|row| row[max_w]).collect())
}
