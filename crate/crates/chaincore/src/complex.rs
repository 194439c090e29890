use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::matrix::{smith_normal_form, Matrix};
use crate::ring::Ring;

/// Truncated graded basis with a canonical order in each degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    cutoff: i64,
    degrees: BTreeMap<i64, Vec<Label>>,
    index: HashMap<Label, usize>,
}

impl GradedBasis {
    /// Builds a basis from labels, dropping anything above the cutoff.
    /// Labels are sorted canonically and deduplicated within each degree.
    pub fn new<I: IntoIterator<Item = Label>>(cutoff: i64, labels: I) -> GradedBasis {
        let mut sets: BTreeMap<i64, BTreeSet<Label>> = BTreeMap::new();
        for l in labels {
            let d = l.degree();
            if d <= cutoff {
                sets.entry(d).or_default().insert(l);
            }
        }
        let degrees: BTreeMap<i64, Vec<Label>> = sets
            .into_iter()
            .map(|(d, s)| (d, s.into_iter().collect()))
            .collect();
        GradedBasis::from_ordered(cutoff, degrees)
    }

    /// Builds a basis keeping the given order inside each degree.
    pub fn from_ordered(cutoff: i64, degrees: BTreeMap<i64, Vec<Label>>) -> GradedBasis {
        let mut index = HashMap::new();
        for labels in degrees.values() {
            for (i, l) in labels.iter().enumerate() {
                let prev = index.insert(l.clone(), i);
                assert!(prev.is_none(), "duplicate label {l}");
            }
        }
        let degrees = degrees
            .into_iter()
            .filter(|(d, v)| *d <= cutoff && !v.is_empty())
            .collect();
        GradedBasis {
            cutoff,
            degrees,
            index,
        }
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn in_degree(&self, n: i64) -> &[Label] {
        self.degrees.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, n: i64) -> usize {
        self.in_degree(n).len()
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.index.contains_key(l)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.degrees.keys().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.degrees.keys().next().copied()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.degrees.values().flatten()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Ranks in degrees `0..=top`.
    pub fn ranks(&self, top: i64) -> Vec<usize> {
        (0..=top).map(|n| self.rank(n)).collect()
    }

    /// Coordinate vector of a homogeneous element of degree `n`.
    pub fn coordinates(&self, e: &Element) -> Result<Vec<BigInt>> {
        let n = e.degree();
        let mut v = vec![BigInt::zero(); self.rank(n)];
        for (l, c) in e.iter() {
            match self.index_of(l) {
                Some(i) if l.degree() == n => v[i] = c.clone(),
                _ => return Err(Error::NotInSpan),
            }
        }
        Ok(v)
    }

    /// Element with the given coordinates in degree `n`.
    pub fn element(&self, ring: Ring, n: i64, coords: &[BigInt]) -> Element {
        let mut e = Element::zero(ring, n);
        for (l, c) in self.in_degree(n).iter().zip(coords) {
            e.add_term(l.clone(), c.clone());
        }
        e
    }
}

/// Linear map between graded bases, stored by its values on the source
/// basis.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub ring: Ring,
    pub source: Arc<GradedBasis>,
    pub target: Arc<GradedBasis>,
    pub shift: i64,
    values: HashMap<Label, Element>,
}

impl LinearMap {
    /// Evaluates `f` on every source label. Values must have degree
    /// `|g| + shift`.
    pub fn build<F>(
        ring: Ring,
        source: Arc<GradedBasis>,
        target: Arc<GradedBasis>,
        shift: i64,
        f: F,
    ) -> Result<LinearMap>
    where
        F: Fn(&Label) -> Result<Element> + Sync,
    {
        let labels: Vec<Label> = source.labels().cloned().collect();
        let computed: Result<Vec<(Label, Element)>> = labels
            .into_par_iter()
            .map(|l| {
                let v = f(&l)?;
                if !v.is_zero() && v.degree() != l.degree() + shift {
                    return Err(Error::Degree {
                        expected: l.degree() + shift,
                        found: v.degree(),
                        label: l,
                    });
                }
                Ok((l, v))
            })
            .collect();
        let values = computed?
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Ok(LinearMap {
            ring,
            source,
            target,
            shift,
            values,
        })
    }

    pub fn from_values(
        ring: Ring,
        source: Arc<GradedBasis>,
        target: Arc<GradedBasis>,
        shift: i64,
        values: HashMap<Label, Element>,
    ) -> LinearMap {
        let values = values.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        LinearMap {
            ring,
            source,
            target,
            shift,
            values,
        }
    }

    pub fn value(&self, l: &Label) -> Element {
        self.values
            .get(l)
            .cloned()
            .unwrap_or_else(|| Element::zero(self.ring, l.degree() + self.shift))
    }

    pub fn values(&self) -> &HashMap<Label, Element> {
        &self.values
    }

    pub fn apply(&self, e: &Element) -> Element {
        e.map(self.shift, |l| self.value(l))
    }

    /// Matrix of the map from degree `n`, with rows indexed by the target
    /// basis in degree `n + shift`.
    pub fn matrix(&self, n: i64) -> Result<Matrix> {
        let src = self.source.in_degree(n);
        let tgt = self.target.in_degree(n + self.shift);
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (j, l) in src.iter().enumerate() {
            if let Some(v) = self.values.get(l) {
                for (t, c) in v.iter() {
                    let i = self
                        .target
                        .index_of(t)
                        .filter(|_| t.degree() == n + self.shift)
                        .ok_or_else(|| Error::NotClosed {
                            source_label: l.clone(),
                            target: t.clone(),
                        })?;
                    m.set(i, j, c.clone());
                }
            }
        }
        Ok(m)
    }
}

/// Saturated basis of the kernel of `map` in source degree `n`. Rows are
/// the labels occurring in the map's values, so the target basis may be
/// left unenumerated.
pub fn kernel_basis(map: &LinearMap, n: i64) -> Vec<Element> {
    kernel_of(map.ring, map.source.in_degree(n), n, |l| map.value(l))
}

/// Saturated kernel of a linear function on the listed labels.
pub fn kernel_of<F>(ring: Ring, labels: &[Label], n: i64, f: F) -> Vec<Element>
where
    F: Fn(&Label) -> Element,
{
    let values: Vec<Element> = labels.iter().map(&f).collect();
    let rows: BTreeSet<&Label> = values.iter().flat_map(|v| v.terms().keys()).collect();
    let row_index: HashMap<&Label, usize> = rows.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let mut m = Matrix::zeros(rows.len(), labels.len());
    for (j, v) in values.iter().enumerate() {
        for (t, c) in v.iter() {
            m.set(row_index[t], j, c.clone());
        }
    }
    let snf = smith_normal_form(&m, ring);
    (snf.rank()..labels.len())
        .map(|j| {
            let mut e = Element::zero(ring, n);
            for (l, c) in labels.iter().zip(snf.v.column(j)) {
                e.add_term(l.clone(), c);
            }
            e
        })
        .collect()
}

/// Chain complex on a truncated graded basis with a degree −1 differential.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub ring: Ring,
    pub basis: Arc<GradedBasis>,
    pub differential: LinearMap,
}

/// Outcome of a `d² = 0` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialCheck {
    pub counterexample: Option<(Label, Element)>,
}

impl DifferentialCheck {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl ChainComplex {
    /// Builds the complex, evaluating the differential on every basis
    /// label. Values must stay inside the basis.
    pub fn build<F>(ring: Ring, basis: GradedBasis, d: F) -> Result<ChainComplex>
    where
        F: Fn(&Label) -> Result<Element> + Sync,
    {
        let basis = Arc::new(basis);
        let differential = LinearMap::build(ring, basis.clone(), basis.clone(), -1, d)?;
        for (l, v) in differential.values() {
            if let Some(t) = v.terms().keys().find(|t| !basis.contains(t)) {
                if l.degree() - 1 <= basis.cutoff() {
                    return Err(Error::NotClosed {
                        source_label: l.clone(),
                        target: t.clone(),
                    });
                }
            }
        }
        Ok(ChainComplex {
            ring,
            basis,
            differential,
        })
    }

    pub fn cutoff(&self) -> i64 {
        self.basis.cutoff()
    }

    pub fn d(&self, e: &Element) -> Element {
        self.differential.apply(e)
    }

    pub fn rank(&self, n: i64) -> usize {
        self.basis.rank(n)
    }

    /// Matrix of `d_n : C_n → C_{n−1}`.
    pub fn matrix(&self, n: i64) -> Matrix {
        self.differential
            .matrix(n)
            .expect("differential closed by construction")
    }
}

/// Checks `d(d(g)) = 0` for every basis label of degree at most the cutoff.
/// Returns the first offending label in canonical order with its residue.
pub fn verify_differential(complex: &ChainComplex) -> DifferentialCheck {
    let counterexample = complex.basis.labels().find_map(|g| {
        let dd = complex.d(&complex.differential.value(g));
        (!dd.is_zero()).then(|| (g.clone(), dd))
    });
    DifferentialCheck { counterexample }
}

/// Homology in one degree.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub degree: i64,
    pub free_rank: usize,
    /// Invariant factors that are not units, in divisibility order.
    pub torsion: Vec<BigInt>,
    /// Free generators first, then one generator per torsion factor.
    pub representatives: Vec<Element>,
    classifier: Classifier,
}

#[derive(Clone, Debug)]
struct Classifier {
    ring: Ring,
    /// Rows of `V⁻¹` from the rank of `d_n` onward: kernel coordinates.
    kernel_coords: Matrix,
    /// Left transform of the boundary matrix in kernel coordinates.
    u: Matrix,
    /// Invariant factors of the boundary matrix.
    factors: Vec<BigInt>,
    /// Positions in the kernel basis that survive, in representative order.
    survivors: Vec<usize>,
    basis_order: Vec<Label>,
}

impl HomologyGroup {
    pub fn rank(&self) -> usize {
        self.free_rank
    }

    /// Number of generators, free and torsion.
    pub fn generator_count(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of a cycle against `representatives`.
    /// Torsion coordinates are reduced modulo their order.
    pub fn classify(&self, z: &Element) -> Result<Vec<BigInt>> {
        let k = &self.classifier;
        let mut v = vec![BigInt::zero(); k.basis_order.len()];
        let pos: HashMap<&Label, usize> = k
            .basis_order
            .iter()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        for (l, c) in z.iter() {
            let i = *pos.get(l).ok_or(Error::NotInSpan)?;
            v[i] = c.clone();
        }
        let y = k.kernel_coords.mul_vec(&v, k.ring);
        let w = if k.u.rows() == 0 {
            y
        } else {
            k.u.mul_vec(&y, k.ring)
        };
        Ok(k.survivors
            .iter()
            .map(|&i| match k.factors.get(i) {
                Some(f) if k.ring == Ring::Integers => num_integer::Integer::mod_floor(&w[i], f),
                _ => w[i].clone(),
            })
            .collect())
    }

    /// Whether a cycle is a boundary.
    pub fn is_boundary(&self, z: &Element) -> Result<bool> {
        Ok(self.classify(z)?.iter().all(Zero::is_zero))
    }
}

/// Homology through degree `cutoff − 1`.
#[derive(Clone, Debug)]
pub struct HomologyTable {
    pub ring: Ring,
    pub cutoff: i64,
    groups: BTreeMap<i64, HomologyGroup>,
}

impl HomologyTable {
    pub fn group(&self, n: i64) -> Result<&HomologyGroup> {
        if n >= self.cutoff {
            return Err(Error::TruncationBoundary {
                degree: n,
                cutoff: self.cutoff,
            });
        }
        self.groups
            .get(&n)
            .ok_or_else(|| Error::Invalid(format!("degree {n} outside the complex")))
    }

    /// Free rank in degree `n`; zero in degrees where the complex is empty.
    pub fn betti(&self, n: i64) -> Result<usize> {
        if n >= self.cutoff {
            return Err(Error::TruncationBoundary {
                degree: n,
                cutoff: self.cutoff,
            });
        }
        Ok(self.groups.get(&n).map_or(0, |g| g.free_rank))
    }

    /// Free ranks in degrees `0..=top`.
    pub fn betti_numbers(&self, top: i64) -> Result<Vec<usize>> {
        (0..=top).map(|n| self.betti(n)).collect()
    }

    pub fn torsion(&self, n: i64) -> Result<Vec<BigInt>> {
        if n >= self.cutoff {
            return Err(Error::TruncationBoundary {
                degree: n,
                cutoff: self.cutoff,
            });
        }
        Ok(self
            .groups
            .get(&n)
            .map_or_else(Vec::new, |g| g.torsion.clone()))
    }

    pub fn groups(&self) -> impl Iterator<Item = &HomologyGroup> {
        self.groups.values()
    }
}

/// Homology of the complex in every degree below the cutoff.
pub fn homology(complex: &ChainComplex) -> HomologyTable {
    let cutoff = complex.cutoff();
    let ring = complex.ring;
    let degrees: Vec<i64> = match complex.basis.min_degree() {
        Some(lo) => (lo..cutoff).collect(),
        None => Vec::new(),
    };
    let groups = degrees
        .into_par_iter()
        .map(|n| (n, homology_in_degree(complex, n)))
        .collect();
    HomologyTable {
        ring,
        cutoff,
        groups,
    }
}

fn homology_in_degree(complex: &ChainComplex, n: i64) -> HomologyGroup {
    let ring = complex.ring;
    let dim = complex.rank(n);
    let dn = complex.matrix(n);
    let snf_n = smith_normal_form(&dn, ring);
    let r = snf_n.rank();
    let k = dim - r;
    let kernel = snf_n.v.select(0..dim, r..dim);
    let kernel_coords = snf_n.v_inv.select(r..dim, 0..dim);
    let bnext = complex.matrix(n + 1);
    let a = kernel_coords.mul(&bnext, ring);
    let snf_a = smith_normal_form(&a, ring);
    let gens = kernel.mul(&snf_a.u_inv, ring);
    let mut survivors = Vec::new();
    let mut torsion = Vec::new();
    let mut torsion_pos = Vec::new();
    for (i, f) in snf_a.factors.iter().enumerate() {
        if !ring.is_unit(f) {
            torsion.push(f.clone());
            torsion_pos.push(i);
        }
    }
    survivors.extend(snf_a.rank()..k);
    let free_rank = survivors.len();
    survivors.extend(torsion_pos);
    let basis = complex.basis.in_degree(n);
    let representatives = survivors
        .iter()
        .map(|&i| {
            let mut e = Element::zero(ring, n);
            for (l, c) in basis.iter().zip(gens.column(i)) {
                e.add_term(l.clone(), c);
            }
            e
        })
        .collect();
    HomologyGroup {
        degree: n,
        free_rank,
        torsion,
        representatives,
        classifier: Classifier {
            ring,
            kernel_coords,
            u: snf_a.u,
            factors: snf_a.factors,
            survivors,
            basis_order: basis.to_vec(),
        },
    }
}
