use chaincore::{
    convolve, homology, kernel_basis, smith_normal_form, tensor_complex, verify_differential,
    BigInt, ChainComplex, Element, GradedBasis, Label, LinearMap, Matrix, Ring, Span,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use std::collections::HashMap;
use std::sync::Arc;

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: gcd of all k×k minors.
fn determinantal_factors(m: &Matrix) -> Vec<BigInt> {
    let mut divisors = vec![BigInt::one()];
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m.get(i, j).clone()).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

#[test]
fn two_by_two_oracle() {
    let m = Matrix::from_i64(&[vec![2, 0], vec![0, 3]]);
    let expected = determinantal_factors(&m);
    assert_eq!(expected, vec![BigInt::from(1), BigInt::from(6)]);
    assert_eq!(smith_normal_form(&m, Ring::Integers).factors, expected);
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..7, c), r))
}

proptest! {
    #[test]
    fn snf_round_trip(rows in small_matrix()) {
        let m = Matrix::from_i64(&rows);
        let s = smith_normal_form(&m, Ring::Integers);
        prop_assert_eq!(s.u.mul(&m, Ring::Integers).mul(&s.v, Ring::Integers), s.diagonal());
        prop_assert_eq!(s.u.mul(&s.u_inv, Ring::Integers), Matrix::identity(m.rows()));
        prop_assert_eq!(s.v.mul(&s.v_inv, Ring::Integers), Matrix::identity(m.cols()));
        for w in s.factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(s.factors.iter().all(|f| f.is_positive()));
        prop_assert_eq!(s.factors, determinantal_factors(&m));
    }

    #[test]
    fn field_snf_round_trip(rows in small_matrix(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let ring = Ring::PrimeField(p);
        let m = Matrix::from_i64(&rows);
        let s = smith_normal_form(&m, ring);
        let mut reduced = m.clone();
        for i in 0..m.rows() { for j in 0..m.cols() { reduced.set(i, j, ring.reduce(m.get(i, j).clone())); } }
        prop_assert_eq!(s.u.mul(&reduced, ring).mul(&s.v, ring), s.diagonal());
        prop_assert!(s.factors.iter().all(|f| f.is_one()));
    }

    #[test]
    fn kernel_is_saturated(rows in small_matrix()) {
        let m = Matrix::from_i64(&rows);
        let labels: Vec<Label> = (0..m.cols()).map(|j| Label::gen(&format!("g{j}"), 2)).collect();
        let targets: Vec<Label> = (0..m.rows()).map(|i| Label::gen(&format!("t{i}"), 1)).collect();
        let src = Arc::new(GradedBasis::new(4, labels.clone()));
        let tgt = Arc::new(GradedBasis::new(4, targets.clone()));
        let mut values = HashMap::new();
        for (j, l) in labels.iter().enumerate() {
            let mut e = Element::zero(Ring::Integers, 1);
            for (i, t) in targets.iter().enumerate() {
                e.add_term(t.clone(), m.get(i, j).clone());
            }
            values.insert(l.clone(), e);
        }
        let map = LinearMap::from_values(Ring::Integers, src.clone(), tgt, -1, values);
        let ker = kernel_basis(&map, 2);
        for v in &ker {
            prop_assert!(map.apply(v).is_zero());
        }
        // Saturation: the kernel vectors extend to a unimodular basis, so
        // the gcd of their maximal minors is 1.
        if !ker.is_empty() {
            let rows: Vec<Vec<BigInt>> = ker.iter().map(|v| src.coordinates(v).unwrap()).collect();
            let km = Matrix::from_rows(rows);
            let f = determinantal_factors(&km);
            prop_assert_eq!(f.len(), ker.len());
            prop_assert!(f.iter().all(|x| x.is_one()));
        }
        let rank = smith_normal_form(&m, Ring::Integers).rank();
        prop_assert_eq!(ker.len(), m.cols() - rank);
    }

    #[test]
    fn homology_ignores_label_order(seed in 0u64..500) {
        let (c1, c2) = permuted_complexes(seed);
        let h1 = homology(&c1);
        let h2 = homology(&c2);
        for n in 0..c1.cutoff() {
            prop_assert_eq!(h1.betti(n).unwrap(), h2.betti(n).unwrap());
            prop_assert_eq!(h1.torsion(n).unwrap(), h2.torsion(n).unwrap());
        }
    }
}

/// Koszul-type complex R[a]⊗Λ-style: degree 2 basis p_i, degree 1 basis
/// q_j, degree 0 basis r, with d built from a seeded integer matrix times
/// an independent one so that d² = 0.
fn permuted_complexes(seed: u64) -> (ChainComplex, ChainComplex) {
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) % 7) as i64 - 3
    };
    // d2: C2 (3) -> C1 (3), d1: C1 (3) -> C0 (2) with d1·d2 = 0 by choosing
    // d2 columns in the kernel of d1.
    let d1 = [[next(), next(), next()], [next(), next(), next()]];
    let k1 = [
        d1[0][1] * d1[1][2] - d1[0][2] * d1[1][1],
        d1[0][2] * d1[1][0] - d1[0][0] * d1[1][2],
        d1[0][0] * d1[1][1] - d1[0][1] * d1[1][0],
    ];
    let scales = [next(), next(), 2];
    let build = |reverse: bool| {
        let name = |p: &str, i: usize| {
            let idx = if reverse { 9 - i } else { i };
            Label::gen(
                &format!("{p}{idx}"),
                match p {
                    "p" => 2,
                    "q" => 1,
                    _ => 0,
                },
            )
        };
        let mut labels = Vec::new();
        for i in 0..3 {
            labels.push(name("p", i));
            labels.push(name("q", i));
        }
        for i in 0..2 {
            labels.push(name("r", i));
        }
        let mut table: HashMap<Label, Element> = HashMap::new();
        for i in 0..3 {
            let mut e = Element::zero(Ring::Integers, 1);
            for (j, k) in k1.iter().enumerate() {
                e.add_term(name("q", j), BigInt::from(k * scales[i]));
            }
            table.insert(name("p", i), e);
            let mut f = Element::zero(Ring::Integers, 0);
            for (r, row) in d1.iter().enumerate() {
                f.add_term(name("r", r), BigInt::from(row[i]));
            }
            table.insert(name("q", i), f);
        }
        ChainComplex::build(Ring::Integers, GradedBasis::new(3, labels), |g| {
            Ok(table
                .get(g)
                .cloned()
                .unwrap_or_else(|| Element::zero(Ring::Integers, g.degree() - 1)))
        })
        .unwrap()
    };
    let (a, b) = (build(false), build(true));
    assert!(verify_differential(&a).ok());
    (a, b)
}

#[test]
fn kernel_of_merge_map() {
    let a = Label::gen("a", 2);
    let b = Label::gen("b", 2);
    let c = Label::gen("c", 2);
    let src = Arc::new(GradedBasis::new(3, [a.clone(), b.clone()]));
    let tgt = Arc::new(GradedBasis::new(3, [c.clone()]));
    let mut values = HashMap::new();
    values.insert(a.clone(), Element::basis(Ring::Integers, c.clone()));
    values.insert(b.clone(), Element::basis(Ring::Integers, c));
    let map = LinearMap::from_values(Ring::Integers, src, tgt, 0, values);
    let ker = kernel_basis(&map, 2);
    assert_eq!(ker.len(), 1);
    let v = &ker[0];
    // Oracle: the kernel of (1 1) is spanned by (1, −1) up to sign.
    let ca = v.coeff(&a);
    let cb = v.coeff(&b);
    assert_eq!(ca.abs(), BigInt::one());
    assert_eq!(&ca + &cb, BigInt::zero());
}

#[test]
fn identity_and_zero_maps() {
    let labels: Vec<Label> = (0..3).map(|i| Label::gen(&format!("v{i}"), 2)).collect();
    let basis = Arc::new(GradedBasis::new(3, labels.clone()));
    let id: HashMap<Label, Element> = labels
        .iter()
        .map(|l| (l.clone(), Element::basis(Ring::Integers, l.clone())))
        .collect();
    let map = LinearMap::from_values(Ring::Integers, basis.clone(), basis.clone(), 0, id);
    assert!(kernel_basis(&map, 2).is_empty());
    let zero = LinearMap::from_values(Ring::Integers, basis.clone(), basis, 0, HashMap::new());
    assert_eq!(kernel_basis(&zero, 2).len(), 3);
}

#[test]
fn sphere_and_acyclic_pair() {
    let x = Label::gen("x", 3);
    let c = ChainComplex::build(Ring::Integers, GradedBasis::new(6, [Label::Unit, x]), |g| {
        Ok(Element::zero(Ring::Integers, g.degree() - 1))
    })
    .unwrap();
    assert!(verify_differential(&c).ok());
    assert_eq!(
        homology(&c).betti_numbers(5).unwrap(),
        vec![1, 0, 0, 1, 0, 0]
    );

    let a = Label::gen("a", 2);
    let b = Label::gen("b", 1);
    let bb = b.clone();
    let pair = ChainComplex::build(
        Ring::Integers,
        GradedBasis::new(4, [a.clone(), b]),
        move |g| {
            Ok(if g == &a {
                Element::basis(Ring::Integers, bb.clone())
            } else {
                Element::zero(Ring::Integers, g.degree() - 1)
            })
        },
    )
    .unwrap();
    assert!(verify_differential(&pair).ok());
    assert_eq!(homology(&pair).betti_numbers(3).unwrap(), vec![0, 0, 0, 0]);
}

#[test]
fn span_coordinates_are_exact() {
    let ring = Ring::Integers;
    let a = Label::gen("a", 2);
    let b = Label::gen("b", 2);
    let c = Label::gen("c", 2);
    let v1 = Element::from_terms(
        ring,
        2,
        [(a.clone(), BigInt::from(1)), (b.clone(), BigInt::from(1))],
    )
    .unwrap();
    let v2 = Element::from_terms(ring, 2, [(b.clone(), BigInt::from(2))]).unwrap();
    let span = Span::new(ring, 2, vec![v1.clone(), v2.clone()]);
    assert!(span.is_independent());
    let target = v1
        .scaled(&BigInt::from(3))
        .minus(&v2.scaled(&BigInt::from(5)));
    let x = span.coordinates(&target).unwrap();
    assert_eq!(x, vec![BigInt::from(3), BigInt::from(-5)]);
    assert_eq!(span.combine(&x), target);
    // b alone needs the coefficient 1/2 on v2.
    assert!(span.coordinates(&Element::basis(ring, b.clone())).is_err());
    assert!(span.coordinates(&Element::basis(ring, c)).is_err());
    let f3 = Ring::PrimeField(3);
    let span3 = Span::new(f3, 2, vec![Element::term(f3, b.clone(), BigInt::from(2))]);
    assert_eq!(
        span3.coordinates(&Element::basis(f3, b)).unwrap(),
        vec![BigInt::from(2)]
    );
}

#[test]
fn tensor_of_spheres_follows_kunneth() {
    let ring = Ring::Integers;
    let sphere = |n: i64, name: &str| {
        let basis = GradedBasis::new(8, [Label::Unit, Label::gen(name, n)]);
        ChainComplex::build(ring, basis, |l| Ok(Element::zero(ring, l.degree() - 1))).unwrap()
    };
    let t = tensor_complex(&sphere(2, "u"), &sphere(3, "v"), 8).unwrap();
    assert!(verify_differential(&t).ok());
    let expected = convolve(&[1, 0, 1, 0, 0, 0, 0, 0], &[1, 0, 0, 1, 0, 0, 0, 0]);
    assert_eq!(expected, vec![1, 0, 1, 1, 0, 1, 0, 0]);
    assert_eq!(homology(&t).betti_numbers(7).unwrap(), expected);
}
