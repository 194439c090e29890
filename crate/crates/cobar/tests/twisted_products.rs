use std::collections::HashMap;

use chaincore::{homology, verify_differential, BigInt, Element, Label, Ring};
use cobar::{cotor, leibniz_residue, one_sided_cobar, GroundRing, LeftTwisted, RightTwisted};
use hopfalg::{
    verify_hopf, HopfAsCoalgebra, Multiplication, PresentedHopf, RegularComodule, Side,
    TensorAlgebraDga, TrivialComodule, Words,
};

fn word(ls: &[&Label]) -> Label {
    Label::word(ls.iter().map(|l| (*l).clone()).collect())
}

/// `T(u, v, w)` with `|u| = |v| = 2`, `|w| = 4`, `ψ̄(w) = u⊗v`, zero
/// differential.
fn nonprimitive_hopf(ring: Ring, cutoff: i64) -> PresentedHopf {
    let u = Label::gen("u", 2);
    let v = Label::gen("v", 2);
    let w = Label::gen("w", 4);
    let alg = TensorAlgebraDga::new(
        ring,
        cutoff,
        vec![u.clone(), v.clone(), w.clone()],
        HashMap::new(),
    )
    .unwrap();
    let mut reduced = HashMap::new();
    reduced.insert(
        w,
        Element::basis(ring, Label::tensor2(word(&[&u]), word(&[&v]))),
    );
    PresentedHopf::new(alg, reduced).unwrap()
}

/// `T(p, q)` with `|p| = 2`, `|q| = 3`, `dq = p`, both primitive.
fn differential_hopf(ring: Ring, cutoff: i64) -> PresentedHopf {
    let p = Label::gen("p", 2);
    let q = Label::gen("q", 3);
    let mut d = HashMap::new();
    d.insert(q.clone(), Element::basis(ring, word(&[&p])));
    let alg = TensorAlgebraDga::new(ring, cutoff, vec![p, q], d).unwrap();
    PresentedHopf::new(alg, HashMap::new()).unwrap()
}

fn basis_elements(labels: impl IntoIterator<Item = Label>, ring: Ring) -> Vec<Element> {
    labels
        .into_iter()
        .map(|l| Element::basis(ring, l))
        .collect()
}

fn check_left<H: hopfalg::HopfAlgebra>(h: &H, top: i64) {
    let ring = h.ring();
    let module = RegularComodule {
        coalgebra: HopfAsCoalgebra(h),
        side: Side::Left,
    };
    let tt = one_sided_cobar(&module, HopfAsCoalgebra(h), None).unwrap();
    let words = Words(ring);
    let mult = LeftTwisted {
        comodule: &module,
        algebra: &words,
    };
    let mut labels = Vec::new();
    for n in 0..=top {
        labels.extend(tt.basis(n, None).unwrap());
    }
    let elems = basis_elements(labels, ring);
    for x in &elems {
        for y in &elems {
            if x.degree() + y.degree() > h.cutoff() - 1 {
                continue;
            }
            let r = leibniz_residue(&mult, |e| tt.d(e), x, y);
            assert!(r.is_zero(), "left Leibniz fails on {x} * {y}: {r}");
        }
    }
    for x in &elems {
        for y in &elems {
            for z in &elems {
                if x.degree() + y.degree() + z.degree() > h.cutoff() - 1 {
                    continue;
                }
                let a = mult.mul(&mult.mul(x, y), z);
                let b = mult.mul(x, &mult.mul(y, z));
                assert_eq!(a, b, "left product not associative on {x}, {y}, {z}");
            }
        }
    }
}

fn check_right<H: hopfalg::HopfAlgebra>(h: &H, top: i64) {
    let ring = h.ring();
    let module = RegularComodule {
        coalgebra: HopfAsCoalgebra(h),
        side: Side::Right,
    };
    let tt = one_sided_cobar(&module, HopfAsCoalgebra(h), None).unwrap();
    let words = Words(ring);
    let mult = RightTwisted {
        comodule: &module,
        algebra: &words,
    };
    let mut labels = Vec::new();
    for n in 0..=top {
        labels.extend(tt.basis(n, None).unwrap());
    }
    let elems = basis_elements(labels, ring);
    for x in &elems {
        for y in &elems {
            if x.degree() + y.degree() > h.cutoff() - 1 {
                continue;
            }
            let r = leibniz_residue(&mult, |e| tt.d(e), x, y);
            assert!(r.is_zero(), "right Leibniz fails on {x} * {y}: {r}");
        }
    }
    for x in &elems {
        for y in &elems {
            for z in &elems {
                if x.degree() + y.degree() + z.degree() > h.cutoff() - 1 {
                    continue;
                }
                let a = mult.mul(&mult.mul(x, y), z);
                let b = mult.mul(x, &mult.mul(y, z));
                assert_eq!(a, b, "right product not associative on {x}, {y}, {z}");
            }
        }
    }
}

#[test]
fn hopf_inputs_are_valid() {
    for h in [
        nonprimitive_hopf(Ring::Integers, 8),
        differential_hopf(Ring::Integers, 8),
    ] {
        assert!(verify_hopf(&h, 7, None).unwrap().ok());
    }
}

#[test]
fn left_product_is_a_derivation_algebra() {
    let y = PresentedHopf::primitive_tensor_algebra(Ring::Integers, 8, "y", 2);
    check_left(&y, 4);
    check_left(&nonprimitive_hopf(Ring::Integers, 8), 4);
    check_left(&differential_hopf(Ring::Integers, 8), 4);
}

#[test]
fn right_product_is_a_derivation_algebra() {
    let y = PresentedHopf::primitive_tensor_algebra(Ring::Integers, 8, "y", 2);
    check_right(&y, 4);
    check_right(&nonprimitive_hopf(Ring::Integers, 8), 4);
    check_right(&differential_hopf(Ring::Integers, 8), 4);
}

#[test]
fn primitive_commutation_formula() {
    // (1⊗c)(s⁻¹a⊗1) = (−1)^{(|a|+1)|c|} s⁻¹a⊗c + (−1)^{|c|} s⁻¹(c·a)⊗1 for primitive c.
    let ring = Ring::Integers;
    let h = PresentedHopf::primitive_tensor_algebra(ring, 8, "y", 2);
    let module = RegularComodule {
        coalgebra: HopfAsCoalgebra(&h),
        side: Side::Left,
    };
    let words = Words(ring);
    let mult = LeftTwisted {
        comodule: &module,
        algebra: &words,
    };
    let y = Label::gen("y", 2);
    let c = word(&[&y]);
    let a = word(&[&y]);
    let lhs = mult.mul(
        &Element::basis(ring, Label::tensor2(Label::Unit, c.clone())),
        &Element::basis(
            ring,
            Label::tensor2(Label::word(vec![Label::desusp(a.clone())]), Label::Unit),
        ),
    );
    let (da, dc) = (a.degree(), c.degree());
    let mut expected = Element::zero(ring, 3);
    expected.add_term(
        Label::tensor2(Label::word(vec![Label::desusp(a.clone())]), c.clone()),
        BigInt::from(chaincore::sign((da + 1) * dc)),
    );
    expected.add_term(
        Label::tensor2(
            Label::word(vec![Label::desusp(word(&[&y, &y]))]),
            Label::Unit,
        ),
        BigInt::from(chaincore::sign(dc)),
    );
    assert_eq!(lhs, expected);
    let unit = mult.mul(
        &Element::basis(ring, Label::tensor2(Label::Unit, Label::Unit)),
        &Element::basis(
            ring,
            Label::tensor2(Label::word(vec![Label::desusp(a.clone())]), Label::Unit),
        ),
    );
    assert_eq!(
        unit,
        Element::basis(
            ring,
            Label::tensor2(Label::word(vec![Label::desusp(a)]), Label::Unit)
        )
    );
}

/// Monomial counts of a graded polynomial algebra (odd generators allowed,
/// as over 𝔽₂ every generator is polynomial).
fn polynomial_betti(gens: &[i64], top: i64) -> Vec<usize> {
    let mut counts = vec![0usize; top as usize + 1];
    counts[0] = 1;
    for &g in gens {
        for n in g..=top {
            counts[n as usize] += counts[(n - g) as usize];
        }
    }
    counts
}

#[test]
fn cotor_of_tensor_hopf_algebra() {
    // T(y) with y primitive of degree 2 carries the binomial coproduct
    // ψ(yᵏ) = Σ C(k,i) yⁱ⊗yᵏ⁻ⁱ. Its dual algebra is polynomial over ℚ, so
    // Cotor over ℚ is exterior on s⁻¹y; over 𝔽₂ the dual is a divided power
    // algebra, exterior on classes of degree 2^{i+1}, and Cotor is
    // polynomial on classes of degree 2^{i+1} − 1.
    let q_oracle: Vec<usize> = vec![1, 1, 0, 0, 0, 0, 0, 0];
    let f2_oracle = polynomial_betti(&[1, 3, 7], 7);
    assert_eq!(f2_oracle, vec![1, 1, 1, 2, 2, 2, 3, 4]);
    for (ring, oracle) in [
        (Ring::Rationals, &q_oracle),
        (Ring::Integers, &q_oracle),
        (Ring::PrimeField(2), &f2_oracle),
    ] {
        let h = PresentedHopf::primitive_tensor_algebra(ring, 8, "y", 2);
        let r = TrivialComodule {
            ring,
            cutoff: 8,
            side: Side::Right,
        };
        let alg = cotor(&h, &r, &GroundRing(ring), 7).unwrap();
        assert_eq!(&alg.table.betti_numbers(7).unwrap(), oracle, "over {ring}");
        assert_eq!(alg.product(0, 0, 0, 0).unwrap(), &vec![BigInt::from(1)]);
    }
    let ring = Ring::Integers;
    let h = PresentedHopf::primitive_tensor_algebra(ring, 8, "y", 2);
    let alg = cotor(
        &h,
        &TrivialComodule {
            ring,
            cutoff: 8,
            side: Side::Right,
        },
        &GroundRing(ring),
        7,
    )
    .unwrap();
    assert_eq!(alg.table.torsion(2).unwrap(), vec![BigInt::from(2)]);

    let reg = RegularComodule {
        coalgebra: HopfAsCoalgebra(&h),
        side: Side::Right,
    };
    let alg = cotor(&h, &reg, &Words(ring), 7).unwrap();
    assert_eq!(
        alg.table.betti_numbers(7).unwrap(),
        vec![1, 0, 0, 0, 0, 0, 0, 0]
    );
    assert!((1..7).all(|n| alg.table.torsion(n).unwrap().is_empty()));
    assert_eq!(alg.product(0, 0, 0, 0).unwrap(), &vec![BigInt::from(1)]);
}

#[test]
fn cotor_product_is_representative_independent() {
    let ring = Ring::PrimeField(2);
    let h = PresentedHopf::primitive_tensor_algebra(ring, 8, "y", 2);
    let r = TrivialComodule {
        ring,
        cutoff: 8,
        side: Side::Right,
    };
    let alg = cotor(&h, &r, &GroundRing(ring), 7).unwrap();
    let module_cobar = one_sided_cobar(&r, HopfAsCoalgebra(&h), None).unwrap();
    let mult = RightTwisted {
        comodule: &r,
        algebra: &GroundRing(ring),
    };
    let z1 = &alg.table.group(1).unwrap().representatives[0];
    let z2 = &alg.table.group(2).unwrap().representatives[0];
    let target = alg.table.group(3).unwrap();
    let base = target.classify(&mult.mul(z1, z2)).unwrap();
    for l in module_cobar.basis(3, None).unwrap() {
        let z2b = z2.plus(&module_cobar.d(&Element::basis(ring, l)));
        assert_eq!(target.classify(&mult.mul(z1, &z2b)).unwrap(), base);
    }
    assert!(verify_differential(&module_cobar.complex(None).unwrap()).ok());
    assert_eq!(
        homology(&module_cobar.complex(None).unwrap())
            .betti(3)
            .unwrap(),
        2
    );
}
