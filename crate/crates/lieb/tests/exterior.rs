//! Wedge products, the Schouten bracket, exterior powers of maps and
//! annihilator spans.

mod common;

use common::{algebra, imat, mv, schouten_oracle, terms};
use lieb::exterior::{ad_on_exterior, annihilator_span, lambda_power, transform, ExtensionMode};
use lieb::scalar::int;
use lieb::{schouten, wedge, LieAlgebra, Matrix, MultiVector};

#[test]
fn wedge_basics() {
    let g = LieAlgebra::abelian(3);
    assert_eq!(wedge(&mv(&g, "e1"), &mv(&g, "e2")).unwrap(), mv(&g, "e12"));
    assert_eq!(wedge(&mv(&g, "e2"), &mv(&g, "e1")).unwrap(), mv(&g, "-e12"));
    assert_eq!(wedge(&mv(&g, "e1 + e2"), &mv(&g, "e1 - e2")).unwrap(), mv(&g, "-2*e12"));
    assert!(wedge(&mv(&g, "e12"), &mv(&g, "e2")).unwrap().is_zero());
}

#[test]
fn schouten_examples() {
    let sl2 = algebra("sl2");
    assert_eq!(schouten(&sl2, &mv(&sl2, "e1"), &mv(&sl2, "e2")).unwrap(), mv(&sl2, "e2"));
    assert_eq!(schouten(&sl2, &mv(&sl2, "e12"), &mv(&sl2, "e3")).unwrap(), mv(&sl2, "e23"));
    let one = MultiVector::scalar(3, int(1));
    assert!(schouten(&sl2, &one, &mv(&sl2, "e12 + e3")).unwrap().is_zero());
}

#[test]
fn schouten_agrees_with_blade_expansion_on_all_basis_pairs() {
    for (name, g, _) in common::catalog_entries() {
        let n = g.dim();
        let grades: Vec<usize> = if n > 6 { vec![1, 2] } else { vec![1, 2, 3] };
        for &p in &grades {
            for &q in &grades {
                for x in lieb::combinatorics::combinations(n, p) {
                    for y in lieb::combinatorics::combinations(n, q) {
                        let a = MultiVector::blade(n, &x).unwrap();
                        let b = MultiVector::blade(n, &y).unwrap();
                        let got = schouten(g, &a, &b).unwrap();
                        assert_eq!(terms(&got), schouten_oracle(g, &a, &b), "{name} {x:?} {y:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn exterior_powers_of_maps() {
    let sl2 = algebra("sl2");
    let d = lambda_power(&sl2.ad_basis(0), 2, ExtensionMode::Derivation).unwrap();
    assert_eq!(d.matrix(), ad_on_exterior(&sl2, 0, 2).unwrap().matrix());
    assert_eq!(d.matrix().get(2, 2), &int(0));
    for (j, t) in lieb::combinatorics::combinations(3, 2).iter().enumerate() {
        let image = schouten(&sl2, &mv(&sl2, "e1"), &MultiVector::blade(3, t).unwrap()).unwrap();
        assert_eq!(d.matrix().column(j), image.coords(2).unwrap());
    }

    let c = Matrix::identity(3).scale(&int(3));
    assert_eq!(
        lambda_power(&c, 2, ExtensionMode::Multiplicative).unwrap().into_matrix(),
        Matrix::identity(3).scale(&int(9))
    );
    assert_eq!(
        lambda_power(&Matrix::identity(3), 3, ExtensionMode::Derivation).unwrap().into_matrix(),
        Matrix::identity(1).scale(&int(3))
    );
}

#[test]
fn transform_is_multiplicative() {
    let g = LieAlgebra::abelian(3);
    let t = imat(&[&[1, 2, 0], &[0, 1, 0], &[1, 0, 1]]);
    let w = mv(&g, "e12 - 2*e23");
    let by_power = lambda_power(&t, 2, ExtensionMode::Multiplicative).unwrap().matrix().mul_vec(&w.coords(2).unwrap());
    assert_eq!(transform(&t, &w).unwrap().coords(2).unwrap(), by_power);
    // images of basis vectors are the columns of t
    let expected = wedge(&mv(&g, "e1 + e3"), &mv(&g, "2*e1 + e2")).unwrap();
    assert_eq!(transform(&t, &mv(&g, "e12")).unwrap(), expected);
}

#[test]
fn annihilators_and_decomposability() {
    let g3 = LieAlgebra::abelian(3);
    let a = annihilator_span(&mv(&g3, "e12")).unwrap();
    assert!(a.decomposable);
    assert_eq!(a.span.dim(), 2);
    let top = annihilator_span(&mv(&g3, "e123")).unwrap();
    assert!(top.decomposable && top.span.dim() == 3);
    let g4 = LieAlgebra::abelian(4);
    let s = annihilator_span(&mv(&g4, "e12 + e34")).unwrap();
    assert!(!s.decomposable);
    assert_eq!(s.span.dim(), 0);
}
