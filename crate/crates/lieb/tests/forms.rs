//! Invariant-form solver, extensions to exterior powers and Casimir-induced
//! forms.

mod common;

use common::{algebra, gram_oracle, imat, mv};
use lieb::forms::{
    casimir_induced_form, extend_form, extend_form_determinant, extended_pairing, forms_of, invariant_forms,
    inverse_killing, is_invariant, MultiLinearForm,
};
use lieb::scalar::{frac, int};
use lieb::{killing_form, Matrix, Symmetry};
use num_traits::Zero;

#[test]
fn heisenberg_bilinear_forms() {
    let h = algebra("h");
    let space = invariant_forms(&h, 1, 2, Symmetry::None).unwrap();
    assert_eq!(space.dim(), 4);
    for f in forms_of(&space, 3, 1, 2).unwrap() {
        for i in 0..3 {
            assert!(f.entry(&[i, 2]).is_zero() && f.entry(&[2, i]).is_zero());
        }
    }
}

#[test]
fn r31_has_no_forms_on_bivectors() {
    assert_eq!(invariant_forms(&algebra("r3_1"), 2, 2, Symmetry::None).unwrap().dim(), 0);
}

#[test]
fn sl2_symmetric_forms_are_multiples_of_killing() {
    let sl2 = algebra("sl2");
    let space = invariant_forms(&sl2, 1, 2, Symmetry::Symmetric).unwrap();
    assert_eq!(space.dim(), 1);
    assert!(space.contains(&killing_form(&sl2).to_vector()));
}

#[test]
fn solved_forms_have_requested_symmetry() {
    let su2 = algebra("su2");
    for sym in [Symmetry::Symmetric, Symmetry::Antisymmetric, Symmetry::None] {
        let space = invariant_forms(&su2, 1, 3, sym).unwrap();
        for f in forms_of(&space, 3, 1, 3).unwrap() {
            assert!(f.has_symmetry(sym));
            assert!(is_invariant(&su2, &f).unwrap());
        }
    }
}

#[test]
fn extended_killing_forms() {
    let sl2 = killing_form(&algebra("sl2"));
    assert_eq!(extend_form(&sl2, 2).unwrap().to_matrix().unwrap(), imat(&[&[0, 4, 0], &[4, 0, 0], &[0, 0, -4]]));
    assert_eq!(extend_form(&sl2, 3).unwrap().to_matrix().unwrap(), imat(&[&[-8]]));
    let su2 = killing_form(&algebra("su2"));
    assert_eq!(extend_form(&su2, 2).unwrap().to_matrix().unwrap(), Matrix::identity(3).scale(&int(4)));
    assert_eq!(extend_form(&su2, 3).unwrap().to_matrix().unwrap(), imat(&[&[-8]]));
}

#[test]
fn determinant_path_matches_gram_oracle() {
    for (name, g, _) in common::catalog_entries() {
        let kappa = killing_form(g);
        let rows = kappa.to_matrix().unwrap().to_rows();
        let m = 2.min(g.dim());
        let ext = extend_form_determinant(&kappa, m).unwrap();
        let tuples = lieb::combinatorics::combinations(g.dim(), m);
        for (r, x) in tuples.iter().enumerate() {
            for (c, y) in tuples.iter().enumerate() {
                assert_eq!(ext.entry(&[r, c]), &gram_oracle(&rows, x, y), "{name}");
            }
        }
    }
}

#[test]
fn extensions_of_invariant_forms_are_invariant() {
    for name in ["sl2", "su2", "h", "r3_m1", "so22"] {
        let g = algebra(name);
        let kappa = killing_form(&g);
        for m in 1..=3 {
            assert!(is_invariant(&g, &extend_form(&kappa, m).unwrap()).unwrap(), "{name} grade {m}");
        }
    }
}

#[test]
fn pairing_of_bivectors() {
    let sl2 = killing_form(&algebra("sl2"));
    let g = algebra("sl2");
    assert_eq!(extended_pairing(&sl2, &mv(&g, "e12"), &mv(&g, "e13")).unwrap(), int(4));
}

#[test]
fn casimir_forms() {
    let sl2 = algebra("sl2");
    let c = inverse_killing(&sl2).unwrap();
    let b = casimir_induced_form(&sl2, &c).unwrap();
    assert!(b.invariant);
    assert_eq!(b.form, killing_form(&sl2));

    let h = algebra("h");
    assert!(inverse_killing(&h).is_none());
    let any = MultiLinearForm::from_matrix(1, &Matrix::identity(3), Symmetry::Symmetric).unwrap();
    assert!(casimir_induced_form(&h, &any).unwrap().form.is_zero());

    let su2 = algebra("su2");
    let quarter =
        MultiLinearForm::from_matrix(1, &Matrix::identity(3).scale(&frac(1, 4)), Symmetry::Symmetric).unwrap();
    let b = casimir_induced_form(&su2, &quarter).unwrap();
    assert!(b.invariant);
    assert_eq!(b.form.to_matrix().unwrap(), killing_form(&su2).to_matrix().unwrap().scale(&frac(-1, 2)));
}
