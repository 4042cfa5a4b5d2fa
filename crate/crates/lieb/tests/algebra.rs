//! Structure constants, adjoint maps, Killing and trace forms, series,
//! ideals and derivations, checked against definitions computed in the test.

mod common;

use common::{algebra, imat, killing_oracle, mv};
use lieb::algebra::{
    adjoint, derivation_algebra, ideal_report, is_automorphism, is_derivation, load_algebra, structure_report,
    trace_form, AlgebraDoc,
};
use lieb::linalg::{Ambient, Subspace};
use lieb::scalar::int;
use lieb::{killing_form, Error, LieAlgebra, Matrix, Symmetry};
use serde_json::json;

fn doc(value: serde_json::Value) -> AlgebraDoc {
    serde_json::from_value(value).unwrap()
}

fn span(alg: &LieAlgebra, exprs: &[&str]) -> Subspace {
    let v: Vec<_> = exprs.iter().map(|e| mv(alg, e).coords(1).unwrap()).collect();
    Subspace::span(Ambient::Algebra, alg.dim(), &v)
}

#[test]
fn sl2_document_loads() {
    let alg = load_algebra(&doc(json!({
        "name": "sl2", "dim": 3, "basis": ["e1", "e2", "e3"],
        "brackets": [
            { "i": 1, "j": 2, "result": { "2": 1 } },
            { "i": 1, "j": 3, "result": { "3": -1 } },
            { "i": 3, "j": 2, "result": { "1": -1 } }
        ]
    })))
    .unwrap();
    assert_eq!(alg, algebra("sl2"));
    assert_eq!(alg.structure_constant(1, 2, 0), int(1));
}

#[test]
fn empty_bracket_table_is_abelian() {
    let alg = load_algebra(&doc(json!({ "name": "a3", "dim": 3, "brackets": [] }))).unwrap();
    assert!(alg.is_abelian());
}

#[test]
fn jacobi_violation_is_reported() {
    let err = load_algebra(&doc(json!({
        "name": "bad", "dim": 3,
        "brackets": [
            { "i": 1, "j": 2, "result": { "3": 1 } },
            { "i": 1, "j": 3, "result": { "1": 1 } }
        ]
    })))
    .unwrap_err();
    assert!(matches!(err, Error::JacobiViolation { .. }), "{err}");
    assert!(err.is_mathematical());
}

#[test]
fn adjoint_matrices() {
    let sl2 = algebra("sl2");
    assert_eq!(adjoint(&sl2, &mv(&sl2, "e1")).unwrap().into_matrix(), imat(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]));
    assert!(sl2.ad(&[int(0), int(0), int(0)]).is_zero());
    let h = algebra("h");
    assert_eq!(h.ad_basis(0), imat(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]));
}

#[test]
fn killing_form_matches_trace_definition() {
    for (name, alg, _) in common::catalog_entries() {
        let want = Matrix::from_rows(killing_oracle(alg));
        assert_eq!(killing_form(alg).to_matrix().unwrap(), want, "{name}");
    }
}

#[test]
fn killing_values() {
    assert_eq!(killing_form(&algebra("sl2")).to_matrix().unwrap(), imat(&[&[2, 0, 0], &[0, 0, 2], &[0, 2, 0]]));
    assert_eq!(killing_form(&algebra("su2")).to_matrix().unwrap(), Matrix::identity(3).scale(&int(-2)));
    assert!(killing_form(&algebra("h")).is_zero());
}

#[test]
fn trace_forms() {
    let sl2 = algebra("sl2");
    let k2 = trace_form(&sl2, 2, Symmetry::Symmetric).unwrap();
    assert_eq!(k2.to_matrix().unwrap(), killing_form(&sl2).to_matrix().unwrap().scale(&int(2)));
    for k in 2..=3 {
        assert!(trace_form(&LieAlgebra::abelian(3), k, Symmetry::Symmetric).unwrap().is_zero());
    }
    let su2 = algebra("su2");
    let t3 = trace_form(&su2, 3, Symmetry::Antisymmetric).unwrap();
    assert!(!t3.is_zero());
    assert!(lieb::forms::is_invariant(&su2, &t3).unwrap());
    // alternating in three arguments on a three-dimensional space: a multiple of the determinant
    let v = t3.entry(&[0, 1, 2]).clone();
    assert_eq!(t3.entry(&[1, 0, 2]), &-v.clone());
    assert_eq!(t3.entry(&[2, 0, 1]), &v);
}

#[test]
fn series_and_center() {
    let h = structure_report(&algebra("h"));
    let alg = algebra("h");
    assert_eq!(h.center, span(&alg, &["e3"]));
    assert_eq!(h.lower_central.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![3, 1, 0]);
    assert!(h.nilpotent && h.unimodular);

    let sl2 = structure_report(&algebra("sl2"));
    assert!(sl2.lower_central.iter().all(|s| s.dim() == 3));
    assert!(!sl2.solvable && !sl2.nilpotent && sl2.unimodular);

    let a3 = structure_report(&LieAlgebra::abelian(3));
    assert_eq!(a3.center.dim(), 3);
    assert_eq!(a3.lower_central[1].dim(), 0);
    assert_eq!(a3.derived[1].dim(), 0);

    assert!(!structure_report(&algebra("r3_1")).unimodular);
    assert!(structure_report(&algebra("r3_m1")).unimodular);
}

#[test]
fn traceless_ideals() {
    let r = algebra("r3_m1");
    let rep = ideal_report(&r, &span(&r, &["e2", "e3"])).unwrap();
    assert!(rep.is_ideal && rep.is_traceless_ideal);

    let r = algebra("r3_1");
    let rep = ideal_report(&r, &span(&r, &["e2", "e3"])).unwrap();
    assert!(rep.is_ideal && !rep.is_traceless_ideal);
    assert_eq!(rep.restricted_traces.unwrap(), vec![int(2), int(0), int(0)]);

    for (name, alg, _) in common::catalog_entries() {
        let whole = Subspace::full(Ambient::Algebra, alg.dim());
        let rep = ideal_report(alg, &whole).unwrap();
        assert!(rep.is_ideal, "{name}");
        assert_eq!(rep.is_traceless_ideal, structure_report(alg).unimodular, "{name}");
    }
}

/// Dimension of `{D : D[x, y] = [Dx, y] + [x, Dy]}` from a dense system built here.
fn derivation_dim_oracle(alg: &LieAlgebra) -> usize {
    let n = alg.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // coefficient of e_k in D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j], unknowns D[a][b] at a * n + b
                let mut row = vec![int(0); n * n];
                for l in 0..n {
                    row[k * n + l] += alg.structure_constant(i, j, l);
                    row[l * n + i] -= alg.structure_constant(l, j, k);
                    row[l * n + j] -= alg.structure_constant(i, l, k);
                }
                rows.push(row);
            }
        }
    }
    n * n - Matrix::from_rows(rows).rank()
}

#[test]
fn derivation_algebras() {
    let sl2 = derivation_algebra(&algebra("sl2"));
    assert_eq!((sl2.der.dim(), sl2.inner.dim()), (3, 3));
    let h = derivation_algebra(&algebra("h"));
    assert_eq!((h.der.dim(), h.inner.dim()), (6, 2));
    let a3 = derivation_algebra(&LieAlgebra::abelian(3));
    assert_eq!((a3.der.dim(), a3.inner.dim()), (9, 0));
    for (name, alg, _) in common::catalog_entries() {
        let d = derivation_algebra(alg);
        assert_eq!(d.der.dim(), derivation_dim_oracle(alg), "{name}");
        assert!(d.inner.is_subspace_of(&d.der), "{name}");
        for row in d.der.basis() {
            let m = Matrix::from_entries(alg.dim(), alg.dim(), row.clone());
            assert!(is_derivation(alg, &m), "{name}");
        }
    }
}

#[test]
fn automorphisms_preserve_brackets() {
    let sl2 = algebra("sl2");
    assert!(is_automorphism(&sl2, &Matrix::identity(3)));
    assert!(is_automorphism(&sl2, &imat(&[&[-1, 0, 0], &[0, 0, 1], &[0, 1, 0]])));
    assert!(!is_automorphism(&sl2, &imat(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]])));
}
