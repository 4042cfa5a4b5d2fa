//! Group gradations, induced decompositions, root analysis and limit degrees.

mod common;

use common::{algebra, mv};
use lieb::gradation::{
    graded_split, homogeneous_component, induced_decomposition, limit_degrees, root_analysis, Degree, GroupDescriptor,
};
use lieb::invariants::invariant_subspace;
use lieb::scalar::{int, Scalar};
use lieb::{Error, Gradation};

fn deg(values: &[i64]) -> Degree {
    values.iter().map(|&v| int(v)).collect()
}

fn degrees(rows: &[&[i64]]) -> Vec<Degree> {
    rows.iter().map(|r| deg(r)).collect()
}

#[test]
fn valid_and_invalid_gradations() {
    let sl2 = algebra("sl2");
    assert!(Gradation::new(&sl2, "Z", GroupDescriptor::free(1), degrees(&[&[0], &[1], &[-1]])).is_ok());
    let su2 = algebra("su2");
    assert!(Gradation::new(&su2, "Z2", GroupDescriptor::new(vec![2]), degrees(&[&[0], &[1], &[1]])).is_ok());
    assert!(Gradation::new(&su2, "Z", GroupDescriptor::free(1), degrees(&[&[0], &[1], &[1]])).is_err());
    let h = algebra("h");
    let err = Gradation::new(&h, "Z", GroupDescriptor::free(1), degrees(&[&[1], &[2], &[4]])).unwrap_err();
    assert!(matches!(err, Error::ClosureViolation { .. }), "{err}");
}

#[test]
fn cyclic_degrees_are_range_checked() {
    let su2 = algebra("su2");
    let err = Gradation::new(&su2, "Z2", GroupDescriptor::new(vec![2]), degrees(&[&[0], &[3], &[1]]));
    assert!(err.is_err());
}

#[test]
fn so22_bivector_decomposition() {
    let (g, grads) = lieb::catalog::get_algebra("so22", &[]).unwrap();
    let dec = induced_decomposition(&g, &grads[0], 2).unwrap();
    assert_eq!(dec.total_dim(), 15);
    assert_eq!(dec.dims().len(), 9);
    assert_eq!(dec.fiber_dim(&deg(&[0, 0])), 3);
    for d in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
        assert_eq!(dec.fiber_dim(&deg(&d)), 2);
    }
    for d in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
        assert_eq!(dec.fiber_dim(&deg(&d)), 1);
    }
    let center: Vec<String> =
        dec.fiber_blades(&deg(&[0, 0])).iter().map(|w| lieb::io::format_multivector(w, g.basis_names())).collect();
    assert_eq!(center, ["em^ep", "e0^f0", "fm^fp"]);
}

#[test]
fn trivial_gradation_has_one_fiber() {
    let g = algebra("r3");
    let grad = Gradation::new(&g, "trivial", GroupDescriptor::free(1), degrees(&[&[0], &[0], &[0]])).unwrap();
    for m in 0..=3 {
        let dec = induced_decomposition(&g, &grad, m).unwrap();
        assert_eq!(dec.dims().len(), 1);
        assert_eq!(dec.total_dim(), lieb::combinatorics::binomial(3, m));
    }
}

#[test]
fn root_gradations() {
    let (g, grads) = lieb::catalog::get_algebra("so22", &[]).unwrap();
    assert!(root_analysis(&g, &grads[0]).is_root);
    let limits = limit_degrees(&g, &grads[0]).unwrap();
    let boundary: Vec<Degree> =
        [[-1, -1], [-1, 0], [-1, 1], [0, -1], [0, 1], [1, -1], [1, 0], [1, 1]].iter().map(|d| deg(d)).collect();
    assert_eq!(limits, boundary);

    let sl2 = algebra("sl2");
    let grad = Gradation::new(&sl2, "Z", GroupDescriptor::free(1), degrees(&[&[0], &[1], &[-1]])).unwrap();
    assert!(root_analysis(&sl2, &grad).is_root);

    let h = algebra("h");
    let grad = Gradation::new(&h, "Z", GroupDescriptor::free(1), degrees(&[&[1], &[2], &[3]])).unwrap();
    let r = root_analysis(&h, &grad);
    assert!(!r.is_root);
    assert!(r.reason.is_some());
}

#[test]
fn limit_spaces_solve_the_classical_equation() {
    let (g, grads) = lieb::catalog::get_algebra("so32", &[]).unwrap();
    let dec = induced_decomposition(&g, &grads[0], 2).unwrap();
    for d in limit_degrees(&g, &grads[0]).unwrap() {
        for b in dec.fiber_blades(&d) {
            assert!(lieb::schouten(&g, &b, &b).unwrap().is_zero());
        }
    }
}

#[test]
fn invariants_split_into_homogeneous_pieces() {
    for (name, g, grads) in common::catalog_entries() {
        for grad in grads {
            for m in 2..=3.min(g.dim()) {
                let inv = invariant_subspace(g, m).unwrap();
                let split = graded_split(grad, &inv, m).unwrap_or_else(|| panic!("{name} {}", grad.name()));
                assert_eq!(split.values().map(|s| s.dim()).sum::<usize>(), inv.dim(), "{name}");
            }
        }
    }
}

#[test]
fn homogeneous_components_sum_back() {
    let (g, grads) = lieb::catalog::get_algebra("so22", &[]).unwrap();
    let w = mv(&g, "em^e0 + 2*e0^f0 - fm^fp + ep^fp");
    let dec = induced_decomposition(&g, &grads[0], 2).unwrap();
    let mut total = lieb::MultiVector::zero(g.dim());
    for d in dec.degrees() {
        let part = homogeneous_component(&grads[0], &w, d);
        if !part.is_zero() {
            assert_eq!(grads[0].homogeneous_degree(&part).as_ref(), Some(d));
        }
        total = total.checked_add(&part).unwrap();
    }
    assert_eq!(total, w);
    let zero: Vec<Scalar> = deg(&[0, 0]);
    assert_eq!(homogeneous_component(&grads[0], &w, &zero), mv(&g, "2*e0^f0 - fm^fp"));
}
