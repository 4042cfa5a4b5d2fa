//! Randomized property suites, 200 cases each over the catalog.

mod common;

use common::props;

const CASES: u32 = 200;

fn run(suite: fn(u32) -> Result<(), String>) {
    if let Err(e) = suite(CASES) {
        panic!("{e}");
    }
}

#[test]
fn schouten_is_graded_antisymmetric_and_matches_blade_expansion() {
    run(props::schouten_antisymmetry);
}

#[test]
fn schouten_satisfies_leibniz_rule() {
    run(props::schouten_leibniz);
}

#[test]
fn schouten_satisfies_graded_jacobi() {
    run(props::schouten_jacobi);
}

#[test]
fn gradations_are_compatible_with_schouten() {
    run(props::degree_compatibility);
}

#[test]
fn solved_forms_are_invariant() {
    run(props::form_invariance);
}

#[test]
fn determinant_extension_matches_permutation_sum() {
    run(props::extension_paths_agree);
}

#[test]
fn trilinear_extensions_vanish() {
    run(props::odd_arity_vanishing);
}

#[test]
fn killing_extension_is_orthogonal_across_degrees() {
    run(props::cross_degree_orthogonality);
}

#[test]
fn ce_differential_squares_to_zero() {
    run(props::differential_squares_to_zero);
}

#[test]
fn reduction_commutes_with_differential() {
    run(props::naturality_square);
}

#[test]
fn same_coproduct_matches_matrix_equality() {
    run(props::coproduct_equivalence);
}
