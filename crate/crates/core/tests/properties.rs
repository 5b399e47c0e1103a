mod support;

use homlie::homlie::builtin_family;
use homlie::lie::{make_gl, make_sl};
use homlie::scalar::int;

#[test]
fn ring_axioms() {
    support::ring_axioms().unwrap();
}

#[test]
fn division_certificate() {
    support::division_certificate().unwrap();
}

#[test]
fn buchberger_certificate() {
    support::buchberger_certificate().unwrap();
}

#[test]
fn reduced_basis_is_independent_of_generator_order() {
    support::reduced_basis_is_independent_of_generator_order().unwrap();
}

#[test]
fn product_intersection_inclusions() {
    support::product_intersection_inclusions().unwrap();
}

#[test]
fn colon_contains_ideal() {
    support::colon_contains_ideal().unwrap();
}

#[test]
fn membership_implies_radical_membership() {
    support::membership_implies_radical_membership().unwrap();
}

#[test]
fn linear_ideal_dimension() {
    support::linear_ideal_dimension().unwrap();
}

#[test]
fn chain_implication_on_random_matrices() {
    support::chain_implication_on_random_matrices().unwrap();
}

#[test]
fn specialization_matches_evaluation() {
    support::specialization_matches_evaluation().unwrap();
}

#[test]
fn specialized_families_are_multiplicative() {
    support::specialized_families_are_multiplicative().unwrap();
}

#[test]
fn matrix_unit_brackets_match_commutators() {
    support::matrix_unit_brackets_match_commutators().unwrap();
}

#[test]
fn bracket_grading() {
    support::bracket_grading().unwrap();
}

#[test]
fn invertible_structures_have_constant_dimensions() {
    support::invertible_structures_have_constant_dimensions().unwrap();
}

#[test]
fn sl_and_gl3_structure() {
    let sl2 = make_sl(2).unwrap();
    let names = sl2.basis_names();
    let h = names.iter().position(|s| s == "H1").unwrap();
    let e = names.iter().position(|s| s == "E12").unwrap();
    let mut expect = vec![int(0); sl2.dim()];
    expect[e] = int(2);
    assert_eq!(
        sl2.bracket(&sl2.unit_vector(h), &sl2.unit_vector(e)),
        expect
    );
    // Jacobi is checked when the algebras are built
    assert_eq!(make_gl(3).unwrap().dim(), 9);
    assert_eq!(make_sl(3).unwrap().dim(), 8);
    let g = make_gl(2).unwrap();
    assert!(builtin_family("heis", &g).is_err());
}
