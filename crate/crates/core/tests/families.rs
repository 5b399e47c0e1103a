use homlie::homlie::{
    builtin_family, classify_matrix, component_dimension, default_algebra_for, family_e_as_printed,
    family_h3, heisenberg_matrix, non_multiplicative_witness, verify_family, BUILTIN_FAMILIES,
};
use homlie::lie::{builtin_algebra, make_gl, make_heisenberg};
use homlie::poly::Budget;
use homlie::scalar::int;

fn budget() -> Budget {
    Budget::default()
}

#[test]
fn every_builtin_family_verifies_on_its_algebra() {
    for name in BUILTIN_FAMILIES {
        let g = builtin_algebra(default_algebra_for(name).unwrap()).unwrap();
        let fam = builtin_family(name, &g).unwrap();
        let report = verify_family(&g, &fam, &budget()).unwrap();
        assert!(report.success(), "{name}: {:?}", report.failures.first());
        assert!(report.nontrivial > 0 || name == &"heis" || report.equations > 0);
    }
}

#[test]
fn heisenberg_family_on_three_sizes() {
    for n in 1..=3 {
        let g = make_heisenberg(n).unwrap();
        let fam = builtin_family("heis", &g).unwrap();
        assert!(verify_family(&g, &fam, &budget()).unwrap().success());
        assert_eq!(component_dimension(&fam, &budget()).unwrap(), 2 * n + 4);
    }
}

#[test]
fn printed_e_placement_is_rejected() {
    let g = make_gl(2).unwrap();
    let report = verify_family(&g, &family_e_as_printed(), &budget()).unwrap();
    assert!(!report.success());
}

#[test]
fn h3_family_needs_the_column_convention() {
    let g = make_heisenberg(1).unwrap();
    assert!(verify_family(&g, &family_h3(), &budget())
        .unwrap()
        .success());
    assert!(!verify_family(&g, &family_h3().transpose(), &budget())
        .unwrap()
        .success());
}

#[test]
fn perturbed_family_fails() {
    let g = make_gl(2).unwrap();
    let fam = builtin_family("Ca", &g).unwrap().perturbed();
    let report = verify_family(&g, &fam, &budget()).unwrap();
    assert!(!report.success());
    assert!(!report.failures[0].residue.is_zero());
}

#[test]
fn size_mismatch_is_reported() {
    let g = make_gl(2).unwrap();
    let fam = builtin_family("h3fam", &g).unwrap();
    assert!(verify_family(&g, &fam, &budget()).is_err());
}

#[test]
fn component_dimensions() {
    let expect = [
        ("Ca", 1),
        ("Da", 1),
        ("E", 3),
        ("P", 7),
        ("Q", 7),
        ("T", 4),
        ("u2p1", 4),
        ("u2p2", 4),
        ("u2p3", 4),
        ("h3fam", 6),
    ];
    for (name, dim) in expect {
        let g = builtin_algebra(default_algebra_for(name).unwrap()).unwrap();
        let fam = builtin_family(name, &g).unwrap();
        assert_eq!(component_dimension(&fam, &budget()).unwrap(), dim, "{name}");
    }
}

#[test]
fn heisenberg_chain_witnesses() {
    let g = make_heisenberg(2).unwrap();
    let inv = classify_matrix(&g, &heisenberg_matrix(2, [-1, 0, 0, -1], &[0; 4])).unwrap();
    assert!(inv.involutive && inv.regular);
    let reg = classify_matrix(&g, &heisenberg_matrix(2, [1, 1, -1, 1], &[0; 4])).unwrap();
    assert!(reg.regular && !reg.involutive);
    assert_eq!(reg.determinant, int(8));
    let mult = classify_matrix(&g, &heisenberg_matrix(2, [1, 1, 1, 1], &[0; 4])).unwrap();
    assert!(mult.multiplicative && !mult.regular);
    for n in 1..=2 {
        let h = make_heisenberg(n).unwrap();
        let w = non_multiplicative_witness(&h).unwrap();
        let c = classify_matrix(&h, &w).unwrap();
        assert!(c.hom_lie && !c.multiplicative);
    }
}
