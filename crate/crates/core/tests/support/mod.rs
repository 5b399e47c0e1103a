//! Randomised property suites shared by the `properties` and `acceptance`
//! targets. Each runs the same number of cases and returns the first
//! minimal counterexample.
#![allow(dead_code)]

use homlie::derivations::{derivation_space, hilbert_series, is_derivation};
use homlie::homlie::{
    classify_matrix, family_c, family_d, family_e, family_heisenberg, family_u2, verify_family,
    ParamMatrix,
};
use homlie::ideal::{
    colon_ideal, ideal_contains, ideal_dimension, ideal_intersection, ideal_membership,
    ideal_product, radical_membership, Ideal,
};
use homlie::lie::{make_gl, make_heisenberg, make_sl, make_upper_triangular, LieAlgebra};
use homlie::linalg::Matrix;
use homlie::poly::{
    divide, groebner_basis, is_groebner_basis, is_reduced, normal_form, s_polynomial, Budget,
    Monomial, MonomialOrder, OrderKind, Polynomial, Ring, RingRef,
};
use homlie::scalar::{int, rat, Rational};
use proptest::prelude::*;
use proptest::test_runner::{TestCaseError, TestRunner};

pub const CASES: u32 = 200;

fn run<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(ProptestConfig::with_cases(CASES));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn ring(kind: OrderKind) -> RingRef {
    Ring::new(&["x", "y", "z"], MonomialOrder::new(kind)).unwrap()
}

fn order_kind() -> impl Strategy<Value = OrderKind> {
    prop_oneof![Just(OrderKind::Lex), Just(OrderKind::GrLex)]
}

type RawPoly = Vec<([u16; 3], i64)>;

fn raw_poly(max_terms: usize, max_deg: u16) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        ([0..=max_deg, 0..=max_deg, 0..=max_deg], -4i64..=4),
        0..=max_terms,
    )
}

fn build(r: &RingRef, raw: &RawPoly) -> Polynomial {
    let terms = raw
        .iter()
        .map(|(e, c)| (Monomial::from_exponents(e.to_vec()), int(*c)))
        .collect();
    Polynomial::from_terms(r, terms)
}

fn budget() -> Budget {
    Budget::new(20_000)
}

pub fn ring_axioms() -> Result<(), String> {
    run(
        (raw_poly(4, 3), raw_poly(4, 3), raw_poly(4, 3), order_kind()),
        |(a, b, c, kind)| {
            let r = ring(kind);
            let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &a.scale(&int(-1))).is_zero());
            prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
            let point = [rat(1, 2), int(-2), int(3)];
            prop_assert_eq!(
                (&a * &b).eval_rational(&point),
                a.eval_rational(&point) * b.eval_rational(&point)
            );
            Ok(())
        },
    )
}

pub fn division_certificate() -> Result<(), String> {
    run(
        (raw_poly(5, 3), raw_poly(3, 2), raw_poly(3, 2), order_kind()),
        |(f, g1, g2, kind)| {
            let r = ring(kind);
            let f = build(&r, &f);
            let divisors: Vec<Polynomial> = [g1, g2]
                .iter()
                .map(|g| build(&r, g))
                .filter(|g| !g.is_zero())
                .collect();
            let d = divide(&f, &divisors);
            let mut recombined = d.remainder.clone();
            for (q, g) in d.quotients.iter().zip(&divisors) {
                recombined = &recombined + &(q * g);
            }
            prop_assert_eq!(recombined, f);
            for t in d.remainder.terms() {
                for g in &divisors {
                    prop_assert!(!g.leading_monomial().unwrap().divides(&t.mono));
                }
            }
            Ok(())
        },
    )
}

pub fn buchberger_certificate() -> Result<(), String> {
    run(
        (prop::collection::vec(raw_poly(3, 2), 1..=3), order_kind()),
        |(gens, kind)| {
            let r = ring(kind);
            let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
            let basis = groebner_basis(&gens, &budget()).unwrap();
            prop_assert!(is_reduced(&basis));
            prop_assert!(is_groebner_basis(&basis));
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    let s = s_polynomial(&basis[i], &basis[j]).unwrap();
                    prop_assert!(normal_form(&s, &basis).is_zero());
                }
            }
            for g in &gens {
                prop_assert!(normal_form(g, &basis).is_zero());
            }
            // leading terms of ideal elements are divisible by some basis leading term
            if !basis.is_empty() {
                let h = &(&gens[0] * &build(&r, &vec![([1, 0, 1], 1), ([0, 0, 0], 2)]))
                    + gens.last().unwrap();
                if !h.is_zero() {
                    let lm = h.leading_monomial().unwrap();
                    prop_assert!(basis
                        .iter()
                        .any(|b| b.leading_monomial().unwrap().divides(lm)));
                }
            }
            Ok(())
        },
    )
}

pub fn reduced_basis_is_independent_of_generator_order() -> Result<(), String> {
    run(
        (prop::collection::vec(raw_poly(3, 2), 2..=3), order_kind()),
        |(gens, kind)| {
            let r = ring(kind);
            let gens: Vec<Polynomial> = gens.iter().map(|g| build(&r, g)).collect();
            let mut reversed = gens.clone();
            reversed.reverse();
            prop_assert_eq!(
                groebner_basis(&gens, &budget()).unwrap(),
                groebner_basis(&reversed, &budget()).unwrap()
            );
            Ok(())
        },
    )
}

pub fn product_intersection_inclusions() -> Result<(), String> {
    run(
        (raw_poly(3, 2), raw_poly(3, 2), order_kind()),
        |(a, b, kind)| {
            let r = ring(kind);
            let x = Polynomial::var(&r, 0);
            let i = Ideal::new(&r, vec![build(&r, &a), x.clone()]).unwrap();
            let j = Ideal::new(&r, vec![build(&r, &b), Polynomial::var(&r, 1)]).unwrap();
            let prod = ideal_product(&i, &j).unwrap();
            let inter = ideal_intersection(&i, &j, &budget()).unwrap();
            prop_assert!(ideal_contains(&inter, &prod, &budget()).unwrap());
            prop_assert!(ideal_contains(&i, &inter, &budget()).unwrap());
            prop_assert!(ideal_contains(&j, &inter, &budget()).unwrap());
            // membership in the intersection agrees with membership in both
            let probe = &build(&r, &a) * &Polynomial::var(&r, 1);
            let both = ideal_membership(&probe, &i, &budget()).unwrap()
                && ideal_membership(&probe, &j, &budget()).unwrap();
            prop_assert_eq!(ideal_membership(&probe, &inter, &budget()).unwrap(), both);
            Ok(())
        },
    )
}

pub fn colon_contains_ideal() -> Result<(), String> {
    run(
        (raw_poly(3, 2), raw_poly(2, 1), order_kind()),
        |(a, f, kind)| {
            let r = ring(kind);
            let f = build(&r, &f);
            prop_assume!(!f.is_zero());
            let i = Ideal::new(
                &r,
                vec![
                    build(&r, &a),
                    &Polynomial::var(&r, 2) * &Polynomial::var(&r, 0),
                ],
            )
            .unwrap();
            let q = colon_ideal(&i, &f, &budget()).unwrap();
            prop_assert!(ideal_contains(&q, &i, &budget()).unwrap());
            let back = ideal_product(&q, &Ideal::principal(&f)).unwrap();
            prop_assert!(ideal_contains(&i, &back, &budget()).unwrap());
            Ok(())
        },
    )
}

pub fn membership_implies_radical_membership() -> Result<(), String> {
    run((raw_poly(3, 2), raw_poly(3, 2), 1u32..=3), |(a, b, k)| {
        let r = ring(OrderKind::GrLex);
        let g = build(&r, &a);
        let i = Ideal::new(&r, vec![g.clone(), Polynomial::var(&r, 2)]).unwrap();
        let member = &g * &build(&r, &b);
        prop_assert!(radical_membership(&member, &i, &budget()).unwrap());
        // f^k in I gives f in the radical
        let z = Polynomial::var(&r, 2);
        let j = Ideal::new(&r, vec![z.pow(k)]).unwrap();
        prop_assert!(radical_membership(&z, &j, &budget()).unwrap());
        Ok(())
    })
}

pub fn linear_ideal_dimension() -> Result<(), String> {
    run(
        (
            prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..=4),
            order_kind(),
        ),
        |(rows, kind)| {
            let r = Ring::new(&["a", "b", "c", "d"], MonomialOrder::new(kind)).unwrap();
            let gens: Vec<Polynomial> = rows
                .iter()
                .map(|row| {
                    let terms = row
                        .iter()
                        .enumerate()
                        .map(|(v, c)| (Monomial::var(4, v, 1), int(*c)))
                        .collect();
                    Polynomial::from_terms(&r, terms)
                })
                .collect();
            let rank = if rows.is_empty() {
                0
            } else {
                Matrix::from_rows(
                    rows.iter()
                        .map(|row| row.iter().map(|&c| int(c)).collect())
                        .collect(),
                )
                .unwrap()
                .rank()
            };
            let i = Ideal::new(&r, gens).unwrap();
            prop_assert_eq!(ideal_dimension(&i, &budget()).unwrap(), 4 - rank);
            Ok(())
        },
    )
}

fn algebra(which: usize) -> LieAlgebra {
    match which {
        0 => make_gl(2).unwrap(),
        1 => make_sl(2).unwrap(),
        2 => make_heisenberg(1).unwrap(),
        3 => make_upper_triangular(2).unwrap(),
        _ => make_heisenberg(2).unwrap(),
    }
}

fn random_matrix(n: usize, entries: &[i64]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            m[(r, c)] = int(entries[(r * n + c) % entries.len()]);
        }
    }
    m
}

/// A multiplicative structure drawn from a family, or `None` when the
/// sampled parameters leave the family's domain.
fn family_point(which: usize, p: &[i64]) -> Option<(LieAlgebra, ParamMatrix, Vec<Rational>)> {
    let q = |i: usize| int(p[i % p.len()]);
    Some(match which {
        0 => (make_gl(2).unwrap(), family_c(), vec![q(0)]),
        1 => (make_gl(2).unwrap(), family_d(), vec![q(0)]),
        2 => {
            let (b, xi) = (q(1), q(2));
            if b == int(0) || xi == int(1) {
                return None;
            }
            let c = (int(1) - &xi * &xi) / (int(4) * &b);
            (make_gl(2).unwrap(), family_e(), vec![q(0), b, c, xi])
        }
        3 => (
            make_heisenberg(1).unwrap(),
            family_heisenberg(1),
            (0..6).map(q).collect(),
        ),
        _ => {
            let k = 1 + p[0].unsigned_abs() as usize % 3;
            (
                make_upper_triangular(2).unwrap(),
                family_u2(k),
                (0..4).map(q).collect(),
            )
        }
    })
}

/// A multiplicative structure drawn from a family, or `None` when the
/// sampled parameters leave the family's domain.
fn family_sample(which: usize, p: &[i64]) -> Option<(LieAlgebra, Matrix)> {
    let (g, fam, values) = family_point(which, p)?;
    Some((g, fam.evaluate(&values)?))
}

/// Fixing the first parameter symbolically and evaluating the rest agree.
pub fn specialization_matches_evaluation() -> Result<(), String> {
    run(
        (
            0usize..5,
            prop::collection::vec(-3i64..=3, 6),
            -5i64..=5,
            1i64..=4,
        ),
        |(which, p, num, den)| {
            if let Some((g, fam, values)) = family_point(which, &p) {
                let value = rat(num, den);
                let name = fam.params()[0].clone();
                let special = fam.specialize(&name, &value).unwrap();
                let report = verify_family(&g, &special, &Budget::default()).unwrap();
                let mut point = values.clone();
                point[0] = value;
                if let Some(d) = fam.evaluate(&point) {
                    let c = classify_matrix(&g, &d).unwrap();
                    prop_assert_eq!(report.success(), c.multiplicative);
                    prop_assert!(c.multiplicative);
                }
            }
            Ok(())
        },
    )
}

fn flags(c: &homlie::homlie::Classification) -> [bool; 4] {
    [c.involutive, c.regular, c.multiplicative, c.hom_lie]
}

pub fn chain_implication_on_random_matrices() -> Result<(), String> {
    run(
        (
            0usize..5,
            prop::collection::vec(-2i64..=2, 1..=25),
            any::<bool>(),
        ),
        |(which, entries, sparse)| {
            let g = algebra(which);
            let n = g.dim();
            let mut d = random_matrix(n, &entries);
            if sparse {
                // diagonal matrices hit the
                // multiplicative locus far more often
                for r in 0..n {
                    for c in 0..n {
                        if r != c {
                            d[(r, c)] = int(0);
                        }
                    }
                }
            }
            let f = flags(&classify_matrix(&g, &d).unwrap());
            for w in f.windows(2) {
                prop_assert!(!w[0] || w[1], "chain broken: {:?}", f);
            }
            Ok(())
        },
    )
}

pub fn specialized_families_are_multiplicative() -> Result<(), String> {
    run(
        (0usize..5, prop::collection::vec(-3i64..=3, 6)),
        |(which, p)| {
            if let Some((g, d)) = family_sample(which, &p) {
                let c = classify_matrix(&g, &d).unwrap();
                prop_assert!(c.multiplicative, "{:?}", c.first_failure);
                let f = flags(&c);
                for w in f.windows(2) {
                    prop_assert!(!w[0] || w[1]);
                }
            }
            Ok(())
        },
    )
}

pub fn matrix_unit_brackets_match_commutators() -> Result<(), String> {
    run(
        (
            2usize..=4,
            any::<bool>(),
            prop::collection::vec(-3i64..=3, 16),
            prop::collection::vec(-3i64..=3, 16),
        ),
        |(n, upper, xs, ys)| {
            let g = if upper {
                make_upper_triangular(n).unwrap()
            } else {
                make_gl(n).unwrap()
            };
            let idx: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|(i, j)| !upper || i <= j)
                .collect();
            let x: Vec<Rational> = (0..g.dim()).map(|p| int(xs[p])).collect();
            let y: Vec<Rational> = (0..g.dim()).map(|p| int(ys[p])).collect();
            let as_matrix = |v: &[Rational]| {
                let mut m = Matrix::zeros(n, n);
                for (p, &(i, j)) in idx.iter().enumerate() {
                    m[(i, j)] = v[p].clone();
                }
                m
            };
            let (mx, my) = (as_matrix(&x), as_matrix(&y));
            let comm = mx.mul(&my).sub(&my.mul(&mx));
            let expect: Vec<Rational> = idx.iter().map(|&(i, j)| comm[(i, j)].clone()).collect();
            prop_assert_eq!(g.bracket(&x, &y), expect);
            Ok(())
        },
    )
}

pub fn bracket_grading() -> Result<(), String> {
    run(
        (
            0usize..5,
            prop::collection::vec(-2i64..=2, 6),
            0u32..=2,
            0u32..=2,
            prop::collection::vec(-2i64..=2, 8),
        ),
        |(which, p, k, s, coeffs)| {
            if let Some((g, d)) = family_sample(which, &p) {
                let dk = derivation_space(&g, &d, k).unwrap();
                let ds = derivation_space(&g, &d, s).unwrap();
                for delta in &dk.basis {
                    prop_assert!(is_derivation(&g, &d, k, delta));
                }
                let combo = |basis: &[Matrix], off: usize| {
                    let mut m = Matrix::zeros(g.dim(), g.dim());
                    for (i, b) in basis.iter().enumerate() {
                        m = m.add(&b.scale(&int(coeffs[(i + off) % coeffs.len()])));
                    }
                    m
                };
                let (a, b) = (combo(&dk.basis, 0), combo(&ds.basis, 3));
                let comm = a.mul(&b).sub(&b.mul(&a));
                prop_assert!(is_derivation(&g, &d, k + s, &comm));
                let der0 = derivation_space(&g, &d, 0).unwrap();
                let (u, v) = (combo(&der0.basis, 1), combo(&der0.basis, 5));
                prop_assert!(is_derivation(&g, &d, 0, &u.mul(&v).sub(&v.mul(&u))));
            }
            Ok(())
        },
    )
}

pub fn invertible_structures_have_constant_dimensions() -> Result<(), String> {
    run(
        (0usize..5, prop::collection::vec(-3i64..=3, 6)),
        |(which, p)| {
            if let Some((g, d)) = family_sample(which, &p) {
                if d.is_invertible() {
                    let dims: Vec<usize> = (0..=5)
                        .map(|k| derivation_space(&g, &d, k).unwrap().dim())
                        .collect();
                    prop_assert!(dims.iter().all(|&x| x == dims[0]), "{:?}", dims);
                }
                let budget = 2 * g.dim() as u32 + 2;
                let series = hilbert_series(&g, &d, budget).unwrap();
                prop_assert!(series.consistent());
            }
            Ok(())
        },
    )
}
