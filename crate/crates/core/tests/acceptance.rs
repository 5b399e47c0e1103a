//! Acceptance run: one PASS/FAIL line per criterion, every comparison
//! exact and every time limit pinned below.

mod support;

use std::time::{Duration, Instant};

use homlie::derivations::{derivation_space, hilbert_series, SeriesCase};
use homlie::homlie::{
    builtin_family, classify_matrix, component_dimension, family_c, family_h3, family_heisenberg,
    generate_homlie_ideal, gl2, heisenberg_matrix, non_multiplicative_witness, verify_family,
};
use homlie::ideal::{
    colon_ideal, containment_failures, ideal_contains, ideal_dimension, ideal_intersection,
    ideal_product, radical_membership, Ideal,
};
use homlie::lie::{builtin_algebra, make_gl, make_heisenberg};
use homlie::linalg::Matrix;
use homlie::poly::{groebner_basis, is_groebner_basis, Budget, Polynomial};
use homlie::scalar::{int, rat};

type Outcome = Result<String, String>;
type Suite = fn() -> Result<(), String>;

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn budget() -> Budget {
    Budget::default()
}

fn sorted(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    v.sort_by_key(|p| p.to_string());
    v
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn groebner_reproduction() -> Outcome {
    let r = gl2::j1_ring();
    let basis = groebner_basis(&gl2::j1_generators(&r), &budget()).map_err(|e| e.to_string())?;
    let published: Vec<Polynomial> = gl2::g1_basis(&r).iter().map(|g| g.monic()).collect();
    check(sorted(basis.clone()) == sorted(published), || {
        format!(
            "basis differs: {}",
            basis
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )
    })?;
    Ok(format!(
        "{} polynomials, lex beta > x23 > x32 > x42 > x43",
        basis.len()
    ))
}

fn colon_reproduction() -> Outcome {
    let r = gl2::j1_ring();
    let j1 = gl2::j1(&r);
    let b = Polynomial::parse(&r, "beta - 1").unwrap();
    let e = |x: homlie::ideal::IdealError| x.to_string();
    let inter = ideal_intersection(&j1, &Ideal::principal(&b), &budget()).map_err(e)?;
    let scaled: Vec<Polynomial> = gl2::g1_basis(&r).iter().map(|g| (&b * g).monic()).collect();
    check(is_groebner_basis(&scaled), || {
        "(beta - 1) G1 is not a Groebner basis".into()
    })?;
    let scaled_reduced = groebner_basis(&scaled, &budget()).map_err(|x| x.to_string())?;
    let inter_basis = inter
        .groebner(&budget())
        .map_err(|x| x.to_string())?
        .to_vec();
    check(inter_basis == scaled_reduced, || {
        "J1 ∩ (beta - 1) differs from (beta - 1) G1".into()
    })?;
    let colon = colon_ideal(&j1, &b, &budget()).map_err(e)?;
    let colon_basis = colon
        .groebner(&budget())
        .map_err(|x| x.to_string())?
        .to_vec();
    let j1_basis = j1.groebner(&budget()).map_err(|x| x.to_string())?.to_vec();
    check(colon_basis == j1_basis, || {
        "(J1 : beta - 1) differs from J1".into()
    })?;
    Ok("intersection basis = (beta - 1) G1, colon basis = basis of J1".into())
}

fn containment_suite() -> Outcome {
    let r = gl2::ring();
    let e = |x: homlie::ideal::IdealError| x.to_string();
    let i = gl2::ideal_i(&r);
    let (p1, p2, p3, p) = (gl2::p1(&r), gl2::p2(&r), gl2::p3(&r), gl2::p(&r));
    for (name, comp) in [("p1", &p1), ("p2", &p2), ("p3", &p3)] {
        check(ideal_contains(comp, &i, &budget()).map_err(e)?, || {
            format!("I is not contained in {name}")
        })?;
    }
    let p1p2 = ideal_product(&p1, &p2).map_err(e)?;
    check(ideal_contains(&p, &p1p2, &budget()).map_err(e)?, || {
        "p1 p2 is not contained in p".into()
    })?;
    let pp3 = ideal_product(&p, &p3).map_err(e)?;
    check(ideal_contains(&i, &pp3, &budget()).map_err(e)?, || {
        "p p3 is not contained in I".into()
    })?;
    let printed = Ideal::new(&r, gl2::p3_generators_as_printed(&r)).unwrap();
    let missing = containment_failures(&printed, &i, &budget()).map_err(e)?;
    let names: Vec<String> = missing.iter().map(|k| format!("f{}", k + 1)).collect();
    Ok(format!(
        "I ⊆ p1, p2, p3; p1 p2 ⊆ p; p p3 ⊆ I; p3 without f11 misses {}",
        names.join(", ")
    ))
}

fn variety_equality() -> Outcome {
    let r = gl2::ring();
    let e = |x: homlie::ideal::IdealError| x.to_string();
    let raw = generate_homlie_ideal(&make_gl(2).unwrap(), true).ideal();
    let i = gl2::ideal_i(&r);
    for k in 1..=23 {
        check(
            radical_membership(&gl2::f(&r, k), &raw, &budget()).map_err(e)?,
            || format!("f{k} is not in the radical of the generated ideal"),
        )?;
    }
    for (k, g) in raw.generators().iter().enumerate() {
        check(radical_membership(g, &i, &budget()).map_err(e)?, || {
            format!("generated equation {} is not in the radical of I", k + 1)
        })?;
    }
    Ok(format!(
        "23 published and {} generated polynomials, both directions",
        raw.generators().len()
    ))
}

fn family_memberships() -> Outcome {
    let mut checked = Vec::new();
    let cases: &[(&str, &str)] = &[
        ("Ca", "gl2"),
        ("Da", "gl2"),
        ("E", "gl2"),
        ("diag1", "gl3"),
        ("diag0", "gl3"),
        ("h3fam", "h3"),
        ("heis", "h3"),
        ("heis", "h5"),
        ("heis", "h7"),
        ("u2p1", "u2"),
        ("u2p2", "u2"),
        ("u2p3", "u2"),
        ("P", "u3"),
        ("Q", "u3"),
        ("T", "u3"),
    ];
    for &(fam, alg) in cases {
        let g = builtin_algebra(alg).unwrap();
        let family = builtin_family(fam, &g).map_err(|e| e.to_string())?;
        let report = verify_family(&g, &family, &budget()).map_err(|e| e.to_string())?;
        check(report.success(), || {
            format!("{fam} on {alg}: {}", report.failures[0].equation)
        })?;
        checked.push(format!("{fam}/{alg}"));
    }
    let h3 = make_heisenberg(1).unwrap();
    let transposed =
        verify_family(&h3, &family_h3().transpose(), &budget()).map_err(|e| e.to_string())?;
    let convention = if transposed.success() {
        "transposed h3 family also verifies"
    } else {
        "h3 family holds with D(e_i) as column i, fails transposed"
    };
    Ok(format!("{} families; {convention}", checked.len()))
}

fn dimension_claims() -> Outcome {
    let r = gl2::ring();
    let e = |x: homlie::ideal::IdealError| x.to_string();
    let mut got = Vec::new();
    for (name, ideal, want) in [
        ("p1", gl2::p1(&r), 1),
        ("p2", gl2::p2(&r), 1),
        ("p3", gl2::p3(&r), 3),
    ] {
        let d = ideal_dimension(&ideal, &budget()).map_err(e)?;
        check(d == want, || format!("dim {name} = {d}, expected {want}"))?;
        got.push(format!("{name}={d}"));
    }
    let raw_h3 = generate_homlie_ideal(&make_heisenberg(1).unwrap(), true).ideal();
    let d = ideal_dimension(&raw_h3, &budget()).map_err(e)?;
    check(d == 6, || format!("dim HLie_m(h3) = {d}, expected 6"))?;
    got.push(format!("h3={d}"));
    for n in 1..=3 {
        let d = component_dimension(&family_heisenberg(n), &budget()).map_err(|x| x.to_string())?;
        check(d == 2 * n + 4, || {
            format!("heis n={n}: {d}, expected {}", 2 * n + 4)
        })?;
        got.push(format!("heis{n}={d}"));
    }
    let u3 = builtin_algebra("u3").unwrap();
    for (name, want) in [("P", 7), ("Q", 7), ("T", 4)] {
        let fam = builtin_family(name, &u3).unwrap();
        let d = component_dimension(&fam, &budget()).map_err(|x| x.to_string())?;
        check(d == want, || format!("{name}: {d}, expected {want}"))?;
        got.push(format!("{name}={d}"));
    }
    Ok(got.join(" "))
}

fn chain_strictness() -> Outcome {
    let g = make_heisenberg(2).unwrap();
    let c = |theta| {
        classify_matrix(&g, &heisenberg_matrix(2, theta, &[0; 4])).map_err(|e| e.to_string())
    };
    let inv = c([-1, 0, 0, -1])?;
    check(inv.involutive, || "D(-1,0,0,-1;0) is not involutive".into())?;
    let reg = c([1, 1, -1, 1])?;
    check(
        reg.regular && !reg.involutive && reg.determinant == int(8),
        || {
            format!(
                "D(1,1,-1,1;0): regular {}, involutive {}, det {}",
                reg.regular, reg.involutive, reg.determinant
            )
        },
    )?;
    let mult = c([1, 1, 1, 1])?;
    check(mult.multiplicative && !mult.regular, || {
        "D(1,1,1,1;0) is not strictly multiplicative".into()
    })?;
    let w = non_multiplicative_witness(&g).ok_or("no non-multiplicative Hom-Lie solution")?;
    let c = classify_matrix(&g, &w).map_err(|e| e.to_string())?;
    check(c.hom_lie && !c.multiplicative, || {
        "witness is misclassified".into()
    })?;
    Ok("involutive ⊊ regular (det 8) ⊊ multiplicative ⊊ Hom-Lie".into())
}

fn hilbert() -> Outcome {
    let g = make_gl(2).unwrap();
    let e = |x: homlie::derivations::DerivError| x.to_string();
    let c_half = family_c().evaluate(&[rat(1, 2)]).unwrap();
    let s = hilbert_series(&g, &c_half, 10).map_err(e)?;
    check(
        s.to_string() == "(4 - 3*t)/(1 - t^1)" && s.case == SeriesCase::Periodic,
        || format!("C_1/2: {s}"),
    )?;
    check(s.computed[..2] == [4, 1], || {
        format!("l0, l1 = {:?}", &s.computed[..2])
    })?;
    let id = hilbert_series(&g, &Matrix::identity(4), 10).map_err(e)?;
    check(id.to_string() == "(4)/(1 - t^1)", || {
        format!("identity: {id}")
    })?;
    let zero = Matrix::zeros(4, 4);
    let z = hilbert_series(&g, &zero, 10).map_err(e)?;
    let direct: Vec<i64> = (0..=5)
        .map(|k| derivation_space(&g, &zero, k).map(|s| s.dim() as i64))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    check(
        z.case == SeriesCase::Nilpotent && z.expand(5) == direct,
        || format!("zero map: {z} vs {direct:?}"),
    )?;
    Ok(format!("C_1/2 {s}; identity {id}; zero {z}"))
}

fn property_suites() -> Outcome {
    let suites: &[(&str, Suite)] = &[
        ("ring axioms", support::ring_axioms),
        ("division", support::division_certificate),
        ("buchberger", support::buchberger_certificate),
        (
            "order invariance",
            support::reduced_basis_is_independent_of_generator_order,
        ),
        (
            "product/intersection",
            support::product_intersection_inclusions,
        ),
        ("colon", support::colon_contains_ideal),
        ("radical", support::membership_implies_radical_membership),
        ("linear dimension", support::linear_ideal_dimension),
        ("chain", support::chain_implication_on_random_matrices),
        ("families", support::specialized_families_are_multiplicative),
        ("specialization", support::specialization_matches_evaluation),
        (
            "structure constants",
            support::matrix_unit_brackets_match_commutators,
        ),
        ("grading", support::bracket_grading),
        (
            "invertible dims",
            support::invertible_structures_have_constant_dimensions,
        ),
    ];
    let mut failed = Vec::new();
    for (name, suite) in suites {
        if let Err(msg) = suite() {
            failed.push(format!("{name}: {msg}"));
        }
    }
    check(failed.is_empty(), || failed.join("; "))?;
    Ok(format!(
        "{} suites x {} cases, 0 violations",
        suites.len(),
        support::CASES
    ))
}

#[test]
fn acceptance() {
    let criteria = [
        Criterion {
            id: 1,
            name: "groebner reproduction",
            limit: secs(1),
            run: groebner_reproduction,
        },
        Criterion {
            id: 2,
            name: "colon reproduction",
            limit: secs(5),
            run: colon_reproduction,
        },
        Criterion {
            id: 3,
            name: "containment suite",
            limit: secs(30),
            run: containment_suite,
        },
        Criterion {
            id: 4,
            name: "variety equality gl2",
            limit: secs(600),
            run: variety_equality,
        },
        Criterion {
            id: 5,
            name: "family memberships",
            limit: secs(60),
            run: family_memberships,
        },
        Criterion {
            id: 6,
            name: "dimension claims",
            limit: secs(60),
            run: dimension_claims,
        },
        Criterion {
            id: 7,
            name: "chain strictness h5",
            limit: secs(10),
            run: chain_strictness,
        },
        Criterion {
            id: 8,
            name: "hilbert series",
            limit: secs(10),
            run: hilbert,
        },
        Criterion {
            id: 9,
            name: "property suites",
            limit: secs(600),
            run: property_suites,
        },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over time limit")),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} [{}] {}: {detail} ({:.3}s, limit {}s)",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
