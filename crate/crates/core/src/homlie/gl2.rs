//! The published description of `HLie_m(gl_2)`: the 23 generators `f_i` of
//! the ideal `I` in `Q[x11, ..., x44]`, the auxiliary polynomials, the
//! component ideals and the five-variable ideal `J1` with its basis `G1`.

use super::structure_ring;
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, OrderKind, Polynomial, Ring, RingRef};

const F: [&str; 23] = [
    "x11 - x44",
    "x23*x32 + x41*x44 - x42*x43 - (x41^2 + x41 + x44^2 - x44)/2",
    "x12 + x42",
    "x23*x41 - x23*x44 - x23 + 2*x43^2",
    "x13 + x43",
    "x23*x42 - (x41*x43 - x43*x44 + x43)/2",
    "x14 - x41",
    "x32*x41 - x32*x44 - x32 + 2*x42^2",
    "x21 + x43",
    "x32*x43 - (x41*x42 - x42*x44 + x42)/2",
    "x22 - x33",
    "x33^2 + x41*x44 - x42*x43 - (x41^2 - x41 + x44^2 + x44)/2",
    "x23*x33 + x43^2",
    "x33*x41 - x33*x44 + x33 + 2*x42*x43",
    "x24 - x43",
    "x33*x42 - (x41*x42 - x42*x44 - x42)/2",
    "x31 + x42",
    "x33*x43 - (x41*x43 - x43*x44 - x43)/2",
    "x32*x33 + x42^2",
    "x42*(x41^2 - 2*x41*x44 + 4*x42*x43 + x44^2 - 1)",
    "x34 - x42",
    "x43*(x41^2 - 2*x41*x44 + 4*x42*x43 + x44^2 - 1)",
    "x41^3 - 3*x41^2*x44 + 4*x41*x42*x43 + 3*x41*x44^2 - x41 - 4*x42*x43*x44 - x44^3 + x44",
];

const ALPHA: &str = "x14 - x44";
const BETA: &str = "x41 - x44";

fn with_beta(expr: &str) -> String {
    expr.replace("beta", &format!("({BETA})"))
}

/// `Q[x11, ..., x44]` in graded lex order, the ring of the generated ideal.
pub fn ring() -> RingRef {
    structure_ring(4)
}

fn parse(r: &RingRef, s: &str) -> Polynomial {
    Polynomial::parse(r, &with_beta(s)).expect("published polynomials parse")
}

/// `f_i` for `1 <= i <= 23`.
pub fn f(r: &RingRef, i: usize) -> Polynomial {
    assert!((1..=23).contains(&i), "f_i is defined for 1 <= i <= 23");
    parse(r, F[i - 1])
}

pub fn published_generators(r: &RingRef) -> Vec<Polynomial> {
    (1..=23).map(|i| f(r, i)).collect()
}

pub fn ideal_i(r: &RingRef) -> Ideal {
    Ideal::new(r, published_generators(r)).unwrap()
}

pub fn alpha(r: &RingRef) -> Polynomial {
    parse(r, ALPHA)
}

pub fn beta(r: &RingRef) -> Polynomial {
    parse(r, BETA)
}

pub fn h(r: &RingRef) -> Polynomial {
    parse(r, "beta^2 + beta")
}

pub fn g1(r: &RingRef) -> Polynomial {
    parse(r, "x22 - (beta - 1)/2")
}

pub fn g2(r: &RingRef) -> Polynomial {
    parse(r, "x23*x32 + x42*x43 - (beta + 1)/2")
}

pub fn g3(r: &RingRef) -> Polynomial {
    parse(r, "beta^2 + 4*x42*x43 - 1")
}

fn vars(r: &RingRef, names: &[&str]) -> Vec<Polynomial> {
    names.iter().map(|n| parse(r, n)).collect()
}

pub fn p1_generators(r: &RingRef) -> Vec<Polynomial> {
    let mut g = vec![f(r, 1), alpha(r), beta(r)];
    g.extend(vars(
        r,
        &[
            "x12", "x13", "x21", "x22", "x23", "x24", "x31", "x32", "x33", "x34", "x42", "x43",
        ],
    ));
    g
}

pub fn p2_generators(r: &RingRef) -> Vec<Polynomial> {
    let mut g = vec![
        f(r, 1),
        parse(r, &format!("{ALPHA} + 1")),
        parse(r, "beta + 1"),
    ];
    g.extend(vars(
        r,
        &[
            "x12", "x13", "x21", "x22 - 1", "x23", "x24", "x31", "x32", "x33 - 1", "x34", "x42",
            "x43",
        ],
    ));
    g
}

/// The generators of `p3` exactly as listed: `f1, f3, ..., f10, f15, f17,
/// f21, g1, g2, g3`. This list does not contain `f11 = x22 - x33`, and `I`
/// is not contained in the ideal it generates.
pub fn p3_generators_as_printed(r: &RingRef) -> Vec<Polynomial> {
    let mut g: Vec<Polynomial> = [1, 3, 4, 5, 6, 7, 8, 9, 10, 15, 17, 21]
        .iter()
        .map(|&i| f(r, i))
        .collect();
    g.extend([g1(r), g2(r), g3(r)]);
    g
}

/// `p3` with `f11` added, the ideal of the `E` family.
pub fn p3_generators(r: &RingRef) -> Vec<Polynomial> {
    let mut g = p3_generators_as_printed(r);
    g.push(f(r, 11));
    g
}

pub fn p_generators(r: &RingRef) -> Vec<Polynomial> {
    let mut g = vec![f(r, 1), f(r, 7), h(r)];
    g.extend(vars(
        r,
        &[
            "x12",
            "x13",
            "x21",
            "x22 + beta",
            "x23",
            "x24",
            "x31",
            "x32",
            "x33 + beta",
            "x34",
            "x42",
            "x43",
        ],
    ));
    g
}

pub fn p1(r: &RingRef) -> Ideal {
    Ideal::new(r, p1_generators(r)).unwrap()
}

pub fn p2(r: &RingRef) -> Ideal {
    Ideal::new(r, p2_generators(r)).unwrap()
}

pub fn p3(r: &RingRef) -> Ideal {
    Ideal::new(r, p3_generators(r)).unwrap()
}

pub fn p(r: &RingRef) -> Ideal {
    Ideal::new(r, p_generators(r)).unwrap()
}

/// `Q[beta, x23, x32, x42, x43]` with lex `beta > x23 > x32 > x42 > x43`.
pub fn j1_ring() -> RingRef {
    Ring::new(
        &["beta", "x23", "x32", "x42", "x43"],
        MonomialOrder::new(OrderKind::Lex),
    )
    .unwrap()
}

/// `g2, g3, f4, f6, f8, f10` after substituting `x41 = beta + x44`.
pub fn j1_generators(r: &RingRef) -> Vec<Polynomial> {
    [
        "x23*x32 + x42*x43 - (beta + 1)/2",
        "beta^2 + 4*x42*x43 - 1",
        "x23*beta - x23 + 2*x43^2",
        "x23*x42 - (beta*x43 + x43)/2",
        "x32*beta - x32 + 2*x42^2",
        "x32*x43 - (beta*x42 + x42)/2",
    ]
    .iter()
    .map(|s| Polynomial::parse(r, s).unwrap())
    .collect()
}

pub fn j1(r: &RingRef) -> Ideal {
    Ideal::new(r, j1_generators(r)).unwrap()
}

/// The eight polynomials listed as the Gröbner basis `G1` of `J1`.
pub fn g1_basis(r: &RingRef) -> Vec<Polynomial> {
    [
        "beta - 2*x23*x32 - 2*x42*x43 + 1",
        "x23^2*x32 + x23*x42*x43 - x23 + x43^2",
        "x23^2*x42 - x23*x43 + x43^3",
        "x23*x32^2 + x32*x42*x43 - x32 + x42^2",
        "x23*x32*x42 - x32*x43 + x42^2*x43",
        "x23*x32*x43 - x23*x42 + x42*x43^2",
        "x23*x42^2 - x32*x43^2",
        "x32^2*x43 - x32*x42 + x42^3",
    ]
    .iter()
    .map(|s| Polynomial::parse(r, s).unwrap())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_parse_with_expected_shapes() {
        let r = ring();
        let fs = published_generators(&r);
        assert_eq!(fs.len(), 23);
        assert_eq!(fs[3].to_string(), "x23*x41 - x23*x44 + 2*x43^2 - x23");
        assert_eq!(fs[22].total_degree(), 3);
        assert_eq!(h(&r), &(&beta(&r) * &beta(&r)) + &beta(&r));
        assert_eq!(p3_generators(&r).len(), 16);
        assert_eq!(p1_generators(&r).len(), 15);
        assert_eq!(g1_basis(&j1_ring()).len(), 8);
    }
}
