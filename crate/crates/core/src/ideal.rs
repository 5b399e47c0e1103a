//! Ideal operations on top of Gröbner bases: product, intersection, colon by
//! a principal ideal, radical membership, containment and Krull dimension.

use std::sync::OnceLock;

use crate::poly::{
    groebner_basis, normal_form, Budget, GroebnerError, MonomialOrder, OrderKind, PolyError,
    Polynomial, RingRef,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("colon by the zero polynomial")]
    ZeroDivisor,
    #[error("the ideal is the whole ring; its dimension is undefined")]
    UnitIdeal,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// An ideal given by generators, with a lazily computed reduced Gröbner
/// basis for the ordering of its ring.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    basis: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    /// Generators are moved into `ring` by variable name.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal, PolyError> {
        let gens = gens
            .iter()
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            basis: OnceLock::new(),
        })
    }

    /// Parses each string in `src` as a generator.
    pub fn parse<S: AsRef<str>>(ring: &RingRef, src: &[S]) -> Result<Ideal, PolyError> {
        let gens = src
            .iter()
            .map(|s| Polynomial::parse(ring, s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    pub fn principal(f: &Polynomial) -> Ideal {
        Ideal::new(f.ring(), vec![f.clone()]).unwrap()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The same ideal in another ring over the same (or a larger) set of
    /// variables, typically to change the ordering.
    pub fn in_ring(&self, ring: &RingRef) -> Result<Ideal, PolyError> {
        Ideal::new(ring, self.gens.clone())
    }

    pub fn cached_basis(&self) -> Option<&[Polynomial]> {
        self.basis.get().map(|b| b.as_slice())
    }

    /// Reduced Gröbner basis under the ring's ordering, computed once.
    ///
    /// Concurrent first calls may each compute the basis; the values are
    /// identical and one of them is kept.
    pub fn groebner(&self, budget: &Budget) -> Result<&[Polynomial], GroebnerError> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = groebner_basis(&self.gens, budget)?;
        self.certify(&b);
        Ok(self.basis.get_or_init(|| b))
    }

    fn certify(&self, basis: &[Polynomial]) {
        for g in &self.gens {
            assert!(
                normal_form(g, basis).is_zero(),
                "generator {g} does not reduce to zero by its own Gröbner basis"
            );
        }
    }

    /// Stores an already known reduced Gröbner basis after checking that it
    /// reduces every generator to zero.
    fn with_basis(self, basis: Vec<Polynomial>) -> Ideal {
        self.certify(&basis);
        let _ = self.basis.set(basis);
        self
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool, GroebnerError> {
        Ok(matches!(self.groebner(budget)?, [g] if g.is_one()))
    }

    /// Equality of ideals, decided by comparing reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool, IdealError> {
        let other = other.in_ring(&self.ring)?;
        Ok(self.groebner(budget)? == other.groebner(budget)?)
    }

    fn check_ring(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        f.to_ring(&self.ring)
    }
}

/// `f` in `I`: the normal form by the reduced Gröbner basis vanishes.
pub fn ideal_membership(
    f: &Polynomial,
    ideal: &Ideal,
    budget: &Budget,
) -> Result<bool, IdealError> {
    let f = ideal.check_ring(f)?;
    Ok(normal_form(&f, ideal.groebner(budget)?).is_zero())
}

/// Generated by all pairwise products of generators.
pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal, IdealError> {
    let j = j.in_ring(&i.ring)?;
    let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
    for a in &i.gens {
        for b in &j.gens {
            let p = a * b;
            if !p.is_zero() {
                gens.push(p);
            }
        }
    }
    Ok(Ideal::new(&i.ring, gens)?)
}

/// `I ∩ J` as the `t`-free part of the lex basis of `(1 - t) I + t J`,
/// where `t` is a fresh variable placed above all others.
///
/// The lex precedence among the original variables is the ring's. When
/// the ring is itself lex, the result carries its reduced basis.
pub fn ideal_intersection(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal, IdealError> {
    let ring = &i.ring;
    let j = j.in_ring(ring)?;
    let n = ring.nvars();
    let (ext, t_name) = ring.adjoin_first("t");
    let ext = ext.with_order(MonomialOrder::with_precedence(
        OrderKind::Lex,
        ext.order().precedence(n + 1),
    )?)?;
    let t = Polynomial::var_named(&ext, &t_name)?;
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in &i.gens {
        gens.push(&g.to_ring(&ext)? * &one_minus_t);
    }
    for g in &j.gens {
        gens.push(&g.to_ring(&ext)? * &t);
    }
    let basis = groebner_basis(&gens, budget)?;
    let t_var = ext.index_of(&t_name).unwrap();
    let eliminated = basis
        .iter()
        .filter(|g| !g.involves(t_var))
        .map(|g| g.to_ring(ring))
        .collect::<Result<Vec<_>, _>>()?;
    let result = Ideal::new(ring, eliminated.clone())?;
    let lex_same = ring.order().kind() == OrderKind::Lex;
    Ok(if lex_same {
        result.with_basis(eliminated)
    } else {
        result
    })
}

/// `(I : f)`, computed as `(I ∩ (f)) / f`.
pub fn colon_ideal(i: &Ideal, f: &Polynomial, budget: &Budget) -> Result<Ideal, IdealError> {
    let f = i.check_ring(f)?;
    if f.is_zero() {
        return Err(IdealError::ZeroDivisor);
    }
    let inter = ideal_intersection(i, &Ideal::principal(&f), budget)?;
    let mut quotients = Vec::with_capacity(inter.gens.len());
    for g in &inter.gens {
        match g.exact_div(&f) {
            Some(q) => quotients.push(q),
            None => {
                return Err(IdealError::Invariant(format!(
                    "intersection element {g} is not divisible by {f}"
                )))
            }
        }
    }
    Ok(Ideal::new(&i.ring, quotients)?)
}

/// `f` in the radical of `I`: `1` lies in `I + (1 - y f)` for a fresh `y`.
pub fn radical_membership(f: &Polynomial, i: &Ideal, budget: &Budget) -> Result<bool, IdealError> {
    let f = i.check_ring(f)?;
    let (ext, y_name) = i.ring.adjoin_last("y");
    let y = Polynomial::var_named(&ext, &y_name)?;
    let mut gens = i
        .gens
        .iter()
        .map(|g| g.to_ring(&ext))
        .collect::<Result<Vec<_>, _>>()?;
    gens.push(&Polynomial::one(&ext) - &(&y * &f.to_ring(&ext)?));
    let basis = groebner_basis(&gens, budget)?;
    Ok(matches!(basis.as_slice(), [g] if g.is_one()))
}

/// `I ⊇ J`: every generator of `J` reduces to zero by the basis of `I`.
pub fn ideal_contains(i: &Ideal, j: &Ideal, budget: &Budget) -> Result<bool, IdealError> {
    let basis = i.groebner(budget)?;
    for g in &j.gens {
        let g = i.check_ring(g)?;
        if !normal_form(&g, basis).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The generators of `J` that fail to reduce to zero modulo `I`.
pub fn containment_failures(
    i: &Ideal,
    j: &Ideal,
    budget: &Budget,
) -> Result<Vec<usize>, IdealError> {
    let basis = i.groebner(budget)?;
    let mut out = Vec::new();
    for (k, g) in j.gens.iter().enumerate() {
        let g = i.check_ring(g)?;
        if !normal_form(&g, basis).is_zero() {
            out.push(k);
        }
    }
    Ok(out)
}

/// Krull dimension of `R / I`: the size of a largest set of variables no
/// leading monomial of the basis is supported on.
pub fn ideal_dimension(i: &Ideal, budget: &Budget) -> Result<usize, IdealError> {
    Ok(maximal_independent_set(i, budget)?.len())
}

/// A largest variable subset independent modulo the leading-term ideal.
pub fn maximal_independent_set(i: &Ideal, budget: &Budget) -> Result<Vec<usize>, IdealError> {
    let basis = i.groebner(budget)?;
    if matches!(basis, [g] if g.is_one()) {
        return Err(IdealError::UnitIdeal);
    }
    let n = i.ring.nvars();
    let supports: Vec<u64> = basis
        .iter()
        .map(|g| {
            g.leading_monomial()
                .unwrap()
                .support()
                .iter()
                .fold(0u64, |acc, &v| acc | (1u64 << v))
        })
        .collect();
    assert!(n <= 64, "dimension search supports at most 64 variables");
    let hitting = min_hitting_set(&minimal_sets(supports), n);
    Ok((0..n).filter(|v| hitting & (1u64 << v) == 0).collect())
}

fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::new();
    for s in sets {
        if !out.iter().any(|&m| m & !s == 0) {
            out.push(s);
        }
    }
    out
}

/// Smallest variable set meeting every set, by branch and bound. Every
/// set is nonempty, so the full variable set is a valid starting bound.
fn min_hitting_set(sets: &[u64], n: usize) -> u64 {
    fn go(sets: &[u64], chosen: u64, best: &mut u64) {
        if chosen.count_ones() >= best.count_ones() {
            return;
        }
        match sets.iter().find(|&&s| s & chosen == 0) {
            None => *best = chosen,
            Some(&s) => {
                let mut rest = s;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    go(sets, chosen | bit, best);
                }
            }
        }
    }
    if sets.is_empty() {
        return 0;
    }
    let mut best = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(sets, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn product_and_intersection_of_coordinate_ideals() {
        let r = Ring::lex(&["x", "y"]).unwrap();
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let y = Ideal::parse(&r, &["y"]).unwrap();
        let prod = ideal_product(&x, &y).unwrap();
        assert_eq!(prod.generators(), &[Polynomial::parse(&r, "x*y").unwrap()]);
        let inter = ideal_intersection(&x, &y, &b()).unwrap();
        assert_eq!(
            inter.groebner(&b()).unwrap(),
            &[Polynomial::parse(&r, "x*y").unwrap()]
        );
        let whole = ideal_intersection(&x, &Ideal::unit(&r), &b()).unwrap();
        assert!(whole.same_ideal(&x, &b()).unwrap());
        let times_one = ideal_product(&x, &Ideal::unit(&r)).unwrap();
        assert!(times_one.same_ideal(&x, &b()).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = Ring::grlex(&["x", "y"]).unwrap();
        let xy = Ideal::parse(&r, &["x*y"]).unwrap();
        let q = colon_ideal(&xy, &Polynomial::parse(&r, "x").unwrap(), &b()).unwrap();
        assert!(q
            .same_ideal(&Ideal::parse(&r, &["y"]).unwrap(), &b())
            .unwrap());
        let same = colon_ideal(&xy, &Polynomial::one(&r), &b()).unwrap();
        assert!(same.same_ideal(&xy, &b()).unwrap());
        assert_eq!(
            colon_ideal(&xy, &Polynomial::zero(&r), &b()).unwrap_err(),
            IdealError::ZeroDivisor
        );
    }

    #[test]
    fn membership_and_radical() {
        let r = Ring::grlex(&["x", "y"]).unwrap();
        let x2 = Ideal::parse(&r, &["x^2"]).unwrap();
        let x = Polynomial::parse(&r, "x").unwrap();
        let y = Polynomial::parse(&r, "y").unwrap();
        assert!(!ideal_membership(&x, &x2, &b()).unwrap());
        assert!(radical_membership(&x, &x2, &b()).unwrap());
        assert!(!radical_membership(&y, &Ideal::parse(&r, &["x"]).unwrap(), &b()).unwrap());
        assert!(ideal_membership(&Polynomial::zero(&r), &x2, &b()).unwrap());
        assert!(!ideal_membership(&Polynomial::one(&r), &Ideal::principal(&x), &b()).unwrap());
        let zero = Ideal::zero(&r);
        assert!(ideal_membership(&Polynomial::zero(&r), &zero, &b()).unwrap());
        assert!(!ideal_membership(&x, &zero, &b()).unwrap());
    }

    #[test]
    fn containment() {
        let r = Ring::grlex(&["x", "y"]).unwrap();
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let x2 = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        assert!(ideal_contains(&x, &x2, &b()).unwrap());
        assert!(!ideal_contains(&x2, &x, &b()).unwrap());
        assert_eq!(containment_failures(&x2, &x, &b()).unwrap(), vec![0]);
    }

    #[test]
    fn dimensions() {
        let r = Ring::grlex(&["x", "y", "z", "w"]).unwrap();
        assert_eq!(ideal_dimension(&Ideal::zero(&r), &b()).unwrap(), 4);
        let lin = Ideal::parse(&r, &["x + y", "z - w + 1"]).unwrap();
        assert_eq!(ideal_dimension(&lin, &b()).unwrap(), 2);
        let curve = Ideal::parse(&r, &["x*y", "x*z"]).unwrap();
        // union of the plane x = 0 with the line y = z = 0 in 4-space
        assert_eq!(ideal_dimension(&curve, &b()).unwrap(), 3);
        assert_eq!(
            ideal_dimension(&Ideal::unit(&r), &b()).unwrap_err(),
            IdealError::UnitIdeal
        );
        let point = Ideal::parse(&r, &["x", "y", "z", "w"]).unwrap();
        assert_eq!(ideal_dimension(&point, &b()).unwrap(), 0);
    }

    #[test]
    fn hitting_sets() {
        assert_eq!(min_hitting_set(&minimal_sets(vec![0b011, 0b110]), 3), 0b010);
        assert_eq!(min_hitting_set(&[], 3), 0);
        assert_eq!(
            min_hitting_set(&minimal_sets(vec![0b001, 0b010, 0b100]), 3),
            0b111
        );
    }
}
