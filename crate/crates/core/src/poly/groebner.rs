//! Multivariate division and Buchberger's algorithm.

use std::cmp::Ordering;
use std::collections::HashSet;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::polynomial::{Polynomial, Term};
use super::ring::{same_ring, RingRef};
use super::PolyError;
use crate::scalar::Rational;

/// Limit on the number of S-polynomial reductions one Buchberger run may
/// perform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_reductions: usize,
}

impl Budget {
    pub const fn new(max_reductions: usize) -> Self {
        Budget { max_reductions }
    }

    pub const fn unlimited() -> Self {
        Budget {
            max_reductions: usize::MAX,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(200_000)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("budget exhausted after {reductions} S-polynomial reductions")]
    BudgetExhausted { reductions: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Result of dividing `f` by an ordered list of divisors.
#[derive(Debug, Clone)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// `a - c * m * b` for sorted term slices.
fn merge_sub(ring: &RingRef, a: &[Term], c: &Rational, m: &Monomial, b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = 0;
    let mut ib = 0;
    let mut pending: Option<Term> = None;
    loop {
        if pending.is_none() && ib < b.len() {
            pending = Some(Term {
                mono: b[ib].mono.mul(m),
                coeff: -(c * &b[ib].coeff),
            });
            ib += 1;
        }
        match (a.get(ia), pending.as_ref()) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(x.clone());
                ia += 1;
            }
            (None, Some(_)) => out.push(pending.take().unwrap()),
            (Some(x), Some(y)) => match ring.cmp(&x.mono, &y.mono) {
                Ordering::Greater => {
                    out.push(x.clone());
                    ia += 1;
                }
                Ordering::Less => out.push(pending.take().unwrap()),
                Ordering::Equal => {
                    let y = pending.take().unwrap();
                    let s = &x.coeff + y.coeff;
                    if !s.is_zero() {
                        out.push(Term {
                            mono: y.mono,
                            coeff: s,
                        });
                    }
                    ia += 1;
                }
            },
        }
    }
    out
}

fn reduce_with(
    f: &Polynomial,
    divisors: &[Polynomial],
    mut quotients: Option<&mut Vec<Vec<Term>>>,
) -> Polynomial {
    let ring = f.ring().clone();
    let mut p: Vec<Term> = f.terms().to_vec();
    let mut head = 0;
    let mut rem: Vec<Term> = Vec::new();
    while head < p.len() {
        let lead = &p[head];
        let hit = divisors.iter().position(|g| {
            g.leading_monomial()
                .map(|lm| lm.divides(&lead.mono))
                .unwrap_or(false)
        });
        match hit {
            Some(i) => {
                let g = &divisors[i];
                let glt = g.leading_term().unwrap();
                let m = glt.mono.quotient_of(&lead.mono);
                let c = &lead.coeff / &glt.coeff;
                let next = merge_sub(&ring, &p[head + 1..], &c, &m, &g.terms()[1..]);
                if let Some(q) = quotients.as_deref_mut() {
                    q[i].push(Term { mono: m, coeff: c });
                }
                p = next;
                head = 0;
            }
            None => {
                rem.push(p[head].clone());
                head += 1;
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

/// Fully reduces `f` by `divisors`, trying divisors in list order.
///
/// The result has no term divisible by a leading monomial of `divisors`.
/// Zero divisors are ignored.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    for g in divisors {
        assert!(
            same_ring(f.ring(), g.ring()),
            "polynomials from different rings"
        );
    }
    reduce_with(f, divisors, None)
}

/// Checked variant of [`normal_form`].
pub fn try_normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial, PolyError> {
    for g in divisors {
        f.check_ring(g)?;
    }
    Ok(reduce_with(f, divisors, None))
}

/// Division with quotients: `f = sum q_i g_i + r`.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Division {
    for g in divisors {
        assert!(
            same_ring(f.ring(), g.ring()),
            "polynomials from different rings"
        );
    }
    let mut q: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let remainder = reduce_with(f, divisors, Some(&mut q));
    let quotients = q
        .into_iter()
        .map(|terms| Polynomial::from_sorted_terms(f.ring(), terms))
        .collect();
    Division {
        quotients,
        remainder,
    }
}

/// `S(f, g) = (L / lt f) f - (L / lt g) g` with `L` the lcm of the leading
/// monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    f.check_ring(g)?;
    let (ft, gt) = match (f.leading_term(), g.leading_term()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(PolyError::ZeroPolynomial),
    };
    let l = ft.mono.lcm(&gt.mono);
    let left = f.mul_term(&ft.mono.quotient_of(&l), &ft.coeff.recip());
    let right = g.mul_term(&gt.mono.quotient_of(&l), &gt.coeff.recip());
    Ok(&left - &right)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn check_common_ring(gens: &[Polynomial]) -> Result<Option<RingRef>, PolyError> {
    let mut ring: Option<RingRef> = None;
    for g in gens {
        match &ring {
            None => ring = Some(g.ring().clone()),
            Some(r) => {
                if !same_ring(r, g.ring()) {
                    return Err(PolyError::RingMismatch);
                }
            }
        }
    }
    Ok(ring)
}

fn add_to_basis(
    h: Polynomial,
    basis: &mut Vec<Polynomial>,
    pairs: &mut Vec<Pair>,
    pending: &mut HashSet<(usize, usize)>,
) {
    let h = h.monic();
    let j = basis.len();
    let lm = h.leading_monomial().unwrap().clone();
    for (i, g) in basis.iter().enumerate() {
        let lcm = g.leading_monomial().unwrap().lcm(&lm);
        pairs.push(Pair { i, j, lcm });
        pending.insert((i, j));
    }
    basis.push(h);
}

/// Reduced monic Gröbner basis of the ideal generated by `gens`, under
/// the ordering of their ring, sorted descending by leading monomial.
///
/// Critical pairs are taken by smallest lcm under the ring ordering (the
/// normal strategy; degree-first selection blows up badly under lex).
/// Pairs with coprime leading monomials and pairs caught by the chain
/// criterion are skipped.
pub fn groebner_basis(
    gens: &[Polynomial],
    budget: &Budget,
) -> Result<Vec<Polynomial>, GroebnerError> {
    let ring = match check_common_ring(gens)? {
        Some(r) => r,
        None => return Ok(Vec::new()),
    };
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let unit = |ring: &RingRef| Ok(vec![Polynomial::one(ring)]);

    for g in gens {
        let h = normal_form(g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit(&ring);
        }
        add_to_basis(h, &mut basis, &mut pairs, &mut pending);
    }

    let mut reductions = 0usize;
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                ring.cmp(&pa.lcm, &pb.lcm)
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));

        let lmi = basis[pair.i].leading_monomial().unwrap();
        let lmj = basis[pair.j].leading_monomial().unwrap();
        if lmi.is_coprime(lmj) {
            continue;
        }
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && !pending.contains(&key(pair.i, k))
                && !pending.contains(&key(pair.j, k))
        });
        if chain {
            continue;
        }

        if reductions >= budget.max_reductions {
            return Err(GroebnerError::BudgetExhausted { reductions });
        }
        reductions += 1;

        let s = s_polynomial(&basis[pair.i], &basis[pair.j])?;
        let h = normal_form(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit(&ring);
        }
        add_to_basis(h, &mut basis, &mut pairs, &mut pending);
    }
    Ok(reduce_basis(basis))
}

/// Turns a Gröbner basis into the reduced monic one, sorted descending by
/// leading monomial.
pub fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let basis: Vec<Polynomial> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    let ring = match basis.first() {
        Some(g) => g.ring().clone(),
        None => return basis,
    };
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hl = h.leading_monomial().unwrap();
            k != i && hl.divides(lm) && (hl != lm || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, h)| h.clone())
                .collect();
            normal_form(&minimal[i], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    reduced
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = match s_polynomial(&basis[i], &basis[j]) {
                Ok(s) => s,
                Err(_) => return false,
            };
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Whether `basis` is reduced and monic: leading coefficients are 1 and no
/// term of any element is divisible by another element's leading monomial.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.leading_coeff().map(|c| c.is_one()).unwrap_or(false)
            && basis.iter().enumerate().all(|(k, h)| {
                k == i
                    || g.terms()
                        .iter()
                        .all(|t| !h.leading_monomial().unwrap().divides(&t.mono))
            })
    })
}
