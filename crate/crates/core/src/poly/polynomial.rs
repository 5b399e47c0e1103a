use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::monomial::Monomial;
use super::ring::{same_ring, RingRef};
use super::PolyError;
use crate::scalar::{format_rational, power, Coeff, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Rational,
}

/// Sparse polynomial over `Q`.
///
/// Terms are sorted strictly descending under the ring's ordering and
/// carry no zero coefficients; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic entry point: fails on mismatched rings instead of
/// panicking like the operator impls.
pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: ArithOp) -> Result<Polynomial, PolyError> {
    p.check_ring(q)?;
    Ok(match op {
        ArithOp::Add => p.add_scaled(&Rational::one(), None, q),
        ArithOp::Sub => p.add_scaled(&-Rational::one(), None, q),
        ArithOp::Mul => p.mul_unchecked(q),
    })
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term {
                mono: Monomial::one(ring.nvars()),
                coeff: c,
            }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &RingRef, var: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), var, 1), Rational::one())
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self, PolyError> {
        ring.index_of(name)
            .map(|i| Self::var(ring, i))
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn monomial(ring: &RingRef, mono: Monomial, coeff: Rational) -> Self {
        assert_eq!(mono.nvars(), ring.nvars());
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { mono, coeff }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted)
    /// terms.
    pub fn from_terms(ring: &RingRef, raw: Vec<(Monomial, Rational)>) -> Self {
        let mut raw = raw;
        raw.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for (mono, coeff) in raw {
            assert_eq!(mono.nvars(), ring.nvars());
            match terms.last_mut() {
                Some(last) if last.mono == mono => last.coeff += coeff,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push(Term { mono, coeff })
                }
            }
        }
        if let Some(last) = terms.last() {
            if last.coeff.is_zero() {
                terms.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.mono.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [t] if t.mono.is_one() && t.coeff.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn coeff_of(&self, mono: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.mono == mono)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Whether variable `var` occurs in some term.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exponent(var) > 0)
    }

    pub fn variables(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&v| self.involves(v))
            .collect()
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        poly_arith(self, other, ArithOp::Add)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        poly_arith(self, other, ArithOp::Sub)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        poly_arith(self, other, ArithOp::Mul)
    }

    /// `self + c * m * other` by a single merge pass; `m = None` means 1.
    pub(crate) fn add_scaled(
        &self,
        c: &Rational,
        m: Option<&Monomial>,
        other: &Polynomial,
    ) -> Polynomial {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|t| Term {
                mono: match m {
                    Some(m) => t.mono.mul(m),
                    None => t.mono.clone(),
                },
                coeff: &t.coeff * c,
            })
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ring.cmp(&x.mono, &y.mono),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let s = &x.coeff + y.coeff;
                    if !s.is_zero() {
                        out.push(Term {
                            mono: y.mono,
                            coeff: s,
                        });
                    }
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut raw = Vec::with_capacity(small.len() * large.len());
        for s in &small.terms {
            for l in &large.terms {
                raw.push((s.mono.mul(&l.mono), &s.coeff * &l.coeff));
            }
        }
        Polynomial::from_terms(&self.ring, raw)
    }

    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(mono),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        power(self, exp)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Evaluates with `values[v]` substituted for variable `v`.
    pub fn evaluate<T: Coeff>(&self, values: &[T], one: &T) -> T {
        assert_eq!(values.len(), self.ring.nvars());
        let mut acc = one.zero_like();
        // cache small powers per variable
        let mut powers: Vec<Vec<T>> = vec![Vec::new(); values.len()];
        for t in &self.terms {
            let mut prod = one.scaled(&t.coeff);
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[v];
                if cache.is_empty() {
                    cache.push(values[v].clone());
                }
                while cache.len() < e as usize {
                    let next = cache.last().unwrap().times(&values[v]);
                    cache.push(next);
                }
                prod = prod.times(&cache[e as usize - 1]);
            }
            acc = acc.plus(&prod);
        }
        acc
    }

    /// Rational evaluation.
    pub fn eval_rational(&self, values: &[Rational]) -> Rational {
        self.evaluate(values, &Rational::one())
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn to_ring(&self, target: &RingRef) -> Result<Polynomial, PolyError> {
        if same_ring(&self.ring, target) {
            return Ok(Polynomial {
                ring: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let nt = target.nvars();
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0u16; nt];
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[v] {
                    Some(w) => exps[w] = e,
                    None => return Err(PolyError::UnknownVariable(self.ring.name(v).to_string())),
                }
            }
            raw.push((Monomial::from_exponents(exps), t.coeff.clone()));
        }
        Ok(Polynomial::from_terms(target, raw))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = super::groebner::divide(self, std::slice::from_ref(divisor));
        d.remainder
            .is_zero()
            .then(|| d.quotients.into_iter().next().unwrap())
    }

    /// `(self)` with every term's monomial rendered against the ring names.
    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.names();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono = t.mono.render(names);
            if mono.is_empty() {
                f.write_str(&format_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Coeff for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(&self.ring)
    }
    fn one_like(&self) -> Self {
        Polynomial::one(&self.ring)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different rings; use
            /// [`poly_arith`] for a checked variant.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                poly_arith(self, rhs, $op).expect("polynomials from different rings")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
