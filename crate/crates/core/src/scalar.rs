//! The rational field and the small arithmetic interface shared by every
//! value that can stand in for a matrix entry: rationals, polynomials,
//! and polynomial fractions with restricted denominators.

use num::{One, Zero};

pub type Rational = num::BigRational;
pub type Integer = num::BigInt;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Commutative-ring operations over `Q`, by reference.
///
/// `zero_like`/`one_like` exist because polynomial values need their ring
/// to build constants.
pub trait Coeff: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_value(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
}

impl Coeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
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
        self * c
    }
}

/// Integer power by repeated squaring.
pub fn power<T: Coeff>(base: &T, mut exp: u32) -> T {
    let mut result = base.one_like();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result = result.times(&b);
        }
        exp >>= 1;
        if exp > 0 {
            b = b.times(&b);
        }
    }
    result
}

pub(crate) fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
