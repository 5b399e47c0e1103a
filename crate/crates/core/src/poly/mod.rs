//! Exact multivariate polynomials over `Q`, monomial orderings, division
//! and Gröbner bases.

mod groebner;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use groebner::{
    divide, groebner_basis, is_groebner_basis, is_reduced, normal_form, reduce_basis, s_polynomial,
    try_normal_form, Budget, Division, GroebnerError,
};
pub use monomial::Monomial;
pub use parse::{parse_fraction, parse_polynomial, scan_variables};
pub use polynomial::{poly_arith, ArithOp, Polynomial, Term};
pub use ring::{MonomialOrder, OrderKind, Ring, RingRef};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("invalid variable name '{0}'")]
    BadVariableName(String),
    #[error("variable precedence is not a permutation of the ring variables")]
    BadPrecedence,
    #[error("unknown monomial ordering '{0}'")]
    UnknownOrdering(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
