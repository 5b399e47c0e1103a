//! Hom-Lie structures on a Lie algebra `g`.
//!
//! A linear map `D` is written `D(e_i) = sum_j x_ij e_j`. As a matrix it
//! stores `x_ij` at row `j`, column `i`, so column `i` is the image of
//! `e_i`. The Hom-Jacobi identity is linear in the `x_ij`; asking `D` to be
//! a homomorphism adds quadratic equations.

mod families;
pub mod gl2;
mod param;

use std::fmt;

use num::Zero;
use rayon::prelude::*;

use crate::ideal::{Ideal, IdealError};
use crate::lie::{ConcreteMatrix, LieAlgebra};
use crate::linalg::Matrix;
use crate::poly::{GroebnerError, Monomial, PolyError, Polynomial, Ring, RingRef};
use crate::scalar::{Coeff, Rational};

pub use families::{
    builtin_family, default_algebra_for, family_c, family_d, family_diag, family_e,
    family_e_as_printed, family_h3, family_heisenberg, family_p, family_q, family_t, family_u2,
    heisenberg_matrix, BUILTIN_FAMILIES,
};
pub use param::{
    component_dimension, verify_family, Failure, ParamFrac, ParamMatrix, VerificationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomLieError {
    #[error("matrix has size {found} but the algebra has dimension {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("entry ({row}, {col}) has denominator {den}, which is not a product of the declared denominators")]
    UncoveredDenominator { row: usize, col: usize, den: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("the constraints are inconsistent (1 lies in the constraint ideal)")]
    InconsistentConstraints,
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Names one scalar equation: a coordinate of a Hom-Jacobi sum or of a
/// homomorphism defect. Indices are 0-based; display is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquationId {
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        coord: usize,
    },
    Mult {
        i: usize,
        j: usize,
        coord: usize,
    },
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EquationId::Jacobi { i, j, k, coord } => {
                write!(
                    f,
                    "hom-jacobi(e{}, e{}, e{})[e{}]",
                    i + 1,
                    j + 1,
                    k + 1,
                    coord + 1
                )
            }
            EquationId::Mult { i, j, coord } => {
                write!(f, "homomorphism(e{}, e{})[e{}]", i + 1, j + 1, coord + 1)
            }
        }
    }
}

/// Hom-Jacobi sums for all triples `i < j < k`, every coordinate, in order.
pub fn jacobi_equations<T: Coeff>(g: &LieAlgebra, images: &[Vec<T>]) -> Vec<(EquationId, T)> {
    let n = g.dim();
    assert_eq!(images.len(), n);
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect();
    triples
        .par_iter()
        .flat_map_iter(|&(i, j, k)| {
            let zero = images[0][0].zero_like();
            let mut sum = vec![zero; n];
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                let inner = g.sparse_to_dense(g.basis_bracket(b, c));
                if inner.iter().all(Zero::is_zero) {
                    continue;
                }
                for (s, t) in sum
                    .iter_mut()
                    .zip(g.bracket_with_rational(&images[a], &inner))
                {
                    *s = s.plus(&t);
                }
            }
            sum.into_iter()
                .enumerate()
                .map(move |(coord, v)| (EquationId::Jacobi { i, j, k, coord }, v))
        })
        .collect()
}

/// `D([e_i, e_j]) - [D e_i, D e_j]` for all pairs `i < j`, every coordinate.
pub fn mult_equations<T: Coeff>(g: &LieAlgebra, images: &[Vec<T>]) -> Vec<(EquationId, T)> {
    let n = g.dim();
    assert_eq!(images.len(), n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let zero = images[0][0].zero_like();
            let mut lhs = vec![zero; n];
            for (k, c) in g.basis_bracket(i, j) {
                for (l, v) in lhs.iter_mut().zip(&images[*k]) {
                    *l = l.plus(&v.scaled(c));
                }
            }
            let rhs = g.bracket(&images[i], &images[j]);
            lhs.into_iter()
                .zip(rhs)
                .enumerate()
                .map(move |(coord, (l, r))| (EquationId::Mult { i, j, coord }, l.minus(&r)))
        })
        .collect()
}

/// Name of the variable `x_ij` (1-based), with an underscore once `n >= 10`.
pub fn variable_name(i: usize, j: usize, n: usize) -> String {
    if n >= 10 {
        format!("x{i}_{j}")
    } else {
        format!("x{i}{j}")
    }
}

/// The ring `Q[x_ij]` for an algebra of dimension `n`, graded lex, with `x_ij`
/// at index `(i-1) n + (j-1)`.
pub fn structure_ring(n: usize) -> RingRef {
    let names: Vec<String> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| variable_name(i, j, n)))
        .collect();
    Ring::grlex(&names).expect("variable names are valid")
}

/// The defining equations of `HLie(g)` and, optionally, `HLie_m(g)`.
#[derive(Debug, Clone)]
pub struct HomLieIdeal {
    algebra: LieAlgebra,
    ring: RingRef,
    jacobi: Vec<(EquationId, Polynomial)>,
    mult: Vec<(EquationId, Polynomial)>,
}

impl HomLieIdeal {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn jacobi_gens(&self) -> Vec<Polynomial> {
        self.jacobi.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn mult_gens(&self) -> Vec<Polynomial> {
        self.mult.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn labelled(&self) -> impl Iterator<Item = &(EquationId, Polynomial)> {
        self.jacobi.iter().chain(&self.mult)
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.labelled().map(|(_, p)| p.clone()).collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.generators()).expect("generators live in the ring")
    }
}

/// Builds the Hom-Jacobi equations and, when `multiplicative`, the
/// homomorphism equations for the generic map `D(e_i) = sum_u x_iu e_u`.
/// Zero polynomials are dropped; duplicates are kept.
pub fn generate_homlie_ideal(g: &LieAlgebra, multiplicative: bool) -> HomLieIdeal {
    let n = g.dim();
    let ring = structure_ring(n);
    let images: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|u| Polynomial::var(&ring, i * n + u)).collect())
        .collect();
    let keep = |eqs: Vec<(EquationId, Polynomial)>| {
        eqs.into_iter()
            .filter(|(_, p)| !p.is_zero())
            .collect::<Vec<_>>()
    };
    let jacobi = keep(jacobi_equations(g, &images));
    let mult = if multiplicative {
        keep(mult_equations(g, &images))
    } else {
        Vec::new()
    };
    HomLieIdeal {
        algebra: g.clone(),
        ring,
        jacobi,
        mult,
    }
}

/// Values of the variables `x_ij` for a concrete matrix, in ring order.
pub fn matrix_point(d: &ConcreteMatrix) -> Vec<Rational> {
    let n = d.rows();
    (0..n)
        .flat_map(|i| (0..n).map(move |u| d[(u, i)].clone()))
        .collect()
}

/// The images `D(e_i)` as coordinate vectors: column `i` of the matrix.
pub fn images_of(d: &ConcreteMatrix) -> Vec<Vec<Rational>> {
    (0..d.cols()).map(|i| d.column(i)).collect()
}

/// Position of a matrix in the chain
/// involutive ⊆ regular ⊆ multiplicative ⊆ Hom-Lie.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub hom_lie: bool,
    pub multiplicative: bool,
    pub regular: bool,
    pub involutive: bool,
    pub determinant: Rational,
    /// The first equation that does not vanish, if any.
    pub first_failure: Option<(EquationId, Rational)>,
}

fn check_size(g: &LieAlgebra, d: &Matrix) -> Result<(), HomLieError> {
    if !d.is_square() || d.rows() != g.dim() {
        return Err(HomLieError::SizeMismatch {
            expected: g.dim(),
            found: d.rows().max(d.cols()),
        });
    }
    Ok(())
}

pub fn classify_matrix(g: &LieAlgebra, d: &ConcreteMatrix) -> Result<Classification, HomLieError> {
    check_size(g, d)?;
    let images = images_of(d);
    let first_nonzero =
        |eqs: Vec<(EquationId, Rational)>| eqs.into_iter().find(|(_, v)| !v.is_zero());
    let jac = first_nonzero(jacobi_equations(g, &images));
    let hom_lie = jac.is_none();
    let mult = if hom_lie {
        first_nonzero(mult_equations(g, &images))
    } else {
        None
    };
    let multiplicative = hom_lie && mult.is_none();
    let determinant = d.determinant();
    let regular = multiplicative && !determinant.is_zero();
    let involutive = multiplicative && d.mul(d) == Matrix::identity(d.rows());
    Ok(Classification {
        hom_lie,
        multiplicative,
        regular,
        involutive,
        determinant,
        first_failure: jac.or(mult),
    })
}

/// `true` iff `d` is a multiplicative Hom-Lie structure; a shortcut for
/// callers that only need the one flag.
pub fn is_multiplicative(g: &LieAlgebra, d: &ConcreteMatrix) -> Result<bool, HomLieError> {
    Ok(classify_matrix(g, d)?.multiplicative)
}

/// A matrix with every equation satisfied: the identity and zero maps.
pub fn trivial_structures(n: usize) -> [Matrix; 2] {
    [Matrix::identity(n), Matrix::zeros(n, n)]
}

/// A basis of the linear space `HLie(g)`: the solutions of the Hom-Jacobi
/// system, as matrices.
pub fn hom_lie_space(g: &LieAlgebra) -> Vec<Matrix> {
    let n = g.dim();
    let nv = n * n;
    let gens = generate_homlie_ideal(g, false).jacobi_gens();
    let vectors: Vec<Vec<Rational>> = if gens.is_empty() {
        Matrix::identity(nv).to_rows()
    } else {
        let rows = gens
            .iter()
            .map(|p| {
                (0..nv)
                    .map(|v| p.coeff_of(&Monomial::var(nv, v, 1)))
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows)
            .expect("rows have one entry per variable")
            .nullspace()
    };
    vectors
        .iter()
        .map(|x| {
            let mut d = Matrix::zeros(n, n);
            for i in 0..n {
                for u in 0..n {
                    d[(u, i)] = x[i * n + u].clone();
                }
            }
            d
        })
        .collect()
}

/// A Hom-Lie structure that is not multiplicative, taken from the basis of
/// [`hom_lie_space`], if one exists there.
pub fn non_multiplicative_witness(g: &LieAlgebra) -> Option<Matrix> {
    hom_lie_space(g)
        .into_iter()
        .find(|d| matches!(classify_matrix(g, d), Ok(c) if c.hom_lie && !c.multiplicative))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{builtin_algebra, make_abelian, make_gl, make_heisenberg};
    use crate::scalar::int;

    #[test]
    fn hom_lie_space_solves_the_jacobi_system() {
        for name in ["gl2", "h3", "u2", "sl2"] {
            let g = builtin_algebra(name).unwrap();
            let space = hom_lie_space(&g);
            assert!(!space.is_empty());
            for d in &space {
                assert!(classify_matrix(&g, d).unwrap().hom_lie, "{name}");
            }
        }
        assert_eq!(hom_lie_space(&make_heisenberg(2).unwrap()).len(), 25);
        let w = non_multiplicative_witness(&make_heisenberg(2).unwrap()).unwrap();
        let c = classify_matrix(&make_heisenberg(2).unwrap(), &w).unwrap();
        assert!(c.hom_lie && !c.multiplicative);
    }

    #[test]
    fn variable_layout() {
        let r = structure_ring(4);
        assert_eq!(r.name(0), "x11");
        assert_eq!(r.name(6), "x23");
        assert_eq!(r.name(15), "x44");
        assert_eq!(variable_name(1, 10, 10), "x1_10");
    }

    #[test]
    fn degrees_of_generators() {
        for name in ["gl2", "sl2", "h3", "h5", "u2", "u3"] {
            let g = builtin_algebra(name).unwrap();
            let h = generate_homlie_ideal(&g, true);
            assert!(
                h.jacobi_gens().iter().all(|p| p.total_degree() == 1),
                "{name}"
            );
            assert!(h
                .jacobi_gens()
                .iter()
                .all(|p| p.terms().iter().all(|t| t.mono.degree() == 1)));
            assert!(
                h.mult_gens().iter().all(|p| p.total_degree() <= 2),
                "{name}"
            );
        }
    }

    #[test]
    fn abelian_algebras_impose_nothing() {
        let h = generate_homlie_ideal(&make_abelian(3).unwrap(), true);
        assert!(h.generators().is_empty());
    }

    #[test]
    fn heisenberg_jacobi_is_trivial() {
        let h = generate_homlie_ideal(&make_heisenberg(2).unwrap(), true);
        assert!(h.jacobi_gens().is_empty());
        assert!(!h.mult_gens().is_empty());
    }

    #[test]
    fn identity_and_zero_classify() {
        let g = make_gl(2).unwrap();
        let [id, zero] = trivial_structures(4);
        let c = classify_matrix(&g, &id).unwrap();
        assert!(c.hom_lie && c.multiplicative && c.regular && c.involutive);
        assert_eq!(c.determinant, int(1));
        let z = classify_matrix(&g, &zero).unwrap();
        assert!(z.multiplicative && !z.regular && !z.involutive);
        assert!(classify_matrix(&g, &Matrix::identity(3)).is_err());
    }

    #[test]
    fn evaluating_generators_matches_direct_classification() {
        let g = make_gl(2).unwrap();
        let h = generate_homlie_ideal(&g, true);
        let d = Matrix::from_i64(&[&[1, 2, 0, 1], &[0, 1, 3, 0], &[1, 0, 0, 2], &[0, 0, 1, 1]]);
        let point = matrix_point(&d);
        let vanish = h
            .generators()
            .iter()
            .all(|p| p.eval_rational(&point).is_zero());
        assert_eq!(vanish, classify_matrix(&g, &d).unwrap().multiplicative);
    }
}
