//! `D^k`-derivations of a multiplicative Hom-Lie structure and the Hilbert
//! series `sum_k dim Der_k t^k` of its derivation algebra.
//!
//! A `D^k`-derivation is a linear `δ` with `δ D = D δ` and
//! `δ[x, y] = [δ x, D^k y] + [D^k x, δ y]`; `D^0` is the identity.

use std::fmt;

use num::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::homlie::{classify_matrix, EquationId, HomLieError};
use crate::lie::{ConcreteMatrix, LieAlgebra};
use crate::linalg::Matrix;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DerivError {
    #[error("the map is not a multiplicative Hom-Lie structure: {equation} = {value}")]
    NotMultiplicative {
        equation: EquationId,
        value: Rational,
    },
    #[error("budget {budget} is smaller than the dimension {dim}")]
    BudgetTooSmall { budget: usize, dim: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    HomLie(#[from] HomLieError),
}

/// A basis of `Der_k(g)` for a fixed `D`.
#[derive(Debug, Clone)]
pub struct DerivationSpace {
    pub k: u32,
    pub d: ConcreteMatrix,
    pub basis: Vec<ConcreteMatrix>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn require_multiplicative(g: &LieAlgebra, d: &ConcreteMatrix) -> Result<(), DerivError> {
    let c = classify_matrix(g, d)?;
    match c.first_failure {
        Some((equation, value)) => Err(DerivError::NotMultiplicative { equation, value }),
        None => Ok(()),
    }
}

/// The linear system for `Der_k` in the unknowns `δ[u][i]`, indexed `u n + i`.
fn derivation_system(g: &LieAlgebra, d: &Matrix, dk: &Matrix) -> Matrix {
    let n = g.dim();
    let nn = n * n;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // (δ D - D δ)[r][c] = sum_m δ[r][m] D[m][c] - D[r][m] δ[m][c]
    for r in 0..n {
        for c in 0..n {
            let mut row = vec![Rational::zero(); nn];
            for m in 0..n {
                row[r * n + m] += &d[(m, c)];
                row[m * n + c] -= &d[(r, m)];
            }
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    let basis_brackets: Vec<Vec<Vec<Rational>>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| g.sparse_to_dense(g.basis_bracket(u, v)))
                .collect()
        })
        .collect();
    // [e_u, y] for a rational vector y
    let left = |u: usize, y: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for (v, yv) in y.iter().enumerate() {
            if yv.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(&basis_brackets[u][v]) {
                if !b.is_zero() {
                    *o += yv * b;
                }
            }
        }
        out
    };
    for i in 0..n {
        for j in i + 1..n {
            let y = dk.column(j);
            let x = dk.column(i);
            let bx_u: Vec<Vec<Rational>> = (0..n).map(|u| left(u, &y)).collect();
            // [x, e_u] = -[e_u, x]
            let bu_x: Vec<Vec<Rational>> = (0..n).map(|u| left(u, &x)).collect();
            for w in 0..n {
                let mut row = vec![Rational::zero(); nn];
                for (kk, c) in g.basis_bracket(i, j) {
                    row[w * n + kk] += c;
                }
                for u in 0..n {
                    row[u * n + i] -= &bx_u[u][w];
                    row[u * n + j] += &bu_x[u][w];
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(0, nn);
    }
    Matrix::from_rows(rows).unwrap()
}

fn vector_to_matrix(v: &[Rational], n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for u in 0..n {
        for i in 0..n {
            m[(u, i)] = v[u * n + i].clone();
        }
    }
    m
}

fn matrix_to_vector(m: &Matrix) -> Vec<Rational> {
    let n = m.rows();
    (0..n * n).map(|p| m[(p / n, p % n)].clone()).collect()
}

/// Row-reduced basis of the span of the given matrices.
fn span_basis(mats: &[Matrix], n: usize) -> Vec<Matrix> {
    if mats.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<Rational>> = mats.iter().map(matrix_to_vector).collect();
    let (r, pivots) = Matrix::from_rows(rows).unwrap().rref();
    (0..pivots.len())
        .map(|i| vector_to_matrix(r.row(i), n))
        .collect()
}

fn solve_space(g: &LieAlgebra, d: &Matrix, dk: &Matrix) -> Vec<Matrix> {
    let n = g.dim();
    let sys = derivation_system(g, d, dk);
    let null: Vec<Vec<Rational>> = if sys.rows() == 0 {
        (0..n * n)
            .map(|p| {
                let mut v = vec![Rational::zero(); n * n];
                v[p] = Rational::from_integer(1.into());
                v
            })
            .collect()
    } else {
        sys.nullspace()
    };
    let mats: Vec<Matrix> = null.iter().map(|v| vector_to_matrix(v, n)).collect();
    span_basis(&mats, n)
}

/// `Der_k(g)` for a multiplicative Hom-Lie structure `d`, as a basis in
/// reduced echelon form over the flattened entries `δ[u][i]`.
pub fn derivation_space(
    g: &LieAlgebra,
    d: &ConcreteMatrix,
    k: u32,
) -> Result<DerivationSpace, DerivError> {
    require_multiplicative(g, d)?;
    let basis = solve_space(g, d, &d.pow(k));
    Ok(DerivationSpace {
        k,
        d: d.clone(),
        basis,
    })
}

/// Direct check of the defining identities on basis pairs.
pub fn is_derivation(g: &LieAlgebra, d: &ConcreteMatrix, k: u32, delta: &ConcreteMatrix) -> bool {
    let n = g.dim();
    if delta.mul(d) != d.mul(delta) {
        return false;
    }
    let dk = d.pow(k);
    for i in 0..n {
        for j in i + 1..n {
            let bracket = g.sparse_to_dense(g.basis_bracket(i, j));
            let lhs = delta.apply(&bracket);
            let a = g.bracket(&delta.column(i), &dk.column(j));
            let b = g.bracket(&dk.column(i), &delta.column(j));
            if lhs
                .iter()
                .zip(a.iter().zip(&b))
                .any(|(l, (x, y))| *l != x + y)
            {
                return false;
            }
        }
    }
    true
}

/// The image of `Der_k` under `δ -> D δ`, certified to lie in `Der_{k+1}`.
pub fn rho_map(g: &LieAlgebra, space: &DerivationSpace) -> Result<DerivationSpace, DerivError> {
    let images: Vec<Matrix> = space.basis.iter().map(|delta| space.d.mul(delta)).collect();
    for (idx, m) in images.iter().enumerate() {
        if !is_derivation(g, &space.d, space.k + 1, m) {
            return Err(DerivError::Invariant(format!(
                "D composed with basis element {} of Der_{} is not in Der_{}",
                idx + 1,
                space.k,
                space.k + 1
            )));
        }
    }
    Ok(DerivationSpace {
        k: space.k + 1,
        d: space.d.clone(),
        basis: span_basis(&images, g.dim()),
    })
}

/// The first power relation found for a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerProfile {
    /// Nonzero determinant.
    Invertible,
    /// `D^n = 0` for this smallest `n`.
    Nilpotent(u32),
    /// `D^m = D` for this smallest `m >= 2`.
    Periodic(u32),
    /// No relation up to the budget.
    Unknown,
}

/// Checks invertibility, then nilpotency up to the size of the matrix, then
/// `D^m = D` for `2 <= m <= budget`.
pub fn matrix_power_profile(d: &ConcreteMatrix, budget: u32) -> PowerProfile {
    if !d.determinant().is_zero() {
        return PowerProfile::Invertible;
    }
    let mut p = d.clone();
    for k in 1..=d.rows() as u32 {
        if p.is_zero() {
            return PowerProfile::Nilpotent(k);
        }
        p = p.mul(d);
    }
    let mut p = d.mul(d);
    for m in 2..=budget {
        if &p == d {
            return PowerProfile::Periodic(m);
        }
        p = p.mul(d);
    }
    PowerProfile::Unknown
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesCase {
    Invertible,
    Nilpotent,
    Periodic,
    Truncated,
}

impl fmt::Display for SeriesCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesCase::Invertible => "invertible",
            SeriesCase::Nilpotent => "nilpotent",
            SeriesCase::Periodic => "periodic",
            SeriesCase::Truncated => "truncated",
        })
    }
}

/// `numerator(t) / (1 - t^period)`, or a list of coefficients when no
/// closed form applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub case: SeriesCase,
    /// Coefficients in ascending powers of `t`; empty when truncated.
    pub numerator: Vec<i64>,
    pub period: u32,
    /// `dim Der_k` computed directly for `k = 0, 1, ...`.
    pub computed: Vec<usize>,
}

impl HilbertSeries {
    /// Taylor coefficients of the closed form up to `t^order`, or the
    /// computed prefix when truncated.
    pub fn expand(&self, order: usize) -> Vec<i64> {
        if self.case == SeriesCase::Truncated {
            return self
                .computed
                .iter()
                .take(order + 1)
                .map(|&v| v as i64)
                .collect();
        }
        let p = self.period as usize;
        (0..=order)
            .map(|k| {
                self.numerator
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j <= k && (k - j) % p == 0)
                    .map(|(_, c)| c)
                    .sum()
            })
            .collect()
    }

    /// `true` when the closed form reproduces every computed dimension.
    pub fn consistent(&self) -> bool {
        let e = self.expand(self.computed.len().saturating_sub(1));
        e.iter().zip(&self.computed).all(|(a, &b)| *a == b as i64)
    }

    pub fn numerator_text(&self) -> String {
        let mut out = String::new();
        for (p, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match (p, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{mag}*t"),
                (_, 1) => format!("t^{p}"),
                _ => format!("{mag}*t^{p}"),
            };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.case == SeriesCase::Truncated {
            let items: Vec<String> = self.computed.iter().map(|v| v.to_string()).collect();
            return write!(f, "truncated: [{}]", items.join(", "));
        }
        write!(f, "({})/(1 - t^{})", self.numerator_text(), self.period)
    }
}

/// `dim Der_k` for `k = 0..=last`, computed independently per `k`.
pub fn derivation_dimensions(
    g: &LieAlgebra,
    d: &ConcreteMatrix,
    last: u32,
) -> Result<Vec<usize>, DerivError> {
    require_multiplicative(g, d)?;
    let powers: Vec<Matrix> = {
        let mut v = vec![Matrix::identity(g.dim())];
        for _ in 0..last {
            let next = v.last().unwrap().mul(d);
            v.push(next);
        }
        v
    };
    Ok(powers
        .par_iter()
        .map(|dk| solve_space(g, d, dk).len())
        .collect())
}

/// Hilbert series with the case analysis: invertible, nilpotent,
/// `D^m = D`, or truncated at `budget`. Dimensions are computed directly
/// up to `t^budget` and attached as the verified prefix.
pub fn hilbert_series(
    g: &LieAlgebra,
    d: &ConcreteMatrix,
    budget: u32,
) -> Result<HilbertSeries, DerivError> {
    if (budget as usize) < g.dim() {
        return Err(DerivError::BudgetTooSmall {
            budget: budget as usize,
            dim: g.dim(),
        });
    }
    let computed = derivation_dimensions(g, d, budget)?;
    let l = |k: usize| computed[k] as i64;
    let (case, numerator, period) = match matrix_power_profile(d, budget) {
        PowerProfile::Invertible => (SeriesCase::Invertible, vec![l(0)], 1),
        PowerProfile::Nilpotent(n) => {
            let n = n as usize;
            let mut num = vec![0i64; n + 1];
            for k in 0..n {
                num[k] += l(k);
                num[k + 1] -= l(k);
            }
            num[n] += l(n);
            (SeriesCase::Nilpotent, num, 1)
        }
        PowerProfile::Periodic(m) => {
            let p = (m - 1) as usize;
            let mut num = vec![0i64; p + 1];
            num[0] += l(0);
            num[p] -= l(0);
            for (k, slot) in num.iter_mut().enumerate().take(p + 1).skip(1) {
                *slot += l(k);
            }
            (SeriesCase::Periodic, num, p as u32)
        }
        PowerProfile::Unknown => (SeriesCase::Truncated, Vec::new(), 1),
    };
    let mut numerator = numerator;
    while numerator.len() > 1 && numerator.last() == Some(&0) {
        numerator.pop();
    }
    let series = HilbertSeries {
        case,
        numerator,
        period,
        computed,
    };
    if !series.consistent() {
        return Err(DerivError::Invariant(format!(
            "closed form {series} disagrees with the computed dimensions {:?}",
            series.computed
        )));
    }
    Ok(series)
}

/// Default budget for power detection: `2 dim + 2`.
pub fn default_budget(g: &LieAlgebra) -> u32 {
    (2 * g.dim() + 2).to_u32().unwrap_or(u32::MAX)
}
