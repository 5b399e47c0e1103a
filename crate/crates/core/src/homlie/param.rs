//! Matrices whose entries are polynomial fractions in named parameters,
//! subject to a constraint ideal, and their symbolic verification.

use std::sync::Arc;

use num::Zero;
use rayon::prelude::*;

use super::{check_size, jacobi_equations, mult_equations, EquationId, HomLieError};
use crate::ideal::{ideal_dimension, Ideal, IdealError};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::poly::{normal_form, parse_fraction, Budget, Polynomial, Ring, RingRef};
use crate::scalar::{Coeff, Rational};

/// `num / prod(dens[k]^exps[k])` over a fixed list of excluded denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamFrac {
    num: Polynomial,
    exps: Vec<u32>,
    dens: Arc<[Polynomial]>,
}

impl ParamFrac {
    pub fn from_poly(num: Polynomial, dens: &Arc<[Polynomial]>) -> Self {
        ParamFrac {
            num,
            exps: vec![0; dens.len()],
            dens: dens.clone(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    fn lifted(&self, target: &[u32]) -> Polynomial {
        let mut p = self.num.clone();
        for (k, (&have, &want)) in self.exps.iter().zip(target).enumerate() {
            if want > have {
                p = &p * &self.dens[k].pow(want - have);
            }
        }
        p
    }

    /// Removes every denominator factor that divides the numerator exactly,
    /// leaving the minimal power needed to clear the fraction.
    pub fn cancel(&self) -> ParamFrac {
        let mut num = self.num.clone();
        let mut exps = self.exps.clone();
        if !num.is_zero() {
            for (k, e) in exps.iter_mut().enumerate() {
                while *e > 0 {
                    match num.exact_div(&self.dens[k]) {
                        Some(q) => {
                            num = q;
                            *e -= 1;
                        }
                        None => break,
                    }
                }
            }
        } else {
            exps.iter_mut().for_each(|e| *e = 0);
        }
        ParamFrac {
            num,
            exps,
            dens: self.dens.clone(),
        }
    }

    /// Value at a parameter point; `None` if a denominator vanishes there.
    pub fn eval(&self, values: &[Rational]) -> Option<Rational> {
        let mut den = Rational::from_integer(1.into());
        for (d, &e) in self.dens.iter().zip(&self.exps) {
            if e > 0 {
                let v = d.eval_rational(values);
                if v.is_zero() {
                    return None;
                }
                den *= crate::scalar::power(&v, e);
            }
        }
        Some(self.num.eval_rational(values) / den)
    }

    fn map_num(&self, f: impl FnOnce(&Polynomial) -> Polynomial) -> ParamFrac {
        ParamFrac {
            num: f(&self.num),
            exps: self.exps.clone(),
            dens: self.dens.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let den: Vec<String> = self
            .dens
            .iter()
            .zip(&self.exps)
            .filter(|(_, &e)| e > 0)
            .map(|(d, &e)| {
                if e == 1 {
                    format!("({d})")
                } else {
                    format!("({d})^{e}")
                }
            })
            .collect();
        if den.is_empty() {
            self.num.to_string()
        } else {
            format!("({})/{}", self.num, den.join("*"))
        }
    }
}

impl Coeff for ParamFrac {
    fn zero_like(&self) -> Self {
        ParamFrac::from_poly(Polynomial::zero(self.num.ring()), &self.dens)
    }
    fn one_like(&self) -> Self {
        ParamFrac::from_poly(Polynomial::one(self.num.ring()), &self.dens)
    }
    fn is_zero_value(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if other.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return other.clone();
        }
        if self.exps == other.exps {
            return self.map_num(|n| n + &other.num);
        }
        let target: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        ParamFrac {
            num: &self.lifted(&target) + &other.lifted(&target),
            exps: target,
            dens: self.dens.clone(),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.map_num(|n| -n))
    }
    fn times(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return self.zero_like();
        }
        ParamFrac {
            num: &self.num * &other.num,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            dens: self.dens.clone(),
        }
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.map_num(|n| n.scale(c))
    }
}

/// A square matrix of parameter fractions with a constraint ideal and a
/// list of denominators asserted to be nonzero. Column `i` is the image
/// of the `i`-th basis vector.
#[derive(Debug, Clone)]
pub struct ParamMatrix {
    name: String,
    ring: RingRef,
    size: usize,
    entries: Vec<ParamFrac>,
    constraints: Ideal,
    dens: Arc<[Polynomial]>,
}

fn factor_denominator(den: &Polynomial, dens: &[Polynomial]) -> Option<(Rational, Vec<u32>)> {
    let mut rest = den.clone();
    let mut exps = vec![0u32; dens.len()];
    for (k, d) in dens.iter().enumerate() {
        while !rest.is_constant() {
            match rest.exact_div(d) {
                Some(q) => {
                    rest = q;
                    exps[k] += 1;
                }
                None => break,
            }
        }
    }
    rest.constant_value().map(|c| (c, exps))
}

impl ParamMatrix {
    /// Builds a family from text: parameter names, constraint and
    /// denominator polynomials, and rows of entries `p` or `p/q`.
    pub fn from_strings<S: AsRef<str>>(
        name: &str,
        params: &[S],
        constraints: &[S],
        denominators: &[S],
        rows: &[Vec<S>],
    ) -> Result<ParamMatrix, HomLieError> {
        let ring = Ring::grlex(params)?;
        let cons = constraints
            .iter()
            .map(|c| Polynomial::parse(&ring, c.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        let dens = denominators
            .iter()
            .map(|c| Polynomial::parse(&ring, c.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        let mut entries = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != rows.len() {
                return Err(HomLieError::Invalid(format!(
                    "row {} has {} entries, expected {}",
                    r + 1,
                    row.len(),
                    rows.len()
                )));
            }
            for (c, cell) in row.iter().enumerate() {
                let (num, den) = parse_fraction(&ring, cell.as_ref())?;
                entries.push((r, c, num, den));
            }
        }
        ParamMatrix::from_fractions(name, &ring, cons, dens, rows.len(), entries)
    }

    fn from_fractions(
        name: &str,
        ring: &RingRef,
        constraints: Vec<Polynomial>,
        dens: Vec<Polynomial>,
        size: usize,
        raw: Vec<(usize, usize, Polynomial, Polynomial)>,
    ) -> Result<ParamMatrix, HomLieError> {
        if let Some(d) = dens.iter().find(|d| d.is_constant()) {
            return Err(HomLieError::Invalid(format!(
                "denominator {d} must be a non-constant polynomial"
            )));
        }
        let dens: Arc<[Polynomial]> = dens.into();
        let mut entries = Vec::with_capacity(raw.len());
        for (r, c, num, den) in raw {
            let Some((scale, exps)) = factor_denominator(&den, &dens) else {
                return Err(HomLieError::UncoveredDenominator {
                    row: r + 1,
                    col: c + 1,
                    den: den.to_string(),
                });
            };
            entries.push(
                ParamFrac {
                    num: num.scale(&scale.recip()),
                    exps,
                    dens: dens.clone(),
                }
                .cancel(),
            );
        }
        Ok(ParamMatrix {
            name: name.to_string(),
            ring: ring.clone(),
            size,
            entries,
            constraints: Ideal::new(ring, constraints)?,
            dens,
        })
    }

    /// Parses the family file format:
    ///
    /// ```text
    /// params a b c xi
    /// constraint xi^2 + 4*b*c - 1
    /// denominator xi - 1
    /// matrix 4
    /// a - xi, -c, -b, a
    /// ...
    /// ```
    ///
    /// Rows split on commas when they contain one, otherwise on whitespace.
    pub fn parse(name: &str, src: &str) -> Result<ParamMatrix, HomLieError> {
        let err = |line: usize, msg: String| HomLieError::Parse { line, msg };
        let mut params: Option<Vec<String>> = None;
        let mut cons = Vec::new();
        let mut dens = Vec::new();
        let mut size: Option<usize> = None;
        let mut rows: Vec<(usize, Vec<String>)> = Vec::new();
        let mut name = name.to_string();
        for (ln, raw) in src.lines().enumerate() {
            let line_no = ln + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            if size.is_some() {
                let cells: Vec<String> = if rest.contains(',') || line.contains(',') {
                    line.split(',').map(|s| s.trim().to_string()).collect()
                } else {
                    line.split_whitespace().map(str::to_string).collect()
                };
                rows.push((line_no, cells));
                continue;
            }
            match head {
                "name" => name = rest.to_string(),
                "params" => {
                    if params.is_some() {
                        return Err(err(line_no, "duplicate 'params' line".into()));
                    }
                    params = Some(rest.split_whitespace().map(str::to_string).collect());
                }
                "constraint" => cons.push((line_no, rest.to_string())),
                "denominator" => dens.push((line_no, rest.to_string())),
                "matrix" => {
                    let n: usize = rest
                        .parse()
                        .ok()
                        .filter(|&n| n > 0)
                        .ok_or_else(|| err(line_no, format!("invalid matrix size '{rest}'")))?;
                    size = Some(n);
                }
                other => return Err(err(line_no, format!("unknown directive '{other}'"))),
            }
        }
        let n =
            size.ok_or_else(|| err(src.lines().count().max(1), "missing 'matrix' line".into()))?;
        if rows.len() != n {
            return Err(err(
                rows.last().map_or(1, |r| r.0),
                format!("expected {n} matrix rows, found {}", rows.len()),
            ));
        }
        let params = params.unwrap_or_default();
        let ring = Ring::grlex(&params).map_err(|e| err(1, e.to_string()))?;
        let parse_at = |line: usize, s: &str| {
            Polynomial::parse(&ring, s).map_err(|e| err(line, format!("'{s}': {e}")))
        };
        let cons = cons
            .iter()
            .map(|(l, s)| parse_at(*l, s))
            .collect::<Result<Vec<_>, _>>()?;
        let dens = dens
            .iter()
            .map(|(l, s)| parse_at(*l, s))
            .collect::<Result<Vec<_>, _>>()?;
        let mut raw = Vec::new();
        for (r, (line, cells)) in rows.iter().enumerate() {
            if cells.len() != n {
                return Err(err(
                    *line,
                    format!("expected {n} entries, found {}", cells.len()),
                ));
            }
            for (c, cell) in cells.iter().enumerate() {
                let (num, den) = parse_fraction(&ring, cell)
                    .map_err(|e| err(*line, format!("entry {}: {e}", c + 1)))?;
                raw.push((r, c, num, den));
            }
        }
        ParamMatrix::from_fractions(&name, &ring, cons, dens, n, raw)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn params(&self) -> &[String] {
        self.ring.names()
    }

    pub fn constraint_ideal(&self) -> &Ideal {
        &self.constraints
    }

    pub fn denominators(&self) -> &[Polynomial] {
        &self.dens
    }

    pub fn entry(&self, row: usize, col: usize) -> &ParamFrac {
        &self.entries[row * self.size + col]
    }

    /// Column `i`: the image of the `i`-th basis vector.
    pub fn column(&self, i: usize) -> Vec<ParamFrac> {
        (0..self.size).map(|r| self.entry(r, i).clone()).collect()
    }

    pub fn transpose(&self) -> ParamMatrix {
        let n = self.size;
        let entries = (0..n * n)
            .map(|p| self.entries[(p % n) * n + p / n].clone())
            .collect();
        ParamMatrix {
            name: format!("{}^T", self.name),
            entries,
            ..self.clone()
        }
    }

    /// Adds one to the top-left entry; used to check that a mutated family
    /// is rejected.
    pub fn perturbed(&self) -> ParamMatrix {
        let mut out = self.clone();
        let one = out.entries[0].one_like();
        out.entries[0] = out.entries[0].plus(&one);
        out.name = format!("{}+perturbed", self.name);
        out
    }

    /// Substitutes a rational value for one parameter, in entries and
    /// constraints. The parameter stays in the ring.
    pub fn specialize(&self, param: &str, value: &Rational) -> Result<ParamMatrix, HomLieError> {
        let idx = self
            .ring
            .index_of(param)
            .ok_or_else(|| HomLieError::Invalid(format!("unknown parameter '{param}'")))?;
        let subst: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|v| {
                if v == idx {
                    Polynomial::constant(&self.ring, value.clone())
                } else {
                    Polynomial::var(&self.ring, v)
                }
            })
            .collect();
        let one = Polynomial::one(&self.ring);
        let sub = |p: &Polynomial| p.evaluate(&subst, &one);
        let mut dens: Vec<Polynomial> = Vec::new();
        for d in self.dens.iter() {
            let s = sub(d);
            if s.is_zero() {
                return Err(HomLieError::Invalid(format!(
                    "{param} = {value} makes the denominator {d} vanish"
                )));
            }
            dens.push(s);
        }
        let mut raw = Vec::new();
        for r in 0..self.size {
            for c in 0..self.size {
                let e = self.entry(r, c);
                let mut den = one.clone();
                for (&k, d) in e.exps.iter().zip(&dens) {
                    den = &den * &d.pow(k);
                }
                raw.push((r, c, sub(&e.num), den));
            }
        }
        let cons = self.constraints.generators().iter().map(sub).collect();
        // denominators that became constants fold into the entry scale
        let kept: Vec<Polynomial> = dens.into_iter().filter(|d| !d.is_constant()).collect();
        let name = format!("{}[{param}={value}]", self.name);
        ParamMatrix::from_fractions(&name, &self.ring, cons, kept, self.size, raw)
    }

    /// The concrete matrix at a parameter point, or `None` if a declared
    /// denominator vanishes there. Constraints are not checked.
    pub fn evaluate(&self, values: &[Rational]) -> Option<Matrix> {
        let n = self.size;
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = self.entry(r, c).eval(values)?;
            }
        }
        Some(m)
    }

    /// Whether a parameter point satisfies every constraint.
    pub fn satisfies_constraints(&self, values: &[Rational]) -> bool {
        self.constraints
            .generators()
            .iter()
            .all(|p| p.eval_rational(values).is_zero())
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "name {}\nparams {}\n",
            self.name,
            self.ring.names().join(" ")
        );
        for c in self.constraints.generators() {
            s.push_str(&format!("constraint {c}\n"));
        }
        for d in self.dens.iter() {
            s.push_str(&format!("denominator {d}\n"));
        }
        s.push_str(&format!("matrix {}\n", self.size));
        for r in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|c| self.entry(r, c).to_text()).collect();
            s.push_str(&row.join(", "));
            s.push('\n');
        }
        s
    }
}

/// A non-vanishing equation: its cleared numerator reduced modulo the
/// constraint ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub equation: EquationId,
    pub residue: Polynomial,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub family: String,
    pub algebra: String,
    /// Scalar equations examined (Hom-Jacobi and homomorphism, all coordinates).
    pub equations: usize,
    /// Equations not identically zero before reduction by the constraints.
    pub nontrivial: usize,
    /// Non-vanishing residues, ordered by equation.
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn success(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Substitutes the family into every Hom-Jacobi and homomorphism equation,
/// clears denominators with the minimal power of the excluded ones, and
/// reduces the numerator by the reduced Gröbner basis of the constraints.
pub fn verify_family(
    g: &LieAlgebra,
    family: &ParamMatrix,
    budget: &Budget,
) -> Result<VerificationReport, HomLieError> {
    let n = g.dim();
    if family.size != n {
        return Err(HomLieError::SizeMismatch {
            expected: n,
            found: family.size,
        });
    }
    check_size(g, &Matrix::zeros(n, n))?;
    let basis = family.constraints.groebner(budget)?;
    if matches!(basis, [b] if b.is_one()) {
        return Err(HomLieError::InconsistentConstraints);
    }
    let images: Vec<Vec<ParamFrac>> = (0..n).map(|i| family.column(i)).collect();
    let mut eqs = jacobi_equations(g, &images);
    eqs.extend(mult_equations(g, &images));
    let total = eqs.len();
    let nontrivial: Vec<(EquationId, ParamFrac)> = eqs
        .into_iter()
        .filter(|(_, v)| !v.is_zero_value())
        .collect();
    let count = nontrivial.len();
    let failures: Vec<Failure> = nontrivial
        .par_iter()
        .filter_map(|(id, v)| {
            let cleared = v.cancel().num;
            let residue = normal_form(&cleared, basis);
            (!residue.is_zero()).then_some(Failure {
                equation: *id,
                residue,
            })
        })
        .collect();
    Ok(VerificationReport {
        family: family.name.clone(),
        algebra: g.name().to_string(),
        equations: total,
        nontrivial: count,
        failures,
    })
}

/// Dimension of the parameter variety cut out by the constraints.
pub fn component_dimension(family: &ParamMatrix, budget: &Budget) -> Result<usize, HomLieError> {
    match ideal_dimension(&family.constraints, budget) {
        Err(IdealError::UnitIdeal) => Err(HomLieError::InconsistentConstraints),
        other => Ok(other?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn fractions_add_over_common_denominators() {
        let ring = Ring::grlex(&["a", "xi"]).unwrap();
        let d: Arc<[Polynomial]> = vec![Polynomial::parse(&ring, "xi - 1").unwrap()].into();
        let x = ParamFrac {
            num: Polynomial::parse(&ring, "a").unwrap(),
            exps: vec![1],
            dens: d.clone(),
        };
        let y = ParamFrac::from_poly(Polynomial::parse(&ring, "1").unwrap(), &d);
        let s = x.plus(&y);
        assert_eq!(s.exps, vec![1]);
        assert_eq!(s.num, Polynomial::parse(&ring, "a + xi - 1").unwrap());
        let p = x.times(&x);
        assert_eq!(p.exps, vec![2]);
        let q = x.times(&ParamFrac::from_poly(
            Polynomial::parse(&ring, "xi^2 - 1").unwrap(),
            &d,
        ));
        let c = q.cancel();
        assert_eq!(c.exps, vec![0]);
        assert_eq!(c.num, Polynomial::parse(&ring, "a*xi + a").unwrap());
        assert_eq!(x.eval(&[int(3), int(3)]), Some(rat(3, 2)));
        assert_eq!(x.eval(&[int(3), int(1)]), None);
    }

    #[test]
    fn parses_and_rejects_uncovered_denominators() {
        let src =
            "params a xi\nconstraint a*xi\ndenominator xi - 1\nmatrix 2\n(xi-1)/2, a/(xi-1)\n0 1\n";
        let m = ParamMatrix::parse("t", src).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.entry(0, 1).exps, vec![1]);
        assert_eq!(m.entry(0, 0).exps, vec![0]);
        let again = ParamMatrix::parse("t", &m.to_text()).unwrap();
        assert_eq!(again.entries, m.entries);
        let bad = "params a xi\nmatrix 1\na/xi\n";
        assert!(matches!(
            ParamMatrix::parse("b", bad),
            Err(HomLieError::UncoveredDenominator { row: 1, col: 1, .. })
        ));
        assert!(ParamMatrix::parse("b", "params a\nmatrix 2\na 0\n").is_err());
        assert!(ParamMatrix::parse("b", "params a\nmatrix 1\nq\n").is_err());
    }

    #[test]
    fn specialization_and_evaluation() {
        let src = "params a xi\ndenominator xi - 1\nmatrix 1\na/(xi-1)\n";
        let m = ParamMatrix::parse("s", src).unwrap();
        let s = m.specialize("xi", &int(3)).unwrap();
        assert!(s.denominators().is_empty());
        assert_eq!(
            s.entry(0, 0).num,
            Polynomial::parse(s.ring(), "a/2").unwrap()
        );
        assert!(m.specialize("xi", &int(1)).is_err());
        assert_eq!(m.evaluate(&[int(4), int(3)]).unwrap()[(0, 0)], int(2));
    }
}
