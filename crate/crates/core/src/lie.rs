//! Finite-dimensional Lie algebras over `Q` given by structure constants,
//! the built-in families `gl_n`, `sl_n`, `h_{2n+1}`, `u_n`, and a small text
//! format for loading tables from files.
//!
//! Matrices acting on an algebra follow one convention throughout the
//! crate: column `i` holds the coordinates of the image of `e_i`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num::{One, Zero};

use crate::linalg::Matrix;
use crate::scalar::{Coeff, Rational};

/// A linear map on an algebra; column `i` is the image of `e_i`.
pub type ConcreteMatrix = Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("{0}")]
    Invalid(String),
    #[error("antisymmetry fails at [e{}, e{}] coordinate {}", .i + 1, .j + 1, .k + 1)]
    Antisymmetry { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails for (e{}, e{}, e{}) at coordinate {}", .i + 1, .j + 1, .k + 1, .coord + 1)]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        coord: usize,
    },
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

type Expansion = Vec<(usize, Rational)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    /// `table[i * dim + j]` is `[e_i, e_j]` as sparse `(k, c)` pairs, `k` ascending.
    table: Vec<Expansion>,
}

/// Collects brackets of basis elements before validation.
#[derive(Debug, Clone)]
pub struct LieBuilder {
    name: String,
    basis: Vec<String>,
    table: Vec<Option<Expansion>>,
}

impl LieBuilder {
    pub fn new(name: impl Into<String>, basis: Vec<String>) -> Self {
        let n = basis.len();
        LieBuilder {
            name: name.into(),
            basis,
            table: vec![None; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Records `[e_i, e_j] = Σ c e_k`. Returns `false` if the pair was set before.
    pub fn set(&mut self, i: usize, j: usize, expansion: Vec<(usize, Rational)>) -> bool {
        let n = self.dim();
        let slot = &mut self.table[i * n + j];
        if slot.is_some() {
            return false;
        }
        *slot = Some(normalize_expansion(expansion));
        true
    }

    /// Sets `[e_i, e_j]` and its negative for `[e_j, e_i]`, overwriting.
    pub fn set_antisymmetric(&mut self, i: usize, j: usize, expansion: Vec<(usize, Rational)>) {
        let n = self.dim();
        let e = normalize_expansion(expansion);
        let neg: Expansion = e.iter().map(|(k, c)| (*k, -c)).collect();
        self.table[i * n + j] = Some(e);
        self.table[j * n + i] = Some(neg);
    }

    /// Fills missing mirror pairs, then checks antisymmetry and Jacobi.
    pub fn build(self) -> Result<LieAlgebra, LieError> {
        let n = self.dim();
        if n == 0 {
            return Err(LieError::Invalid("dimension must be positive".into()));
        }
        let mut table: Vec<Expansion> = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                let here = &self.table[i * n + j];
                let there = &self.table[j * n + i];
                table[i * n + j] = match (here, there) {
                    (Some(e), _) => e.clone(),
                    (None, Some(e)) => e.iter().map(|(k, c)| (*k, -c)).collect(),
                    (None, None) => Vec::new(),
                };
            }
        }
        let alg = LieAlgebra {
            name: self.name,
            basis: self.basis,
            table,
        };
        alg.check_antisymmetry()?;
        alg.check_jacobi()?;
        Ok(alg)
    }
}

fn normalize_expansion(mut e: Vec<(usize, Rational)>) -> Expansion {
    e.sort_by_key(|(k, _)| *k);
    let mut out: Expansion = Vec::with_capacity(e.len());
    for (k, c) in e {
        match out.last_mut() {
            Some((k0, c0)) if *k0 == k => *c0 += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

fn index_label(i: usize, j: usize, n: usize) -> String {
    if n >= 10 {
        format!("{i}_{j}")
    } else {
        format!("{i}{j}")
    }
}

impl LieAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// `[e_i, e_j]` as sparse `(k, c)` pairs.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_bracket(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|e| e.is_empty())
    }

    /// Bracket of coordinate vectors with entries in any coefficient ring.
    pub fn bracket<T: Coeff>(&self, x: &[T], y: &[T]) -> Vec<T> {
        let n = self.dim();
        assert!(
            x.len() == n && y.len() == n,
            "vector length must equal the dimension"
        );
        let zero = x[0].zero_like();
        let mut out = vec![zero; n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero_value() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let e = &self.table[i * n + j];
                if e.is_empty() || yj.is_zero_value() {
                    continue;
                }
                let p = xi.times(yj);
                for (k, c) in e {
                    out[*k] = out[*k].plus(&p.scaled(c));
                }
            }
        }
        out
    }

    /// `[x, w]` where `w` has rational coordinates.
    pub fn bracket_with_rational<T: Coeff>(&self, x: &[T], w: &[Rational]) -> Vec<T> {
        let n = self.dim();
        let mut out = vec![x[0].zero_like(); n];
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero_value() {
                continue;
            }
            for (q, wq) in w.iter().enumerate() {
                if wq.is_zero() {
                    continue;
                }
                for (k, c) in &self.table[p * n + q] {
                    out[*k] = out[*k].plus(&xp.scaled(&(wq * c)));
                }
            }
        }
        out
    }

    /// `[e_i, y]` for a basis element and a coordinate vector.
    pub fn bracket_basis_left<T: Coeff>(&self, i: usize, y: &[T]) -> Vec<T> {
        let n = self.dim();
        let mut out = vec![y[0].zero_like(); n];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero_value() {
                continue;
            }
            for (k, c) in &self.table[i * n + j] {
                out[*k] = out[*k].plus(&yj.scaled(c));
            }
        }
        out
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    fn check_antisymmetry(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let a = self.structure_constant(i, j, k);
                    let b = self.structure_constant(j, i, k);
                    if a + b != Rational::zero() {
                        return Err(LieError::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn jacobi_residue(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let mut total = vec![Rational::zero(); self.dim()];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.sparse_to_dense(self.basis_bracket(b, c));
            let outer = self.bracket_basis_left(a, &inner);
            for (t, o) in total.iter_mut().zip(outer) {
                *t += o;
            }
        }
        total
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobi_residue(i, j, k);
                    if let Some(coord) = r.iter().position(|c| !c.is_zero()) {
                        return Err(LieError::Jacobi { i, j, k, coord });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn sparse_to_dense(&self, e: &[(usize, Rational)]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (k, c) in e {
            v[*k] = c.clone();
        }
        v
    }

    /// Span of all brackets `[e_i, e_j]`, in reduced echelon form.
    pub fn derived_algebra(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let e = self.basis_bracket(i, j);
                if !e.is_empty() {
                    rows.push(self.sparse_to_dense(e));
                }
            }
        }
        if rows.is_empty() {
            return rows;
        }
        let (r, pivots) = Matrix::from_rows(rows).unwrap().rref();
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }

    /// Basis of the center `{z : [e_i, z] = 0 for all i}`.
    pub fn center(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_bracket(i, j) {
                    m[(i * n + k, j)] = c.clone();
                }
            }
        }
        m.nullspace()
    }

    /// Parses the structure-constant text format.
    ///
    /// ```text
    /// dim 3
    /// basis z x y
    /// bracket 2 3 : 1 1
    /// ```
    ///
    /// Indices are 1-based. `#` starts a comment. Lines with `i > j` are
    /// accepted and must agree with the `i < j` line when both appear.
    pub fn parse(src: &str) -> Result<LieAlgebra, LieError> {
        parse_lie(src)
    }

    pub fn load(path: &Path) -> Result<LieAlgebra, LieError> {
        let src = std::fs::read_to_string(path).map_err(|e| LieError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        let mut alg = parse_lie(&src)?;
        if alg.name.is_empty() {
            alg.name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
        }
        Ok(alg)
    }

    /// Writes the algebra in the format accepted by [`LieAlgebra::parse`].
    pub fn to_text(&self) -> String {
        let n = self.dim();
        let mut s = format!("dim {n}\nbasis {}\n", self.basis.join(" "));
        for i in 0..n {
            for j in i + 1..n {
                let e = self.basis_bracket(i, j);
                if e.is_empty() {
                    continue;
                }
                let rhs: Vec<String> = e
                    .iter()
                    .map(|(k, c)| format!("{} {}", k + 1, crate::scalar::format_rational(c)))
                    .collect();
                s.push_str(&format!(
                    "bracket {} {} : {}\n",
                    i + 1,
                    j + 1,
                    rhs.join(", ")
                ));
            }
        }
        s
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim())
    }
}

/// `gl_n` on the basis `E_ij` in row-major order.
pub fn make_gl(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 2 {
        return Err(LieError::Invalid(format!("gl_n needs n >= 2, got {n}")));
    }
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    matrix_unit_algebra(format!("gl{n}"), n, idx)
}

/// Upper-triangular `u_n` on the basis `E_ij` (`i <= j`) in lexicographic order.
pub fn make_upper_triangular(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 2 {
        return Err(LieError::Invalid(format!("u_n needs n >= 2, got {n}")));
    }
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    matrix_unit_algebra(format!("u{n}"), n, idx)
}

/// Span of matrix units closed under `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj`.
fn matrix_unit_algebra(
    name: String,
    n: usize,
    idx: Vec<(usize, usize)>,
) -> Result<LieAlgebra, LieError> {
    let pos = |a: usize, b: usize| idx.iter().position(|&p| p == (a, b));
    let names = idx
        .iter()
        .map(|(i, j)| format!("E{}", index_label(i + 1, j + 1, n)))
        .collect();
    let mut b = LieBuilder::new(name, names);
    for (p, &(i, j)) in idx.iter().enumerate() {
        for (q, &(k, l)) in idx.iter().enumerate() {
            let mut e = Vec::new();
            if j == k {
                e.push((pos(i, l).expect("closed under brackets"), Rational::one()));
            }
            if l == i {
                e.push((pos(k, j).expect("closed under brackets"), -Rational::one()));
            }
            b.set(p, q, e);
        }
    }
    b.build()
}

/// `sl_n`: off-diagonal `E_ij` in row-major order, then `H_i = E_ii - E_{i+1,i+1}`.
pub fn make_sl(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 2 {
        return Err(LieError::Invalid(format!("sl_n needs n >= 2, got {n}")));
    }
    let mut mats: Vec<Matrix> = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Matrix::zeros(n, n);
                m[(i, j)] = Rational::one();
                mats.push(m);
                names.push(format!("E{}", index_label(i + 1, j + 1, n)));
            }
        }
    }
    for i in 0..n - 1 {
        let mut m = Matrix::zeros(n, n);
        m[(i, i)] = Rational::one();
        m[(i + 1, i + 1)] = -Rational::one();
        mats.push(m);
        names.push(format!("H{}", i + 1));
    }
    let coords = |m: &Matrix| -> Vec<(usize, Rational)> {
        let mut out = Vec::new();
        let mut p = 0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.push((p, m[(i, j)].clone()));
                    p += 1;
                }
            }
        }
        let mut acc = Rational::zero();
        for i in 0..n - 1 {
            acc += &m[(i, i)];
            out.push((p + i, acc.clone()));
        }
        out
    };
    let mut b = LieBuilder::new(format!("sl{n}"), names);
    for (p, a) in mats.iter().enumerate() {
        for (q, c) in mats.iter().enumerate() {
            let comm = a.mul(c).sub(&c.mul(a));
            b.set(p, q, coords(&comm));
        }
    }
    b.build()
}

/// `h_{2n+1}` on the basis `z, x1, y1, ..., xn, yn` with `[x_i, y_i] = z`.
pub fn make_heisenberg(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 1 {
        return Err(LieError::Invalid("h_{2n+1} needs n >= 1".into()));
    }
    let mut names = vec!["z".to_string()];
    for i in 1..=n {
        if n == 1 {
            names.push("x".into());
            names.push("y".into());
        } else {
            names.push(format!("x{i}"));
            names.push(format!("y{i}"));
        }
    }
    let mut b = LieBuilder::new(format!("h{}", 2 * n + 1), names);
    for i in 0..n {
        b.set_antisymmetric(1 + 2 * i, 2 + 2 * i, vec![(0, Rational::one())]);
    }
    b.build()
}

pub fn make_abelian(n: usize) -> Result<LieAlgebra, LieError> {
    let names = (1..=n).map(|i| format!("e{i}")).collect();
    LieBuilder::new(format!("ab{n}"), names).build()
}

/// Names accepted by [`builtin_algebra`].
pub const BUILTIN_ALGEBRAS: &[&str] = &[
    "gl2", "gl3", "sl2", "sl3", "h3", "h5", "h7", "u2", "u3", "u4",
];

pub fn builtin_algebra(name: &str) -> Option<LieAlgebra> {
    let alg = match name {
        "gl2" => make_gl(2),
        "gl3" => make_gl(3),
        "sl2" => make_sl(2),
        "sl3" => make_sl(3),
        "h3" => make_heisenberg(1),
        "h5" => make_heisenberg(2),
        "h7" => make_heisenberg(3),
        "u2" => make_upper_triangular(2),
        "u3" => make_upper_triangular(3),
        "u4" => make_upper_triangular(4),
        _ => return None,
    };
    Some(alg.expect("built-in algebras are valid"))
}

fn parse_err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, LieError> {
    Err(LieError::Parse {
        line,
        col,
        msg: msg.into(),
    })
}

/// Splits a line into tokens with their 1-based columns, treating `:` and
/// `,` as separate tokens.
fn tokens(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        let sep = ch.is_whitespace() || ch == ':' || ch == ',';
        if sep {
            if let Some(s) = start.take() {
                out.push((&line[s..i], s + 1));
            }
            if ch == ':' || ch == ',' {
                out.push((&line[i..i + 1], i + 1));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((&line[s..], s + 1));
    }
    out
}

fn parse_lie(src: &str) -> Result<LieAlgebra, LieError> {
    let mut builder: Option<LieBuilder> = None;
    let mut name = String::new();
    let mut basis_seen = false;
    for (ln, raw) in src.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(head, hcol)) = toks.first() else {
            continue;
        };
        match head {
            "name" => {
                name = toks.get(1).map(|t| t.0.to_string()).unwrap_or_default();
            }
            "dim" => {
                if builder.is_some() {
                    return parse_err(line_no, hcol, "duplicate 'dim' line");
                }
                let Some(&(v, vcol)) = toks.get(1) else {
                    return parse_err(line_no, hcol, "expected a dimension after 'dim'");
                };
                let n: usize = match v.parse() {
                    Ok(n) if n > 0 => n,
                    _ => return parse_err(line_no, vcol, format!("invalid dimension '{v}'")),
                };
                if let Some(&(_, c)) = toks.get(2) {
                    return parse_err(line_no, c, "unexpected token after dimension");
                }
                let names = (1..=n).map(|i| format!("e{i}")).collect();
                builder = Some(LieBuilder::new(String::new(), names));
            }
            "basis" => {
                let Some(b) = builder.as_mut() else {
                    return parse_err(line_no, hcol, "'basis' before 'dim'");
                };
                if basis_seen {
                    return parse_err(line_no, hcol, "duplicate 'basis' line");
                }
                let names: Vec<String> = toks[1..].iter().map(|t| t.0.to_string()).collect();
                if names.len() != b.dim() {
                    return parse_err(
                        line_no,
                        hcol,
                        format!("expected {} basis names, found {}", b.dim(), names.len()),
                    );
                }
                for (k, (nm, c)) in toks[1..].iter().enumerate() {
                    if names[..k].iter().any(|m| m == nm) {
                        return parse_err(line_no, *c, format!("duplicate basis name '{nm}'"));
                    }
                }
                b.basis = names;
                basis_seen = true;
            }
            "bracket" => {
                let Some(b) = builder.as_mut() else {
                    return parse_err(line_no, hcol, "'bracket' before 'dim'");
                };
                parse_bracket_line(b, &toks, line_no, line.len() + 1)?;
            }
            other => return parse_err(line_no, hcol, format!("unknown directive '{other}'")),
        }
    }
    let Some(mut b) = builder else {
        return parse_err(1, 1, "missing 'dim' line");
    };
    b.name = name;
    b.build()
}

fn parse_bracket_line(
    b: &mut LieBuilder,
    toks: &[(&str, usize)],
    line: usize,
    eol: usize,
) -> Result<(), LieError> {
    let n = b.dim();
    let index = |k: usize| -> Result<usize, LieError> {
        let Some(&(t, c)) = toks.get(k) else {
            return parse_err(line, eol, "expected a basis index");
        };
        match t.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => parse_err(line, c, format!("index '{t}' is not in 1..={n}")),
        }
    };
    let i = index(1)?;
    let j = index(2)?;
    match toks.get(3) {
        Some((":", _)) => {}
        Some(&(_, c)) => return parse_err(line, c, "expected ':'"),
        None => return parse_err(line, eol, "expected ':'"),
    }
    let mut expansion = Vec::new();
    let mut k = 4;
    while k < toks.len() {
        let target = index(k)?;
        let Some(&(ct, cc)) = toks.get(k + 1) else {
            return parse_err(line, eol, "expected a coefficient");
        };
        let c = Rational::from_str(ct).map_err(|_| LieError::Parse {
            line,
            col: cc,
            msg: format!("invalid coefficient '{ct}'"),
        })?;
        expansion.push((target, c));
        k += 2;
        match toks.get(k) {
            Some((",", _)) => k += 1,
            Some(&(_, c)) => return parse_err(line, c, "expected ','"),
            None => {}
        }
    }
    let col = toks[0].1;
    if i == j {
        if expansion.iter().any(|(_, c)| !c.is_zero()) {
            return parse_err(
                line,
                col,
                "a basis element must bracket to zero with itself",
            );
        }
        return Ok(());
    }
    if !b.set(i, j, expansion) {
        return parse_err(
            line,
            col,
            format!("bracket {} {} given twice", i + 1, j + 1),
        );
    }
    Ok(())
}

/// Parses a rational matrix: an optional `matrix N` header, then rows of
/// entries separated by whitespace or commas.
pub fn parse_concrete_matrix(src: &str) -> Result<ConcreteMatrix, LieError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut declared: Option<(usize, usize)> = None;
    for (ln, raw) in src.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("matrix") {
            let n: usize = rest.trim().parse().map_err(|_| LieError::Parse {
                line: line_no,
                col: 8,
                msg: "invalid matrix size".into(),
            })?;
            declared = Some((n, line_no));
            continue;
        }
        let mut row = Vec::new();
        for (tok, col) in tokens(line) {
            if tok == "," {
                continue;
            }
            let tok = tok.trim_matches(|c| c == '[' || c == ']');
            let v = Rational::from_str(tok).map_err(|_| LieError::Parse {
                line: line_no,
                col,
                msg: format!("invalid entry '{tok}'"),
            })?;
            row.push(v);
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return parse_err(line_no, 1, format!("expected {} entries", first.len()));
            }
        }
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 || rows[0].len() != n {
        return parse_err(
            src.lines().count().max(1),
            1,
            "matrix must be square and nonempty",
        );
    }
    if let Some((d, l)) = declared {
        if d != n {
            return parse_err(l, 1, format!("declared size {d} but found {n} rows"));
        }
    }
    Ok(Matrix::from_rows(rows).unwrap())
}
