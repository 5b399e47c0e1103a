//! Loading algebras, families, matrices and ideals from names, flags and
//! files.

use std::fs;
use std::path::Path;

use homlie::homlie::{builtin_family, ParamMatrix, BUILTIN_FAMILIES};
use homlie::ideal::Ideal;
use homlie::lie::{builtin_algebra, parse_concrete_matrix, LieAlgebra, BUILTIN_ALGEBRAS};
use homlie::linalg::Matrix;
use homlie::poly::{scan_variables, MonomialOrder, OrderKind, Ring, RingRef};
use homlie::Rational;

use crate::report::{input, CliError};

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// A built-in algebra name, or a path to a structure-constant file.
pub fn algebra(name: Option<&str>, file: Option<&Path>) -> Result<LieAlgebra, CliError> {
    match (name, file) {
        (Some(n), _) if BUILTIN_ALGEBRAS.contains(&n) => Ok(builtin_algebra(n).unwrap()),
        (Some(n), None) if Path::new(n).exists() => LieAlgebra::load(Path::new(n)).map_err(input),
        (None, Some(p)) => LieAlgebra::load(p).map_err(input),
        (Some(n), _) => Err(input(format!(
            "unknown algebra '{n}'; built-ins are {}",
            BUILTIN_ALGEBRAS.join(", ")
        ))),
        (None, None) => Err(input("no algebra given: pass a built-in name or --file")),
    }
}

/// A built-in family name (sized for `g`), or a path to a family file.
pub fn family(spec: &str, g: &LieAlgebra) -> Result<ParamMatrix, CliError> {
    if BUILTIN_FAMILIES.contains(&spec) || spec == "Eprinted" {
        return Ok(builtin_family(spec, g)?);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(input(format!(
            "unknown family '{spec}'; built-ins are {}, or give a file",
            BUILTIN_FAMILIES.join(", ")
        )));
    }
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("family");
    Ok(ParamMatrix::parse(stem, &read(path)?)?)
}

pub fn rational(s: &str) -> Result<Rational, CliError> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| input(format!("'{s}' is not a rational number")))
}

/// `name=value` pairs, from repeated flags or comma-separated lists.
pub fn assignments(raw: &[String]) -> Result<Vec<(String, Rational)>, CliError> {
    let mut out = Vec::new();
    for item in raw.iter().flat_map(|r| r.split(',')) {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| input(format!("expected name=value, got '{item}'")))?;
        out.push((k.trim().to_string(), rational(v)?));
    }
    Ok(out)
}

/// Applies `--at` values to a family, one parameter at a time.
pub fn specialize(fam: ParamMatrix, at: &[(String, Rational)]) -> Result<ParamMatrix, CliError> {
    at.iter()
        .try_fold(fam, |f, (k, v)| f.specialize(k, v))
        .map_err(CliError::from)
}

/// The concrete matrix of a family with every parameter assigned.
pub fn family_point(fam: &ParamMatrix, at: &[(String, Rational)]) -> Result<Matrix, CliError> {
    let mut values = Vec::new();
    for p in fam.params() {
        let v = at.iter().find(|(k, _)| k == p).ok_or_else(|| {
            input(format!(
                "parameter '{p}' of {} has no value; pass --at {p}=...",
                fam.name()
            ))
        })?;
        values.push(v.1.clone());
    }
    if !fam.satisfies_constraints(&values) {
        return Err(input(format!(
            "the values violate the constraints of {}",
            fam.name()
        )));
    }
    fam.evaluate(&values).ok_or_else(|| {
        input(format!(
            "a denominator of {} vanishes at these values",
            fam.name()
        ))
    })
}

/// `identity`, `zero`, or a path to a matrix file.
pub fn matrix(spec: &str, dim: usize) -> Result<Matrix, CliError> {
    match spec {
        "identity" => Ok(Matrix::identity(dim)),
        "zero" => Ok(Matrix::zeros(dim, dim)),
        path => parse_concrete_matrix(&read(Path::new(path))?).map_err(input),
    }
}

/// Generators separated by newlines or `;`; `#` starts a comment.
pub fn generator_list(src: &str) -> Vec<String> {
    src.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(';'))
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Ideal sources: inline text wins over a file.
pub fn generators(
    inline: Option<&str>,
    file: Option<&Path>,
    what: &str,
) -> Result<Vec<String>, CliError> {
    match (inline, file) {
        (Some(s), _) => Ok(generator_list(s)),
        (None, Some(p)) => Ok(generator_list(&read(p)?)),
        (None, None) => Err(input(format!("no {what} given"))),
    }
}

/// The ring for a set of inputs: `--order` fixes the variables and their
/// precedence; otherwise variables are taken in order of first appearance.
pub fn ring(order: Option<&str>, kind: OrderKind, texts: &[&str]) -> Result<RingRef, CliError> {
    let names: Vec<String> = match order {
        Some(list) => list
            .split(|c: char| c == ',' || c.is_whitespace() || c == '>')
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect(),
        None => {
            let mut seen: Vec<String> = Vec::new();
            for t in texts {
                for v in scan_variables(t)? {
                    if !seen.contains(&v) {
                        seen.push(v);
                    }
                }
            }
            seen
        }
    };
    if names.is_empty() {
        return Err(input(
            "no variables: give --order or non-constant polynomials",
        ));
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Ok(Ring::new(&refs, MonomialOrder::new(kind))?)
}

pub fn ideal(ring: &RingRef, gens: &[String]) -> Result<Ideal, CliError> {
    Ok(Ideal::parse(ring, gens)?)
}
