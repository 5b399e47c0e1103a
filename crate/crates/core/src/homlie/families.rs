//! Published families of multiplicative Hom-Lie structures, written in the
//! column convention used everywhere in the crate.

use super::{HomLieError, ParamMatrix};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Rational;

/// Names accepted by [`builtin_family`].
pub const BUILTIN_FAMILIES: &[&str] = &[
    "Ca", "Da", "E", "heis", "P", "Q", "T", "diag1", "diag0", "h3fam", "u2p1", "u2p2", "u2p3",
];

/// The algebra a family is stated for, when none is given.
pub fn default_algebra_for(family: &str) -> Option<&'static str> {
    Some(match family {
        "Ca" | "Da" | "E" | "Eprinted" => "gl2",
        "heis" => "h5",
        "P" | "Q" | "T" => "u3",
        "diag1" | "diag0" => "gl3",
        "h3fam" => "h3",
        "u2p1" | "u2p2" | "u2p3" => "u2",
        _ => return None,
    })
}

fn build(
    name: &str,
    params: &[&str],
    constraints: &[&str],
    dens: &[&str],
    rows: &[&[&str]],
) -> ParamMatrix {
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    ParamMatrix::from_strings(name, params, constraints, dens, &rows)
        .expect("built-in families are well formed")
}

fn build_owned(name: &str, params: &[String], rows: Vec<Vec<String>>) -> ParamMatrix {
    let none: [String; 0] = [];
    ParamMatrix::from_strings(name, params, &none, &none, &rows)
        .expect("built-in families are well formed")
}

/// `C_a` on `gl_2`.
pub fn family_c() -> ParamMatrix {
    build(
        "Ca",
        &["a"],
        &[],
        &[],
        &[
            &["a", "0", "0", "a"],
            &["0", "0", "0", "0"],
            &["0", "0", "0", "0"],
            &["a", "0", "0", "a"],
        ],
    )
}

/// `D_a` on `gl_2`.
pub fn family_d() -> ParamMatrix {
    build(
        "Da",
        &["a"],
        &[],
        &[],
        &[
            &["a", "0", "0", "a - 1"],
            &["0", "1", "0", "0"],
            &["0", "0", "1", "0"],
            &["a - 1", "0", "0", "a"],
        ],
    )
}

const E_PARAMS: &[&str] = &["a", "b", "c", "xi"];
const E_CONSTRAINT: &[&str] = &["xi^2 + 4*b*c - 1"];
const E_DENOMINATOR: &[&str] = &["xi - 1"];

/// `E_{a,b,c,xi}` on `gl_2`, constrained by `xi^2 + 4bc - 1 = 0`, `xi != 1`.
///
/// The `-2b^2/(xi-1)` entry sits in row 2 and `-2c^2/(xi-1)` in row 3. With
/// the two swapped the matrices fail the homomorphism equations; see
/// [`family_e_as_printed`].
pub fn family_e() -> ParamMatrix {
    build(
        "E",
        E_PARAMS,
        E_CONSTRAINT,
        E_DENOMINATOR,
        &[
            &["a - xi", "-c", "-b", "a"],
            &["-b", "(xi - 1)/2", "-2*b^2/(xi - 1)", "b"],
            &["-c", "-2*c^2/(xi - 1)", "(xi - 1)/2", "c"],
            &["a", "c", "b", "a - xi"],
        ],
    )
}

/// The `E` family with the two quadratic entries in the other placement.
pub fn family_e_as_printed() -> ParamMatrix {
    build(
        "Eprinted",
        E_PARAMS,
        E_CONSTRAINT,
        E_DENOMINATOR,
        &[
            &["a - xi", "-c", "-b", "a"],
            &["-b", "(xi - 1)/2", "-2*c^2/(xi - 1)", "b"],
            &["-c", "-2*b^2/(xi - 1)", "(xi - 1)/2", "c"],
            &["a", "c", "b", "a - xi"],
        ],
    )
}

/// The six-parameter family on `h_3`, basis `z, x, y`.
pub fn family_h3() -> ParamMatrix {
    build(
        "h3fam",
        &["a", "b", "c", "d", "e", "f"],
        &[],
        &[],
        &[&["b*f - c*e", "a", "d"], &["0", "b", "e"], &["0", "c", "f"]],
    )
}

/// `D(a,b,c,d; alpha)` on `h_{2n+1}`: top-left `ad - bc`, top row
/// `alpha = (a1, b1, ..., an, bn)`, and `n` diagonal copies of `[[a, b], [c, d]]`.
pub fn family_heisenberg(n: usize) -> ParamMatrix {
    let mut params: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    for i in 1..=n {
        params.push(format!("a{i}"));
        params.push(format!("b{i}"));
    }
    let size = 2 * n + 1;
    let mut rows = vec![vec!["0".to_string(); size]; size];
    rows[0][0] = "a*d - b*c".into();
    for i in 0..n {
        rows[0][1 + 2 * i] = format!("a{}", i + 1);
        rows[0][2 + 2 * i] = format!("b{}", i + 1);
        let (x, y) = (1 + 2 * i, 2 + 2 * i);
        rows[x][x] = "a".into();
        rows[x][y] = "b".into();
        rows[y][x] = "c".into();
        rows[y][y] = "d".into();
    }
    build_owned("heis", &params, rows)
}

/// `D(a,b,c,d; alpha)` at rational values.
pub fn heisenberg_matrix(n: usize, theta: [i64; 4], alpha: &[i64]) -> Matrix {
    assert_eq!(alpha.len(), 2 * n);
    let mut values: Vec<Rational> = theta
        .iter()
        .map(|&v| Rational::from_integer(v.into()))
        .collect();
    values.extend(alpha.iter().map(|&v| Rational::from_integer(v.into())));
    family_heisenberg(n)
        .evaluate(&values)
        .expect("no denominators")
}

/// `delta` times the identity on `sl_n` and `a` on the centre, written in the
/// row-major `E_ij` basis of `gl_n`; `delta` is 1 or 0.
///
/// `E_ii` splits as `(E_ii - I/n) + I/n`, so its image is
/// `delta E_ii + ((a - delta)/n) sum_k E_kk`.
pub fn family_diag(n: usize, delta: u8) -> ParamMatrix {
    assert!(delta <= 1);
    let size = n * n;
    let mut rows = vec![vec!["0".to_string(); size]; size];
    for i in 0..n {
        for j in 0..n {
            let p = i * n + j;
            if i != j {
                rows[p][p] = delta.to_string();
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            let (col, row) = (i * n + i, k * n + k);
            rows[row][col] = if i == k {
                format!("{delta} + (a - {delta})/{n}")
            } else {
                format!("(a - {delta})/{n}")
            };
        }
    }
    build_owned(&format!("diag{delta}"), &["a".to_string()], rows)
}

/// The three `u_2` components, basis `E11, E12, E22`.
pub fn family_u2(which: usize) -> ParamMatrix {
    let p = ["a", "b", "c", "d"];
    match which {
        1 => build(
            "u2p1",
            &p,
            &[],
            &[],
            &[&["a", "0", "c"], &["b", "0", "d"], &["a", "0", "c"]],
        ),
        2 => build(
            "u2p2",
            &p,
            &[],
            &[],
            &[
                &["a", "0", "d"],
                &["b", "c", "-b"],
                &["a - 1", "0", "d + 1"],
            ],
        ),
        3 => build(
            "u2p3",
            &p,
            &[],
            &[],
            &[
                &["a", "0", "d"],
                &["b", "0", "-b"],
                &["c", "0", "a - c + d"],
            ],
        ),
        _ => panic!("u2 has three families"),
    }
}

const SEVEN: &[&str] = &["a", "b", "c", "d", "e", "f", "g"];

/// `P_{a,...,g}` on `u_3`, basis `E11, E12, E13, E22, E23, E33`.
pub fn family_p() -> ParamMatrix {
    build(
        "P",
        SEVEN,
        &[],
        &[],
        &[
            &["a", "0", "0", "d", "0", "f"],
            &["0", "0", "0", "0", "0", "0"],
            &["b", "0", "0", "e", "0", "g"],
            &["a", "0", "0", "d", "0", "f"],
            &["c", "0", "0", "-c", "0", "0"],
            &["a", "0", "0", "d", "0", "f"],
        ],
    )
}

/// `Q_{a,...,g}` on `u_3`.
pub fn family_q() -> ParamMatrix {
    build(
        "Q",
        SEVEN,
        &[],
        &[],
        &[
            &["a", "0", "0", "c", "0", "f"],
            &["0", "0", "0", "d", "0", "-d"],
            &["b", "0", "0", "e", "0", "g"],
            &["a", "0", "0", "c", "0", "f"],
            &["0", "0", "0", "0", "0", "0"],
            &["a", "0", "0", "c", "0", "f"],
        ],
    )
}

/// `T_{a,b,c,d}` on `u_3`.
pub fn family_t() -> ParamMatrix {
    build(
        "T",
        &["a", "b", "c", "d"],
        &[],
        &[],
        &[
            &["a", "0", "0", "c", "0", "d"],
            &["0", "1", "0", "0", "0", "0"],
            &["b", "0", "1", "0", "0", "-b"],
            &["a - 1", "0", "0", "c + 1", "0", "d"],
            &["0", "0", "0", "0", "1", "0"],
            &["a - 1", "0", "0", "c", "0", "d + 1"],
        ],
    )
}

/// Looks up a family by name, sized for `g` where the family depends on it
/// (`heis` on `h_{2n+1}`, `diag1`/`diag0` on `gl_n`).
pub fn builtin_family(name: &str, g: &LieAlgebra) -> Result<ParamMatrix, HomLieError> {
    let square_root = |d: usize| (1..=d).find(|n| n * n == d);
    Ok(match name {
        "Ca" => family_c(),
        "Da" => family_d(),
        "E" => family_e(),
        "Eprinted" => family_e_as_printed(),
        "h3fam" => family_h3(),
        "P" => family_p(),
        "Q" => family_q(),
        "T" => family_t(),
        "u2p1" => family_u2(1),
        "u2p2" => family_u2(2),
        "u2p3" => family_u2(3),
        "heis" => {
            if g.dim().is_multiple_of(2) {
                return Err(HomLieError::Invalid(format!(
                    "heis needs an odd-dimensional Heisenberg algebra, got dimension {}",
                    g.dim()
                )));
            }
            family_heisenberg((g.dim() - 1) / 2)
        }
        "diag1" | "diag0" => {
            let n = square_root(g.dim()).filter(|&n| n >= 2).ok_or_else(|| {
                HomLieError::Invalid(format!("{name} needs gl_n, got dimension {}", g.dim()))
            })?;
            family_diag(n, if name == "diag1" { 1 } else { 0 })
        }
        other => return Err(HomLieError::UnknownFamily(other.to_string())),
    })
}
