use std::collections::BTreeMap;
use std::path::Path;

use homlie::derivations::{
    default_budget, derivation_space, hilbert_series, DerivError, SeriesCase,
};
use homlie::homlie::{classify_matrix, generate_homlie_ideal, verify_family};
use homlie::ideal::{
    colon_ideal, containment_failures, ideal_dimension, ideal_intersection,
    maximal_independent_set, radical_membership, Ideal,
};
use homlie::lie::LieAlgebra;
use homlie::linalg::Matrix;
use homlie::poly::{Budget, OrderKind, Polynomial};
use serde_json::{json, Value};

use crate::input;
use crate::report::{input as input_error, CliError, Outcome, Run};
use crate::{Cli, Command, Global, IdealInput, MapInput, SecondIdeal};

/// Largest algebra dimension for which `generate-ideal` runs Buchberger.
const GROEBNER_GUARD: usize = 4;

impl From<DerivError> for CliError {
    fn from(e: DerivError) -> Self {
        match e {
            DerivError::HomLie(h) => h.into(),
            other => input_error(other),
        }
    }
}

fn budget(g: &Global) -> Budget {
    g.budget.map(Budget::new).unwrap_or_default()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect())
        .collect()
}

struct Inputs(BTreeMap<String, String>);

impl Inputs {
    fn new(g: &Global) -> Inputs {
        let mut m = BTreeMap::new();
        if let Some(f) = &g.file {
            m.insert("file".into(), f.display().to_string());
        }
        if let Some(o) = &g.order {
            m.insert("order".into(), o.clone());
        }
        if let Some(b) = g.budget {
            m.insert("budget".into(), b.to_string());
        }
        Inputs(m)
    }

    fn set(&mut self, k: &str, v: impl ToString) -> &mut Self {
        self.0.insert(k.to_string(), v.to_string());
        self
    }
}

pub fn run(cli: &Cli) -> Result<Run, CliError> {
    let g = &cli.global;
    let file = g.file.as_deref();
    match &cli.command {
        Command::GenerateIdeal {
            algebra,
            multiplicative,
            groebner,
            dimension,
        } => generate(
            g,
            input::algebra(algebra.as_deref(), file)?,
            *multiplicative,
            *groebner,
            *dimension,
        ),
        Command::Groebner { ideal } => groebner(g, ideal),
        Command::Intersect { ideal, second } => intersect(g, ideal, second),
        Command::Colon { ideal, by } => colon(g, ideal, by),
        Command::Contains { ideal, second } => contains(g, ideal, second),
        Command::RadicalMember { ideal, poly } => radical(g, ideal, poly),
        Command::Dimension { ideal } => dimension(g, ideal),
        Command::Verify {
            algebra,
            family,
            at,
            perturb,
        } => verify(
            g,
            input::algebra(algebra.as_deref(), file)?,
            family,
            at,
            *perturb,
        ),
        Command::Classify { algebra, map } => {
            classify(g, input::algebra(algebra.as_deref(), file)?, map)
        }
        Command::Derivations { algebra, map, k } => {
            derivations(g, input::algebra(algebra.as_deref(), file)?, map, *k)
        }
        Command::Hilbert { algebra, map } => {
            hilbert(g, input::algebra(algebra.as_deref(), file)?, map)
        }
    }
}

fn generate(
    g: &Global,
    alg: LieAlgebra,
    mult: bool,
    want_basis: bool,
    want_dim: bool,
) -> Result<Run, CliError> {
    let n = alg.dim();
    if (want_basis || want_dim) && n > GROEBNER_GUARD {
        return Err(input_error(format!(
            "{} has dimension {n} ({} variables); --groebner and --dimension need dimension at most {GROEBNER_GUARD}",
            alg.name(),
            n * n
        )));
    }
    let hl = generate_homlie_ideal(&alg, mult);
    let (jac, hom) = (hl.jacobi_gens(), hl.mult_gens());
    let mut inputs = Inputs::new(g);
    inputs
        .set("algebra", alg.name())
        .set("multiplicative", mult);
    let mut payload = json!({
        "algebra": alg.name(),
        "variables": hl.ring().names(),
        "hom_jacobi": strings(&jac),
        "homomorphism": strings(&hom),
    });
    let mut text = vec![
        format!("# variables {}", hl.ring().names().join(",")),
        format!("# {} Hom-Jacobi equations on {}", jac.len(), alg.name()),
    ];
    text.extend(strings(&jac));
    if mult {
        text.push(format!("# {} homomorphism equations", hom.len()));
        text.extend(strings(&hom));
    }
    if want_basis || want_dim {
        let ideal = hl.ideal();
        let basis = ideal.groebner(&budget(g))?.to_vec();
        if want_basis {
            text.push(format!(
                "# reduced Groebner basis, {} polynomials, grlex",
                basis.len()
            ));
            text.extend(strings(&basis));
            payload["groebner_basis"] = json!(strings(&basis));
        }
        if want_dim {
            let d = ideal_dimension(&ideal, &budget(g))?;
            text.push(format!("# dimension {d}"));
            payload["dimension"] = json!(d);
        }
    }
    let mut run = Run::new("generate-ideal", inputs.0, Outcome::Success, payload);
    run.text = text;
    Ok(run)
}

struct Loaded {
    ideal: Ideal,
    second: Option<Ideal>,
    poly: Option<Polynomial>,
    inputs: Inputs,
}

fn load(
    g: &Global,
    src: &IdealInput,
    second: Option<&SecondIdeal>,
    poly: Option<&str>,
) -> Result<Loaded, CliError> {
    let first = input::generators(
        src.gens.as_deref(),
        g.file.as_deref(),
        "generators (--gens or --file)",
    )?;
    let other = match second {
        Some(s) => Some(input::generators(
            s.with_gens.as_deref(),
            s.with_file.as_deref().map(Path::new),
            "second ideal (--with-gens or --with)",
        )?),
        None => None,
    };
    let mut texts: Vec<&str> = first.iter().map(String::as_str).collect();
    if let Some(o) = &other {
        texts.extend(o.iter().map(String::as_str));
    }
    if let Some(p) = poly {
        texts.push(p);
    }
    let kind: OrderKind = src.ordering.into();
    let ring = input::ring(g.order.as_deref(), kind, &texts)?;
    let mut inputs = Inputs::new(g);
    inputs
        .set("ordering", kind)
        .set("variables", ring.names().join(","))
        .set("generators", first.join("; "));
    if let Some(o) = &other {
        inputs.set("second", o.join("; "));
    }
    if let Some(p) = poly {
        inputs.set("polynomial", p);
    }
    Ok(Loaded {
        ideal: input::ideal(&ring, &first)?,
        second: other.map(|o| input::ideal(&ring, &o)).transpose()?,
        poly: poly.map(|p| Polynomial::parse(&ring, p)).transpose()?,
        inputs,
    })
}

fn basis_run(name: &str, inputs: Inputs, basis: &[Polynomial]) -> Run {
    let mut run = Run::new(
        name,
        inputs.0,
        Outcome::Success,
        json!({ "basis": strings(basis) }),
    );
    run.text = strings(basis);
    run
}

fn groebner(g: &Global, src: &IdealInput) -> Result<Run, CliError> {
    let l = load(g, src, None, None)?;
    let basis = l.ideal.groebner(&budget(g))?.to_vec();
    Ok(basis_run("groebner", l.inputs, &basis))
}

fn intersect(g: &Global, src: &IdealInput, second: &SecondIdeal) -> Result<Run, CliError> {
    let l = load(g, src, Some(second), None)?;
    let inter = ideal_intersection(&l.ideal, l.second.as_ref().unwrap(), &budget(g))?;
    let basis = inter.groebner(&budget(g))?.to_vec();
    Ok(basis_run("intersect", l.inputs, &basis))
}

fn colon(g: &Global, src: &IdealInput, by: &str) -> Result<Run, CliError> {
    let l = load(g, src, None, Some(by))?;
    let q = colon_ideal(&l.ideal, l.poly.as_ref().unwrap(), &budget(g))?;
    let basis = q.groebner(&budget(g))?.to_vec();
    Ok(basis_run("colon", l.inputs, &basis))
}

fn contains(g: &Global, src: &IdealInput, second: &SecondIdeal) -> Result<Run, CliError> {
    let l = load(g, src, Some(second), None)?;
    let j = l.second.as_ref().unwrap();
    let missing = containment_failures(&l.ideal, j, &budget(g))?;
    let outside: Vec<String> = missing
        .iter()
        .map(|&k| j.generators()[k].to_string())
        .collect();
    let outcome = if missing.is_empty() {
        Outcome::Success
    } else {
        Outcome::Counterexample
    };
    let mut run = Run::new(
        "contains",
        l.inputs.0,
        outcome,
        json!({ "contained": missing.is_empty(), "not_in_first": outside }),
    );
    if missing.is_empty() {
        run.line("contained: every generator of the second ideal reduces to 0");
    } else {
        run.line(format!(
            "not contained: {} generator(s) do not reduce to 0",
            missing.len()
        ));
        run.text.extend(outside);
    }
    Ok(run)
}

fn radical(g: &Global, src: &IdealInput, poly: &str) -> Result<Run, CliError> {
    let l = load(g, src, None, Some(poly))?;
    let member = radical_membership(l.poly.as_ref().unwrap(), &l.ideal, &budget(g))?;
    let outcome = if member {
        Outcome::Success
    } else {
        Outcome::Counterexample
    };
    let mut run = Run::new(
        "radical-member",
        l.inputs.0,
        outcome,
        json!({ "member": member }),
    );
    run.line(if member {
        "member of the radical"
    } else {
        "not in the radical"
    });
    Ok(run)
}

fn dimension(g: &Global, src: &IdealInput) -> Result<Run, CliError> {
    let l = load(g, src, None, None)?;
    let set = maximal_independent_set(&l.ideal, &budget(g))?;
    let names: Vec<String> = set
        .iter()
        .map(|&v| l.ideal.ring().name(v).to_string())
        .collect();
    let mut run = Run::new(
        "dimension",
        l.inputs.0,
        Outcome::Success,
        json!({ "dimension": set.len(), "independent_set": names }),
    );
    run.line(format!("dimension {}", set.len()));
    run.line(format!("independent variables: {}", names.join(", ")));
    Ok(run)
}

fn verify(
    g: &Global,
    alg: LieAlgebra,
    family: &str,
    at: &[String],
    perturb: bool,
) -> Result<Run, CliError> {
    let at = input::assignments(at)?;
    let mut fam = input::specialize(input::family(family, &alg)?, &at)?;
    if perturb {
        fam = fam.perturbed();
    }
    let report = verify_family(&alg, &fam, &budget(g))?;
    let mut inputs = Inputs::new(g);
    inputs
        .set("algebra", alg.name())
        .set("family", fam.name())
        .set("perturb", perturb);
    let first = report
        .failures
        .first()
        .map(|f| json!({ "equation": f.equation.to_string(), "residue": f.residue.to_string() }));
    let payload = json!({
        "family": fam.name(),
        "algebra": alg.name(),
        "equations": report.equations,
        "nontrivial": report.nontrivial,
        "failures": report.failures.len(),
        "first_failure": first,
    });
    let outcome = if report.success() {
        Outcome::Success
    } else {
        Outcome::Counterexample
    };
    let mut run = Run::new("verify", inputs.0, outcome, payload);
    match report.failures.first() {
        None => run.line(format!(
            "success: {} is a family of multiplicative Hom-Lie structures on {} ({} equations, {} vanishing only modulo the constraints)",
            fam.name(),
            alg.name(),
            report.equations,
            report.nontrivial
        )),
        Some(f) => run
            .line(format!(
                "counterexample: {} of {} equations do not vanish on {}",
                report.failures.len(),
                report.equations,
                fam.name()
            ))
            .line(format!("first: {} = {}", f.equation, f.residue)),
    };
    Ok(run)
}

fn concrete(alg: &LieAlgebra, map: &MapInput, inputs: &mut Inputs) -> Result<Matrix, CliError> {
    match (&map.matrix, &map.family) {
        (Some(spec), _) => {
            inputs.set("matrix", spec);
            input::matrix(spec, alg.dim())
        }
        (None, Some(fam)) => {
            let at = input::assignments(&map.at)?;
            inputs.set("family", fam).set("at", map.at.join(","));
            input::family_point(&input::family(fam, alg)?, &at)
        }
        (None, None) => Err(input_error(
            "no map given: pass --matrix or --family with --at",
        )),
    }
}

fn classify(g: &Global, alg: LieAlgebra, map: &MapInput) -> Result<Run, CliError> {
    let mut inputs = Inputs::new(g);
    inputs.set("algebra", alg.name());
    let d = concrete(&alg, map, &mut inputs)?;
    let c = classify_matrix(&alg, &d)?;
    let failure = c
        .first_failure
        .as_ref()
        .map(|(e, v)| json!({ "equation": e.to_string(), "value": v.to_string() }));
    let payload = json!({
        "hom_lie": c.hom_lie,
        "multiplicative": c.multiplicative,
        "regular": c.regular,
        "involutive": c.involutive,
        "determinant": c.determinant.to_string(),
        "first_failure": failure,
    });
    let mut run = Run::new("classify", inputs.0, Outcome::Success, payload);
    run.line(format!("hom_lie: {}", c.hom_lie))
        .line(format!("multiplicative: {}", c.multiplicative))
        .line(format!("regular: {}", c.regular))
        .line(format!("involutive: {}", c.involutive))
        .line(format!("determinant: {}", c.determinant));
    if let Some((e, v)) = &c.first_failure {
        run.line(format!("first failing equation: {e} = {v}"));
    }
    Ok(run)
}

fn derivations(g: &Global, alg: LieAlgebra, map: &MapInput, k: u32) -> Result<Run, CliError> {
    let mut inputs = Inputs::new(g);
    inputs.set("algebra", alg.name()).set("k", k);
    let d = concrete(&alg, map, &mut inputs)?;
    let space = derivation_space(&alg, &d, k)?;
    let basis: Vec<Value> = space.basis.iter().map(|m| json!(matrix_rows(m))).collect();
    let mut run = Run::new(
        "derivations",
        inputs.0,
        Outcome::Success,
        json!({ "k": k, "dimension": space.dim(), "basis": basis }),
    );
    run.line(format!("dim Der_{k} = {}", space.dim()));
    for (i, m) in space.basis.iter().enumerate() {
        run.line(format!("# basis element {}", i + 1));
        for row in matrix_rows(m) {
            run.line(row.join(" "));
        }
    }
    Ok(run)
}

fn hilbert(g: &Global, alg: LieAlgebra, map: &MapInput) -> Result<Run, CliError> {
    let mut inputs = Inputs::new(g);
    inputs.set("algebra", alg.name());
    let d = concrete(&alg, map, &mut inputs)?;
    let power_budget = match g.budget {
        Some(b) => u32::try_from(b).map_err(|_| input_error("--budget is too large"))?,
        None => default_budget(&alg),
    };
    let s = hilbert_series(&alg, &d, power_budget)?;
    let payload = json!({
        "series": s.to_string(),
        "case": s.case.to_string(),
        "numerator": s.numerator,
        "period": s.period,
        "dimensions": s.computed,
    });
    let mut run = Run::new("hilbert", inputs.0, Outcome::Success, payload);
    run.line(s.to_string()).line(format!("case: {}", s.case));
    if s.case == SeriesCase::Truncated {
        run.line(format!(
            "no invertibility, nilpotency or D^m = D found up to power {power_budget}; coefficients computed directly"
        ));
    }
    let dims: Vec<String> = s.computed.iter().map(|v| v.to_string()).collect();
    run.line(format!(
        "dim Der_k for k = 0..{}: {}",
        s.computed.len() - 1,
        dims.join(", ")
    ));
    Ok(run)
}
