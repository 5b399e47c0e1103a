//! `homlie`: command-line access to the ideal, Hom-Lie and derivation
//! computations.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homlie::poly::OrderKind;

use report::Run;

#[derive(Parser, Debug)]
#[command(
    name = "homlie",
    version,
    about = "Hom-Lie structures, polynomial ideals and D^k-derivations"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Input file: an algebra for the Hom-Lie commands, generators for the ideal commands.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    /// Variables in decreasing precedence, e.g. "beta,x23,x32".
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Reduction budget for Gröbner computations; for `hilbert`, the largest power tried.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ordering {
    Lex,
    Grlex,
}

impl From<Ordering> for OrderKind {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Lex => OrderKind::Lex,
            Ordering::Grlex => OrderKind::GrLex,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct IdealInput {
    /// Generators inline, separated by ';'.
    #[arg(long)]
    pub gens: Option<String>,
    #[arg(long, value_enum, default_value_t = Ordering::Grlex)]
    pub ordering: Ordering,
}

#[derive(Args, Debug, Clone)]
pub struct SecondIdeal {
    /// Generators of the second ideal inline.
    #[arg(long)]
    pub with_gens: Option<String>,
    /// File with the generators of the second ideal.
    #[arg(long = "with")]
    pub with_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct MapInput {
    /// `identity`, `zero`, or a matrix file; column i is the image of e_i.
    #[arg(long, conflicts_with = "family")]
    pub matrix: Option<String>,
    /// A built-in family or family file, evaluated at the `--at` values.
    #[arg(long)]
    pub family: Option<String>,
    /// Parameter values, `a=1/2` (repeatable or comma-separated).
    #[arg(long)]
    pub at: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Equations of HLie(g), optionally HLie_m(g).
    GenerateIdeal {
        algebra: Option<String>,
        /// Add the homomorphism equations.
        #[arg(long)]
        multiplicative: bool,
        /// Append the reduced Gröbner basis (algebras of dimension at most 4).
        #[arg(long)]
        groebner: bool,
        /// Report the dimension of the variety (algebras of dimension at most 4).
        #[arg(long)]
        dimension: bool,
    },
    /// Reduced Gröbner basis.
    Groebner {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Intersection of two ideals.
    Intersect {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        second: SecondIdeal,
    },
    /// Colon ideal (I : f).
    Colon {
        #[command(flatten)]
        ideal: IdealInput,
        /// The polynomial f.
        #[arg(long)]
        by: String,
    },
    /// Whether the first ideal contains the second.
    Contains {
        #[command(flatten)]
        ideal: IdealInput,
        #[command(flatten)]
        second: SecondIdeal,
    },
    /// Whether a polynomial lies in the radical.
    RadicalMember {
        #[command(flatten)]
        ideal: IdealInput,
        #[arg(long)]
        poly: String,
    },
    /// Krull dimension of R/I.
    Dimension {
        #[command(flatten)]
        ideal: IdealInput,
    },
    /// Checks that every member of a family is a multiplicative Hom-Lie structure.
    Verify {
        algebra: Option<String>,
        /// Built-in family name or family file.
        #[arg(long)]
        family: String,
        /// Fix parameters before verifying, `a=1/2`.
        #[arg(long)]
        at: Vec<String>,
        /// Add 1 to the top-left entry.
        #[arg(long)]
        perturb: bool,
    },
    /// Hom-Lie, multiplicative, regular and involutive flags of a matrix.
    Classify {
        algebra: Option<String>,
        #[command(flatten)]
        map: MapInput,
    },
    /// Basis of Der_k for a multiplicative structure.
    Derivations {
        algebra: Option<String>,
        #[command(flatten)]
        map: MapInput,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Hilbert series of the derivation algebra.
    Hilbert {
        algebra: Option<String>,
        #[command(flatten)]
        map: MapInput,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::GenerateIdeal { .. } => "generate-ideal",
            Command::Groebner { .. } => "groebner",
            Command::Intersect { .. } => "intersect",
            Command::Colon { .. } => "colon",
            Command::Contains { .. } => "contains",
            Command::RadicalMember { .. } => "radical-member",
            Command::Dimension { .. } => "dimension",
            Command::Verify { .. } => "verify",
            Command::Classify { .. } => "classify",
            Command::Derivations { .. } => "derivations",
            Command::Hilbert { .. } => "hilbert",
        }
    }
}

fn emit(run: &Run, format: Format) {
    match format {
        Format::Text => {
            for l in &run.text {
                println!("{l}");
            }
        }
        Format::Structured => {
            println!(
                "{}",
                serde_json::to_string_pretty(&run.report).expect("reports serialise")
            );
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(mut run) => {
            if cli.global.timing {
                let ms = start.elapsed().as_secs_f64() * 1e3;
                run.report.timing_ms = Some(ms);
                run.line(format!("time: {ms:.1} ms"));
            }
            emit(&run, cli.global.format);
            ExitCode::from(run.report.outcome.exit_code())
        }
        Err(e) => {
            eprintln!("{}: {e}", cli.command.name());
            ExitCode::from(e.exit_code())
        }
    }
}
