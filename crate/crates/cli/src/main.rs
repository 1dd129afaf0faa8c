//! `lei`: invariants, automorphism groups and the `Lei3` automorphism
//! structure check from the command line.
//!
//! Exit codes: 0 success, 1 semantic failure, 2 parse/usage error,
//! 3 field error, 4 enumeration budget exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use leibniz::aut::{enumerate_automorphisms, DEFAULT_BUDGET};
use leibniz::catalog::CatalogName;
use leibniz::lei3::verify_theorem;
use leibniz::matrix::format_vector;
use leibniz::report::invariants_report;
use leibniz::{parse_algebra_file, render_algebra_file, Algebra, Error, FieldSpec};

#[derive(Parser)]
#[command(name = "lei", version, about = "Leibniz algebras over Q and F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the left Leibniz identity on all basis triples.
    Check { file: PathBuf },
    /// Print the invariant table.
    Invariants { file: PathBuf },
    /// Enumerate the automorphism group over a prime field.
    Aut {
        file: PathBuf,
        /// Print every automorphism as its row-major entries.
        #[arg(long)]
        dump: bool,
        /// Maximum number of candidate matrices.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Write a catalog algebra (lei1, lei2, lei3) in file format.
    Catalog {
        name: String,
        #[arg(long)]
        field: String,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Check the structure of Aut(Lei3) over a prime field.
    VerifyThm {
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotFiniteField
            | Error::BadFieldSpec(_)
            | Error::NotPrime(_)
            | Error::ModulusOutOfRange(_) => 3,
            Error::BudgetExceeded { .. } => 4,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn load(path: &Path) -> Result<Algebra, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    parse_algebra_file(&text).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn check(path: &Path) -> Result<(String, u8), Failure> {
    let alg = load(path)?;
    Ok(match alg.first_leibniz_violation() {
        None => ("leibniz = true\n".to_string(), 0),
        Some(v) => {
            let mut out = String::from("leibniz = false\n");
            let _ = writeln!(out, "violation = ({},{},{})", v.i + 1, v.j + 1, v.k + 1);
            let _ = writeln!(out, "lhs = {}", format_vector(&v.lhs));
            let _ = writeln!(out, "rhs = {}", format_vector(&v.rhs));
            (out, 1)
        }
    })
}

fn aut(path: &Path, dump: bool, budget: u64) -> Result<String, Failure> {
    let alg = load(path)?;
    let group = enumerate_automorphisms(&alg, budget)?;
    let mut out = format!("aut_order = {}\n", group.order());
    if dump {
        let mut lines: Vec<String> = group
            .iter()
            .map(|f| {
                f.matrix()
                    .entries()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        lines.sort();
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
    }
    Ok(out)
}

fn catalog(name: &str, field: &str, output: Option<&Path>) -> Result<String, Failure> {
    let name: CatalogName = name.parse().map_err(|e: leibniz::catalog::UnknownName| Failure::new(2, e.to_string()))?;
    let field: FieldSpec = field.parse()?;
    let text = render_algebra_file(&name.build(field));
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn verify(field: &str, budget: u64) -> Result<(String, u8), Failure> {
    let field: FieldSpec = field.parse()?;
    let report = verify_theorem(field, budget)?;
    let code = if report.all_passed() { 0 } else { 1 };
    Ok((report.to_report().to_string(), code))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Invariants { file } => {
            let alg = load(&file)?;
            Ok((invariants_report(&alg)?.to_string(), 0))
        }
        Command::Aut { file, dump, budget } => Ok((aut(&file, dump, budget)?, 0)),
        Command::Catalog { name, field, output } => Ok((catalog(&name, &field, output.as_deref())?, 0)),
        Command::VerifyThm { field, budget } => verify(&field, budget),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
