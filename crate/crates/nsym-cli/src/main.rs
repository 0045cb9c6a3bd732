//! Command-line interface: expression expansion, pairings, transition and
//! Kostka matrices, quasi-symmetric tables, and the identity suite.
//!
//! Exit status: 0 on success or a passing verification, 1 on a verification
//! failure, 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nsym::bases::{convert, transition_matrix};
use nsym::composition::Composition;
use nsym::element::Basis;
use nsym::expr;
use nsym::identities;
use nsym::kostka;
use nsym::qsym::{qsym_table, QsymFamily};

const DEFAULT_MAX_DEGREE: u32 = 12;

#[derive(Parser)]
#[command(name = "nsym", about = "Exact kernel for noncommutative symmetric functions", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print it in a target basis
    Expand {
        expression: String,
        /// Target basis (defaults to the expression's uniform basis, else Psi)
        #[arg(long)]
        to: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Scalar product of two expressions
    Pair {
        expression: String,
        #[arg(long = "with")]
        with: String,
    },
    /// Transition matrix between two bases at one degree
    Matrix {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Kostka matrix (ribbons in the monomial basis) at one degree
    Kostka {
        #[arg(long)]
        degree: u32,
        /// Kostka-Gessel matrix (ribbons in the fundamental basis) instead
        #[arg(long)]
        gessel: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Quasi-symmetric coefficient table of one family member
    Qsym {
        #[arg(long)]
        family: String,
        /// Composition index, e.g. 2,1
        #[arg(long)]
        index: String,
    },
    /// Run one named identity (or `all`) at a degree bound
    Verify {
        name: String,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
}

fn max_degree() -> u32 {
    std::env::var("NCSF_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

fn check_degree(degree: u32) -> Result<(), String> {
    let cap = max_degree();
    if degree > cap {
        Err(format!("degree {degree} exceeds the cap {cap} (override with NCSF_MAX_DEGREE)"))
    } else {
        Ok(())
    }
}

/// The unique basis used by the expression's atoms, if there is exactly one.
fn uniform_basis(e: &expr::Expr) -> Option<Basis> {
    fn collect(e: &expr::Expr, out: &mut Vec<Basis>) {
        match e {
            expr::Expr::Number(_) => {}
            expr::Expr::Atom(basis, _) => {
                if !out.contains(basis) {
                    out.push(*basis);
                }
            }
            expr::Expr::Omega(inner) => collect(inner, out),
            expr::Expr::Add(a, b) | expr::Expr::Sub(a, b) | expr::Expr::Mul(a, b) => {
                collect(a, out);
                collect(b, out);
            }
        }
    }
    let mut bases = Vec::new();
    collect(e, &mut bases);
    match bases.as_slice() {
        [single] => Some(*single),
        _ => None,
    }
}

fn parse_index(text: &str) -> Result<Composition, String> {
    let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
    let parts: Result<Vec<u32>, _> = trimmed.split(',').map(|p| p.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|_| format!("bad composition index {text:?}"))?;
    Composition::new(parts).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Expand { expression, to, format } => {
            let tree = expr::parse(&expression).map_err(|e| e.to_string())?;
            let element = expr::eval(&tree).map_err(|e| e.to_string())?;
            check_degree(element.max_degree())?;
            let target = match to {
                Some(name) => Basis::parse(&name).map_err(|e| e.to_string())?,
                None => uniform_basis(&tree).unwrap_or(Basis::Psi),
            };
            let converted = convert(&element, target);
            match format {
                TextFormat::Text => println!("{converted}"),
                TextFormat::Json => println!("{}", converted.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pair { expression, with } => {
            let a = expr::eval_str(&expression).map_err(|e| e.to_string())?;
            let b = expr::eval_str(&with).map_err(|e| e.to_string())?;
            check_degree(a.max_degree().max(b.max_degree()))?;
            println!("{}", nsym::element::rat_to_string(&nsym::algebra::pair(&a, &b)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix { from, to, degree, format } => {
            check_degree(degree)?;
            let from = Basis::parse(&from).map_err(|e| e.to_string())?;
            let to = Basis::parse(&to).map_err(|e| e.to_string())?;
            let matrix = transition_matrix(from, to, degree).map_err(|e| e.to_string())?;
            match format {
                TableFormat::Csv => print!("{}", matrix.to_csv()),
                TableFormat::Json => println!("{}", matrix.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kostka { degree, gessel, format } => {
            check_degree(degree)?;
            let report = if gessel {
                kostka::kostka_gessel_matrix(degree)
            } else {
                kostka::kostka_matrix(degree)
            }
            .map_err(|e| e.to_string())?;
            match format {
                TableFormat::Csv => print!("{}", report.to_csv()),
                TableFormat::Json => println!("{}", report.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Qsym { family, index } => {
            let family = QsymFamily::parse(&family).map_err(|e| e.to_string())?;
            let index = parse_index(&index)?;
            check_degree(index.weight())?;
            let table = qsym_table(family, &index).map_err(|e| e.to_string())?;
            println!("{}", table.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { name, degree, format } => {
            check_degree(degree)?;
            let results = if name == "all" {
                identities::verify_all(degree)
            } else {
                vec![identities::verify_by_name(&name, degree).map_err(|e| e.to_string())?]
            };
            match format {
                TextFormat::Text => print!("{}", identities::report_table(&results)),
                TextFormat::Json => println!("{}", identities::report_json(&results)),
            }
            if results.iter().all(|r| r.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
