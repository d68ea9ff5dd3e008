//! `kschur`: compute k-Schur expansions, map words to cores, run the
//! verification suites and draw rank-2 alcove walks.
//!
//! Exit codes: 0 success, 1 usage or invalid input, 2 domain error or
//! unsupported combination, 3 verification failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kschur_core::cores::{self, SymmetricCore};
use kschur_core::verify::{self, VerifyConfig};
use kschur_core::{AffineWeylGroup, Error, Family, Formula, WeylWord};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "kschur", version, about = "k-Schur expansions in the affine nilCoxeter algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct TypeArgs {
    /// Cartan family: A, B, C or D.
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Rank k of the finite root system.
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand the k-Schur function of a fundamental coweight.
    Expand {
        #[command(flatten)]
        kind: TypeArgs,
        /// Index j of the fundamental coweight.
        #[arg(long)]
        coweight: usize,
        #[arg(long, value_enum, default_value_t = FormulaArg::Orbit)]
        formula: FormulaArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the symmetric core of a Grassmannian element (type C).
    Core {
        #[command(flatten)]
        kind: TypeArgs,
        /// Digits such as 1232010, or comma-separated indices.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the property suites.
    Verify {
        #[command(flatten)]
        kind: TypeArgs,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Longest random word to draw.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Random samples per randomized suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Draw the alcove walk of a word as SVG (C_2 and A_2).
    Walk {
        #[command(flatten)]
        kind: TypeArgs,
        #[arg(long, default_value = "")]
        word: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormulaArg {
    Orbit,
    Algebraic,
    Combinatorial,
}

impl From<FormulaArg> for Formula {
    fn from(f: FormulaArg) -> Self {
        match f {
            FormulaArg::Orbit => Formula::Orbit,
            FormulaArg::Algebraic => Formula::Algebraic,
            FormulaArg::Combinatorial => Formula::Combinatorial,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Domain(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::InvalidNode { .. } | Error::Dimension { .. } => Failure::Usage(e.to_string()),
            Error::Domain(_) | Error::Unsupported(_) | Error::DatumMismatch { .. } => Failure::Domain(e.to_string()),
            Error::Internal(_) => Failure::Verification(e.to_string()),
        }
    }
}

fn group_of(kind: &TypeArgs) -> Result<AffineWeylGroup, Failure> {
    Ok(AffineWeylGroup::of_type(kind.family, kind.rank)?)
}

fn expand(kind: &TypeArgs, j: usize, formula: Formula, format: Format) -> Result<String, Failure> {
    let group = group_of(kind)?;
    if j == 0 || j > kind.rank {
        return Err(Failure::Usage(format!("--coweight must lie in 1..={}, got {j}", kind.rank)));
    }
    let report = kschur_core::expand(&group, j, formula)?;
    Ok(match format {
        Format::Text => report.render_text() + "\n",
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("serializable") + "\n",
        Format::Latex => report.render_latex()?,
    })
}

fn core(kind: &TypeArgs, word: &str, format: Format) -> Result<String, Failure> {
    let group = group_of(kind)?;
    let word: WeylWord = word.parse()?;
    let w = group.element_from_word(&word)?;
    let lambda: SymmetricCore = cores::core_of(&group, &w)?;
    Ok(match format {
        Format::Text => {
            let diagram = cores::render_shifted(&lambda);
            if diagram.is_empty() {
                format!("{lambda}\n")
            } else {
                format!("{lambda}\n{diagram}\n")
            }
        }
        Format::Json => {
            let value = json!({
                "family": kind.family.to_string(),
                "rank": kind.rank,
                "word": group.canonical_reduced_word(&w).letters(),
                "core": lambda.parts(),
                "shifted": lambda.shifted().cells().iter().map(|&(r, c)| [r, c]).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&value).expect("serializable") + "\n"
        }
        Format::Latex => format!("$${}$$\n", cores::render_shifted_latex(&lambda)),
    })
}

fn run_verify(kind: &TypeArgs, config: VerifyConfig) -> Result<String, Failure> {
    let group = group_of(kind)?;
    let results = verify::run_all(&group, &config);
    let mut out = format!(
        "verify {} seed={} max-len={} samples={}\n",
        group.kind(),
        config.seed,
        config.max_len,
        config.samples
    );
    for r in &results {
        out.push_str(&format!("{r}\n"));
    }
    if results.iter().all(|r| r.passed()) {
        Ok(out)
    } else {
        Err(Failure::Verification(out.trim_end().to_string()))
    }
}

fn walk(kind: &TypeArgs, word: &str, out: Option<&PathBuf>) -> Result<String, Failure> {
    let group = group_of(kind)?;
    let word: WeylWord = word.parse()?;
    let svg = kschur_core::render_walk_svg(&group, &word)?;
    match out {
        Some(path) => {
            fs::write(path, &svg).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(svg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Expand {
            kind,
            coweight,
            formula,
            format,
        } => expand(kind, *coweight, (*formula).into(), *format),
        Command::Core { kind, word, format } => core(kind, word, *format),
        Command::Verify {
            kind,
            seed,
            max_len,
            samples,
        } => run_verify(
            kind,
            VerifyConfig {
                seed: *seed,
                max_len: *max_len,
                samples: *samples,
            },
        ),
        Command::Walk { kind, word, out } => walk(kind, word, out.as_ref()),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            println!("{msg}");
            ExitCode::from(3)
        }
    }
}
