use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use tlz_cli::commands::{self, parse_scalar, Options};
use tlz_cli::{CliError, Result};
use tlz_core::Scalar;

/// Exact checkers and constructions for Leibniz and ternary Leibniz algebras.
///
/// Exit codes: 0 pass/success, 1 check failed, 2 input or usage error.
#[derive(Parser)]
#[command(name = "tlz", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an identity checker and print a JSON report.
    Check {
        /// Checker name, e.g. leibniz, ternary-leibniz, representation.
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        common: Common,
        /// Print elapsed wall time in the report (breaks byte reproducibility).
        #[arg(long)]
        timing: bool,
        inputs: Vec<PathBuf>,
    },
    /// Build a derived structure and print it as a file.
    Construct {
        #[arg(long)]
        recipe: String,
        #[command(flatten)]
        common: Common,
        inputs: Vec<PathBuf>,
    },
    /// Solve for a linear operator class; prints one file per solution.
    Solve {
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        common: Common,
        input: PathBuf,
    },
}

#[derive(Args)]
struct Common {
    /// Where to write the output; for `solve`, a directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Operator weight as p/q.
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    weight: Option<Scalar>,
    /// Operator class for `check --kind operator` and `operator-transfer`.
    #[arg(long)]
    op_kind: Option<String>,
    /// Auxiliary maps for generalized derivations and quasiderivations.
    #[arg(long)]
    d1: Option<PathBuf>,
    #[arg(long)]
    d2: Option<PathBuf>,
    #[arg(long)]
    d3: Option<PathBuf>,
    /// Check the bracket-free form of compatible averaging.
    #[arg(long)]
    strict_averaging: bool,
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    k1: Option<Scalar>,
    #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
    k2: Option<Scalar>,
    /// Centroid bracket variant (1, 2 or 3).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    variant: Option<u8>,
}

impl Common {
    fn options(&self) -> Options {
        Options {
            weight: self.weight.clone(),
            op_kind: self.op_kind.clone(),
            d1: self.d1.clone(),
            d2: self.d2.clone(),
            d3: self.d3.clone(),
            strict_averaging: self.strict_averaging,
            k1: self.k1.clone(),
            k2: self.k2.clone(),
            variant: self.variant,
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check {
            kind,
            common,
            timing,
            inputs,
        } => {
            let start = Instant::now();
            let mut report = commands::run_check(&kind, &inputs, &common.options())?;
            if timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            write_out(common.out.as_deref(), &report.to_json())?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Construct { recipe, common, inputs } => {
            let file = commands::run_construct(&recipe, &inputs, &common.options())?;
            write_out(common.out.as_deref(), &file.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { kind, common, input } => {
            let files = commands::run_solve(&kind, &input, &common.options())?;
            match &common.out {
                Some(dir) => {
                    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
                        path: dir.clone(),
                        source,
                    })?;
                    for (i, f) in files.iter().enumerate() {
                        write_out(Some(&dir.join(format!("{kind}-{i}.json"))), &f.to_json())?;
                    }
                }
                None => {
                    let all = serde_json::to_string_pretty(&files).expect("files serialize");
                    println!("{all}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
