//! `hypergeo`: hyperbolic plane calculations from the command line.
//!
//! Exit status: 0 on success, 1 for usage errors, 2 when an assertion or
//! verification fails, 3 when a value is numerically out of range.

mod commands;
mod expr;
mod report;
mod svg;
mod verify;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hypergeo::Curvature;

use commands::{Config, Failure, Outcome};
use report::Format;
use verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "hypergeo", version, about = "Hyperbolic plane trigonometry, constructions and quadrature")]
struct Cli {
    /// The linear constant k (an expression such as `1e6` or `2ln2`).
    #[arg(long, global = true, default_value = "1")]
    k: String,
    /// Replace every assertion tolerance of a construction.
    #[arg(long, global = true)]
    tol: Option<String>,
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// SVG path for `construct` and `quadrature --build`; the report file for other commands.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a triangle from givens such as `a=1 b=1` or `alpha=45d beta=30d`.
    Solve {
        /// The triangle has a right angle opposite `c`.
        #[arg(long)]
        right: bool,
        /// `name=value` pairs from a, b, c, alpha, beta, gamma; angles take a `d` suffix for degrees.
        #[arg(required = true)]
        givens: Vec<String>,
    },
    /// Evaluate a closed-form quantity, e.g. `eval circle-area r=2asinh0.5`.
    Eval {
        /// One of the catalogued quantities; an unknown name lists them all.
        quantity: String,
        /// `name=value` parameters of the quantity.
        args: Vec<String>,
    },
    /// Run a construction script, draw it, and check its assertions.
    Construct {
        /// A JSON construction script.
        script: PathBuf,
    },
    /// Plan the quadrature of the circle with the given tan^2 z (e.g. `3`, `1/4`).
    Quadrature {
        /// A positive rational: an integer, `p/q`, or a decimal.
        #[arg(allow_hyphen_values = true)]
        tan2z: String,
        /// Also build and check the construction.
        #[arg(long)]
        build: bool,
    },
    /// Run the property suites.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

fn config(cli: &Cli) -> Result<Config, Failure> {
    let k = expr::number(&cli.k)?;
    let k = Curvature::new(k).map_err(|e| Failure::Usage(format!("--k: {e}")))?;
    let tol = match &cli.tol {
        Some(t) => {
            let t = expr::number(t)?;
            if !(t > 0.0) {
                return Err(Failure::Usage(format!("--tol must be positive, got {t}")));
            }
            Some(t)
        }
        None => None,
    };
    Ok(Config { k, tol, seed: cli.seed, out: cli.out.clone() })
}

fn dispatch(cli: &Cli, cfg: &Config) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Solve { right, givens } => commands::solve(*right, givens, cfg),
        Command::Eval { quantity, args } => commands::eval(quantity, args, cfg),
        Command::Construct { script } => commands::construct(script, cfg),
        Command::Quadrature { tan2z, build } => commands::quadrature(tan2z, *build, cfg),
        Command::Verify { suite } => {
            let (props, limits) = verify::run(*suite, cfg.seed);
            let record = verify::record(&props, limits, cfg.seed);
            let passed = props.iter().all(|p| p.pass());
            Ok(Outcome { record, passed })
        }
    }
}

/// Where the report goes: `--out` for commands that do not draw.
fn report_path(cli: &Cli) -> Option<&PathBuf> {
    match cli.command {
        Command::Construct { .. } | Command::Quadrature { .. } => None,
        _ => cli.out.as_ref(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let outcome = config(&cli).and_then(|cfg| dispatch(&cli, &cfg));
    match outcome {
        Ok(o) => {
            let text = o.record.render(cli.format);
            if let Some(path) = report_path(&cli) {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                let _ = std::io::stdout().write_all(text.as_bytes());
            }
            ExitCode::from(if o.passed { 0 } else { 2 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code() as u8)
        }
    }
}
