//! `divdiff`: exact divided-difference experiments from the command line.
//!
//! Reports go to stdout (or `--out`); diagnostics go to stderr. Exit status
//! is 0 on success, 1 on usage errors and 2 on domain errors such as
//! duplicate knots, poles, or an empty survivor set.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use divdiff_core::rational::parse_rational;
use divdiff_core::Rational;

#[derive(Debug, Parser)]
#[command(name = "divdiff", version, about = "Exact divided differences on equispaced knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Evaluate the function as zero outside [0, 1].
    #[arg(long = "extend-zero", global = true)]
    pub extend_zero: bool,

    /// Add `<field>_approx` decimal columns (15 significant digits).
    #[arg(long, global = true)]
    pub decimals: bool,

    /// Largest accepted N for `nullspace` and `minlip`.
    #[arg(long = "n-cap", global = true, default_value_t = 12)]
    pub n_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A comma-separated list given as one flag value.
#[derive(Debug, Clone)]
pub struct RationalList(pub Vec<Rational>);

fn rational_list_arg(s: &str) -> Result<RationalList, String> {
    divdiff_core::rational::parse_rational_list(s)
        .map(RationalList)
        .map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Divided difference at explicit knots, direct and tabulated.
    Eval {
        /// Comma-separated knots.
        #[arg(long, value_parser = rational_list_arg, allow_hyphen_values = true)]
        knots: RationalList,
        /// Comma-separated values; alternatively give --func.
        #[arg(long, value_parser = rational_list_arg, allow_hyphen_values = true, conflicts_with = "func")]
        values: Option<RationalList>,
        #[arg(long)]
        func: Option<String>,
    },
    /// Order-n divided difference at 0, 1/n, ..., 1.
    Uniform {
        #[arg(long)]
        func: String,
        #[arg(long = "n")]
        n: usize,
    },
    /// Forward finite difference Δ_h^n f(x).
    Fd {
        #[arg(long)]
        func: String,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        h: Rational,
        #[arg(long = "n")]
        n: usize,
    },
    /// Divided difference versus scaled finite difference on 0, 1/n, ..., 1.
    Identity {
        #[arg(long)]
        func: String,
        #[arg(long = "n")]
        n: usize,
    },
    /// Equispaced interpolant, its leading coefficient and degree reduction.
    Interp {
        #[arg(long)]
        func: String,
        #[arg(long = "n")]
        n: usize,
    },
    /// Equispaced differences of a polynomial from its degree down to 0.
    Cascade {
        #[arg(long)]
        func: String,
    },
    /// Kernel of the constraint system up to order N.
    Nullspace {
        #[arg(long = "N")]
        big_n: usize,
        /// Omit the basis when the kernel dimension exceeds this.
        #[arg(long = "basis-limit", default_value_t = 256)]
        basis_limit: usize,
    },
    /// Smallest Lipschitz constant of a unit-norm survivor.
    Minlip {
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Averaged differences of the zero extension for N = Nmin, 2 Nmin, ... <= Nmax.
    Probe {
        #[arg(long)]
        func: String,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        h: Rational,
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "Nmax")]
        n_max: usize,
        #[arg(long = "Nmin", default_value_t = 1)]
        n_min: usize,
    },
    /// Reindexing identity for the shift y = x + n! h.
    Telescope {
        #[arg(long)]
        func: String,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        h: Rational,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Every finite-N term of the averaging argument for f - Q_n.
    Walkthrough {
        #[arg(long)]
        func: String,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        h: Rational,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        x: Rational,
    },
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
    let outcome = commands::run(&cli.command, &cli.global);
    let (report, status) = match outcome {
        Ok(commands::Outcome { report, domain_failure }) => {
            if let Some(msg) = &domain_failure {
                eprintln!("divdiff: {msg}");
            }
            (report, if domain_failure.is_some() { 2 } else { 0 })
        }
        Err(commands::CommandError::Usage(msg)) => {
            eprintln!("divdiff: {msg}");
            return ExitCode::from(1);
        }
        Err(commands::CommandError::Domain(msg)) => {
            eprintln!("divdiff: {msg}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.global.format {
        Format::Json => report.render_json(),
        Format::Csv => match report.render_csv() {
            Ok(s) => s,
            Err(e) => {
                eprintln!("divdiff: {e}");
                return ExitCode::from(1);
            }
        },
    };
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, rendered.as_bytes()),
        None => std::io::stdout().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("divdiff: cannot write report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(status)
}
