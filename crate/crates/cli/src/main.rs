//! `msmb`: command-line access to Markov, Graver and distance-reducing move
//! sets of integer matrices.

mod commands;
mod input;
mod output;
mod selftest;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use msmb_core::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "msmb", version, about = "Markov bases, Graver bases and distance reduction for toric ideals")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Exit with status 1 when a check answers no.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Cap on points visited by any single enumeration (overrides MSMB_MAX_CELLS).
    #[arg(long, global = true)]
    pub max_cells: Option<u64>,
    /// Cap on the number of bases, hitting sets or transversals listed.
    #[arg(long, global = true)]
    pub max_solutions: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Nonnegative integer matrix, e.g. "2 3 4" or "1 1 1; 0 1 2", JSON, or @file.
    #[arg(long)]
    pub matrix: String,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[command(flatten)]
    pub matrix: MatrixArg,
    /// Moves, e.g. "5 -3 0; 2 1 -1", JSON, or @file. Defaults to every minimal Markov basis.
    #[arg(long)]
    pub basis: Option<String>,
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    /// The basis B.
    #[arg(long)]
    pub basis: String,
    /// Ordered move list S. Defaults to the Graver basis of --matrix.
    #[arg(long)]
    pub moves: Option<String>,
    /// Matrix whose Graver basis is used when --moves is absent.
    #[arg(long)]
    pub matrix: Option<String>,
    /// Bound on relation coefficients.
    #[arg(long, default_value_t = msmb_core::complex::DEFAULT_COEFF_BOUND)]
    pub coeff_bound: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Circuits of the matrix.
    Circuits(MatrixArg),
    /// Graver basis.
    Graver(MatrixArg),
    /// Indispensable moves.
    Indispensables(MatrixArg),
    /// All minimal Markov bases.
    MarkovMin(MatrixArg),
    /// The universal Markov basis.
    MarkovUniversal(MatrixArg),
    /// Whether a move set is a Markov basis.
    VerifyMarkov {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        basis: String,
        /// Also search all fibers reached by kernel elements up to this norm.
        #[arg(long)]
        kernel_ball: Option<i64>,
    },
    /// Whether a basis is distance reducing (exhaustive Graver test).
    CheckReducing(BasisArgs),
    /// Whether a basis is strongly distance reducing.
    CheckStrong(BasisArgs),
    /// Whether a basis reduces every circuit.
    CheckCircuits(BasisArgs),
    /// Closed-form check for 1×3 matrices.
    CheckDim3(BasisArgs),
    /// Closed-form check for 1×4 matrices.
    CheckDim4(BasisArgs),
    /// Conditions for bases of first-kind gluings.
    CheckFirstKind(BasisArgs),
    /// Gluing splits and gluing type.
    Gluing {
        #[command(flatten)]
        matrix: MatrixArg,
        /// List every gluing tree instead of the preferred one.
        #[arg(long)]
        all: bool,
    },
    /// Plays the sign game.
    SignGame {
        /// Sign pattern such as "+-.;.+-".
        #[arg(long, conflicts_with = "basis")]
        signs: Option<String>,
        /// Moves whose sign pattern is used.
        #[arg(long)]
        basis: Option<String>,
    },
    /// Distance-irreducible sets.
    Irreducibles {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Only test Graver elements.
        #[arg(long)]
        graver_only: bool,
    },
    /// All minimal distance-reducing Markov bases.
    UniversalReducing {
        #[command(flatten)]
        matrix: MatrixArg,
        /// Use the strong variant.
        #[arg(long)]
        strong: bool,
        /// Norm bound on candidate reducers.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Greedy distance-reducing path between two fiber points.
    Connect {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long)]
        basis: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Metric cone of a move list.
    MetricCone {
        /// Ordered move list. Defaults to the Graver basis of --matrix.
        #[arg(long)]
        moves: Option<String>,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Distance-reducing complex of a basis inside a move list.
    ReductionComplex {
        #[command(flatten)]
        args: ComplexArgs,
        /// Also list intersections of cones whose interiors meet.
        #[arg(long)]
        intersections: bool,
        /// Skip the closure step and use the move list as given.
        #[arg(long)]
        no_closure: bool,
    },
    /// Closure of a move list under reductions by a basis.
    Closure(ComplexArgs),
    /// Runs the built-in fixture suite.
    Selftest {
        /// Seed for the randomised checks.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random instances per randomised check.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut limits = Limits::from_env();
    if let Some(cells) = cli.max_cells {
        limits.max_cells = cells;
    }
    if let Some(solutions) = cli.max_solutions {
        limits.max_solutions = solutions;
    }
    Limits::install(limits);

    let always_strict = matches!(cli.command, Command::Selftest { .. });
    let report = match commands::run(&cli.command) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap_or_default()),
        Format::Text => print!("{}", report.text),
    }
    if (cli.strict || always_strict) && report.verdict == Some(false) {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
