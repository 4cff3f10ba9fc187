use clap::{Parser, Subcommand, ValueEnum};
use pommaret::cli::{run, Command, Flags, TransformMode};
use std::path::PathBuf;
use std::process::ExitCode;

/// Pommaret bases of homogeneous polynomial ideals: completion,
/// quasi-stability, invariants, linear quotients and gin sampling.
///
/// Convention: variables are listed in ring order with the FIRST variable
/// lowest; the default term order equals standard degrevlex on the
/// reversed variable list. To compare with degrevlex systems, declare your
/// variables in reverse order.
#[derive(Parser)]
#[command(name = "pommaret", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Ideal file: `ring: x, y, z`, optional `char: p`, then `ideal:`
    /// followed by one homogeneous polynomial per line.
    file: PathBuf,
    /// Override the coefficient characteristic (0 or a prime below 2^63).
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Coordinate handling: repair δ-singular coordinates automatically,
    /// or fail with exit code 3.
    #[arg(long, value_enum, default_value_t = TransformArg::Auto)]
    transform: TransformArg,
    /// Seed for every randomized step (repair fallback, gin trials).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of gin-sample trials.
    #[arg(long, default_value_t = 16)]
    trials: u32,
    /// Degree bound for series output or completion caps.
    #[arg(long = "max-degree")]
    max_degree: Option<u32>,
    /// Emit the full JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformArg {
    Auto,
    Off,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Compute a Pommaret basis (repairing coordinates unless --transform off).
    Basis(CommonArgs),
    /// Full invariant report: reg, pd, depth, dim, satiety, q-vector,
    /// resolution ranks, extremal Betti numbers.
    Invariants(CommonArgs),
    /// Quasi-stability of a monomial ideal, with the per-method breakdown.
    Quasistable(CommonArgs),
    /// Stability of a monomial ideal.
    Stable(CommonArgs),
    /// Componentwise linearity with the per-degree table.
    Complin(CommonArgs),
    /// Inverse P-ordering, P-graph and the linear-quotients colon table.
    Quotients(CommonArgs),
    /// Hilbert series coefficients up to --max-degree.
    Hilbert(CommonArgs),
    /// Saturation read off the basis.
    Saturate(CommonArgs),
    /// EXPERIMENTAL: sample the generic initial ideal by a seeded vote.
    GinSample(CommonArgs),
}

impl CliCommand {
    fn split(self) -> (Command, CommonArgs) {
        match self {
            CliCommand::Basis(a) => (Command::Basis, a),
            CliCommand::Invariants(a) => (Command::Invariants, a),
            CliCommand::Quasistable(a) => (Command::QuasiStable, a),
            CliCommand::Stable(a) => (Command::Stable, a),
            CliCommand::Complin(a) => (Command::Complin, a),
            CliCommand::Quotients(a) => (Command::Quotients, a),
            CliCommand::Hilbert(a) => (Command::Hilbert, a),
            CliCommand::Saturate(a) => (Command::Saturate, a),
            CliCommand::GinSample(a) => (Command::GinSample, a),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = cli.command.split();
    let text = match std::fs::read_to_string(&args.file) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.file.display());
            return ExitCode::from(2);
        }
    };
    let flags = Flags {
        characteristic: args.characteristic,
        transform: match args.transform {
            TransformArg::Auto => TransformMode::Auto,
            TransformArg::Off => TransformMode::Off,
        },
        seed: args.seed,
        trials: args.trials,
        max_degree: args.max_degree,
        json: args.json,
    };
    match run(command, &text, &flags) {
        Ok(report) => {
            if flags.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
