use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use suture_kup::cli::{self, KuperbergArgs, Method, Outcome};

#[derive(Parser)]
#[command(name = "suture-kup", version, about = "Twisted Kuperberg invariants and twisted Alexander polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Sweep,
    Expand,
}

#[derive(Subcommand)]
enum Command {
    /// Check a diagram file for consistency.
    Validate { diagram: PathBuf },
    /// Print the generators and relators read off a diagram.
    Presentation { diagram: PathBuf },
    /// Free rank, torsion and generator images of the first homology.
    Homology { input: PathBuf },
    /// Alexander polynomial from the Fox Jacobian, normalized.
    Alexander { input: PathBuf },
    /// Twisted torsion, boundary factor and their quotient.
    TwistedAlexander { input: PathBuf, rep: PathBuf },
    /// Evaluate the Kuperberg invariant over an exterior algebra.
    Kuperberg {
        diagram: PathBuf,
        #[arg(long, default_value = "exterior:1")]
        hopf: String,
        /// Representation file; the trivial representation when omitted.
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long)]
        twisted: bool,
        /// Print the unit-normalized twisted value instead of the raw one.
        #[arg(long, requires = "twisted")]
        normalize: bool,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i32,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value = "sweep")]
        method: MethodArg,
    },
    /// Compare the Kuperberg invariant with the Fox determinant.
    Crosscheck {
        diagram: PathBuf,
        #[arg(long, default_value = "exterior:1")]
        hopf: String,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long)]
        twisted: bool,
    },
    /// Verify the Hopf superalgebra axioms.
    Axioms {
        #[arg(long, default_value = "exterior:1")]
        hopf: String,
    },
    /// Print a random valid diagram.
    RandomDiagram {
        /// Defaults to $SUTURE_KUP_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value_t = 6)]
        max_crossings: usize,
    },
}

fn run(cli: Cli) -> suture_kup::Result<Outcome> {
    match cli.command {
        Command::Validate { diagram } => cli::cmd_validate(&diagram),
        Command::Presentation { diagram } => cli::cmd_presentation(&diagram),
        Command::Homology { input } => cli::cmd_homology(&input),
        Command::Alexander { input } => cli::cmd_alexander(&input),
        Command::TwistedAlexander { input, rep } => cli::cmd_twisted_alexander(&input, &rep),
        Command::Kuperberg { diagram, hopf, rep, twisted, normalize, sign, threads, method } => {
            cli::cmd_kuperberg(&KuperbergArgs {
                diagram: &diagram,
                n: cli::parse_hopf(&hopf)?,
                rep: rep.as_deref(),
                twisted,
                normalize,
                sign,
                threads,
                method: match method {
                    MethodArg::Sweep => Method::Sweep,
                    MethodArg::Expand => Method::Expand,
                },
            })
        }
        Command::Crosscheck { diagram, hopf, rep, twisted } => {
            cli::cmd_crosscheck(&diagram, cli::parse_hopf(&hopf)?, rep.as_deref(), twisted)
        }
        Command::Axioms { hopf } => cli::cmd_axioms(cli::parse_hopf(&hopf)?),
        Command::RandomDiagram { seed, d, l, max_crossings } => cli::cmd_random_diagram(seed, d, l, max_crossings),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
