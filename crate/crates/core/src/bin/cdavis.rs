use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coxeter_davis::cli::{self, CertifyOptions, DavisPart};

/// Certification tools for right-angled Coxeter groups and Davis complexes.
/// Prints a JSON run report on stdout and a summary on stderr.
#[derive(Parser)]
#[command(name = "cdavis", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integral homology of a complex file.
    Homology {
        path: PathBuf,
        #[arg(long)]
        unreduced: bool,
    },
    /// Flag-no-squares hyperbolicity test of a nerve or Coxeter matrix file.
    Hyperbolic { path: PathBuf },
    /// Nerve of a Coxeter matrix file.
    Nerve { path: PathBuf },
    /// Right-angled Coxeter matrix of a flag complex file.
    Racg { path: PathBuf },
    /// Davis complex ball of a nerve or Coxeter matrix file.
    Davis {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        radius: usize,
        #[arg(long, conflicts_with = "sharp")]
        singular: bool,
        #[arg(long)]
        sharp: bool,
    },
    /// Homology growth of the truncated Farrell model.
    Farrell {
        #[arg(long, default_value_t = 5)]
        slopes: usize,
    },
    /// Builds the acyclic spine and its finite-quotient certificate.
    Spine {
        /// Write the spine complex as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full certification pipeline for the dimension predictions.
    CertifyMainTheorem {
        #[arg(long, default_value_t = 1)]
        radius: usize,
        #[arg(long)]
        skip_nsq_subdivision: bool,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = match args.command {
        Command::Homology { path, unreduced } => cli::cmd_homology(&path, unreduced),
        Command::Hyperbolic { path } => cli::cmd_hyperbolic(&path),
        Command::Nerve { path } => cli::cmd_nerve(&path),
        Command::Racg { path } => cli::cmd_racg(&path),
        Command::Davis {
            path,
            radius,
            singular,
            sharp,
        } => {
            let part = match (singular, sharp) {
                (true, _) => DavisPart::Singular,
                (_, true) => DavisPart::Sharp,
                _ => DavisPart::Ball,
            };
            cli::cmd_davis(&path, radius, part)
        }
        Command::Farrell { slopes } => cli::cmd_farrell(slopes),
        Command::Spine { out } => cli::cmd_spine(out.as_deref()),
        Command::CertifyMainTheorem {
            radius,
            skip_nsq_subdivision,
        } => cli::cmd_certify_main_theorem(CertifyOptions {
            radius,
            skip_nsq_subdivision,
        }),
    };
    match result {
        Ok(report) => {
            eprint!("{}", report.summary());
            println!("{}", serde_json::to_string_pretty(&report).expect("report serialises"));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
