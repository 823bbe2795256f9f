use std::path::PathBuf;
use std::process::ExitCode;

use cellfuse::commands::{analyze, construct, AnalyzeOptions, DEFAULT_SEED};
use cellfuse::verify::{verify, VerifyOptions};
use cellfuse_core::DEFAULT_ENUMERATION_CAP;
use clap::{Parser, Subcommand};

/// Symbolic BZ/p-cellularization of classifying spaces of finite permutation groups.
#[derive(Parser)]
#[command(name = "cellfuse", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a group at a prime and print the report JSON.
    Analyze {
        /// Group JSON file, or a constructor such as `psl2 19`.
        #[arg(required = true, num_args = 1..)]
        target: Vec<String>,
        #[arg(long)]
        prime: u64,
        /// Enumeration cap for element tables.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the strong fusion check on the quotient.
        #[arg(long)]
        skip_strong_fusion: bool,
        /// Machine output only.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Write the group JSON for a constructor.
    Construct {
        #[arg(required = true, num_args = 1..)]
        request: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every `<group>.p<prime>.report.json` fixture in a directory.
    Verify {
        dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long)]
        skip_strong_fusion: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    let code = match cli.command {
        Command::Analyze {
            target,
            prime,
            cap,
            out: path,
            skip_strong_fusion,
            json,
            seed,
        } => {
            let opts = AnalyzeOptions {
                prime,
                cap,
                out: path,
                skip_strong_fusion,
                json,
                seed,
            };
            analyze(&target, &opts, &mut out, &mut err)
        }
        Command::Construct { request, out: path } => construct(&request, &path, &mut out, &mut err),
        Command::Verify {
            dir,
            cap,
            skip_strong_fusion,
            seed,
        } => verify(
            &dir,
            &VerifyOptions {
                cap,
                skip_strong_fusion,
                seed,
            },
            &mut out,
            &mut err,
        ),
    };
    ExitCode::from(code)
}
