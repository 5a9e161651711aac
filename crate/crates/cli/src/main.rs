use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bdh_cli::{commands, finish, Algo, CliError, Emit, Format, GenOptions, LatticeOptions, Output};
use clap::{Parser, Subcommand, ValueEnum};

/// Bipartite distance-hereditary graphs and their biclique lattices.
#[derive(Parser)]
#[command(name = "bdh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether an edge list is BDH and print a construction sequence.
    Recognize {
        /// Input file, or `-` for stdin.
        file: PathBuf,
    },
    /// Compute the Hasse diagram of the maximal bicliques.
    Lattice {
        /// Edge list or construction sequence, or `-` for stdin.
        file: PathBuf,
        /// Use the compact (arborescence) construction.
        #[arg(long)]
        compact: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Add the bottom (∅, Y) and top (X, ∅) when they are not bicliques.
        #[arg(long)]
        with_top_bottom: bool,
    },
    /// Generate a random BDH graph.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0.5)]
        twin_prob: f64,
        #[arg(long, env = "BDH_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = EmitArg::Sequence)]
        emit: EmitArg,
    },
    /// Brute-force lattice of a small graph.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Time lattice construction on random instances; prints CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        twin_prob: f64,
        #[arg(long, env = "BDH_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = AlgoArg::Explicit)]
        algo: AlgoArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Edges,
    Sequence,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Explicit,
    Compact,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Dot => Format::Dot,
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Recognize { file } => commands::recognize(&read(&file)?),
        Command::Lattice {
            file,
            compact,
            format,
            with_top_bottom,
        } => commands::lattice(
            &read(&file)?,
            LatticeOptions {
                compact,
                format: format.into(),
                with_top_bottom,
            },
        ),
        Command::Gen {
            vertices,
            twin_prob,
            seed,
            emit,
        } => commands::gen(GenOptions {
            vertices,
            twin_prob,
            seed,
            emit: match emit {
                EmitArg::Edges => Emit::Edges,
                EmitArg::Sequence => Emit::Sequence,
            },
        }),
        Command::Oracle { file, format } => commands::oracle(&read(&file)?, format.into()),
        Command::Bench {
            sizes,
            twin_prob,
            seed,
            algo,
        } => {
            let algo = match algo {
                AlgoArg::Explicit => Algo::Explicit,
                AlgoArg::Compact => Algo::Compact,
            };
            commands::bench(&sizes, twin_prob, seed, algo)
        }
    }
}

fn main() -> ExitCode {
    let out = finish(run(Cli::parse()));
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
