use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grass_orbits::commands::{self, CommandError, GraphFormat};
use grass_orbits::verify::VerifyConfig;
use grass_orbits::young::HookDirection;

#[derive(Parser)]
#[command(version, about = "B-orbits on a product of two Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct Sizes {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Every orbit datum, one JSON object per line.
    Enumerate {
        #[command(flatten)]
        sizes: Sizes,
        /// Only the stratum dim(U ∩ W) = d.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Classify the pair of subspaces in a matrix text file (`-` for stdin).
    Canonical { file: String },
    /// Dimension of a datum given as JSON, by three methods.
    Dim {
        file: String,
        /// Draw the marked pair and common diagram instead of printing JSON.
        #[arg(long)]
        render: bool,
    },
    /// The weak-order graph.
    Graph {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Minimal orbits per stratum.
    Minimal {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long)]
        d: Option<usize>,
    },
    /// A desingularization word for a datum given as JSON.
    Desing { file: String },
    /// Run the cross-check suites.
    Verify {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long, default_value_t = 1009)]
        prime: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Largest n for the exact dimension, round-trip and edge checks.
        #[arg(long, default_value_t = 6)]
        max_dim_check_n: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fault {
    FlipHooks,
}

fn read_input(path: &str) -> Result<String, CommandError> {
    let mut s = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| CommandError::Usage(format!("{path}: {e}")))?;
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<bool, CommandError> {
    let stdout = io::stdout();
    let out = &mut stdout.lock();
    match cli.command {
        Command::Enumerate { sizes: s, d } => commands::enumerate(out, s.n, s.k, s.l, d),
        Command::Canonical { file } => commands::canonical(out, &read_input(&file)?),
        Command::Dim { file, render } => commands::dim(out, &read_input(&file)?, render),
        Command::Graph { sizes: s, format } => {
            let format = match format {
                Format::Dot => GraphFormat::Dot,
                Format::Json => GraphFormat::Json,
            };
            commands::graph(out, s.n, s.k, s.l, format)
        }
        Command::Minimal { sizes: s, d } => commands::minimal(out, s.n, s.k, s.l, d),
        Command::Desing { file } => commands::desing(out, &read_input(&file)?),
        Command::Verify { sizes: s, prime, trials, max_dim_check_n, seed, inject_fault } => {
            let cfg = VerifyConfig {
                prime,
                trials,
                max_dim_check_n,
                seed,
                hook: match inject_fault {
                    Some(Fault::FlipHooks) => HookDirection::Outward,
                    None => HookDirection::Inward,
                },
                ..VerifyConfig::new(s.n, s.k, s.l)
            };
            commands::verify(out, &mut io::stderr(), &cfg)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
