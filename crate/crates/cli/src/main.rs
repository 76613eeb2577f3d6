//! Command-line front end for V-stability computations.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "vstab", version, about = "V-stability conditions on dual graphs of nodal curves")]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest number of components for corpus-driven commands.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=8))]
    max_vertices: u64,
    /// Largest number of edges for corpus-driven commands.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=12))]
    max_edges: u64,
    /// Half-width of the degree box for sheaf enumeration (default: tight bounds).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    window: Option<u64>,
    /// Largest accepted denominator of a classical witness.
    #[arg(long, global = true, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    denominator_bound: u64,
    /// Seed recorded in reports; every command is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PosetKind {
    Deg,
    Vstab,
}

/// Graph source: a JSON file, or `builtin:NAME` (point, banana, triangle, k4).
#[derive(Args, Debug, Clone)]
struct GraphArg {
    #[arg(long)]
    graph: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a stability; exit 1 with the violations if any fail.
    Validate {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        stability: PathBuf,
    },
    /// Translation orbit representatives (normal forms), shifted to characteristic `--chi`.
    EnumOrbits {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        chi: i64,
    },
    /// Degeneracy subsets of the graph.
    EnumDeg {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        mod_symmetry: bool,
    },
    /// Hasse diagram of the degeneracy poset, or of stabilities above `--stability`
    /// (without it: the χ = 0 stabilities in the spanning-tree window).
    Poset {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = PosetKind::Deg)]
        kind: PosetKind,
        #[arg(long)]
        mod_symmetry: bool,
        #[arg(long)]
        stability: Option<PathBuf>,
    },
    /// Decide whether a stability comes from a numerical polarization; exit 1 if not.
    Classical {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        stability: PathBuf,
    },
    /// Classify a sheaf (`--sheaf`), or list the semistable sheaf classes.
    Semistable {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        stability: PathBuf,
        #[arg(long)]
        sheaf: Option<PathBuf>,
        /// Enumerate over every support instead of the whole curve.
        #[arg(long)]
        all_supports: bool,
    },
    /// Semistable limit of a line bundle, with the twisting trace.
    Limit {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        stability: PathBuf,
        /// Comma-separated degrees, one per component.
        #[arg(long, allow_hyphen_values = true)]
        multidegree: String,
    },
    /// Graded sheaf of an ordered partition, or the polystable limit with `--stability`.
    Specialize {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        sheaf: PathBuf,
        /// Parts separated by `;`, vertices by `,` (e.g. `1;0,2`).
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        stability: Option<PathBuf>,
    },
    /// Spanning-tree normal form of a stability and the translation reaching it.
    NormalForm {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        stability: PathBuf,
    },
    /// Rank and surjectivity report for one graph, or for the whole corpus.
    QdegScan {
        #[arg(long)]
        graph: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.config) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.verdict { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
