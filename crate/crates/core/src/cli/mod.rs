//! Argument definitions. Exit codes: 0 clean, 1 structure found, 2 usage or
//! parse error.

mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use commands::run;

#[derive(Parser, Debug)]
#[command(name = "gallai-lab", version, about = "Gallai colorings, monochromatic cycles and small Ramsey searches")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a coloring file.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Look for a rainbow triangle and monochromatic cycles.
    Check(CheckArgs),
    /// Compute a Gallai partition.
    Partition(PartitionArgs),
    /// Run a constructive lemma on a coloring file.
    #[command(subcommand)]
    Lemmas(LemmaCommand),
    /// Exhaustive search for a Ramsey-type threshold.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Re-check a search report and its witness.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct Output {
    /// Write to this file instead of stdout.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Doubling construction on ell * 2^k vertices.
    ExtremalOdd {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        ell: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Two color-2 cliques of order n - 1 joined in color 1.
    RamseyLower {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Random rainbow-triangle-free coloring.
    RandomGallai {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=128))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=255))]
        k: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    pub file: PathBuf,
    /// Monochromatic cycle order to look for in every color.
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    pub cycle: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct PartitionArgs {
    pub file: PathBuf,
    /// Keep the finest partition found instead of coarsening it.
    #[arg(long)]
    pub finest: bool,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Subcommand, Debug)]
pub enum LemmaCommand {
    /// Hamilton cycle in one color class under the minimum-degree condition.
    Dirac {
        file: PathBuf,
        #[arg(long)]
        color: u8,
    },
    /// Path with `edges` edges in a color class with enough edges.
    EgPath {
        file: PathBuf,
        #[arg(long)]
        color: u8,
        #[arg(long)]
        edges: usize,
    },
    /// Red path on `a` vertices or blue path on `b` vertices.
    ColoredSplit {
        file: PathBuf,
        #[arg(long)]
        red: u8,
        #[arg(long)]
        blue: u8,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Recolor the small sets B_i into palette 1..=k.
    Recolor {
        file: PathBuf,
        /// Comma-separated vertices of A.
        #[arg(long = "a-set")]
        a_set: String,
        /// Sets B_1..B_{k-1}, separated by ';', vertices by ','.
        #[arg(long = "b-sets")]
        b_sets: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
pub struct SearchOpts {
    /// Largest order searched exhaustively.
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    /// Node budget; an exhausted budget gives a partial result.
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub threads: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Raise exhaustive limits, e.g. "2=10,3=8".
    #[arg(long)]
    pub limits: Option<String>,
    /// Report 0 ms so repeated runs are byte-identical.
    #[arg(long = "no-timing")]
    pub no_timing: bool,
    /// Print the report JSON.
    #[arg(long)]
    pub json: bool,
    /// Report path; the witness goes next to it as `<stem>.witness.txt`.
    #[command(flatten)]
    pub out: Output,
}

#[derive(Subcommand, Debug)]
pub enum SearchCommand {
    /// R(C_m, C_n).
    Ramsey {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        opts: SearchOpts,
    },
    /// gr_k(K_3 : C_m).
    GallaiRamsey {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        opts: SearchOpts,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub report: PathBuf,
}
