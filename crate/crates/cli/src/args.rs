use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use stabcode::degeneracy::DEFAULT_BUDGET;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "stabcode",
    version,
    about = "Stabilizer code analysis over GF(2)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print one JSON object instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Simulation threads. Defaults to $STABCODE_WORKERS, then the CPU count.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Add the elapsed wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Command {
    /// Check that the generators commute and are independent.
    Validate(CodeArgs),
    /// Syndrome of one Pauli error.
    Syndrome(SyndromeArgs),
    /// Decide whether the code is degenerate for errors of weight up to t.
    Classify(ClassifyArgs),
    /// Minimum distance and column-independence bounds.
    Distance(DistanceArgs),
    /// Check matrix in standard form.
    StandardForm(CodeArgs),
    /// Logical error rate under Pauli noise with a lookup decoder.
    Simulate(SimulateArgs),
    /// Check matrix blocks and the single-qubit syndrome matrices.
    Matrices(CodeArgs),
}

impl Command {
    pub fn code_path(&self) -> &PathBuf {
        match self {
            Command::Validate(a) | Command::StandardForm(a) | Command::Matrices(a) => &a.code,
            Command::Syndrome(a) => &a.code,
            Command::Classify(a) => &a.code,
            Command::Distance(a) => &a.code,
            Command::Simulate(a) => &a.code,
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeArgs {
    /// Code file (pauli_strings or binary_matrix format).
    #[arg(long)]
    pub code: PathBuf,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyndromeArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Pauli string such as XIIZIII.
    #[arg(long)]
    pub error: String,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Error weight bound. Defaults to floor((d-1)/2) from the file's distance.
    #[arg(long)]
    pub t: Option<usize>,
    /// Maximum errors enumerated and column subsets tested.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Enumerate every error and count all collisions.
    #[arg(long)]
    pub exhaustive: bool,
    /// Skip the column-independence criteria.
    #[arg(long)]
    pub no_criteria: bool,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceArgs {
    #[arg(long)]
    pub code: PathBuf,
    /// Largest weight searched. Defaults to n.
    #[arg(long)]
    pub limit: Option<usize>,
    /// Weight bound for the column bounds. Defaults as for classify; the
    /// bounds are skipped when neither is available.
    #[arg(long)]
    pub t: Option<usize>,
    /// Maximum errors enumerated and column subsets tested.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulateArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long, conflicts_with = "depolarizing")]
    pub px: Option<f64>,
    #[arg(long, conflicts_with = "depolarizing")]
    pub py: Option<f64>,
    #[arg(long, conflicts_with = "depolarizing")]
    pub pz: Option<f64>,
    /// Total error probability p, split evenly as p/3 per Pauli.
    #[arg(long)]
    pub depolarizing: Option<f64>,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also count trials whose correction differs from the error.
    #[arg(long)]
    pub strict: bool,
}
