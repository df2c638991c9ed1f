use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "liftcode", version, about = "Affine and projective lifted Reed-Solomon codes")]
pub struct Cli {
    /// Output format; csv applies to `table` only.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension and rate table of Lift_q(m, k-1), PLift_q(m, k), PRM_q(m, k).
    Table(TableArgs),
    /// Encode a message (or a seeded random one) into a word file.
    Encode(EncodeArgs),
    /// Add uniform errors (and optional erasures) to a word file.
    Corrupt(CorruptArgs),
    /// Run the local corrector for one coordinate of a word file.
    LocalCorrect(LocalCorrectArgs),
    /// Monte-Carlo estimate of the local corrector's success rate.
    Experiment(ExperimentArgs),
    /// Structural checks on PLift_q(m, k).
    Analyze(AnalyzeArgs),
    /// Quick pass over every invariant suite.
    Selftest,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Field orders; several give several tables.
    #[arg(long, value_delimiter = ',', required = true)]
    pub q: Vec<u32>,
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = TableModeArg::Both)]
    pub mode: TableModeArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableModeArg {
    Lift,
    Rm,
    Both,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    /// rs, prs, rm, prm, lift or plift.
    #[arg(long, default_value = "plift")]
    pub kind: String,
    #[command(flatten)]
    pub code: CodeArgs,
    /// Message file, one element per line.
    #[arg(long, conflicts_with = "seed")]
    pub msg: Option<PathBuf>,
    /// Draw a uniform message from this seed.
    #[arg(long, required_unless_present = "msg")]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CorruptArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Fraction of coordinates given a uniform wrong symbol.
    #[arg(long)]
    pub delta: f64,
    /// Fraction of coordinates erased, chosen among the untouched ones.
    #[arg(long, default_value_t = 0.0)]
    pub erase: f64,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct LocalCorrectArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Target point, e.g. "(1:0:2)"; any representative is accepted.
    #[arg(long, required_unless_present = "index")]
    pub point: Option<String>,
    /// Target support position instead of a point.
    #[arg(long, conflicts_with = "point")]
    pub index: Option<usize>,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub unit_weights: bool,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub delta: f64,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub unit_weights: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "infoset,qc,distance,dual,shorten-puncture")]
    pub checks: Vec<Check>,
    /// Random (omega, phi) draws for the information-set check.
    #[arg(long, default_value_t = 3)]
    pub draws: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Work budget for the exact distance; 0 skips it.
    #[arg(long, default_value_t = 1 << 24)]
    pub exact_limit: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Infoset,
    Qc,
    Distance,
    Dual,
    ShortenPuncture,
}
