//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Fractional oscillations: tables, decompositions, zeros, verification
/// and Monte-Carlo estimates of the Mittag-Leffler pair e_α, i_α.
#[derive(Debug, Clone, Parser)]
#[command(name = "fracosc", version, about)]
pub struct Cli {
    /// Worker threads for Monte-Carlo runs (results do not depend on it).
    #[arg(long, global = true, env = "FRACOSC_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// e_α(t) and i_α(t) on a uniform grid.
    Table(TableArgs),
    /// Branch-cut and residue parts of e_α and i_α (1 < α < 2, ω = 1).
    Decompose(DecomposeArgs),
    /// Real zeros with the finiteness certificate.
    Zeros(ZerosArgs),
    /// Residual and convergence checks of the fractional equations.
    Verify(VerifyArgs),
    /// Monte-Carlo ensemble averages over subordinated clocks.
    Mc(McArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    E,
    I,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format [default: csv, json for verify].
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long = "output", value_name = "PATH")]
    pub output_path: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Start of the time grid.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t_min: f64,
    /// End of the time grid.
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: Option<f64>,
    /// Number of grid points.
    #[arg(long, default_value_t = 200)]
    pub n_points: usize,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Fractional order, 1 ≤ α ≤ 2.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Circular frequency.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega: f64,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DecomposeArgs {
    /// Fractional order, 1 < α < 2.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Which function to split.
    #[arg(long, value_enum, default_value_t = KindArg::Both)]
    pub kind: KindArg,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ZerosArgs {
    /// Fractional order, 1 < α < 2.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Which function (e or i).
    #[arg(long, value_enum, default_value_t = KindArg::E)]
    pub kind: KindArg,
    /// Bisection tolerance.
    #[arg(long, default_value_t = 1e-10)]
    pub refine_tol: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Fractional order, 1 ≤ α ≤ 2.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Frequency used by the duality and Hamilton checks.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega: f64,
    /// Generalized mass for the Hamilton check.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub mass: f64,
    /// Initial displacement for the Hamilton check.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub q0: f64,
    /// Grid intervals of the coarse run; the refined run uses twice as many.
    #[arg(long, default_value_t = 1024)]
    pub n: usize,
    /// Time horizon.
    #[arg(long, default_value_t = 10.0)]
    pub horizon: f64,
    /// Allowed distance between measured and expected convergence order.
    #[arg(long, default_value_t = 0.3)]
    pub band: f64,
    /// Allowed deviation of the term-wise series check.
    #[arg(long, default_value_t = 1e-10)]
    pub series_tol: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct McArgs {
    /// Fractional order, 1 ≤ α < 2.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Circular frequency.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega: f64,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Ensemble size.
    #[arg(long, default_value_t = 100_000)]
    pub n_paths: u64,
    /// Random seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}
