use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wicketlab::eqfree::NormMode;

#[derive(Debug, Parser)]
#[command(
    name = "wicketlab",
    version,
    about = "Wicket-free linear hypergraphs: builds, searches and exact checks"
)]
pub struct Cli {
    /// Output format; defaults to text for `cap` and `bounds`, JSON otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads for enumeration and detection.
    #[arg(long, global = true, env = "WICKETLAB_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cap sets in F_3^n.
    #[command(subcommand)]
    Cap(CapCommand),
    /// Build a hypergraph and report its wickets.
    #[command(subcommand)]
    Build(BuildCommand),
    /// Colour the F_3 construction and keep the largest wicket-free class.
    Color(ColorArgs),
    /// Exponent and bound formulas.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Largest solution-free sets.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Exhaustive check of all 5-edge systems in the 3x3x3 grid.
    Claim1(ClaimArgs),
}

#[derive(Debug, Subcommand)]
pub enum CapCommand {
    /// Check that a cap file has no three points on a line.
    Verify {
        file: PathBuf,
        /// Dimension, required for a file without points.
        #[arg(long)]
        dimension: Option<usize>,
    },
    /// Exact maximum cap for n <= 3.
    Max {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Product of two caps, or the k-th power of one with --power.
    Product {
        first: PathBuf,
        second: Option<PathBuf>,
        #[arg(long, conflicts_with = "second")]
        power: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The lifted set S x {1}.
    Lift {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BuildCommand {
    /// Lines in directions S x {1} across three parallel hyperplanes.
    F3 {
        #[arg(long)]
        cap: PathBuf,
        /// Seed of the colouring reported alongside the build.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edges (a, a+s, a+ks) over Z/(k^2-k+1).
    Modular {
        #[arg(long)]
        k: i64,
        /// Must equal k^2-k+1 when given.
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edges (a, a-s, a+ws) over a lattice region.
    Eisenstein {
        /// File of `a,b` points.
        #[arg(long)]
        set: PathBuf,
        /// Norm bound of the region where edges start.
        #[arg(long)]
        bound: i64,
        #[arg(long, default_value = "paper")]
        norm: NormMode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[arg(long)]
    pub cap: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Resample budget; defaults to 100 per wicket plus 100.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Where to write the selected class.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Exponent 1 + (3/4) log_3(base) from caps of size base^n.
    Exponent {
        #[arg(long)]
        base: f64,
    },
    /// Cap bound base 3^{(4/3)(1-c)} from ex(m) <= m^{2-c}.
    Corollary {
        #[arg(long)]
        c: f64,
    },
    /// 2 - exponent.
    Gl {
        #[arg(long)]
        exponent: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchMode {
    Exhaustive,
    Greedy,
    Local,
    /// Exhaustive when small enough, local otherwise.
    Auto,
}

#[derive(Debug, Args)]
pub struct HeuristicArgs {
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: SearchMode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Moves proposed by the local search.
    #[arg(long, default_value_t = 20_000)]
    pub budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// 3x + y = 2z + 2w over {1..n}.
    Eq1 {
        #[arg(long)]
        n: i64,
        #[command(flatten)]
        heuristic: HeuristicArgs,
    },
    /// kx - (k-1)y = z over Z/(k^2-k+1).
    Eq2 {
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        heuristic: HeuristicArgs,
    },
    /// Equilateral-triangle-free subsets of a lattice region.
    Triangle {
        #[arg(long)]
        bound: i64,
        #[arg(long, default_value = "paper")]
        norm: NormMode,
        #[command(flatten)]
        heuristic: HeuristicArgs,
    },
}

#[derive(Debug, Args)]
pub struct ClaimArgs {
    /// Also scan 4-edge systems for one with neither pattern.
    #[arg(long)]
    pub minimality: bool,
    /// Also report degree statistics.
    #[arg(long)]
    pub audit: bool,
    /// Write per-system classifications.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}
