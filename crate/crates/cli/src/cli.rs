//! Argument surface. Exit codes are a stable contract: 0 all requested
//! checks pass, 1 a mathematical claim was falsified, 2 usage error.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bentsrg",
    version,
    about = "Strongly regular graphs from p-ary bent functions, verified exactly",
    after_help = "Set BENTSRG_FIELD_CONSTANTS=<file> to override the pinned field constants."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Walsh-analyze a function: bentness, regularity class, epsilon, Condition A
    Analyze(AnalyzeArgs),
    /// Build difference sets, predict parameters, verify by exhaustive counting
    Srg(SrgArgs),
    /// Verify the 3-class association scheme and its fusions
    Scheme(SchemeArgs),
    /// GF(p)-rank of a graph adjacency matrix
    Rank(RankArgs),
    /// Recompute the parameter and rank tables and diff them against the expected values
    ReproduceTables(TablesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
pub struct FieldArgs {
    /// Field characteristic (an odd prime)
    #[arg(long)]
    pub p: u64,
    /// Extension degree n
    #[arg(long)]
    pub n: u8,
    /// Modulus coefficients, lowest degree first, comma separated
    /// (default: the pinned constants)
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u8>>,
}

#[derive(Args)]
pub struct FuncArgs {
    /// Function descriptor: hk | sporadic3_6 | quadratic:a=<elem> |
    /// tracepoly:c1,d1;c2,d2;... (elements as base-p digit strings)
    #[arg(long = "fn")]
    pub function: String,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub function: FuncArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args)]
pub struct SrgArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub function: FuncArgs,
    /// Connection-set kinds (D, D_S, D_Sprime, D_N); default: all four
    #[arg(long)]
    pub kind: Vec<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Also verify strong regularity by common-neighbour counting
    #[arg(long)]
    pub verify_srg: bool,
    /// Also check the defining group-ring equation by exact convolution
    #[arg(long)]
    pub exact_groupring: bool,
    /// Group-order cap for --exact-groupring convolutions
    #[arg(long, default_value_t = bentsrg_core::groupring::CONVOLVE_CAP)]
    pub convolution_cap: u64,
    /// Graph export formats (edges, dimacs, graph6); may repeat
    #[arg(long)]
    pub export: Vec<String>,
    /// Output directory for exports
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Permit expensive work on fields beyond 3000 elements
    #[arg(long)]
    pub allow_slow: bool,
}

#[derive(Args)]
pub struct SchemeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[command(flatten)]
    pub function: FuncArgs,
    /// Re-verify with the quadratic full-pair sweep (small fields only)
    #[arg(long)]
    pub audit: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args)]
pub struct RankArgs {
    /// Rank an exported edge list instead of building a graph
    #[arg(long, conflicts_with_all = ["field_p", "field_n", "function"])]
    pub edges: Option<PathBuf>,
    /// Prime for the rank computation (required with --edges)
    #[arg(long)]
    pub mod_p: Option<u64>,
    /// Vertex count override for --edges (default: largest id + 1)
    #[arg(long)]
    pub vertices: Option<u32>,

    /// Field characteristic (pipeline mode)
    #[arg(long = "p")]
    pub field_p: Option<u64>,
    /// Extension degree (pipeline mode)
    #[arg(long = "n")]
    pub field_n: Option<u8>,
    /// Modulus coefficients, lowest degree first
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u8>>,
    /// Function descriptor (pipeline mode)
    #[arg(long = "fn")]
    pub function: Option<String>,
    /// Connection-set kind (default D_S)
    #[arg(long)]
    pub kind: Option<String>,

    /// Permit the multi-minute eliminations past 3000 vertices
    #[arg(long)]
    pub allow_slow: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args)]
pub struct TablesArgs {
    /// Include the 6561-vertex row (minutes of elimination time)
    #[arg(long)]
    pub allow_slow: bool,
    /// Directory for graph6 exports and tables.csv
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}
