use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

const GRAPH_SPECS: &str = "Graph specs: K3 (clique), P4 (path on 4 vertices), C5 (cycle), star:s (K_{1,s}), \
biclique:a,b, turan:n,m, file:PATH (graph JSON {\"n\",\"edges\"} or a graph6 line).";

#[derive(Parser, Debug)]
#[command(name = "mcturan", version, about = "Multicolor Turán numbers: exact values, constructions, certificates and bound tables", after_help = GRAPH_SPECS)]
pub struct Cli {
    /// Worker threads for table rows (default: all cores).
    #[arg(long, global = true, env = "MCTURAN_WORKERS")]
    pub workers: Option<usize>,

    /// Log progress to standard error (repeat for more detail).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute ex_F(n, G) exactly, with a certificate.
    Exact(ExactArgs),
    /// Emit a verified construction.
    Construct(ConstructArgs),
    /// Check a certificate: edge-disjoint copies and no multicolor G.
    Verify(VerifyArgs),
    /// Tabulate bounds (and exact values) over a range of n.
    Table(TableArgs),
    /// Convert between hypergraph, copy-system, graph and graph6 files.
    Convert(ConvertArgs),
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArg {
    /// Node budget for each search.
    #[arg(long, env = "MCTURAN_BUDGET", default_value_t = mcturan::SearchBudget::DEFAULT_NODES)]
    pub budget: u64,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct ExactArgs {
    /// The pattern graph F.
    #[arg(long = "F", value_name = "SPEC")]
    pub f: String,
    /// The forbidden graph G.
    #[arg(long = "G", value_name = "SPEC")]
    pub g: String,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub budget: BudgetArg,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionName {
    /// Transversal decomposition of a prime blow-up of F (needs --F --G --n).
    Blowup,
    /// Packing of the Turán graph T(n, χ(G)-1) (needs --F --G --n).
    Turan,
    /// Coordinate-line construction against K_{1,s} (needs --F --s --n).
    Star,
    /// Copies sharing an independent set, against P_4 (needs --F --n).
    SharedIndep,
    /// Clique blocks of t-2 copies, against P_t (needs --F --t --n).
    CliqueGroup,
    /// Steiner triple system against K_t (needs --n; --t defaults to n).
    Sts,
    /// Ruzsa–Szemerédi triangle system (needs --k).
    Rs,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub name: ConstructionName,
    #[arg(long = "F", value_name = "SPEC")]
    pub f: Option<String>,
    #[arg(long = "G", value_name = "SPEC")]
    pub g: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub budget: BudgetArg,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Certificate: a copy-system JSON, a construction report or an exact result.
    pub certificate: PathBuf,
    /// Forbidden graph; defaults to the one recorded in the certificate.
    #[arg(long = "G", value_name = "SPEC")]
    pub g: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long = "F", value_name = "SPEC")]
    pub f: String,
    #[arg(long = "G", value_name = "SPEC")]
    pub g: String,
    /// A single n or an inclusive range such as 3..9 or 3-9.
    #[arg(long)]
    pub n: String,
    /// Skip the exact-value column.
    #[arg(long)]
    pub bounds_only: bool,
    #[command(flatten)]
    pub budget: BudgetArg,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    /// {"n", "r", "edges"} linear hypergraph JSON.
    Hypergraph,
    /// {"n", "pattern", "copies"} copy-system JSON.
    System,
    /// {"n", "edges"} graph JSON.
    Graph,
    /// A graph6 line.
    Graph6,
}

#[derive(Args, Debug)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    pub from: FileKind,
    #[arg(long, value_enum)]
    pub to: FileKind,
    /// Input file.
    pub input: PathBuf,
    #[command(flatten)]
    pub out: OutputArgs,
}
