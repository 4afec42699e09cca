use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Build, count and analyse finite n-ary selection games.
#[derive(Parser, Debug)]
#[command(name = "magma-forge", version, about)]
pub struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for randomized search paths.
    #[arg(long, global = true, default_value_t = 0)]
    pub rng_seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the regular magma G_n(λ) and print its table.
    Construct(ConstructArgs),
    /// Exact counts.
    Count(CountArgs),
    /// Properties, automorphisms, congruences, identities and embeddings.
    Analyze {
        #[command(subcommand)]
        what: Analysis,
    },
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// `cyclic:m`, `sum:m1,m2,..` or `semidirect:m,k,t`.
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub arity: usize,
    /// `canonical`, `file:PATH`, `primitive-root`, `simple:p,k` or `correlated[:SEEDFILE]`.
    #[arg(long, default_value = "canonical")]
    pub lambda: String,
    /// Print the pointing instead of the operation table.
    #[arg(long)]
    pub emit_pointing: bool,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    Prps,
    Regular,
    Rps,
    Partitions,
    IsoClasses,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    pub kind: CountKind,
    /// Order (or number of blocks for `partitions`).
    #[arg(long)]
    pub m: Option<usize>,
    /// Arity.
    #[arg(long)]
    pub n: Option<usize>,
    /// Prime order for `iso-classes`.
    #[arg(long)]
    pub p: Option<usize>,
    /// Size of the set being split for `partitions`.
    #[arg(long)]
    pub s: Option<usize>,
    /// Print the factor breakdown.
    #[arg(long)]
    pub proof: bool,
    /// Also run the brute-force enumeration and compare.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Input file; standard input when omitted or `-`.
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Analysis {
    /// The five game properties of a magma file.
    Verify(Input),
    /// Automorphism group of a magma file.
    Aut {
        #[command(flatten)]
        input: Input,
        /// List every automorphism in cycle notation.
        #[arg(long)]
        list: bool,
    },
    /// Congruence lattice of a magma file.
    Con(Input),
    /// Whether a magma file has only the trivial congruences.
    Simple(Input),
    /// Check an identity `lhs ≈ rhs` over all assignments.
    Identity {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Number of variables to quantify over (default: as many as the terms use).
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Embed a hypertournament file into a regular balanced one.
    Embed {
        #[command(flatten)]
        input: Input,
        /// Cyclic moduli, one per vertex, e.g. `3,5,7`.
        #[arg(long, value_delimiter = ',')]
        moduli: Option<Vec<usize>>,
    },
    /// Double a tournament file into a balanced tournament.
    Double(Input),
}
