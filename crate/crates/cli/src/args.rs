use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "hyperlift",
    version,
    about = "Automorphism groups of hyperelliptic curves in odd characteristic and their liftability"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,

    /// Emit a human-readable report instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Largest extension degree searched when splitting the branch locus.
    #[arg(
        long = "max-ext",
        global = true,
        default_value_t = 24,
        value_name = "N"
    )]
    pub max_ext: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced and full automorphism groups of y^2 = f(x).
    Autgroup(CurveArgs),
    /// Whether a hyperelliptic automorphism group lifts to characteristic 0.
    Liftable(LiftArgs),
    /// Oort status of a group in characteristic p.
    Oort(OortArgs),
    /// Reduction of a characteristic 0 polynomial modulo p.
    Reduce(ReduceArgs),
    /// Invariant families and cyclic curve equations.
    Families(FamilyArgs),
    /// Check the published reduction statements modulo 3 or 5.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree of the base field.
    #[arg(long)]
    pub m: Option<usize>,
    /// Coefficients of f, lowest degree first, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
    /// JSON payload {"p": .., "m": .., "f": [..]}, instead of --p/--m/--f.
    #[arg(long, conflicts_with_all = ["p", "m", "f"])]
    pub curve: Option<String>,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    /// Group type such as D(14), Z2xA5, SL2(3) or V(6).
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub p: u64,
    /// Genus of the curve, enables the p <= 2g+1 check.
    #[arg(long)]
    pub g: Option<usize>,
    /// Group order, for the p > 2g+1 rule when no --group is given.
    #[arg(long, requires = "g", conflicts_with = "group")]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OortArgs {
    /// A table group type, Q8, or an elementary abelian (Z/p)^n.
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long)]
    pub p: u64,
    /// Integer coefficients of F, lowest degree first.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "case")]
    pub f: Option<String>,
    /// Family case A5, A4 or S4, reduced together with --word.
    #[arg(long, requires = "word")]
    pub case: Option<String>,
    /// Any product of R, S, T, L, e.g. R or TRL.
    #[arg(long)]
    pub word: Option<String>,
    #[arg(long, default_value = "stated")]
    pub variant: String,
    /// Comma separated lambda values, e.g. 2 or 2,5 or 1+sqrt(-3).
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// A5, A4, S4; Z2p, Z2p-2g+2, Z2p-2g+1, Z2p-2g, D2p, cyclic-N; or u
    /// for the genus 2 u-invariants.
    #[arg(long)]
    pub case: String,
    #[arg(long, default_value = "stated")]
    pub variant: String,
    /// Lambda values, equation parameters, or a1,a2 for the u-invariants.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long)]
    pub word: Option<String>,
    /// With an invariant family: list the words with good reduction at p.
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub g: Option<u64>,
    /// The integer t of the cyclic-N genus constraint.
    #[arg(long)]
    pub t: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub p: u64,
}
