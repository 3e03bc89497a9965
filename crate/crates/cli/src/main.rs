//! `braceops`: homology of the configuration-space and operad complexes,
//! seeded verification suites, and Hochschild cochain operations on files.
//!
//! Every run prints one JSON document on stdout and a short summary on
//! stderr. Exit status is 0 on pass, 1 on a failed check, 2 on bad input.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Serialize, Debug)]
#[command(name = "braceops", version, about = "Exact chain-level brace, surjection-operad and pre-Lie computations")]
pub struct Cli {
    /// Lift the default limits on n and p.
    #[arg(long, global = true)]
    pub unsafe_bounds: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Betti numbers of a cell or operad complex over 𝔽_p.
    Homology(HomologyArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Apply an operation to Hochschild cochain files.
    Hochschild(HochschildArgs),
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexKind {
    /// Composition cells ε(k₁,…,k_ℓ) of the plane configuration space.
    B2,
    /// Composition cells e(k₁,…,k_ℓ).
    B2E,
    /// Permutation cells of the ordered configuration space.
    F2,
    /// Complexity-2 surjections.
    S2,
    /// Symmetric-group coinvariants of the complexity-2 surjections.
    S2Coinv,
}

#[derive(Args, Serialize, Debug)]
pub struct HomologyArgs {
    #[arg(long, value_enum)]
    pub complex: ComplexKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: u32,
    /// Sign-twisted coefficients (b2, b2-e, s2-coinv).
    #[arg(long)]
    pub twisted: bool,
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// The cell inclusion commutes with differentials (exhaustive, over ℤ).
    ChainMap,
    /// Cell and surjection complexes have equal homology and the inclusion is onto it.
    QuasiIso,
    /// Bockstein of the top twisted cell against its closed forms.
    Bockstein,
    /// ξ₁ and ζ₁ chains give nonbounding cycles in the coinvariants.
    OperadCycles,
    /// Brace, cup, differential and bracket identities on random cochains.
    Identities,
    /// Restricted Lie identities for the p-th brace power.
    Jacobson,
    /// Nested powers at p=2 for (k,l) with k+l ≤ 2.
    PowerLaws,
    /// One nested power (k,l).
    Kpower,
    /// ζ₁ against the Bockstein of ξ₁ on lifted cochains.
    ZetaBockstein,
    /// ξ₁ and ζ₁ preserve cocycles and cohomology classes.
    Operations,
    /// Symbolic identities in free pre-Lie algebras.
    Prelie,
    /// Relations that fail for trees but hold for braces.
    PrelieCounterexamples,
}

#[derive(Args, Serialize, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<u32>,
    /// Built-in algebra (dual, trunc3, mat2, ut2) or a JSON algebra file.
    #[arg(long, default_value = "dual")]
    pub algebra: String,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, env = "BRACEOPS_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long, default_value_t = 1)]
    pub l: u32,
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum CochainOp {
    Xi1,
    Zeta1,
    Bracket,
    Cup,
    Diff,
    Power,
}

#[derive(Args, Serialize, Debug)]
pub struct HochschildArgs {
    #[arg(value_enum)]
    pub op: CochainOp,
    /// Built-in algebra name or JSON algebra file; its ring is used for the cochains.
    #[arg(long)]
    pub algebra: String,
    /// Ring for a built-in algebra: a prime, or 0 for ℤ.
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub input: PathBuf,
    /// Second operand of bracket and cup.
    #[arg(long)]
    pub input2: Option<PathBuf>,
    /// Exponent of power.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Serialize)]
struct Report<'a> {
    schema_version: u32,
    invocation: &'a Cli,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = std::time::Instant::now();
    let outcome = commands::run(&cli);
    let (status, result, error, code) = match outcome {
        Ok(o) => {
            eprintln!("{} ({:.2}s)", o.summary, start.elapsed().as_secs_f64());
            (if o.pass { "pass" } else { "fail" }, Some(o.result), None, if o.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ("error", None, Some(e.to_string()), 2)
        }
    };
    let report = Report { schema_version: SCHEMA_VERSION, invocation: &cli, status, result, error };
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    ExitCode::from(code)
}
