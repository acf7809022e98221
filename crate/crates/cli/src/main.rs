//! `abduce`: command-line front end.
//!
//! Exit codes: 0 answered (whatever the answer), 1 invalid input or
//! promise violation, 2 budget exceeded, 3 internal error.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "abduce",
    version,
    about = "ABox abduction under repair semantics for EL-bot and DL-Lite"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    /// Repair cap; overrides ABDUCT_BUDGET_REPAIRS.
    #[arg(long, global = true)]
    pub max_repairs: Option<usize>,

    /// Cap on candidate hypotheses examined by exhaustive searches.
    #[arg(long, global = true)]
    pub max_subsets: Option<u128>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classical consistency of a knowledge base.
    Check(KbArg),
    /// All conflicts (minimal inconsistent subsets of the ABox).
    Conflicts(KbArg),
    /// All repairs (maximal consistent subsets of the ABox).
    Repairs(KbArg),
    /// Entailment of a BIQ under classical, brave or AR semantics.
    Entail(EntailArgs),
    /// Hypothesis existence, verification and enumeration.
    #[command(subcommand)]
    Abduce(AbduceCommand),
    /// Instance generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Brute-force reference answers (small inputs only).
    #[command(subcommand, hide = true)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug)]
pub struct KbArg {
    /// Knowledge base document.
    #[arg(long)]
    pub kb: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    Classical,
    Brave,
    Ar,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Counterexample,
    Enumerate,
}

#[derive(Args, Debug)]
pub struct EntailArgs {
    #[arg(long)]
    pub kb: PathBuf,
    #[arg(long, value_enum)]
    pub semantics: SemanticsArg,
    /// Query, e.g. "(biq D a)".
    #[arg(long)]
    pub query: String,
    /// How AR entailment is decided.
    #[arg(long, value_enum, default_value_t = StrategyArg::Counterexample)]
    pub strategy: StrategyArg,
}

#[derive(Args, Debug)]
pub struct ProblemArgs {
    #[arg(long)]
    pub kb: PathBuf,
    /// Atomic observation, e.g. "(biq D a)".
    #[arg(long)]
    pub query: String,
    #[arg(long, value_enum)]
    pub semantics: SemanticsArg,
}

#[derive(Subcommand, Debug)]
pub enum AbduceCommand {
    /// Is there a hypothesis (over a signature, if given)?
    Exists(ExistsArgs),
    /// Is the given ABox a (minimal) hypothesis?
    Verify(VerifyArgs),
    /// All hypotheses over a signature, smallest first.
    Enumerate(EnumerateArgs),
}

#[derive(Args, Debug)]
pub struct ExistsArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Signature document restricting the hypothesis.
    #[arg(long)]
    pub signature: Option<PathBuf>,
    /// Largest hypothesis considered in a signature-restricted search.
    #[arg(long, requires = "signature")]
    pub max_size: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MinimalityArg {
    Subset,
    Card,
    ConfSubset,
    ConfCard,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Hypothesis document "(abox ...)".
    #[arg(long)]
    pub hypothesis: PathBuf,
    #[arg(long, value_enum)]
    pub minimality: Option<MinimalityArg>,
    /// Only conflict-confining hypotheses count.
    #[arg(long)]
    pub require_conflict_confining: bool,
    /// Candidate space for the comparison, as a signature document.
    #[arg(long, conflicts_with = "fresh_individuals")]
    pub signature: Option<PathBuf>,
    /// Use the KB's own signature plus k fresh individuals as the
    /// candidate space.
    #[arg(long)]
    pub fresh_individuals: Option<usize>,
    #[arg(long)]
    pub max_size: Option<usize>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub signature: PathBuf,
    #[arg(long)]
    pub max_size: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// SAT (DIMACS) to EL-bot brave existence over a signature.
    Sat(GenFileArgs),
    /// 2-QBF (QDIMACS, read as ∃Y∀Z ¬φ) to EL-bot AR existence.
    Qbf2(GenFileArgs),
    /// Reachability (edge list with "s t" header) to DL-Lite brave.
    Reach(GenFileArgs),
    /// CNF (DIMACS) to DL-Lite AR verification.
    CnfAr(CnfArArgs),
    /// Seeded random knowledge base.
    Random(RandomArgs),
}

#[derive(Args, Debug)]
pub struct GenFileArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Write kb.dl, query.biq, signature.sig and hypothesis.abox here.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CnfArArgs {
    #[command(flatten)]
    pub file: GenFileArgs,
    /// 1-based clause indices for the hypothesis (default: all clauses).
    #[arg(long, value_delimiter = ',', conflicts_with = "padded")]
    pub psi: Option<Vec<usize>>,
    /// Padded variant with a single-assertion hypothesis.
    #[arg(long)]
    pub padded: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DialectArg {
    Elbot,
    DlliteCore,
    DlliteR,
}

#[derive(Args, Debug)]
pub struct RandomArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = DialectArg::Elbot)]
    pub dialect: DialectArg,
    #[arg(long, default_value_t = 5)]
    pub concepts: u32,
    #[arg(long, default_value_t = 1)]
    pub roles: u32,
    #[arg(long, default_value_t = 2)]
    pub individuals: u32,
    #[arg(long, default_value_t = 5)]
    pub axioms: u32,
    #[arg(long, default_value_t = 6)]
    pub assertions: u32,
    #[arg(long, default_value_t = 0.3)]
    pub disjointness: f64,
    /// Resample until the KB is inconsistent.
    #[arg(long)]
    pub require_inconsistent: bool,
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    Conflicts(KbArg),
    Repairs(KbArg),
    Entail(EntailArgs),
    Verify(OracleVerifyArgs),
}

#[derive(Args, Debug)]
pub struct OracleVerifyArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub hypothesis: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(commands::run(&cli))
}
