use std::ffi::OsString;
use std::path::PathBuf;

use burnside_core::group::{parse_group_spec, DEFAULT_ORDER_CAP};
use burnside_core::perm::parse_generators;
use burnside_core::PrimeSet;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Marks,
    Idempotents,
    Norm { from: String, to: String },
    TheoremA,
    IndexingSystems,
    Splitting,
    Report,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Marks => "marks",
            Command::Idempotents => "idempotents",
            Command::Norm { .. } => "norm",
            Command::TheoremA => "theorem-a",
            Command::IndexingSystems => "indexing-systems",
            Command::Splitting => "splitting",
            Command::Report => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub group_spec: String,
    pub primes_spec: String,
    pub primes: PrimeSet,
    pub command: Command,
    pub format: Format,
    pub output_path: Option<PathBuf>,
    pub max_order: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("{0}")]
    Clap(#[from] clap::Error),
    #[error("{0}")]
    Invalid(String),
}

impl UsageError {
    /// `--help` and `--version` come back as errors from clap.
    pub fn is_informational(&self) -> bool {
        matches!(self, UsageError::Clap(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion))
    }
}

#[derive(Debug, Parser)]
#[command(name = "burnside", version, about = "P-local Burnside rings, Dress idempotents and norm descent")]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Group spec: S<n>, A<n>, C<n>, D<2n>, Q8, cycle generators "(1,2); (1,2,3)", or products joined by x
    #[arg(long, global = true)]
    group: Option<String>,
    /// Prime set: all, none, or a comma list such as 2,3
    #[arg(long, global = true, default_value = "all")]
    primes: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Refuse groups larger than this
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    max_order: usize,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Table of marks of the group
    Marks,
    /// Dress idempotents of the P-local Burnside ring
    Idempotents,
    /// Norm from one subgroup to a larger one, and whether it descends in each factor
    Norm {
        /// Generators of K in cycle notation
        #[arg(long)]
        from: String,
        /// Generators of H in cycle notation
        #[arg(long)]
        to: String,
    },
    /// Star, diamond and division for every P-perfect class and subgroup pair
    TheoremA,
    /// Admissible pairs of each factor and of their intersection
    IndexingSystems,
    /// Idempotent splitting with rank and orthogonality checks
    Splitting,
    /// Everything except norm
    Report,
}

pub fn parse_config<I, T>(argv: I) -> Result<Config, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("burnside")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv)?;
    let common = cli.common;
    let group_spec = common.group.ok_or_else(|| UsageError::Invalid("--group is required".into()))?;
    parse_group_spec(&group_spec).map_err(|e| UsageError::Invalid(e.to_string()))?;
    let primes: PrimeSet = common.primes.parse().map_err(|e: burnside_core::Error| UsageError::Invalid(e.to_string()))?;
    let command = match cli.command {
        CommandArgs::Marks => Command::Marks,
        CommandArgs::Idempotents => Command::Idempotents,
        CommandArgs::Norm { from, to } => {
            for gens in [&from, &to] {
                parse_generators(gens, 1).map_err(|e| UsageError::Invalid(e.to_string()))?;
            }
            Command::Norm { from, to }
        }
        CommandArgs::TheoremA => Command::TheoremA,
        CommandArgs::IndexingSystems => Command::IndexingSystems,
        CommandArgs::Splitting => Command::Splitting,
        CommandArgs::Report => Command::Report,
    };
    if common.max_order == 0 {
        return Err(UsageError::Invalid("--max-order must be positive".into()));
    }
    Ok(Config {
        group_spec,
        primes_spec: common.primes,
        primes,
        command,
        format: common.format,
        output_path: common.out,
        max_order: common.max_order,
    })
}
