//! Command-line front end: `count`, `verify`, `bench` and `gen`.
//!
//! Exit codes: 0 success, 1 property violation or count mismatch, 2 input
//! or usage error, 3 undefined density, 4 enumeration budget exceeded.

mod bench;
mod count;
mod gen;
mod input;
mod report;
mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::corpus::{CorpusSpec, Probability};
use crate::density::DensityError;
use crate::engine::{EngineConfig, HomError, DEFAULT_BUDGET};
use crate::graph::{Graph, GraphError};
use crate::io::{write_edge_list, write_graph6, GraphFormat, ParseDiagnostic};
use crate::verify::Selector;

pub use input::{load_graph, parse_family};
pub use report::CountReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{input}: {diagnostic}")]
    Parse {
        input: String,
        diagnostic: ParseDiagnostic,
    },
    #[error("{spec}: {source}")]
    Family { spec: String, source: GraphError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Undefined(DensityError),
    #[error(transparent)]
    Budget(HomError),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Family { .. } | CliError::Io { .. } | CliError::Usage(_) => {
                EXIT_INPUT
            }
            CliError::Undefined(_) => EXIT_UNDEFINED,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Violation(_) => EXIT_VIOLATION,
        }
    }
}

impl From<DensityError> for CliError {
    fn from(e: DensityError) -> Self {
        match e {
            DensityError::EmptyCodomain { .. } => CliError::Undefined(e),
            DensityError::Hom(h @ HomError::BudgetExceeded { .. }) => CliError::Budget(h),
            other => CliError::Violation(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    G6,
    El,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::G6 => GraphFormat::Graph6,
            FormatArg::El => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "homdens", version, about = "Exact graph homomorphism counts and densities")]
pub struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Emit CSV instead of a table.
    #[arg(long, global = true, conflicts_with = "json")]
    pub csv: bool,
    /// Worker threads for the searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Maximum number of mappings the naive enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Count by enumerating every mapping instead of the dispatched engine.
    #[arg(long, global = true)]
    pub naive: bool,
    /// Input format for graph files, overriding the extension.
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    #[arg(long, global = true, hide = true)]
    pub inject_fault: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count mappings, injective mappings and homomorphisms from DOMAIN to CODOMAIN.
    Count {
        /// Family (K4, P3, C6, E5), graph file (.g6, .el) or - for stdin.
        domain: String,
        codomain: String,
    },
    /// Run property suites over a seeded random corpus.
    Verify {
        /// thm2.1, lem2.2, lem2.3, thm2.4, thm2.5, cor2.5.1, thm2.6 or all.
        selector: Selector,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Time the naive enumeration against the dispatched engine.
    Bench {
        domain: String,
        codomain: String,
        #[arg(default_value_t = 5)]
        repetitions: usize,
    },
    /// Write a random corpus as graph6 lines.
    Gen {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Output file; - writes to stdout.
        #[arg(long, short, default_value = "-")]
        output: String,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    /// Smallest vertex count.
    #[arg(long, default_value_t = 0)]
    pub n_min: usize,
    /// Largest vertex count.
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    /// Edge probability as a fraction (1/3) or decimal (0.5).
    #[arg(long = "p", default_value = "1/2")]
    pub edge_probability: Probability,
    /// Number of graphs, or graph pairs for verify.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

impl CorpusArgs {
    fn spec(&self, seed: u64) -> Result<CorpusSpec, CliError> {
        let spec = CorpusSpec {
            n_min: self.n_min,
            n_max: self.n_max,
            edge_probability: self.edge_probability,
            samples: self.samples,
            seed,
        };
        spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum OutputMode {
    Table,
    Json,
    Csv,
}

pub(crate) struct Context {
    pub mode: OutputMode,
    pub engine: EngineConfig,
    pub naive: bool,
    pub format: Option<GraphFormat>,
}

impl Context {
    fn load(&self, spec: &str) -> Result<Graph, CliError> {
        load_graph(spec, self.format)
    }
}

/// Renders a graph for diagnostics: graph6 when it fits, else an inline edge list.
pub(crate) fn show_graph(g: &Graph) -> String {
    match write_graph6(g) {
        Ok(bytes) => String::from_utf8(bytes).expect("graph6 is ASCII"),
        Err(_) => write_edge_list(g).trim_end().replace('\n', "; "),
    }
}

fn write_failed(path: &str, e: std::io::Error) -> CliError {
    CliError::Io {
        path: path.to_string(),
        source: e,
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let ctx = Context {
        mode: if cli.json {
            OutputMode::Json
        } else if cli.csv {
            OutputMode::Csv
        } else {
            OutputMode::Table
        },
        engine: EngineConfig {
            threads: cli.threads.max(1),
            budget: cli.budget,
            inject_fault: cli.inject_fault,
        },
        naive: cli.naive,
        format: cli.format.map(GraphFormat::from),
    };
    let io = |e| write_failed("<stdout>", e);
    match &cli.command {
        Command::Count { domain, codomain } => {
            let report = count::run(&ctx, domain, codomain)?;
            report.render(ctx.mode, out).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { selector, corpus } => {
            let spec = corpus.spec(cli.seed)?;
            verify::run(&ctx, *selector, &spec, out)
        }
        Command::Bench {
            domain,
            codomain,
            repetitions,
        } => bench::run(&ctx, domain, codomain, *repetitions, out),
        Command::Gen { corpus, output } => {
            let spec = corpus.spec(cli.seed)?;
            gen::run(&spec, output, out)
        }
    }
}
