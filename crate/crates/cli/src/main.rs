use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use jackcc_core::connection::{self, a_cauchy, a_nn_recurrence, CoeffResult, ConnectionQuery};
use jackcc_core::jack::{jack_in_p, jack_table};
use jackcc_core::matchings::enumerate_good;
use jackcc_core::report::{
    self, emit, CoeffRow, CoeffTable, Emit, Format, JackRow, MatchingListing, PartitionTable,
};
use jackcc_core::{Error, Partition};

#[derive(Parser)]
#[command(name = "jackcc", version, about = "Exact Jack characters and connection coefficients")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest degree swept by `verify` and table commands
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Csv,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of n with z, Aut and class sizes
    Partitions {
        #[arg(long)]
        n: usize,
    },
    /// Power-sum expansion of J_λ, or the whole table for degree n
    Jack {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        lambda: Option<Partition>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// a^{λ}_{μ¹…μᵏ}(α) from the Cauchy sum
    Connect {
        #[arg(long)]
        lambda: Partition,
        /// Lower index partition (repeat for each)
        #[arg(long = "with", required = true)]
        with: Vec<Partition>,
    },
    /// a^λ_{nn}(α) from the recurrence, for one λ or every λ ⊢ n
    ConnectNn {
        #[arg(long, conflicts_with = "n", required_unless_present = "n")]
        lambda: Option<Partition>,
        #[arg(long)]
        n: Option<usize>,
        /// Also show the expansion in β = α − 1
        #[arg(long)]
        beta: bool,
    },
    /// a_λ^{l,r}(α) from the operator formula
    ConnectLr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
    /// Good matchings of the canonical λ-graph
    Matchings {
        #[arg(long)]
        lambda: Partition,
        /// Include the weight generating polynomial
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        bipartite_only: bool,
        /// Print at most K matchings
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(report::SUITES))]
        suite: String,
    },
}

fn nonempty(l: &Partition) -> Result<(), Error> {
    if l.is_empty() {
        return Err(Error::InvalidArgument("partition must be nonempty".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Error> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }
    let format = Format::from(cli.format);
    let out = cli.out.as_deref();
    match cli.command {
        Command::Partitions { n } => emit(&PartitionTable::new(n), format, out)?,
        Command::Jack { lambda: Some(l), .. } => {
            nonempty(&l)?;
            let theta = jack_in_p(&l)?;
            emit(&JackRow { lambda: l, theta }, format, out)?;
        }
        Command::Jack { n, .. } => {
            let n = n.expect("clap requires --lambda or --n");
            emit(&*jack_table(n)?, format, out)?;
        }
        Command::Connect { lambda, with } => {
            nonempty(&lambda)?;
            let label = format!(
                "{}|{}",
                lambda,
                with.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("|")
            );
            let q = ConnectionQuery::new(lambda, with)?;
            let result = CoeffResult::new(a_cauchy(&q)?);
            emit(&CoeffTable { rows: vec![CoeffRow { lambda: label, result }], show_beta: true }, format, out)?;
        }
        Command::ConnectNn { lambda, n, beta } => {
            let lambdas = match (lambda, n) {
                (Some(l), _) => {
                    nonempty(&l)?;
                    vec![l]
                }
                (None, Some(n)) => jackcc_core::generate_partitions(n),
                (None, None) => unreachable!("clap requires --lambda or --n"),
            };
            for l in &lambdas {
                jackcc_core::limits::check_degree(l.n())?;
            }
            let rows = lambdas
                .into_iter()
                .map(|l| CoeffRow { lambda: l.to_string(), result: CoeffResult::from(a_nn_recurrence(&l)) })
                .collect();
            emit(&CoeffTable { rows, show_beta: beta }, format, out)?;
        }
        Command::ConnectLr { lambda, l, r } => {
            nonempty(&lambda)?;
            if l == 0 {
                return Err(Error::InvalidArgument("--l must be at least 1".into()));
            }
            let value = connection::a_lr(&lambda, l, r)?;
            let label = format!("{lambda} (l={l}, r={r})");
            let table = CoeffTable { rows: vec![CoeffRow { lambda: label, result: CoeffResult::new(value) }], show_beta: true };
            emit(&table, format, out)?;
        }
        Command::Matchings { lambda, weights, bipartite_only, limit } => {
            nonempty(&lambda)?;
            let set = enumerate_good(&lambda)?;
            let total = set.entries.len();
            let bipartite = set.bipartite_count();
            let distribution = weights.then(|| set.distribution());
            let entries = set
                .entries
                .into_iter()
                .filter(|e| !bipartite_only || e.bipartite)
                .take(limit.unwrap_or(usize::MAX))
                .collect();
            emit(&MatchingListing { lambda, total, bipartite, distribution, entries }, format, out)?;
        }
        Command::Verify { suite } => {
            let report = report::run_suite(&suite, cli.max_n)?;
            eprintln!("elapsed: {} ms", report.elapsed_ms);
            let s = report.render(format)?;
            match out {
                Some(p) => std::fs::write(p, s)?,
                None => print!("{s}"),
            }
            return Ok(report.passed);
        }
    }
    Ok(true)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidArgument(_)
        | Error::DegreeTooLarge { .. }
        | Error::DegreeMismatch(..)
        | Error::UnknownSuite(_)
        | Error::UnsupportedFormat { .. }
        | Error::MissingPart { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
