use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use martin::census::{
    builtin_records, compute_batch, group_by_invariant, parse_graphs_lenient, render_groups, render_table,
    GraphRecord, InvariantCache, TaskSet,
};
use martin::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(name = "martin", version, about = "Martin invariants, permanents and c2 residues of regular multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Source {
    /// Graph file, lines `name: u v u v ...`; `-` reads stdin.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Use the built-in families instead of a file.
    #[arg(long, conflicts_with = "input")]
    builtin: bool,
    /// Invariant cache file, created if missing.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants and print a TSV table.
    Compute {
        #[command(flatten)]
        source: Source,
        /// Comma-separated: martin, sequence, polynomial, permanent, c2.
        #[arg(long, default_value = "martin")]
        tasks: String,
        /// Length of the Martin sequence.
        #[arg(long, default_value_t = 3)]
        rmax: u32,
        /// Primes for c2.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
        /// Most points a c2 point count may sweep.
        #[arg(long, default_value_t = martin::oracle::DEFAULT_BUDGET)]
        budget: u128,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run self-checks over generated graphs.
    Verify {
        /// Suite to run; all when omitted.
        #[arg(long, value_enum)]
        suite: Option<SuiteArg>,
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
    },
    /// Group graphs with equal Martin sequences.
    Report {
        #[command(flatten)]
        source: Source,
        /// Number of sequence entries compared.
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Print the full table instead of the classes.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Oracles,
    Residues,
    ClosedForms,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Oracles => Suite::Oracles,
            SuiteArg::Residues => Suite::Residues,
            SuiteArg::ClosedForms => Suite::ClosedForms,
        }
    }
}

fn load(source: &Source) -> martin::Result<(Vec<GraphRecord>, InvariantCache)> {
    let records = if source.builtin {
        builtin_records()
    } else {
        let text = match source.input.as_deref() {
            None => return Err(martin::Error::InvalidArgument("give --input or --builtin".into())),
            Some(p) if p.as_os_str() == "-" => io::read_to_string(io::stdin())?,
            Some(p) => std::fs::read_to_string(p)?,
        };
        let (records, errors) = parse_graphs_lenient(&text);
        for e in errors {
            eprintln!("skipped: {e}");
        }
        records
    };
    let cache = match &source.cache {
        Some(p) => InvariantCache::open(p)?,
        None => InvariantCache::in_memory(),
    };
    Ok((records, cache))
}

fn emit(text: &str, out: Option<&PathBuf>) -> martin::Result<()> {
    match out {
        Some(p) => File::create(p)?.write_all(text.as_bytes())?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> martin::Result<bool> {
    match cli.command {
        Command::Compute { source, tasks, rmax, primes, budget, out } => {
            let mut tasks = TaskSet::parse(&tasks, rmax, &primes)?;
            tasks.point_budget = budget;
            let (records, cache) = load(&source)?;
            let results = compute_batch(&records, &tasks, &cache);
            let (hits, misses) = cache.stats();
            eprintln!("{} graphs, cache {hits} hits, {misses} misses", results.len());
            emit(&render_table(&results, &tasks), out.as_ref())?;
            Ok(results.iter().all(|r| r.errors.is_empty()))
        }
        Command::Verify { suite, max_vertices } => {
            let suites = match suite {
                Some(s) => vec![s.into()],
                None => Suite::ALL.to_vec(),
            };
            let mut ok = true;
            for s in suites {
                for c in run_suite(s, max_vertices) {
                    println!("{}\t{c}", s.name());
                    ok &= c.passed;
                }
            }
            Ok(ok)
        }
        Command::Report { source, depth, table } => {
            let tasks = TaskSet::parse("sequence", depth, &[])?;
            let (records, cache) = load(&source)?;
            let results = compute_batch(&records, &tasks, &cache);
            for r in results.iter().filter(|r| !r.errors.is_empty()) {
                eprintln!("{}: {}", r.name, r.errors.join("; "));
            }
            let text = if table {
                render_table(&results, &tasks)
            } else {
                render_groups(&group_by_invariant(&results, depth as usize))
            };
            emit(&text, None)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
