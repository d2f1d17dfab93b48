//! Command-line front end: enumeration, analysis, censuses, sweeps, and
//! canonicalization as line-oriented plain text.
//!
//! Exit codes: 0 success or no findings, 1 mathematical findings
//! (violations or counterexamples), 2 usage errors, 3 runtime errors.

use std::fs::{self, File};
use std::io::{self, ErrorKind, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use teqset::{
    beta_census, canonical_key, check_conjectures, enumerate, enumerate_irreducible,
    schwartz_exhaustive, verify_hamiltonian_domcycle, verify_locally_transitive, CanonicalKey,
    CensusMode, CensusOptions, DominationGraph, Solver, StructureVerdict, Tournament, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "teqset",
    version,
    about = "Exact tournament equilibrium sets, censuses, and structure sweeps",
    after_help = "Tournaments are upper-triangle codes, one per line: bit (i,j), i<j, \
                  row-major, '1' when i beats j. The empty line is the one-vertex \
                  tournament. Lines starting with '#' are ignored on input."
)]
struct Cli {
    /// Worker threads for parallel pipelines (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one representative per isomorphism class of size N.
    Gen {
        n: usize,
        /// Restrict to irreducible (strongly connected) classes.
        #[arg(long)]
        irreducible: bool,
    },
    /// Report minimal retentive sets and the equilibrium set per input
    /// tournament; exit 1 if any input has several minimal sets.
    Teq {
        /// Input file of codes; standard input when omitted.
        file: Option<PathBuf>,
        /// Complement every bit of the input codes while parsing.
        #[arg(long)]
        complement: bool,
    },
    /// Print domination digraph arcs and the structure verdict per input
    /// tournament.
    Domgraph {
        file: Option<PathBuf>,
        #[arg(long)]
        complement: bool,
    },
    /// Census over the irreducible classes of size N (4..=10).
    Beta {
        n: usize,
        /// Structural filters only; survivor count is an upper bound.
        #[arg(long, conflicts_with = "full")]
        filter_only: bool,
        /// Filter, then verify survivors retain all vertices (default).
        #[arg(long)]
        full: bool,
        /// Allow the long-running censuses (n = 9, 10).
        #[arg(long)]
        long_run: bool,
    },
    /// Check every class of size N for a unique minimal retentive set;
    /// exit 1 if any class has several.
    Schwartz { n: usize },
    /// Sweep all classes up to size N for counterexamples to one open
    /// uniqueness claim; exit 1 if any turn up.
    Conjecture {
        /// 1: a size-3 minimal retentive set is the only one.
        /// 2: a domination-digraph cycle is the unique minimal set.
        /// 3: captain vertices lie in the equilibrium set.
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        n: usize,
    },
    /// Run the theorem verifiers: random locally transitive tournaments
    /// and the spanning-domination-cycle sweep; exit 1 on violations.
    Verify {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Canonicalize input tournaments, deduplicate, and print sorted.
    Canon {
        file: Option<PathBuf>,
        #[arg(long)]
        complement: bool,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Lib(#[from] teqset::Error),
    #[error("line {line}: {source}")]
    Input {
        line: usize,
        source: teqset::Error,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(io::BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(3);
            }
        },
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    let result = run(&cli.command, &mut out)
        .and_then(|findings| out.flush().map(|()| findings).map_err(CliError::Io));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(CliError::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

/// Runs one subcommand; Ok(true) means mathematical findings (exit 1).
fn run(command: &Command, out: &mut dyn Write) -> Result<bool, CliError> {
    match command {
        Command::Gen { n, irreducible } => {
            let reps = if *irreducible {
                enumerate_irreducible(*n)?
            } else {
                enumerate(*n)?
            };
            for t in &reps {
                writeln!(out, "{}", t.code())?;
            }
            Ok(false)
        }
        Command::Teq { file, complement } => {
            let solver = Solver::new();
            let mut findings = false;
            for t in read_tournaments(file.as_ref(), *complement)? {
                let analysis = solver.analyze(&t);
                findings |= !analysis.schwartz_ok;
                writeln!(
                    out,
                    "code={} minimal_sets=[{}] teq={} schwartz_ok={}",
                    t.code(),
                    set_list(&analysis.minimal_sets),
                    analysis.teq,
                    analysis.schwartz_ok
                )?;
            }
            Ok(findings)
        }
        Command::Domgraph { file, complement } => {
            for t in read_tournaments(file.as_ref(), *complement)? {
                let g = DominationGraph::of(&t);
                writeln!(out, "tournament {}", t.code())?;
                for (u, v) in g.arcs() {
                    writeln!(out, "{u}>{v}")?;
                }
                writeln!(out, "verdict={}", render_verdict(&g.classify()?))?;
            }
            Ok(false)
        }
        Command::Beta {
            n,
            filter_only,
            full: _,
            long_run,
        } => {
            let options = CensusOptions {
                mode: if *filter_only {
                    CensusMode::FilterOnly
                } else {
                    CensusMode::Full
                },
                allow_long_run: *long_run,
            };
            let report = beta_census(&Solver::new(), *n, options)?;
            write!(out, "{report}")?;
            Ok(false)
        }
        Command::Schwartz { n } => {
            let records = schwartz_exhaustive(&Solver::new(), *n)?;
            writeln!(out, "# schwartz-sweep n={n} records={}", records.len())?;
            for record in &records {
                writeln!(out, "{record}")?;
            }
            Ok(!records.is_empty())
        }
        Command::Conjecture { which, n } => {
            let sweep = check_conjectures(&Solver::new(), *n)?;
            let (name, list) = match which {
                1 => ("size3-unique", &sweep.size3_unique),
                2 => ("cycle-unique", &sweep.cycle_unique),
                _ => ("captains-in-teq", &sweep.captains_in_teq),
            };
            writeln!(
                out,
                "# conjecture {which} ({name}) max-size={n} examined={} counterexamples={}",
                sweep.examined,
                list.len()
            )?;
            for violation in list {
                writeln!(out, "{violation}")?;
            }
            Ok(!list.is_empty())
        }
        Command::Verify {
            trials,
            max_size,
            seed,
        } => {
            let solver = Solver::new();
            let lt = verify_locally_transitive(&solver, *trials, *max_size, *seed)?;
            writeln!(
                out,
                "# locally-transitive trials={trials} max-size={max_size} seed={seed} violations={}",
                lt.violations.len()
            )?;
            for violation in &lt.violations {
                writeln!(out, "{violation}")?;
            }
            let cycle_max = (*max_size).min(8);
            let ham = verify_hamiltonian_domcycle(&solver, cycle_max)?;
            writeln!(
                out,
                "# spanning-domination-cycle max-size={cycle_max} qualifying={} violations={}",
                ham.examined,
                ham.violations.len()
            )?;
            for violation in &ham.violations {
                writeln!(out, "{violation}")?;
            }
            Ok(!(lt.passed() && ham.passed()))
        }
        Command::Canon { file, complement } => {
            let mut keys: Vec<CanonicalKey> = read_tournaments(file.as_ref(), *complement)?
                .iter()
                .map(canonical_key)
                .collect();
            keys.sort_unstable();
            keys.dedup();
            for key in &keys {
                writeln!(out, "{}", key.code())?;
            }
            Ok(false)
        }
    }
}

/// Reads upper-triangle codes, one per line. Empty lines are the
/// one-vertex tournament; '#' lines are skipped, so census reports can
/// be piped back in. `complement` flips every bit while parsing.
fn read_tournaments(
    file: Option<&PathBuf>,
    complement: bool,
) -> Result<Vec<Tournament>, CliError> {
    let text = match file {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let mut tournaments = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.starts_with('#') {
            continue;
        }
        let t = Tournament::parse(line).map_err(|source| CliError::Input {
            line: i + 1,
            source,
        })?;
        tournaments.push(if complement { reversed(&t) } else { t });
    }
    Ok(tournaments)
}

/// The tournament with every arc reversed.
fn reversed(t: &Tournament) -> Tournament {
    Tournament::from_fn(t.size(), |i, j| !t.dominates(i, j))
}

fn set_list(sets: &[VertexSet]) -> String {
    sets.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn nums(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn render_verdict(verdict: &StructureVerdict) -> String {
    match verdict {
        StructureVerdict::Empty => "empty".to_string(),
        StructureVerdict::SpikedOddCycle { cycle } => {
            format!("spiked-odd-cycle cycle=[{}]", nums(cycle))
        }
        StructureVerdict::CaterpillarForest { spines } => format!(
            "caterpillar-forest spines=[{}]",
            spines
                .iter()
                .map(|s| format!("[{}]", nums(s)))
                .collect::<Vec<_>>()
                .join(",")
        ),
    }
}
