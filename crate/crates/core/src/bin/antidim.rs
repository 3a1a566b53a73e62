//! Command-line driver: solve, sweep, emit LP models, evaluate closed
//! forms, generate instances and verify candidate sets.
//!
//! Exit codes: 0 optimal/success, 2 proven infeasible, 3 unknown within the
//! bound, 64 usage error, 65 invalid input data, 66 unreadable input file.

use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use antidim::antiresolution::{is_k_ars, k_of, Semantics};
use antidim::cli::{load_graph, parse_vertex_set, GraphSource, LoadError, RunRecord, CSV_HEADER};
use antidim::closed::{family_adim, family_anonymity};
use antidim::families::FamilySpec;
use antidim::ilp::{build_exactness_extension, build_f, build_fa, emit_lp};
use antidim::instances::{render_instance, GenClass, GenSpec};
use antidim::solver::{default_threads, solve_kmad_threaded, SolveStatus};

const EX_OPTIMAL: u8 = 0;
const EX_INFEASIBLE: u8 = 2;
const EX_UNKNOWN: u8 = 3;
const EX_USAGE: u8 = 64;
const EX_DATA: u8 = 65;
const EX_IO: u8 = 66;

#[derive(Parser)]
#[command(name = "antidim", version, about = "k-metric antidimension toolkit")]
struct Cli {
    /// Worker threads for the solver (default: ANTIDIM_THREADS or all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Exact,
    Atleast,
}

impl From<SemanticsArg> for Semantics {
    fn from(v: SemanticsArg) -> Semantics {
        match v {
            SemanticsArg::Exact => Semantics::Exact,
            SemanticsArg::Atleast => Semantics::AtLeast,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    F,
    Fa,
    Fx,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    T,
    S,
    D,
}

#[derive(Args)]
struct OutputFlags {
    /// Emit newline-delimited JSON records
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV records (the default)
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimum k-antiresolving set
    Solve {
        /// Graph source: family syntax or an edge-list file
        source: String,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "exact")]
        semantics: SemanticsArg,
        /// Largest cardinality to exhaust (default 6; n-k proves infeasibility)
        #[arg(long)]
        bound: Option<usize>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Solve for every k from 1 to a maximum
    Sweep {
        source: String,
        /// Default: min(max degree, n/2)
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value = "exact")]
        semantics: SemanticsArg,
        #[arg(long)]
        bound: Option<usize>,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Write a model in LP format
    Lp {
        source: String,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "f")]
        variant: VariantArg,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Closed-form antidimension or anonymity of a product family
    Closed {
        /// Family syntax: grid:RxS, cyl:RxS, torus:RxS or ham:R
        family: String,
        #[arg(short, conflicts_with = "anonymity")]
        k: Option<usize>,
        /// Attacker budget l: report the smallest qualifying k
        #[arg(long)]
        anonymity: Option<usize>,
    },
    /// Generate a seeded random instance as an edge-list file
    Gen {
        #[arg(value_enum)]
        class: ClassArg,
        n: usize,
        delta: usize,
        #[arg(long, default_value = "1")]
        seed: u64,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Report whether a vertex set is a k-antiresolving set
    Verify {
        source: String,
        #[arg(short)]
        k: usize,
        /// Comma-separated 1-indexed vertices
        #[arg(long)]
        set: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let benign = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if benign {
                ExitCode::from(0)
            } else {
                ExitCode::from(EX_USAGE)
            };
        }
    };
    let threads = cli.threads.unwrap_or_else(default_threads).max(1);
    match run(cli.command, threads) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("antidim: {err}");
            ExitCode::from(match err {
                LoadError::Usage(_) => EX_USAGE,
                LoadError::Data(_) => EX_DATA,
                LoadError::Io(_) => EX_IO,
            })
        }
    }
}

fn run(command: Command, threads: usize) -> Result<u8, LoadError> {
    match command {
        Command::Solve {
            source,
            k,
            semantics,
            bound,
            output,
        } => {
            let source = parse_source(&source)?;
            let g = load_graph(&source)?;
            let sem: Semantics = semantics.into();
            let start = Instant::now();
            let outcome = solve_kmad_threaded(&g, k, sem, bound, threads)
                .map_err(|e| LoadError::Usage(e.to_string()))?;
            let rec = RunRecord::from_outcome(
                &source.describe(),
                g.vertex_count(),
                k,
                sem.as_str(),
                &outcome,
                start.elapsed().as_secs_f64(),
            );
            emit_records(&[rec], output.json);
            Ok(status_code(&outcome.status))
        }
        Command::Sweep {
            source,
            kmax,
            semantics,
            bound,
            output,
        } => {
            let source = parse_source(&source)?;
            let g = load_graph(&source)?;
            let sem: Semantics = semantics.into();
            let kmax = kmax.unwrap_or_else(|| g.max_degree().min(g.vertex_count() / 2).max(1));
            let mut records = Vec::with_capacity(kmax);
            let mut worst = EX_OPTIMAL;
            for k in 1..=kmax {
                let start = Instant::now();
                let outcome = solve_kmad_threaded(&g, k, sem, bound, threads)
                    .map_err(|e| LoadError::Usage(e.to_string()))?;
                records.push(RunRecord::from_outcome(
                    &source.describe(),
                    g.vertex_count(),
                    k,
                    sem.as_str(),
                    &outcome,
                    start.elapsed().as_secs_f64(),
                ));
                worst = worst.max(status_code(&outcome.status));
            }
            emit_records(&records, output.json);
            Ok(worst)
        }
        Command::Lp {
            source,
            k,
            variant,
            out,
        } => {
            let source = parse_source(&source)?;
            let g = load_graph(&source)?;
            let dm = g
                .all_pairs_distances()
                .map_err(|e| LoadError::Data(e.to_string()))?;
            let model = match variant {
                VariantArg::F => build_f(&dm, k),
                VariantArg::Fa => build_fa(&dm, k),
                VariantArg::Fx => build_fa(&dm, k).map(|m| build_exactness_extension(&m)),
            }
            .map_err(|e| LoadError::Usage(e.to_string()))?;
            let text = emit_lp(&model);
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| LoadError::Io(format!("{}: {e}", path.display())))?;
                    println!(
                        "vars={} constraints={}",
                        model.variable_count(),
                        model.constraint_count()
                    );
                }
                None => {
                    print!("{text}");
                    eprintln!(
                        "vars={} constraints={}",
                        model.variable_count(),
                        model.constraint_count()
                    );
                }
            }
            Ok(EX_OPTIMAL)
        }
        Command::Closed {
            family,
            k,
            anonymity,
        } => {
            let spec: FamilySpec = family
                .parse()
                .map_err(|e: antidim::families::FamilyError| LoadError::Usage(e.to_string()))?;
            match (k, anonymity) {
                (Some(k), None) => {
                    let value =
                        family_adim(&spec, k).map_err(|e| LoadError::Usage(e.to_string()))?;
                    println!("{value}");
                }
                (None, Some(ell)) => {
                    let res = family_anonymity(&spec, ell)
                        .map_err(|e| LoadError::Usage(e.to_string()))?;
                    match res.k {
                        Some(k) => println!("k={k}"),
                        None => println!("none"),
                    }
                }
                _ => {
                    return Err(LoadError::Usage(
                        "closed needs exactly one of -k <K> or --anonymity <L>".into(),
                    ))
                }
            }
            Ok(EX_OPTIMAL)
        }
        Command::Gen {
            class,
            n,
            delta,
            seed,
            out,
        } => {
            let class = match class {
                ClassArg::T => GenClass::Tree,
                ClassArg::S => GenClass::Sparse,
                ClassArg::D => GenClass::Dense,
            };
            let spec = GenSpec {
                class,
                n,
                delta,
                seed,
            };
            let text = render_instance(&spec).map_err(|e| LoadError::Usage(e.to_string()))?;
            match out {
                Some(path) => std::fs::write(&path, &text)
                    .map_err(|e| LoadError::Io(format!("{}: {e}", path.display())))?,
                None => {
                    let mut stdout = std::io::stdout().lock();
                    let _ = stdout.write_all(text.as_bytes());
                }
            }
            Ok(EX_OPTIMAL)
        }
        Command::Verify { source, k, set } => {
            let source = parse_source(&source)?;
            let g = load_graph(&source)?;
            let subject = parse_vertex_set(&set).map_err(LoadError::Usage)?;
            let dm = g
                .all_pairs_distances()
                .map_err(|e| LoadError::Data(e.to_string()))?;
            let min = k_of(&dm, &subject).map_err(|e| LoadError::Usage(e.to_string()))?;
            let exact = is_k_ars(&dm, &subject, k, Semantics::Exact)
                .map_err(|e| LoadError::Usage(e.to_string()))?;
            let atleast = is_k_ars(&dm, &subject, k, Semantics::AtLeast)
                .map_err(|e| LoadError::Usage(e.to_string()))?;
            println!("k_of={min} exact={exact} atleast={atleast}");
            Ok(EX_OPTIMAL)
        }
    }
}

fn parse_source(text: &str) -> Result<GraphSource, LoadError> {
    GraphSource::parse(text).map_err(LoadError::Usage)
}

fn status_code(status: &SolveStatus) -> u8 {
    match status {
        SolveStatus::Optimal { .. } => EX_OPTIMAL,
        SolveStatus::InfeasibleProven => EX_INFEASIBLE,
        SolveStatus::UnknownUpToBound => EX_UNKNOWN,
    }
}

fn emit_records(records: &[RunRecord], json: bool) {
    if json {
        for rec in records {
            println!("{}", rec.json_value());
        }
    } else {
        println!("{CSV_HEADER}");
        for rec in records {
            println!("{}", rec.csv_row());
        }
    }
}
