use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use isoperimetric::pairing::Caps;
use isoperimetric::report::{
    cmd_edge, cmd_simulate, cmd_table, cmd_verify, cmd_vertex, compare, write_rows, Format, GoldenTable, TableId,
    TableSpec, VerifySuite,
};
use isoperimetric::Error;

/// Environment variable holding the worker-thread count.
const WORKERS_ENV: &str = "ISOPERIMETRIC_WORKERS";

#[derive(Parser)]
#[command(name = "isoperimetric", version, about = "Isoperimetric bounds for random regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex bound A_d(u).
    Vertex {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        u: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Edge bound Â_d(u).
    Edge {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        u: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Regenerate a table: 1 (vertex-expansion), 2 (vertex-half) or 3 (edge).
    Table {
        #[arg(long, default_value = "1")]
        table: String,
        /// Comma-separated degrees; defaults to the published grid.
        #[arg(long, value_delimiter = ',')]
        d: Option<Vec<u32>>,
        /// Comma-separated fractions; defaults to the published grid.
        #[arg(long, value_delimiter = ',')]
        u: Option<Vec<f64>>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Reference CSV (`d,u,value`), or `builtin` for the shipped copy.
        #[arg(long)]
        compare: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Run a verification suite (or `all`); prints a JSON report.
    Verify {
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive isoperimetric numbers of sampled pairing-model graphs.
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 0.5)]
        u: f64,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(m) => Failure::Usage(m),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else { return Ok(()) };
    let workers: usize = raw
        .parse()
        .ok()
        .filter(|&w| w > 0)
        .ok_or_else(|| Failure::Usage(format!("{WORKERS_ENV}={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| Failure::Runtime(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_workers()?;
    match cli.command {
        Command::Vertex { d, u, tol, output } => {
            let rows = cmd_vertex(d, u, tol)?;
            write_rows(&rows, output.format.parse()?, sink(&output.out)?)?;
        }
        Command::Edge { d, u, tol, output } => {
            let row = cmd_edge(d, u, tol)?;
            write_rows(&[row], output.format.parse()?, sink(&output.out)?)?;
        }
        Command::Table { table, d, u, tol, compare: reference, output } => {
            let format: Format = output.format.parse()?;
            let id: TableId = table.parse()?;
            let mut spec = TableSpec::standard(id, tol)?;
            if let Some(ds) = d {
                spec.ds = ds;
            }
            if let Some(us) = u {
                spec.us = us;
            }
            let mut rows = cmd_table(&spec)?;
            let summary = match reference.as_deref() {
                None => None,
                Some("builtin") => Some(compare(&mut rows, &GoldenTable::builtin(id)?)),
                Some(path) => Some(compare(&mut rows, &GoldenTable::from_path(path.as_ref())?)),
            };
            write_rows(&rows, format, sink(&output.out)?)?;
            if let Some(c) = summary {
                eprintln!(
                    "compared {} cells ({} missing), max |delta| {:.3e}, {} outside tolerance",
                    c.compared,
                    c.missing,
                    c.max_abs_delta,
                    c.failures.len()
                );
                if !c.passed() {
                    return Err(Failure::Verification(format!("cells outside tolerance: {:?}", c.failures)));
                }
            }
        }
        Command::Verify { suite, out } => {
            let suites: Vec<VerifySuite> =
                if suite == "all" { VerifySuite::ALL.to_vec() } else { vec![suite.parse()?] };
            let reports: Vec<_> = suites.into_iter().map(cmd_verify).collect();
            for r in &reports {
                for c in &r.checks {
                    eprintln!("[{}] {} {}: {}", r.suite, if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                }
            }
            let mut w = sink(&out)?;
            serde_json::to_writer_pretty(&mut w, &reports).map_err(|e| Failure::Runtime(e.to_string()))?;
            writeln!(w)?;
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::Verification("one or more checks failed".into()));
            }
        }
        Command::Simulate { n, d, u, samples, seed, output } => {
            let format: Format = output.format.parse()?;
            let report = cmd_simulate(n, d, u, samples, seed, &Caps::default())?;
            eprintln!(
                "simple {:.4}, connected {:.4}, mean i_V {:.4}, mean i_E {:.4}",
                report.simple_fraction, report.connected_fraction, report.mean_i_vertex, report.mean_i_edge
            );
            report.write(format, sink(&output.out)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) | Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}
