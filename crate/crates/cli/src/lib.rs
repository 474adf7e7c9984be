//! Command-line front end: parses arguments, runs one computation and
//! renders its report as text or JSON.

pub mod commands;
pub mod input;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use logforms::logmod::LogConfig;
use logforms::{Arrangement, Error};

use report::{Chart, Report, Settings};

#[derive(Debug, Parser)]
#[command(name = "logforms", version, about = "Logarithmic forms and Chern classes of hyperplane arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Args)]
pub struct Flags {
    /// Span of degrees searched above the lowest one.
    #[arg(long, global = true, env = "LOGFORMS_DEGREE_CAP")]
    pub degree_cap: Option<i64>,
    /// Seed for random weights.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random weights for critical degrees.
    #[arg(long, global = true, default_value_t = 3)]
    pub samples: usize,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Record the affine chart with this hyperplane at infinity.
    #[arg(long, global = true, value_name = "INDEX")]
    pub chart: Option<usize>,
    /// Exit with status 1 when a check fails.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Run the twist-route cross-check also when l > 3 (slow).
    #[arg(long, global = true)]
    pub twist_route: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Intersection lattice and Möbius values.
    Lattice { input: PathBuf },
    /// Poincaré polynomials and β.
    Poincare { input: PathBuf },
    /// Saito freeness test.
    Freeness { input: PathBuf },
    /// The non-freeness invariant, central and projective.
    N { input: PathBuf },
    /// Chern polynomial of the sheaf of logarithmic 1-forms.
    Chern { input: PathBuf },
    /// Critical degrees of random master functions.
    Critical { input: PathBuf },
    /// Every applicable cross-check.
    Verify { input: PathBuf },
    /// Write the bundled arrangements as JSON files.
    Corpus { dir: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Lattice { .. } => "lattice",
            Command::Poincare { .. } => "poincare",
            Command::Freeness { .. } => "freeness",
            Command::N { .. } => "n",
            Command::Chern { .. } => "chern",
            Command::Critical { .. } => "critical",
            Command::Verify { .. } => "verify",
            Command::Corpus { .. } => "corpus",
        }
    }
}

/// Text for stdout and the process exit status.
pub struct Output {
    pub stdout: String,
    pub status: i32,
}

fn chart(a: &Arrangement, index: usize) -> Result<Chart, Error> {
    if index >= a.n() {
        return Err(Error::NoSuchHyperplane(index));
    }
    let label = a.labels()[index].clone();
    Ok(Chart {
        hyperplane: index,
        label: label.clone(),
        affine_hyperplanes: a.n() - 1,
        description: format!(
            "{label} = 0 at infinity; the other {} hyperplanes form an affine arrangement in dimension {}",
            a.n() - 1,
            a.l().saturating_sub(1)
        ),
    })
}

pub fn run(cli: &Cli) -> Result<Output, Error> {
    let flags = &cli.flags;
    let input = match &cli.command {
        Command::Corpus { dir } => {
            let written = input::export_corpus(dir)?;
            let stdout = written.iter().map(|p| format!("{}\n", p.display())).collect();
            return Ok(Output { stdout, status: 0 });
        }
        Command::Lattice { input }
        | Command::Poincare { input }
        | Command::Freeness { input }
        | Command::N { input }
        | Command::Chern { input }
        | Command::Critical { input }
        | Command::Verify { input } => input,
    };
    let (a, info) = input::load(input)?;
    let chart = flags.chart.map(|i| chart(&a, i)).transpose()?;
    let cfg = LogConfig {
        degree_cap: flags.degree_cap,
    };
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Lattice { .. } => commands::lattice(&a)?,
        Command::Poincare { .. } => commands::poincare(&a)?,
        Command::Freeness { .. } => commands::freeness(&a, &cfg)?,
        Command::N { .. } => commands::n_invariant(&a, &cfg)?,
        Command::Chern { .. } => commands::chern(&a, &cfg, flags.twist_route)?,
        Command::Critical { .. } => commands::critical(&a, &cfg, flags.samples, flags.seed)?,
        Command::Verify { .. } => commands::verify(&a, &cfg, flags.samples, flags.seed, flags.twist_route)?,
        Command::Corpus { .. } => unreachable!("handled above"),
    };
    let seconds = start.elapsed().as_secs_f64();
    let report = Report {
        command: cli.command.name().into(),
        input: info,
        settings: Settings {
            degree_cap: flags.degree_cap,
            seed: flags.seed,
            samples: flags.samples,
            twist_route: flags.twist_route,
        },
        chart,
        result: outcome.result,
        checks: outcome.checks,
        theorems: outcome.theorems,
        summary: outcome.summary,
    };
    let stdout = if flags.json {
        report.to_json() + "\n"
    } else {
        report.to_text(seconds)
    };
    let status = if flags.strict && report.failed() { 1 } else { 0 };
    Ok(Output { stdout, status })
}
