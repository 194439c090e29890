use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use chaincore::Ring;
use clap::{Args, Parser, Subcommand};
use dloop_cli::{
    cobar_report, cotor_report, double_loop_report, fiber_report, formal_report, identity_map,
    load_coalgebra, load_map, path_loop_report, verify_report, CliError, CliResult, Format,
    Options, Report,
};

#[derive(Parser)]
#[command(
    name = "dloop",
    version,
    about = "Loop and double-loop models of Alexander-Whitney coalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Coefficient ring: Z, Q or F<p>
    #[arg(long, global = true, value_parser = parse_ring)]
    ring: Option<Ring>,
    /// Degree cutoff; homology is reported below it
    #[arg(long, global = true)]
    cutoff: Option<i64>,
    /// Report format: table, csv or json
    #[arg(long, global = true, default_value = "table")]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run every invariant suite alongside the computation
    #[arg(long, global = true)]
    verify_all: bool,
    /// Report a single weight block
    #[arg(long, global = true)]
    weight: Option<i64>,
    /// Largest weight reported for inputs with degree-2 generators
    #[arg(long, global = true)]
    max_weight: Option<i64>,
    /// Include wall-clock time in the report
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Homology of the cobar construction
    Cobar { input: PathBuf },
    /// Cotor over the induced Hopf algebra, with coefficients R or the Hopf algebra itself
    Cotor {
        input: PathBuf,
        #[arg(long, value_parser = ["ground", "self"], default_value = "ground")]
        hopf: String,
    },
    /// Homology of the path-loop algebra
    PathLoop { input: PathBuf },
    /// Homology of the double-loop model
    DoubleLoop { input: PathBuf },
    /// Homology of the loop-fiber model of a map
    Fiber {
        /// Family document with source, target and theta
        #[arg(
            long,
            conflicts_with = "identity",
            required_unless_present = "identity"
        )]
        map: Option<PathBuf>,
        /// Use the identity map of a coalgebra document
        #[arg(long)]
        identity: Option<PathBuf>,
    },
    /// Homology of the closed-form bracket model
    FormalDl { input: PathBuf },
    /// Run the invariant suites on a document
    Verify { input: PathBuf },
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse::<Ring>().map_err(|e| e.to_string())
}

fn read(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))
}

fn run(cli: &Cli) -> CliResult<Report> {
    let c = &cli.common;
    let opts = Options {
        ring: c.ring,
        cutoff: c.cutoff,
        weight: c.weight,
        max_weight: c.max_weight,
        verify_all: c.verify_all,
    };
    match &cli.command {
        Command::Cobar { input } => cobar_report(&load_coalgebra(&read(input)?, &opts)?, &opts),
        Command::Cotor { input, hopf } => cotor_report(
            &load_coalgebra(&read(input)?, &opts)?,
            hopf == "self",
            &opts,
        ),
        Command::PathLoop { input } => {
            path_loop_report(&load_coalgebra(&read(input)?, &opts)?, &opts)
        }
        Command::DoubleLoop { input } => {
            double_loop_report(&load_coalgebra(&read(input)?, &opts)?, &opts)
        }
        Command::Fiber {
            map: Some(path), ..
        } => fiber_report(&load_map(&read(path)?, &opts)?, &opts),
        Command::Fiber {
            identity: Some(path),
            ..
        } => fiber_report(&identity_map(&load_coalgebra(&read(path)?, &opts)?), &opts),
        Command::Fiber { .. } => Err(CliError::Validation(
            "fiber needs --map or --identity".into(),
        )),
        Command::FormalDl { input } => formal_report(&load_coalgebra(&read(input)?, &opts)?, &opts),
        Command::Verify { input } => verify_report(&load_coalgebra(&read(input)?, &opts)?, &opts),
    }
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
    let start = Instant::now();
    let mut report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if cli.common.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let text = report.render(cli.common.format);
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        for c in report.checks.iter().filter(|c| !c.passed) {
            eprintln!("invariant failure: {} ({} residues)", c.name, c.residues);
        }
        ExitCode::from(2)
    }
}
