use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gemkit::input::load_state;
use gemkit::{
    classify, compute, invariants, render, run_sweep, schmidt, verify, write_csv, CliError, Family, MethodChoice,
    OutputFormat, Registry, Result, SweepSpec,
};
use variational::OracleConfig;

#[derive(Parser)]
#[command(name = "gemkit", version, about = "Maximal product overlap and geometric entanglement of pure qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Seed for the numeric oracle.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of oracle starts.
    #[arg(long, default_value_t = 64)]
    starts: usize,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn oracle(&self) -> Result<OracleConfig> {
        let config = OracleConfig { n_starts: self.starts, seed: self.seed, ..OracleConfig::default() };
        config.validate().map_err(|e| CliError::Input(e.to_string()))?;
        Ok(config)
    }
}

#[derive(Args)]
struct StateArgs {
    /// State file (JSON), inline JSON, or a shorthand such as `w:3`, `ghz:3`, `w:1,2,3`, `basis:3:0`.
    #[arg(long)]
    state: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal product overlap, entanglement and nearest product state.
    Compute {
        #[command(flatten)]
        args: StateArgs,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodChoice,
    },
    /// Family detection, region labels and critical values.
    Classify {
        #[command(flatten)]
        args: StateArgs,
    },
    /// Local-unitary invariants of a two- or three-qubit state.
    Invariants {
        #[command(flatten)]
        args: StateArgs,
    },
    /// Five-term decomposition with its necessary conditions and verdict.
    Schmidt {
        #[command(flatten)]
        args: StateArgs,
    },
    /// Evaluates a family over a parameter grid and writes CSV.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        /// Swept parameter name.
        #[arg(long)]
        param: String,
        #[arg(long, allow_negative_numbers = true)]
        start: f64,
        #[arg(long, allow_negative_numbers = true)]
        stop: f64,
        #[arg(long)]
        count: usize,
        /// Fixed parameter as `name=value`; repeatable.
        #[arg(long = "fixed", value_parser = parse_fixed)]
        fixed: Vec<(String, f64)>,
        #[command(flatten)]
        common: Common,
    },
    /// Runs the built-in checks against known values.
    Verify {
        #[command(flatten)]
        common: Common,
    },
}

fn parse_fixed(s: &str) -> std::result::Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got '{s}'"))?;
    let v = v.trim().parse::<f64>().map_err(|e| format!("'{v}': {e}"))?;
    Ok((k.trim().to_string(), v))
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit(common: &Common, text: &str) -> Result<()> {
    let mut w = sink(&common.out)?;
    w.write_all(text.as_bytes())?;
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Compute { args, method } => {
            let psi = load_state(&args.state)?;
            let registry = Registry::standard(args.common.oracle()?);
            let report = compute(&registry, &psi, method)?;
            emit(&args.common, &render(&report, args.common.format)?)
        }
        Command::Classify { args } => {
            let psi = load_state(&args.state)?;
            let registry = Registry::standard(args.common.oracle()?);
            emit(&args.common, &render(&classify(&registry, &psi)?, args.common.format)?)
        }
        Command::Invariants { args } => {
            let psi = load_state(&args.state)?;
            emit(&args.common, &render(&invariants(&psi)?, args.common.format)?)
        }
        Command::Schmidt { args } => {
            let psi = load_state(&args.state)?;
            let report = schmidt(&psi, &args.common.oracle()?)?;
            emit(&args.common, &render(&report, args.common.format)?)?;
            if report.complete {
                Ok(())
            } else {
                Err(CliError::Convergence(report.diagnostics.join("; ")))
            }
        }
        Command::Sweep { family, param, start, stop, count, fixed, common } => {
            let mut map: BTreeMap<String, f64> = fixed.into_iter().collect();
            if family == Family::WnInterpolation {
                map.entry("seed".into()).or_insert(common.seed as f64);
            }
            let spec = SweepSpec { family, param, start, stop, count, fixed: map };
            let output = run_sweep(&spec, &common.oracle()?)?;
            write_csv(sink(&common.out)?, &output)?;
            if let Some(s) = &output.summary {
                eprintln!(
                    "max_rel_gap {:.6e} median_rel_gap {:.6e} points {}",
                    s.max_rel_gap, s.median_rel_gap, s.points
                );
            }
            Ok(())
        }
        Command::Verify { common } => {
            let report = verify(&common.oracle()?)?;
            let text = match common.format {
                OutputFormat::Json => render(&report, OutputFormat::Json)?,
                OutputFormat::Text => report
                    .checks
                    .iter()
                    .map(|c| format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
                    .collect(),
            };
            emit(&common, &text)?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(CliError::ChecksFailed(format!("{} of {} checks failed", report.failed, report.checks.len())))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gemkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
