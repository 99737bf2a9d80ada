use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use yangian_core::relations::Mutation;
use yangian_harness::config::{parse_cases, parse_sizes};
use yangian_harness::{emit, export_tables, list_checks, run_suite, CheckSelection, Format, HarnessError, SuiteConfig};

/// Exact verification of the principal Yangian presentations.
#[derive(Parser, Debug)]
#[command(name = "yangian-check", version)]
struct Cli {
    /// Comma-separated check names, or `all`
    #[arg(long, default_value = "all")]
    checks: String,

    /// Comma-separated subset of gl, so, sp (default: all three)
    #[arg(long)]
    cases: Option<String>,

    /// Comma-separated sizes N (default: 2,3 for gl and so; 2,4 for sp)
    #[arg(long)]
    sizes: Option<String>,

    /// text or json
    #[arg(long, default_value = "text")]
    format: String,

    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Exit 0 when the only failures are registered documented mismatches
    #[arg(long)]
    allow_documented_mismatch: bool,

    /// Worker threads, 0 for one per core
    #[arg(long, default_value_t = 0)]
    workers: usize,

    /// Print the registered checks and exit
    #[arg(long)]
    list: bool,

    /// Corrupt one compared formula (negative control)
    #[arg(long, value_name = "MUTATION")]
    mutate: Option<String>,

    /// Record wall-clock time per report
    #[arg(long)]
    timings: bool,

    /// Write basis tables for the selected cases and sizes into DIR and exit
    #[arg(long, value_name = "DIR")]
    export: Option<PathBuf>,
}

fn config(cli: &Cli) -> Result<SuiteConfig, HarnessError> {
    let mutation = match &cli.mutate {
        None => None,
        Some(name) => Some(Mutation::parse(name).ok_or_else(|| {
            let known: Vec<&str> = Mutation::ALL.iter().map(|m| m.name()).collect();
            HarnessError::Config(format!("unknown mutation `{name}`; known: {}", known.join(", ")))
        })?),
    };
    Ok(SuiteConfig {
        checks: CheckSelection::parse(&cli.checks),
        cases: cli.cases.as_deref().map(parse_cases).transpose()?,
        sizes: cli.sizes.as_deref().map(parse_sizes).transpose()?,
        format: cli.format.parse::<Format>()?,
        out: cli.out.clone(),
        allow_documented_mismatch: cli.allow_documented_mismatch,
        workers: cli.workers,
        mutation,
        timings: cli.timings,
    })
}

fn run(cli: Cli) -> Result<u8, HarnessError> {
    if cli.list {
        let mut out = std::io::stdout().lock();
        for entry in list_checks() {
            let _ = writeln!(out, "{entry}");
        }
        return Ok(0);
    }
    let cfg = config(&cli)?;
    if let Some(dir) = &cli.export {
        std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
        for (case, n) in cfg.case_sizes()? {
            let path = dir.join(format!("tables-{case}-{n}.json"));
            export_tables(n, case, &path)?;
            println!("wrote {}", path.display());
        }
        return Ok(0);
    }
    let outcome = run_suite(&cfg)?;
    if let Some(text) = emit(&cfg, &outcome.reports)? {
        print!("{text}");
    }
    Ok(outcome.exit.code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("yangian-check: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
