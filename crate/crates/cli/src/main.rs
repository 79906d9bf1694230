//! `ffplanar`: verify candidates, run family scans and compute character-sum counts.

mod charsum;
mod scan;
mod settings;
mod subspace;
mod verify;

use clap::{Parser, Subcommand};
use ffplanar::config::OutputFormat;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit status for bad flags and unusable input.
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "ffplanar", version, about = "Planar functions Tr(a·x^{q+1}) + ℓ(x²) over finite fields")]
pub struct Cli {
    /// TOML file with config overrides.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads for scans.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// `json`, `jsonl` or `csv`.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<OutputFormat>,
    /// Sampling seed in hex, e.g. 5eed or 0x5eed.
    #[arg(long, global = true, value_parser = parse_hex)]
    seed: Option<u64>,
    #[arg(long, global = true, env = "FFPLANAR_TABLE_CAP", hide = true)]
    table_cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test one candidate with every applicable method.
    Verify(verify::Args),
    /// Run a search job.
    Scan(scan::Args),
    /// Solution counts M_k(υ, ω) and their lower bound.
    Charsum(charsum::Args),
    /// Round-trip a subspace through its image polynomial.
    Subspace(subspace::Args),
    /// Run the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(clap::Args, Debug)]
struct SelftestArgs {
    /// Criterion number or tag, e.g. `cubic` or `7`.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long, hide = true)]
    corrupt_modulus: bool,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

fn parse_hex(s: &str) -> Result<u64, String> {
    let t = s.trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(t, 16).map_err(|e| format!("bad hex seed {s:?}: {e}"))
}

/// A failure reported on stderr, with its exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl std::fmt::Display) -> Self {
        Self { code: EXIT_USAGE, message: message.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("ffplanar: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    let cfg = settings::load(cli)?;
    match &cli.command {
        Command::Verify(a) => verify::run(a, &cfg),
        Command::Scan(a) => scan::run(a, &cfg),
        Command::Charsum(a) => charsum::run(a, &cfg),
        Command::Subspace(a) => subspace::run(a, &cfg),
        Command::Selftest(a) => {
            let opts = ffplanar::acceptance::Options {
                filter: a.filter.clone(),
                corrupt_modulus: a.corrupt_modulus,
                config: cfg,
            };
            let outcomes = ffplanar::acceptance::run(&opts, |o| println!("{}", o.line()));
            let failed = outcomes.iter().filter(|o| !o.pass).count();
            println!("{} passed, {failed} failed", outcomes.len() - failed);
            Ok(u8::from(failed > 0))
        }
    }
}
