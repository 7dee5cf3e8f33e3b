use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use ivhs::cli::{self, Cache, Command, OutputFormat};

#[derive(Debug, Parser)]
#[command(
    name = "ivhs",
    version,
    about = "Jacobian rings, Lefschetz checks and infinitesimal Torelli verdicts"
)]
struct Args {
    /// hilbert, slp, socle, genus, ideal-sections or torelli.
    command: String,
    #[arg(long)]
    input: PathBuf,
    /// json or text; defaults to the config's `output` key, then json.
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// full or adjoint.
    #[arg(long)]
    domain: Option<String>,
    #[arg(long)]
    no_cache: bool,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

fn config_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("ivhs: {msg}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command: Command = match args.command.parse() {
        Ok(c) => c,
        Err(e) => return config_error(e),
    };
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return config_error(format!("{}: {e}", args.input.display())),
    };
    let mut config = match cli::parse_config(&text, Some(command)) {
        Ok(c) => c,
        Err(e) => return config_error(e),
    };
    if args.seed.is_some() {
        config.options.seed = args.seed;
    }
    if args.trials.is_some() {
        config.options.trials = args.trials;
    }
    if let Some(d) = &args.domain {
        match ivhs::Domain::parse(d) {
            Ok(d) => config.options.domain = Some(d),
            Err(e) => return config_error(e),
        }
    }
    let format: OutputFormat = match args.format.as_deref().map(str::parse).transpose() {
        Ok(f) => f.unwrap_or(config.output),
        Err(e) => return config_error(e),
    };
    let cache = (!args.no_cache).then(|| Cache::locate(args.cache_dir.as_deref()));
    let report = cli::run_cached(&config, cache.as_ref());
    print!("{}", cli::emit(&report, format));
    if let Some(err) = &report.error {
        eprintln!("ivhs: {}", err.message);
    }
    ExitCode::from(report.exit_code() as u8)
}
