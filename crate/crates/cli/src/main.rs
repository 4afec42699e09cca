mod args;
mod commands;
mod error;
mod specs;

use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult};

const CAP_VAR: &str = "MAGMA_FORGE_CAP";

pub(crate) fn read_input(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.to_path_buf(), source })
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            Ok(text)
        }
    }
}

fn configure(cli: &Cli) -> CliResult<()> {
    if let Ok(raw) = std::env::var(CAP_VAR) {
        let scale: u64 = raw
            .trim()
            .parse()
            .ok()
            .filter(|&s| s > 0)
            .ok_or_else(|| CliError::Usage(format!("{CAP_VAR} must be a positive integer, got `{raw}`")))?;
        magma_forge_core::limits::set_scale(scale);
    }
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> CliResult<()> {
    configure(cli)?;
    let (out, target) = match &cli.command {
        Command::Construct(args) => (commands::construct::run(args)?, args.output.as_deref()),
        Command::Count(args) => (commands::count::run(args)?, None),
        Command::Analyze { what } => (commands::analyze::run(what)?, None),
    };
    match target {
        Some(path) => std::fs::write(path, out).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => match std::io::stdout().write_all(out.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => r.map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
