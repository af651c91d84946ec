use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use shv_cli::config::{Cli, RunConfig};
use shv_cli::{execute, render};

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };
    let report = match execute(&cfg) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let text = render(&report, cfg.format);
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return usage_error(format!("--out {}: {e}", path.display()));
            }
        }
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    ExitCode::from(report.exit_code())
}
