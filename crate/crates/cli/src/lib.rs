//! Command-line front end: configuration, the verification commands, report
//! rendering and the on-disk cache.

pub mod acceptance;
pub mod cache;
pub mod commands;
pub mod config;
pub mod fault;
pub mod report;

use std::time::Instant;

use cache::Cache;
use config::{ConfigError, Format, RunConfig};
use report::Report;

/// Runs one command. Errors are usage errors (exit code 2).
pub fn execute(cfg: &RunConfig) -> Result<Report, ConfigError> {
    let start = Instant::now();
    let cache = Cache::new(cfg.cache_dir.as_deref()).map_err(|e| ConfigError(format!("--cache-dir: {e}")))?;
    let checks = commands::run(cfg, &cache)?;
    Ok(Report {
        command: cfg.command.name().to_string(),
        params: cfg.params(),
        checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    }
}
