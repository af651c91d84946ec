//! Runs the acceptance battery at default parameters and prints one line
//! per criterion. Criterion 11 is informational: it never fails the run.

use std::process::ExitCode;
use std::time::Instant;

use shv_cli::acceptance::criteria;
use shv_cli::cache::Cache;
use shv_cli::config::{CommandName, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::defaults(CommandName::Acceptance);
    let start = Instant::now();
    let all = criteria(&cfg, &Cache::disabled());
    let mut fatal = 0;
    println!("\nacceptance criteria (cL = {}, cLa = {}, r = {})", cfg.cl, cfg.cla, cfg.r);
    for c in &all {
        let verdict = match (c.clean(), c.optional) {
            (true, _) => "PASS",
            (false, true) => "WARN",
            (false, false) => "FAIL",
        };
        let tag = if c.optional { " (optional)" } else { "" };
        println!("criterion {:>2} {verdict}  {}{tag}, {} checks", c.number, c.title, c.checks.len());
        for k in c.checks.iter().filter(|k| k.status != shv_cli::report::Status::Pass) {
            println!("    [{}] {}", k.status.label(), k.name);
            for line in k.details.lines() {
                println!("        {line}");
            }
        }
        if !c.passed() {
            fatal += 1;
        }
    }
    println!("{} criteria, {fatal} failing, {} ms\n", all.len(), start.elapsed().as_millis());
    if fatal == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
