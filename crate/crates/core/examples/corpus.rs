//! Runs a corpus suite in parallel and writes JSON and CSV reports.

use chern::config::Config;
use chern::io::report::{exit_code, render, summary_line, Format};
use chern::lab::run_corpus;

fn main() -> chern::Result<()> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "modules".into());
    let reports = run_corpus(&suite, &Config::default())?;
    for r in &reports {
        println!("{}", summary_line(r));
    }
    println!("{}", render(&reports, Format::Csv));
    println!("json bytes: {}", render(&reports, Format::Json).len());
    println!("exit code would be {}", exit_code(&reports));
    Ok(())
}
