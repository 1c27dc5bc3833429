//! Report files: JSON (schema version 1) and a flat CSV table.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lab::{ExperimentReport, Verdict};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: String,
    pub runs: Vec<ExperimentReport>,
}

impl ReportFile {
    pub fn new(runs: Vec<ExperimentReport>) -> Self {
        ReportFile {
            schema_version: SCHEMA_VERSION.to_string(),
            runs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

pub const CSV_HEADER: [&str; 8] = [
    "entry", "claim", "e0", "e1", "e2", "lambda", "verdict", "seed",
];

pub fn to_json(reports: &[ExperimentReport]) -> String {
    serde_json::to_string(&ReportFile::new(reports.to_vec())).expect("reports serialize")
}

pub fn from_json(text: &str) -> Result<ReportFile> {
    let file: ReportFile =
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad report file: {e}")))?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(Error::input(format!(
            "unsupported schema version {}",
            file.schema_version
        )));
    }
    Ok(file)
}

pub fn to_csv(reports: &[ExperimentReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    let cell = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
    for r in reports {
        w.write_record([
            r.entry.clone(),
            r.claim.to_string(),
            cell(r.e.first().copied()),
            cell(r.e.get(1).copied()),
            cell(r.e.get(2).copied()),
            cell(r.lambda()),
            r.verdict.to_string(),
            r.seed.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

pub fn render(reports: &[ExperimentReport], format: Format) -> String {
    match format {
        Format::Json => to_json(reports),
        Format::Csv => to_csv(reports),
    }
}

pub fn write_report(reports: &[ExperimentReport], format: Format, path: &Path) -> Result<()> {
    std::fs::write(path, render(reports, format))
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// One line per report for terminal output.
pub fn summary_line(r: &ExperimentReport) -> String {
    let mut s = format!(
        "{:<15} {:<22} {:<21}",
        r.claim.as_str(),
        r.entry,
        r.verdict.as_str()
    );
    if !r.e.is_empty() {
        let parts: Vec<String> = r.e.iter().map(|x| x.to_string()).collect();
        let _ = write!(s, " e=({})", parts.join(","));
    }
    for (k, v) in &r.lengths {
        let _ = write!(s, " {k}={v}");
    }
    s
}

/// 1 if any report failed, else 3 if any is unstable, else 0.
pub fn exit_code(reports: &[ExperimentReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else if reports.iter().any(|r| r.verdict == Verdict::Unstable) {
        3
    } else {
        0
    }
}

/// Exit code for an error that aborted a run.
pub fn error_exit_code(e: &Error) -> i32 {
    if e.is_computational_shortfall() {
        3
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_list() {
        assert_eq!(to_json(&[]), r#"{"schema_version":"1","runs":[]}"#);
        assert_eq!(to_csv(&[]), "entry,claim,e0,e1,e2,lambda,verdict,seed\n");
    }
}
