use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use thiserror::Error;

use super::SweepReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = ExportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(ExportError::UnknownFormat(other.to_string())),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        })
    }
}

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("unknown report format {0:?} (expected json or csv)")]
    UnknownFormat(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Writes a report. JSON is the full report; CSV has one row per recorded
/// `(class, value)` pair with header `order,key,name,num,den,approx`, so it
/// is empty unless the sweep recorded values.
pub fn export_report<W: Write>(report: &SweepReport, format: ReportFormat, mut out: W) -> Result<(), ExportError> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            writeln!(out, "order,key,name,num,den,approx")?;
            for rec in &report.values {
                for v in &rec.values {
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        report.order,
                        rec.key,
                        v.name,
                        v.value.numer(),
                        v.value.denom(),
                        v.value.to_f64()
                    )?;
                }
            }
        }
    }
    Ok(())
}
