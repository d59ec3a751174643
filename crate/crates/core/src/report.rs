//! Report serialization: JSON lines, CSV summaries, run manifests and plain tables.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{Applicability, BoundForm, BoundSpec};
use crate::constructive::AuditSummary;
use crate::enumerate::CensusReport;
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn create(path: &Path) -> Result<BufWriter<File>, ReportError> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|source| ReportError::Io { path: dir.to_path_buf(), source })?;
    }
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| ReportError::Io { path: path.to_path_buf(), source })
}

fn io_at(path: &Path) -> impl Fn(io::Error) -> ReportError + '_ {
    move |source| ReportError::Io { path: path.to_path_buf(), source }
}

/// One JSON object per line.
pub fn write_jsonl<T: Serialize>(path: &Path, items: &[T]) -> Result<(), ReportError> {
    let mut w = create(path)?;
    for item in items {
        serde_json::to_writer(&mut w, item)?;
        w.write_all(b"\n").map_err(io_at(path))?;
    }
    w.flush().map_err(io_at(path))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub scanned: usize,
    pub spec: String,
    pub holds: usize,
    pub tight: usize,
    pub violations: usize,
}

/// Rows ordered by spec (input order) then `n`.
pub fn summary_rows(reports: &[CensusReport]) -> Vec<SummaryRow> {
    reports
        .iter()
        .flat_map(|r| {
            r.per_n.iter().map(|(&n, c)| SummaryRow {
                n,
                scanned: c.scanned,
                spec: r.spec.name.clone(),
                holds: c.holds,
                tight: c.tight.len(),
                violations: c.violations.len(),
            })
        })
        .collect()
}

pub fn write_summary_csv(path: &Path, reports: &[CensusReport]) -> Result<(), ReportError> {
    let mut w = csv::Writer::from_writer(create(path)?);
    for row in summary_rows(reports) {
        w.serialize(row)?;
    }
    w.flush().map_err(io_at(path))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub rule: String,
    pub checked: usize,
    pub holds: usize,
    pub violated: usize,
    pub noted: usize,
}

pub fn write_audit_csv(path: &Path, summary: &AuditSummary) -> Result<(), ReportError> {
    let mut w = csv::Writer::from_writer(create(path)?);
    for (rule, c) in &summary.rules {
        w.serialize(AuditRow {
            rule: rule.clone(),
            checked: c.checked,
            holds: c.holds,
            violated: c.violated,
            noted: c.noted,
        })?;
    }
    w.flush().map_err(io_at(path))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresetRow {
    pub name: String,
    pub c1: String,
    pub c2: String,
    pub c3: String,
    pub d: String,
    pub applicability: Applicability,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exceptions: Option<String>,
}

/// The preset table embedded in manifests.
pub fn preset_table(specs: &[BoundSpec]) -> Vec<PresetRow> {
    specs
        .iter()
        .map(|s| {
            let coef = |r: Rational| match s.form {
                BoundForm::CaroWei => "1/(d+1)".to_string(),
                BoundForm::Linear => r.to_string(),
            };
            PresetRow {
                name: s.name.clone(),
                c1: coef(s.c1),
                c2: coef(s.c2),
                c3: coef(s.c3),
                d: coef(s.d),
                applicability: s.applicability,
                exceptions: s
                    .exception
                    .as_ref()
                    .map(|e| format!("{} with d = {}", e.graphs.join(" "), e.d)),
            }
        })
        .collect()
}

/// Everything needed to reproduce a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub corpus: String,
    pub tool_version: String,
    pub wall_time_ms: u128,
    pub result_files: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub presets: Vec<PresetRow>,
}

impl RunManifest {
    pub fn new(command: &str, corpus: String) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            corpus,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_ms: 0,
            result_files: Vec::new(),
            presets: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn write(&self, path: &Path) -> Result<(), ReportError> {
        let mut w = create(path)?;
        serde_json::to_writer_pretty(&mut w, self)?;
        w.write_all(b"\n").map_err(io_at(path))?;
        w.flush().map_err(io_at(path))
    }
}

/// Left-aligned text table with a header row.
pub fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (i, cell) in r.iter().enumerate() {
            width[i] = width[i].max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c:<w$}", w = width[i]))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}
