//! Report records: one `CHECK` line each on stdout, one JSON object per line
//! in the report file.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::{Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

/// Field order is part of the file format: task, subject, status, metrics,
/// detail, witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRecord {
    pub task: String,
    pub subject: String,
    pub status: Status,
    pub metrics: BTreeMap<String, Number>,
    pub detail: String,
    pub witness: Option<Value>,
}

impl ReportRecord {
    pub fn new(task: impl Into<String>, subject: impl Into<String>) -> Self {
        Self {
            task: task.into(),
            subject: subject.into(),
            status: Status::Pass,
            metrics: BTreeMap::new(),
            detail: String::new(),
            witness: None,
        }
    }

    pub fn error(task: impl Into<String>, subject: impl Into<String>, detail: impl fmt::Display) -> Self {
        let mut r = Self::new(task, subject);
        r.status = Status::Error;
        r.detail = detail.to_string();
        r
    }

    pub fn metric(&mut self, key: &str, value: impl Into<Number>) -> &mut Self {
        self.metrics.insert(key.to_string(), value.into());
        self
    }

    /// Ratios are rounded to six decimals so the text form is stable.
    pub fn ratio(&mut self, key: &str, num: usize, den: usize) -> &mut Self {
        let v = if den == 0 { 0.0 } else { (num as f64 / den as f64 * 1e6).round() / 1e6 };
        self.metrics.insert(key.to_string(), Number::from_f64(v).expect("finite"));
        self
    }

    /// `CHECK <task> <status> k=v ...`.
    pub fn check_line(&self) -> String {
        let mut line = format!("CHECK {} {}", self.task, self.status);
        for (k, v) in &self.metrics {
            line.push_str(&format!(" {k}={v}"));
        }
        line
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Writes the records in order: `CHECK` lines to `out` and, when given, JSON
/// lines to `report`.
pub fn emit(records: &[ReportRecord], out: &mut dyn Write, report: Option<&mut dyn Write>) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.check_line())?;
    }
    if let Some(w) = report {
        for r in records {
            writeln!(w, "{}", r.to_json_line())?;
        }
        w.flush()?;
    }
    out.flush()
}

/// Exit code for a finished run: 0 when every record passed.
pub fn exit_code(records: &[ReportRecord]) -> i32 {
    if records.iter().all(|r| r.status == Status::Pass) {
        0
    } else {
        1
    }
}
