//! Batch driver for the `azumaya-core` checks: parses experiment configs,
//! runs tasks and writes `CHECK` lines and JSON report records.

pub mod config;
pub mod report;
pub mod survey;
pub mod tasks;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

pub use config::{parse_config, ConfigError, ExperimentConfig, Subject};
pub use report::{ReportRecord, Status};
pub use tasks::{run_task, Task, TaskName};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Config { path: PathBuf, source: ConfigError },
    #[error("{0}")]
    Setup(String),
}

impl CliError {
    /// Exit code 2: nothing ran.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub fn load_config(path: &Path, strict: bool) -> Result<ExperimentConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    parse_config(&text, strict).map_err(|source| CliError::Config { path: path.into(), source })
}

/// Runs `(subject, task)` jobs, in parallel when `jobs > 1`; records come
/// back in job order whatever the scheduling.
pub fn run_jobs(jobs: &[(&Subject, &Task)], seed: u64, threads: usize) -> Result<Vec<ReportRecord>, CliError> {
    if threads <= 1 {
        return Ok(jobs.iter().map(|(s, t)| run_task(s, t, seed)).collect());
    }
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| CliError::Setup(format!("thread pool: {e}")))?;
    Ok(pool.install(|| jobs.par_iter().map(|(s, t)| run_task(s, t, seed)).collect()))
}

/// Runs every task of a config in order.
pub fn run_config(config: &ExperimentConfig, seed: u64, threads: usize) -> Result<Vec<ReportRecord>, CliError> {
    let jobs: Vec<(&Subject, &Task)> = config.tasks.iter().map(|t| (&config.subject, &t.task)).collect();
    run_jobs(&jobs, seed, threads)
}

/// Runs the survey family and returns its records.
pub fn run_survey(configs: &[ExperimentConfig], seed: u64, threads: usize) -> Result<Vec<ReportRecord>, CliError> {
    let family = survey::family(configs).map_err(|e| CliError::Setup(e.to_string()))?;
    let tasks: Vec<Vec<Task>> = family.iter().map(survey::survey_tasks).collect();
    let jobs: Vec<(&Subject, &Task)> = family.iter().zip(&tasks).flat_map(|(s, ts)| ts.iter().map(move |t| (s, t))).collect();
    run_jobs(&jobs, seed, threads)
}

/// Writes the records: `CHECK` lines to `out`, JSON lines to `report` if set.
pub fn write_records(records: &[ReportRecord], out: &mut dyn Write, report: Option<&Path>) -> Result<(), CliError> {
    let io_err = |path: &Path, source| CliError::Io { path: path.into(), source };
    match report {
        Some(path) => {
            let file = fs::File::create(path).map_err(|e| io_err(path, e))?;
            let mut file = io::BufWriter::new(file);
            report::emit(records, out, Some(&mut file)).map_err(|e| io_err(path, e))
        }
        None => report::emit(records, out, None).map_err(|e| io_err(Path::new("<stdout>"), e)),
    }
}
