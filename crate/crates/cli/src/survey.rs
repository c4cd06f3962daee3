//! Functor quotient sizes over a family of algebras.

use azumaya_core::{samples, Algebra, AlgebraWithInvolution, FiniteFreeExtension, Result};

use crate::config::{ExperimentConfig, Subject};
use crate::report::ReportRecord;
use crate::tasks::{FunctorKind, NamedExt, Task};

/// Exponents tabulated for every subject.
pub const EXPONENTS: [u32; 3] = [0, 2, 3];

/// Subjects above this size are only surveyed over the trivial extension.
const SPLIT_EXTENSION_LIMIT: u64 = 10_000;

/// The built-in family: every shipped unitary algebra plus a few algebras of
/// the first kind.
pub fn builtin_family() -> Result<Vec<Subject>> {
    let mut out: Vec<Subject> = samples::unitary_catalog()?.into_iter().map(Subject::from_involution).collect();
    let first_kind = [
        AlgebraWithInvolution::transpose(samples::matrix_algebra(3, 2)?)?,
        AlgebraWithInvolution::transpose(samples::matrix_algebra(5, 2)?)?,
        AlgebraWithInvolution::canonical(samples::quaternions(5)?)?,
    ];
    for a in first_kind {
        let label = format!("{} with {} involution", a.algebra().label(), a.kind());
        out.push(Subject::from_involution(a.with_label(label)));
    }
    let q7: Algebra = samples::quaternions(7)?;
    out.push(Subject::from_algebra(q7));
    Ok(out)
}

/// Functor tasks for one subject: linear and, for unitary involutions,
/// unitary, for each exponent over the trivial and the split extension.
pub fn survey_tasks(subject: &Subject) -> Vec<Task> {
    let t = FiniteFreeExtension::trivial(&subject.ring);
    let mut exts = vec![NamedExt { name: "trivial".into(), ext: t.clone() }];
    let small = subject.algebra.as_ref().ok().and_then(|a| a.element_count()).is_some_and(|n| n <= SPLIT_EXTENSION_LIMIT);
    if small {
        let split = FiniteFreeExtension::product(&t, &t).expect("product of free extensions");
        exts.push(NamedExt { name: "split".into(), ext: split });
    }
    let unitary = subject.involution.as_ref().is_some_and(|a| a.is_unitary());
    let mut tasks = Vec::new();
    for ext in &exts {
        for d in EXPONENTS {
            tasks.push(Task::Functor { kind: FunctorKind::Linear, d, ext: ext.clone() });
            if unitary {
                tasks.push(Task::Functor { kind: FunctorKind::Unitary, d, ext: ext.clone() });
            }
        }
    }
    tasks
}

/// Subjects from configs when any are given, otherwise the built-in family.
pub fn family(configs: &[ExperimentConfig]) -> Result<Vec<Subject>> {
    if configs.is_empty() {
        builtin_family()
    } else {
        Ok(configs.iter().map(|c| c.subject.clone()).collect())
    }
}

/// A fixed-width table of the functor records.
pub fn table(records: &[ReportRecord]) -> String {
    let metric = |r: &ReportRecord, k: &str| r.metrics.get(k).map(|v| v.to_string()).unwrap_or_else(|| "-".into());
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let (kind, over) = split_detail(&r.detail);
            vec![
                r.subject.clone(),
                kind,
                over,
                metric(r, "d"),
                metric(r, "group"),
                metric(r, "subgroup"),
                metric(r, "order"),
                r.status.to_string(),
            ]
        })
        .collect();
    let header = ["subject", "functor", "extension", "d", "|G|", "|H|", "|G/H|", "status"];
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in &rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn split_detail(detail: &str) -> (String, String) {
    // "<kind> functor over <ext>: ..."
    let kind = detail.split(' ').next().unwrap_or("").to_string();
    let rest = detail.split_once(" over ").map(|x| x.1).unwrap_or("");
    let over = rest.split_once(':').map(|x| x.0).unwrap_or(rest).to_string();
    (kind, over)
}
