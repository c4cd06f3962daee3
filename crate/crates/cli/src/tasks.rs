//! Task names, parameters and execution. Every task returns exactly one
//! record; algebra errors become `ERROR` records rather than aborting the run.

use std::fmt;
use std::str::FromStr;

use azumaya_core::groups::{enumerate_special, enumerate_unitary, functor_linear, functor_unitary, nrd_image, nrd_of_units};
use azumaya_core::hilbert90::{h90_witness, inclusion_check};
use azumaya_core::norm_principle::{np_bruteforce_check, np_witness, pm_split, DirectStep};
use azumaya_core::transfers::{norm_inclusion_check, ta_check, tb_check, transfer_linear, transfer_on_functor, Functor};
use azumaya_core::{
    Algebra, AlgebraElem, AlgebraWithInvolution, FiniteFreeExtension, InvolutionKind, NpRoute, NpWitness, PolyExtension,
    SpecialKind,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::config::Subject;
use crate::report::{ReportRecord, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaskName {
    AzumayaVerify,
    Nrd,
    H90,
    H90All,
    NpWitness,
    NpBruteforce,
    Groups,
    Functor,
    NormInclusion,
    Ta,
    Tb,
    InvolutionKind,
}

const NAMES: [(TaskName, &str); 12] = [
    (TaskName::AzumayaVerify, "azumaya-verify"),
    (TaskName::Nrd, "nrd"),
    (TaskName::H90, "h90"),
    (TaskName::H90All, "h90-all"),
    (TaskName::NpWitness, "np-witness"),
    (TaskName::NpBruteforce, "np-bruteforce"),
    (TaskName::Groups, "groups"),
    (TaskName::Functor, "functor"),
    (TaskName::NormInclusion, "norm-inclusion"),
    (TaskName::Ta, "ta"),
    (TaskName::Tb, "tb"),
    (TaskName::InvolutionKind, "involution-kind"),
];

impl TaskName {
    pub fn as_str(self) -> &'static str {
        NAMES.iter().find(|(n, _)| *n == self).expect("every name listed").1
    }

    /// Parameters the task accepts.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            TaskName::AzumayaVerify => &["expect"],
            TaskName::Nrd => &["element", "matrix", "samples"],
            TaskName::H90 | TaskName::NpWitness => &["element", "matrix"],
            TaskName::H90All | TaskName::NpBruteforce | TaskName::Groups => &[],
            TaskName::Functor => &["kind", "d", "ext"],
            TaskName::NormInclusion => &["ext"],
            TaskName::Ta => &["t1", "t2", "d"],
            TaskName::Tb => &["modulus", "samples"],
            TaskName::InvolutionKind => &["expect"],
        }
    }
}

impl fmt::Display for TaskName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TaskName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        NAMES.iter().find(|(_, n)| *n == s).map(|(t, _)| *t).ok_or_else(|| {
            let known: Vec<&str> = NAMES.iter().map(|(_, n)| *n).collect();
            format!("unknown task {s:?} (known: {})", known.join(", "))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctorKind {
    Linear,
    Unitary,
}

/// An extension together with the text it was given as.
#[derive(Clone, Debug)]
pub struct NamedExt {
    pub name: String,
    pub ext: FiniteFreeExtension,
}

#[derive(Clone, Debug)]
pub enum Task {
    AzumayaVerify { expect: bool },
    Nrd { element: Option<AlgebraElem>, samples: usize },
    H90 { element: Option<AlgebraElem> },
    H90All,
    NpWitness { element: Option<AlgebraElem> },
    NpBruteforce,
    Groups,
    Functor { kind: FunctorKind, d: u32, ext: NamedExt },
    NormInclusion { ext: NamedExt },
    Ta { t1: NamedExt, t2: NamedExt, d: u32 },
    Tb { ext: PolyExtension, samples: usize },
    InvolutionKind { expect: Option<InvolutionKind> },
}

impl Task {
    pub fn name(&self) -> TaskName {
        match self {
            Task::AzumayaVerify { .. } => TaskName::AzumayaVerify,
            Task::Nrd { .. } => TaskName::Nrd,
            Task::H90 { .. } => TaskName::H90,
            Task::H90All => TaskName::H90All,
            Task::NpWitness { .. } => TaskName::NpWitness,
            Task::NpBruteforce => TaskName::NpBruteforce,
            Task::Groups => TaskName::Groups,
            Task::Functor { .. } => TaskName::Functor,
            Task::NormInclusion { .. } => TaskName::NormInclusion,
            Task::Ta { .. } => TaskName::Ta,
            Task::Tb { .. } => TaskName::Tb,
            Task::InvolutionKind { .. } => TaskName::InvolutionKind,
        }
    }
}

type TaskResult = Result<ReportRecord, String>;

fn algebra(s: &Subject) -> Result<&Algebra, String> {
    s.algebra.as_ref().map_err(|e| format!("algebra unavailable: {e}"))
}

fn involution(s: &Subject) -> Result<&AlgebraWithInvolution, String> {
    s.involution.as_ref().ok_or_else(|| "the config declares no involution".to_string())
}

fn unitary(s: &Subject) -> Result<&AlgebraWithInvolution, String> {
    let a = involution(s)?;
    if !a.is_unitary() {
        return Err(format!("needs a unitary involution, got {}", a.kind()));
    }
    Ok(a)
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

/// Runs one task. `seed` drives every random choice the task makes.
pub fn run_task(subject: &Subject, task: &Task, seed: u64) -> ReportRecord {
    let name = task.name().as_str();
    let result = match task {
        Task::AzumayaVerify { expect } => azumaya_verify(subject, *expect),
        Task::Nrd { element, samples } => nrd(subject, element.as_ref(), *samples, seed),
        Task::H90 { element } => h90(subject, element.as_ref()),
        Task::H90All => h90_all(subject),
        Task::NpWitness { element } => np_witness_task(subject, element.as_ref(), seed),
        Task::NpBruteforce => np_bruteforce(subject),
        Task::Groups => groups(subject),
        Task::Functor { kind, d, ext } => functor(subject, *kind, *d, ext),
        Task::NormInclusion { ext } => norm_inclusion(subject, ext),
        Task::Ta { t1, t2, d } => ta(subject, t1, t2, *d),
        Task::Tb { ext, samples } => tb(subject, ext, *samples, seed),
        Task::InvolutionKind { expect } => involution_kind(subject, *expect),
    };
    let mut record = result.unwrap_or_else(|e| ReportRecord::error(name, &subject.label, e));
    record.task = name.to_string();
    record.subject = subject.label.clone();
    record
}

fn record() -> ReportRecord {
    ReportRecord::new("", "")
}

fn azumaya_verify(s: &Subject, expect: bool) -> TaskResult {
    let report = match &s.algebra {
        Ok(a) if a.center().etale().is_some() => a.azumaya_verify_over_center(),
        _ => s.table.azumaya_verify(),
    };
    let mut r = record();
    r.status = Status::from_bool(report.is_azumaya == expect);
    r.metric("azumaya", report.is_azumaya as u64).metric("matrix_size", report.matrix_size as u64);
    r.detail = format!("canonical map determinant {}", report.determinant);
    r.witness = Some(json!({ "determinant": report.determinant }));
    Ok(r)
}

fn nrd(s: &Subject, element: Option<&AlgebraElem>, samples: usize, seed: u64) -> TaskResult {
    let a = algebra(s)?;
    let c = a.center().ring();
    let mut r = record();
    if let Some(x) = element {
        let n = a.nrd(x).map_err(err)?;
        let consistent = a.is_unit(x) == c.is_unit(n);
        r.status = Status::from_bool(consistent);
        r.metric("unit", a.is_unit(x) as u64);
        r.detail = format!("nrd {} = {}", a.format(x), c.format(n));
        r.witness = Some(json!({ "element": a.format(x), "nrd": c.format(n) }));
        return Ok(r);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0usize;
    for _ in 0..samples {
        let x = a.random_unit(&mut rng);
        let y = a.random_unit(&mut rng);
        let lhs = a.nrd(&a.mul(&x, &y)).map_err(err)?;
        if lhs != c.mul(a.nrd(&x).map_err(err)?, a.nrd(&y).map_err(err)?) {
            mismatches += 1;
        }
    }
    let image = nrd_of_units(a).map_err(err)?;
    r.status = Status::from_bool(mismatches == 0);
    r.metric("samples", samples as u64)
        .metric("mismatches", mismatches as u64)
        .metric("image", image.len() as u64)
        .metric("center_units", c.units().len() as u64);
    r.detail = format!("multiplicativity on {samples} seeded unit pairs; Nrd(A*) has {} elements", image.len());
    Ok(r)
}

fn h90(s: &Subject, element: Option<&AlgebraElem>) -> TaskResult {
    let a = unitary(s)?;
    let x = element.ok_or("no element")?;
    let w = h90_witness(a, x).map_err(err)?;
    let alg = a.algebra();
    let c = a.center().ring();
    let mut r = record();
    r.status = Status::from_bool(w.verified);
    r.metric("lambda_rejections", w.rejected as u64);
    r.detail = format!("b sigma(b)^-1 = {}", alg.format(x));
    r.witness = Some(json!({
        "input": alg.format(&w.input),
        "lambda": c.format(w.lambda),
        "c": c.format(w.c),
        "b": alg.format(&w.b),
    }));
    Ok(r)
}

fn h90_all(s: &Subject) -> TaskResult {
    let a = unitary(s)?;
    let report = inclusion_check(a).map_err(err)?;
    let mut r = record();
    r.status = Status::from_bool(report.passed());
    r.metric("unitary", report.unitary as u64)
        .metric("verified", report.verified as u64)
        .metric("lambda_rejections", report.lambda_rejections as u64);
    r.detail = format!("{}/{} unitary elements have a verified witness", report.verified, report.unitary);
    if !report.failures.is_empty() {
        let f: Vec<String> = report.failures.iter().map(|x| a.algebra().format(x)).collect();
        r.witness = Some(json!({ "failures": f }));
    }
    Ok(r)
}

fn step_json(a: &AlgebraWithInvolution, s: &DirectStep) -> Value {
    let alg = a.algebra();
    json!({
        "factor": alg.format(&s.factor),
        "v": alg.format(&s.v),
        "r": alg.base().format(s.r),
        "u": alg.format(&s.u),
        "w": alg.format(&s.w),
    })
}

pub fn witness_json(a: &AlgebraWithInvolution, w: &NpWitness) -> Value {
    let alg = a.algebra();
    let (route, v2, seed) = match &w.route {
        NpRoute::Direct => ("direct", None, None),
        NpRoute::Factored { v2, seed } => ("factored", Some(alg.format(v2)), *seed),
    };
    json!({
        "input": alg.format(&w.input),
        "route": route,
        "v2": v2,
        "seed": seed,
        "steps": w.steps.iter().map(|s| step_json(a, s)).collect::<Vec<_>>(),
        "w": alg.format(&w.w),
    })
}

fn np_witness_task(s: &Subject, element: Option<&AlgebraElem>, seed: u64) -> TaskResult {
    let a = unitary(s)?;
    let split = pm_split(a).map_err(err)?;
    let alg = a.algebra();
    let mut r = record();
    if let Some(x) = element {
        let w = np_witness(&split, x, seed).map_err(err)?;
        r.status = Status::from_bool(w.verified);
        r.metric("direct", matches!(w.route, NpRoute::Direct) as u64);
        r.detail = format!("w sigma(w) = 1 and nrd(w) = nrd(a)^(1-sigma) for a = {}", alg.format(x));
        r.witness = Some(witness_json(a, &w));
        return Ok(r);
    }
    let (mut units, mut verified, mut direct) = (0usize, 0usize, 0usize);
    let mut failures = Vec::new();
    for x in alg.elements() {
        if !alg.is_unit(&x) {
            continue;
        }
        units += 1;
        match np_witness(&split, &x, seed) {
            Ok(w) if w.verified => {
                verified += 1;
                direct += matches!(w.route, NpRoute::Direct) as usize;
            }
            Ok(_) => failures.push(alg.format(&x)),
            Err(e) => failures.push(format!("{}: {e}", alg.format(&x))),
        }
    }
    r.status = Status::from_bool(verified == units);
    r.metric("units", units as u64)
        .metric("verified", verified as u64)
        .metric("direct", direct as u64)
        .metric("factored", (verified - direct) as u64)
        .ratio("direct_fraction", direct, units);
    r.detail = format!("{verified}/{units} units have a verified witness, {direct} by the direct route");
    if !failures.is_empty() {
        r.witness = Some(json!({ "failures": failures }));
    }
    Ok(r)
}

fn np_bruteforce(s: &Subject) -> TaskResult {
    let a = unitary(s)?;
    let report = np_bruteforce_check(a).map_err(err)?;
    let c = a.center().ring();
    let fmt = |v: &[azumaya_core::EtaleElem]| v.iter().map(|x| c.format(*x)).collect::<Vec<_>>();
    let mut r = record();
    r.status = Status::from_bool(report.equal);
    r.metric("unitary", report.unitary_count as u64)
        .metric("units", report.unit_count as u64)
        .metric("image", report.unitary_norms.len() as u64)
        .metric("twisted_image", report.twisted_norms.len() as u64);
    r.detail =
        format!("Nrd(U(A)) has {} elements, Nrd(A*)^(1-sigma) has {}", report.unitary_norms.len(), report.twisted_norms.len());
    r.witness = Some(json!({ "unitary_norms": fmt(&report.unitary_norms), "twisted_norms": fmt(&report.twisted_norms) }));
    Ok(r)
}

fn groups(s: &Subject) -> TaskResult {
    let alg = algebra(s)?;
    let mut r = record();
    let units = alg.units();
    let image = nrd_image(alg, &units).map_err(err)?;
    // SL is defined by the algebra alone; any involution will do for the
    // enumeration helper, so use a trivial wrapper when none is declared.
    let sl = match &s.involution {
        Some(a) => enumerate_special(a, SpecialKind::SL).map_err(err)?.len(),
        None => {
            let one = alg.center().ring().one();
            let mut count = 0;
            for x in alg.elements() {
                if alg.nrd(&x).map_err(err)? == one {
                    count += 1;
                }
            }
            count
        }
    };
    let mut ok = sl * image.len() == units.len();
    r.metric("units", units.len() as u64).metric("sl", sl as u64).metric("units_image", image.len() as u64);
    let mut detail = format!("|A*| = {}, |SL| = {sl}, |Nrd(A*)| = {}", units.len(), image.len());
    if let Some(a) = &s.involution {
        let u = enumerate_unitary(a);
        let u_image = nrd_image(alg, &u).map_err(err)?;
        r.metric("unitary", u.len() as u64).metric("unitary_image", u_image.len() as u64);
        detail.push_str(&format!(", |U| = {}, |Nrd(U)| = {}", u.len(), u_image.len()));
        let special = match a.kind() {
            InvolutionKind::Unitary => Some(SpecialKind::SU),
            InvolutionKind::Orthogonal => Some(SpecialKind::SO),
            InvolutionKind::Symplectic => None,
        };
        if let Some(kind) = special {
            let n = enumerate_special(a, kind).map_err(err)?.len();
            r.metric(&kind.to_string().to_lowercase(), n as u64);
            detail.push_str(&format!(", |{kind}| = {n}"));
            ok &= n * u_image.len() == u.len();
        }
    }
    r.status = Status::from_bool(ok);
    r.detail = detail;
    Ok(r)
}

fn functor(s: &Subject, kind: FunctorKind, d: u32, named: &NamedExt) -> TaskResult {
    let alg = algebra(s)?;
    let ext = &named.ext;
    let (value, map) = match kind {
        FunctorKind::Linear => {
            let value = functor_linear(alg, ext, d).map_err(err)?;
            let map = match &s.involution {
                Some(a) => transfer_on_functor(Functor::Linear(d), a, ext),
                None => transfer_linear(alg, d, ext),
            };
            (value, map)
        }
        FunctorKind::Unitary => {
            let a = unitary(s)?;
            let value = functor_unitary(a, ext, d).map_err(err)?;
            (value, transfer_on_functor(Functor::Unitary(d), a, ext))
        }
    };
    let mut r = record();
    let factors: u64 = value.invariant_factors().iter().product();
    r.metric("order", value.order() as u64)
        .metric("d", d as u64)
        .metric("group", value.group().len() as u64)
        .metric("subgroup", value.subgroup().len() as u64);
    let kind_name = if kind == FunctorKind::Linear { "linear" } else { "unitary" };
    match map {
        Ok(m) => {
            r.status = Status::from_bool(factors == value.order() as u64);
            r.metric("target_order", m.target.order() as u64);
            r.detail = format!("{kind_name} functor over {}: {}; transfer well defined", named.name, value.describe());
            r.witness = Some(json!({
                "invariant_factors": value.invariant_factors(),
                "transfer": m.images.iter().map(|(x, y)| [value.ring().format(*x), m.target.ring().format(*y)]).collect::<Vec<_>>(),
            }));
        }
        Err(e) => {
            r.status = Status::Fail;
            r.detail = format!("{kind_name} functor over {}: {}; {e}", named.name, value.describe());
        }
    }
    Ok(r)
}

fn norm_inclusion(s: &Subject, ext: &NamedExt) -> TaskResult {
    let alg = algebra(s)?;
    let report = norm_inclusion_check(alg, &ext.ext).map_err(err)?;
    let c = alg.center().ring();
    let mut r = record();
    r.status = Status::from_bool(report.inclusion);
    r.metric("transferred", report.transferred.len() as u64)
        .metric("reduced_norms", report.reduced_norms.len() as u64)
        .metric("equality", report.equality as u64);
    r.detail = format!("N(Nrd(A_T*)) in Nrd(A*) over {}", ext.name);
    r.witness = Some(json!({
        "transferred": report.transferred.iter().map(|x| c.format(*x)).collect::<Vec<_>>(),
        "reduced_norms": report.reduced_norms.iter().map(|x| c.format(*x)).collect::<Vec<_>>(),
    }));
    Ok(r)
}

fn ta(s: &Subject, t1: &NamedExt, t2: &NamedExt, d: u32) -> TaskResult {
    let alg = algebra(s)?;
    let report = ta_check(alg, &t1.ext, &t2.ext, d).map_err(err)?;
    let mut r = record();
    r.status = Status::from_bool(report.passed());
    r.metric("checked", report.checked as u64)
        .metric("mismatches", report.mismatches as u64)
        .metric("source_order", report.source_order as u64)
        .metric("target_order", report.target_order as u64);
    r.detail = format!("additivity over {} x {} with d = {d}", t1.name, t2.name);
    Ok(r)
}

fn tb(s: &Subject, ext: &PolyExtension, samples: usize, seed: u64) -> TaskResult {
    let report = tb_check(ext, samples, seed).map_err(err)?;
    let mut r = record();
    r.status = Status::from_bool(report.passed());
    r.metric("samples", report.samples as u64)
        .metric("unit_samples", report.unit_samples as u64)
        .metric("evaluation_failures", report.evaluation_failures as u64)
        .metric("nonconstant_unit_norms", report.nonconstant_unit_norms as u64)
        .metric("seed", report.seed);
    r.detail = format!("evaluation and unit constancy over {}[t]", s.ring);
    Ok(r)
}

fn involution_kind(s: &Subject, expect: Option<InvolutionKind>) -> TaskResult {
    let a = involution(s)?;
    let alg = a.algebra();
    let n = alg.degree();
    let k = alg.center().rank();
    let rank = a.symmetric_rank().map_err(err)?;
    let expected_rank = match a.kind() {
        InvolutionKind::Orthogonal => k * n * (n + 1) / 2,
        InvolutionKind::Symplectic => k * n * (n - 1) / 2,
        InvolutionKind::Unitary => n * n,
    };
    let mut r = record();
    r.status = Status::from_bool(rank == expected_rank && expect.is_none_or(|e| e == a.kind()));
    r.metric("symmetric_rank", rank as u64).metric("expected_rank", expected_rank as u64).metric("degree", n as u64);
    r.detail = format!("{} involution", a.kind());
    Ok(r)
}
