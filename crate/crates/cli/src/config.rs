//! The line-oriented experiment config.
//!
//! ```text
//! seed = 7
//! report = out.jsonl
//!
//! [ring]
//! spec = zmod 3
//!
//! [etale]
//! s = -1
//!
//! [algebra]
//! form = split
//! degree = 2
//! involution = hermitian(identity)
//!
//! [tasks]
//! azumaya-verify
//! np-witness matrix=1,0,0,1
//! functor kind=unitary d=2 ext=split
//! ```
//!
//! Top-level keys come before the first section. Lines in `[tasks]` are a
//! task name followed by `key=value` parameters. `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use azumaya_core::ring::split_top_level;
use azumaya_core::{
    Algebra, AlgebraElem, AlgebraWithInvolution, Center, FiniteFreeExtension, InvolutionKind, PolyExtension, QuadraticEtale,
    RingElem, RingMatrix, RingSpec, StructureTable,
};

use crate::tasks::{FunctorKind, NamedExt, Task, TaskName};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Semantic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    pub line: usize,
    pub kind: ErrorKind,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Syntax => "syntax error",
            ErrorKind::Semantic => "semantic error",
        };
        if self.line == 0 {
            write!(f, "{kind}: {}", self.message)
        } else {
            write!(f, "line {}: {kind}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ConfigError {}

fn syntax(line: usize, message: impl Into<String>) -> ConfigError {
    ConfigError { line, kind: ErrorKind::Syntax, message: message.into() }
}

fn semantic(line: usize, message: impl fmt::Display) -> ConfigError {
    ConfigError { line, kind: ErrorKind::Semantic, message: message.to_string() }
}

/// The algebra a config describes. A table whose center is not supported is
/// kept so that `azumaya-verify` can still report on it.
#[derive(Clone, Debug)]
pub struct Subject {
    pub label: String,
    pub ring: RingSpec,
    pub table: StructureTable,
    pub algebra: Result<Algebra, String>,
    pub involution: Option<AlgebraWithInvolution>,
}

impl Subject {
    pub fn from_involution(a: AlgebraWithInvolution) -> Self {
        let label = a.label().to_string();
        Self {
            label,
            ring: a.algebra().base().clone(),
            table: a.algebra().table().clone(),
            algebra: Ok(a.algebra().clone()),
            involution: Some(a),
        }
    }

    pub fn from_algebra(a: Algebra) -> Self {
        Self { label: a.label().to_string(), ring: a.base().clone(), table: a.table().clone(), algebra: Ok(a), involution: None }
    }
}

#[derive(Clone, Debug)]
pub struct TaskSpec {
    pub line: usize,
    pub task: Task,
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub subject: Subject,
    pub tasks: Vec<TaskSpec>,
    pub seed: u64,
    pub report: Option<PathBuf>,
    /// Unknown keys tolerated outside strict mode.
    pub warnings: Vec<String>,
}

struct Entry {
    line: usize,
    key: String,
    value: String,
}

#[derive(Default)]
struct Sections {
    top: Vec<Entry>,
    ring: Vec<Entry>,
    etale: Vec<Entry>,
    algebra: Vec<Entry>,
    tasks: Vec<(usize, String)>,
    seen: Vec<String>,
}

fn lex(text: &str) -> Result<Sections, ConfigError> {
    let mut out = Sections::default();
    let mut current: Option<String> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if content.starts_with('[') {
            let name = content
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| syntax(line, format!("malformed section header {content:?}")))?
                .trim()
                .to_string();
            if !matches!(name.as_str(), "ring" | "etale" | "algebra" | "tasks") {
                return Err(syntax(line, format!("unknown section [{name}]")));
            }
            if out.seen.contains(&name) {
                return Err(syntax(line, format!("section [{name}] appears twice")));
            }
            out.seen.push(name.clone());
            current = Some(name);
            continue;
        }
        if current.as_deref() == Some("tasks") {
            out.tasks.push((line, content.to_string()));
            continue;
        }
        let (key, value) =
            content.split_once('=').ok_or_else(|| syntax(line, format!("expected `key = value`, got {content:?}")))?;
        let entry = Entry { line, key: key.trim().to_string(), value: value.trim().to_string() };
        if entry.key.is_empty() {
            return Err(syntax(line, "empty key"));
        }
        let bucket = match current.as_deref() {
            None => &mut out.top,
            Some("ring") => &mut out.ring,
            Some("etale") => &mut out.etale,
            Some(_) => &mut out.algebra,
        };
        if bucket.iter().any(|e| e.key == entry.key) {
            return Err(syntax(line, format!("duplicate key {:?}", entry.key)));
        }
        bucket.push(entry);
    }
    Ok(out)
}

/// Keyed access to one section that tracks which keys were used.
struct Section<'a> {
    name: &'a str,
    entries: &'a [Entry],
}

impl<'a> Section<'a> {
    fn get(&self, key: &str) -> Option<&'a Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    fn require(&self, key: &str, line: usize) -> Result<&'a Entry, ConfigError> {
        self.get(key).ok_or_else(|| syntax(line, format!("[{}] is missing `{key}`", self.name)))
    }

    fn check_keys(&self, allowed: &[&str], strict: bool, warnings: &mut Vec<String>) -> Result<(), ConfigError> {
        for e in self.entries {
            if !allowed.contains(&e.key.as_str()) {
                let msg = format!("unknown key {:?} in {}", e.key, self.name);
                if strict {
                    return Err(syntax(e.line, msg));
                }
                warnings.push(format!("line {}: {msg}", e.line));
            }
        }
        Ok(())
    }
}

/// Parses a ring description: `zmod N`, `prime P`, `quotient(R; c0, ..., 1)`
/// or `product(R1; R2; ...)`.
pub fn parse_ring(text: &str) -> azumaya_core::Result<RingSpec> {
    use azumaya_core::Error;
    let text = text.trim();
    if let Some(n) = text.strip_prefix("zmod") {
        let n: u32 = n.trim().parse().map_err(|_| Error::Parse(format!("bad modulus in {text:?}")))?;
        return RingSpec::zmod(n);
    }
    if let Some(p) = text.strip_prefix("prime") {
        let p: u32 = p.trim().parse().map_err(|_| Error::Parse(format!("bad prime in {text:?}")))?;
        return RingSpec::prime_field(p);
    }
    if let Some(inner) = bracketed(text, "quotient") {
        let parts = split_top_level(inner, ';');
        let [base, coeffs] = parts.as_slice() else {
            return Err(Error::Parse(format!("expected quotient(ring; coefficients), got {text:?}")));
        };
        let base = parse_ring(base)?;
        let modulus = parse_list(&base, coeffs)?;
        return RingSpec::quotient(&base, modulus);
    }
    if let Some(inner) = bracketed(text, "product") {
        let parts = split_top_level(inner, ';').into_iter().map(parse_ring).collect::<azumaya_core::Result<_>>()?;
        return RingSpec::product(parts);
    }
    Err(Error::Parse(format!("unknown ring description {text:?}")))
}

fn bracketed<'a>(text: &'a str, head: &str) -> Option<&'a str> {
    text.strip_prefix(head)?.trim().strip_prefix('(')?.strip_suffix(')')
}

/// A comma-separated list of ring elements.
pub fn parse_list(ring: &RingSpec, text: &str) -> azumaya_core::Result<Vec<RingElem>> {
    split_top_level(text, ',').into_iter().map(|s| ring.parse_elem(s)).collect()
}

/// A square matrix given row-major, or `identity` with the size supplied.
pub fn parse_square(ring: &RingSpec, text: &str, n: usize) -> azumaya_core::Result<RingMatrix> {
    if text.trim() == "identity" {
        return Ok(RingMatrix::identity(ring, n));
    }
    if text.trim() == "hyperbolic" && n % 2 == 0 {
        let mut m = RingMatrix::zeros(ring, n, n);
        for i in 0..n / 2 {
            m.set(2 * i, 2 * i + 1, ring.one());
            m.set(2 * i + 1, 2 * i, ring.one());
        }
        return Ok(m);
    }
    let entries = parse_list(ring, text)?;
    if entries.len() != n * n {
        return Err(azumaya_core::Error::DimensionMismatch(format!("expected {} entries, got {}", n * n, entries.len())));
    }
    RingMatrix::new(ring, n, n, entries)
}

/// A finite free extension of `base`: `trivial`, `split`, `quadratic(s)`,
/// `poly(c0, ..., 1)` or `product(E1; E2)`.
pub fn parse_extension(base: &RingSpec, text: &str) -> azumaya_core::Result<FiniteFreeExtension> {
    use azumaya_core::Error;
    let text = text.trim();
    match text {
        "trivial" => return Ok(FiniteFreeExtension::trivial(base)),
        "split" => {
            let t = FiniteFreeExtension::trivial(base);
            return FiniteFreeExtension::product(&t, &t);
        }
        _ => {}
    }
    if let Some(s) = bracketed(text, "quadratic") {
        let s = base.parse_elem(s)?;
        return FiniteFreeExtension::poly_quotient(base, vec![base.neg(s), base.zero(), base.one()]);
    }
    if let Some(c) = bracketed(text, "poly") {
        return FiniteFreeExtension::poly_quotient(base, parse_list(base, c)?);
    }
    if let Some(inner) = bracketed(text, "product") {
        let parts = split_top_level(inner, ';');
        let [a, b] = parts.as_slice() else {
            return Err(Error::Parse(format!("product takes two extensions, got {text:?}")));
        };
        return FiniteFreeExtension::product(&parse_extension(base, a)?, &parse_extension(base, b)?);
    }
    Err(Error::Parse(format!("unknown extension {text:?}")))
}

/// `c0|c1|...|1`, where `ci` is the comma list of `t`-coefficients of the
/// `x^i` coefficient.
pub fn parse_poly_extension(base: &RingSpec, text: &str) -> azumaya_core::Result<PolyExtension> {
    let coeffs = text
        .split('|')
        .map(|part| parse_list(base, part).map(|c| azumaya_core::Poly::new(base, c)))
        .collect::<azumaya_core::Result<Vec<_>>>()?;
    PolyExtension::new(base, coeffs)
}

fn parse_involution(spec: &str, algebra: Algebra) -> azumaya_core::Result<AlgebraWithInvolution> {
    use azumaya_core::Error;
    let spec = spec.trim();
    let (name, arg) = match spec.find('(') {
        Some(i) if spec.ends_with(')') => (spec[..i].trim(), Some(&spec[i + 1..spec.len() - 1])),
        _ => (spec, None),
    };
    let n = algebra.degree();
    let c = algebra.center().ring().clone();
    let expect = |a: AlgebraWithInvolution, kind: InvolutionKind| {
        if a.kind() == kind {
            Ok(a)
        } else {
            Err(Error::Precondition(format!("form gives a {} involution, not {kind}", a.kind())))
        }
    };
    match (name, arg) {
        ("transpose", None) => AlgebraWithInvolution::transpose(algebra),
        ("conjugate-transpose", None) => AlgebraWithInvolution::conjugate_transpose(algebra),
        ("canonical", None) => AlgebraWithInvolution::canonical(algebra),
        ("hermitian", Some(h)) => {
            let h = parse_square(&c, h, n)?;
            AlgebraWithInvolution::hermitian(algebra, &h)
        }
        ("orthogonal", Some(g)) => {
            let g = parse_square(&c, g, n)?;
            expect(AlgebraWithInvolution::adjoint(algebra, &g)?, InvolutionKind::Orthogonal)
        }
        ("symplectic", Some(g)) => {
            let g = parse_square(&c, g, n)?;
            expect(AlgebraWithInvolution::adjoint(algebra, &g)?, InvolutionKind::Symplectic)
        }
        ("matrix", Some(m)) => {
            let base = algebra.base().clone();
            let m = parse_square(&base, m, algebra.rank())?;
            AlgebraWithInvolution::new(algebra, m)
        }
        _ => Err(Error::Parse(format!("unknown involution {spec:?}"))),
    }
}

const ALGEBRA_KEYS: [&str; 9] = ["form", "degree", "rank", "table", "unit", "a", "b", "involution", "label"];

fn parse_subject(s: &Sections, strict: bool, warnings: &mut Vec<String>) -> Result<Subject, ConfigError> {
    let ring_sec = Section { name: "[ring]", entries: &s.ring };
    ring_sec.check_keys(&["spec"], strict, warnings)?;
    let spec = ring_sec.require("spec", 0)?;
    let ring = parse_ring(&spec.value).map_err(|e| semantic(spec.line, e))?;

    let etale_sec = Section { name: "[etale]", entries: &s.etale };
    etale_sec.check_keys(&["s"], strict, warnings)?;
    let etale = match etale_sec.get("s") {
        Some(e) => {
            let v = ring.parse_elem(&e.value).map_err(|err| semantic(e.line, err))?;
            Some(QuadraticEtale::new(&ring, v).map_err(|err| semantic(e.line, err))?)
        }
        None if s.seen.iter().any(|n| n == "etale") => return Err(syntax(0, "[etale] is missing `s`")),
        None => None,
    };

    let alg = Section { name: "[algebra]", entries: &s.algebra };
    alg.check_keys(&ALGEBRA_KEYS, strict, warnings)?;
    let form = alg.require("form", 0)?;
    let center = match &etale {
        Some(c) => Center::Etale(c.clone()),
        None => Center::Base(ring.clone()),
    };
    let (table, algebra) = match form.value.as_str() {
        "split" => {
            let d = alg.require("degree", form.line)?;
            let n: usize = d.value.parse().map_err(|_| syntax(d.line, format!("bad degree {:?}", d.value)))?;
            if n == 0 {
                return Err(semantic(d.line, "degree must be positive"));
            }
            let a = Algebra::split(&center, n).map_err(|e| semantic(d.line, e))?;
            (a.table().clone(), Ok(a))
        }
        "quaternion" => {
            let a = alg.require("a", form.line)?;
            let b = alg.require("b", form.line)?;
            let av = ring.parse_elem(&a.value).map_err(|e| semantic(a.line, e))?;
            let bv = ring.parse_elem(&b.value).map_err(|e| semantic(b.line, e))?;
            let t = StructureTable::quaternion(&ring, av, bv).map_err(|e| semantic(form.line, e))?;
            let built = Algebra::quaternion(&ring, av, bv).map_err(|e| e.to_string());
            (t, built)
        }
        "table" => {
            let r = alg.require("rank", form.line)?;
            let rank: usize = r.value.parse().map_err(|_| syntax(r.line, format!("bad rank {:?}", r.value)))?;
            let t = alg.require("table", form.line)?;
            let gamma = parse_list(&ring, &t.value).map_err(|e| semantic(t.line, e))?;
            let unit = match alg.get("unit") {
                Some(u) => u.value.parse().map_err(|_| syntax(u.line, format!("bad unit index {:?}", u.value)))?,
                None => 0,
            };
            let table = StructureTable::from_dense(&ring, rank, &gamma, unit).map_err(|e| semantic(t.line, e))?;
            let built = Algebra::from_table(&table).map_err(|e| e.to_string());
            (table, built)
        }
        other => return Err(syntax(form.line, format!("unknown algebra form {other:?}"))),
    };
    if etale.is_some() && form.value != "split" {
        warnings.push("[etale] is ignored unless form = split; table centers are detected".into());
    }
    let mut label = match &algebra {
        Ok(a) => a.label().to_string(),
        Err(_) => format!("table(rank {})", table.rank()),
    };
    if let Some(l) = alg.get("label") {
        label = l.value.clone();
    }
    let algebra = algebra.map(|a| a.with_label(label.clone()));
    let involution = match alg.get("involution") {
        None => None,
        Some(e) if e.value == "none" => None,
        Some(e) => {
            let a = algebra.clone().map_err(|err| semantic(e.line, format!("involution needs an algebra: {err}")))?;
            Some(parse_involution(&e.value, a).map_err(|err| semantic(e.line, err))?.with_label(label.clone()))
        }
    };
    Ok(Subject { label, ring, table, algebra, involution })
}

fn parse_task(line: usize, text: &str, subject: &Subject, strict: bool, warnings: &mut Vec<String>) -> Result<Task, ConfigError> {
    let mut words = text.split_whitespace();
    let name = words.next().expect("non-empty line");
    let name: TaskName = name.parse().map_err(|e: String| syntax(line, e))?;
    let mut params = BTreeMap::new();
    for w in words {
        let (k, v) = w.split_once('=').ok_or_else(|| syntax(line, format!("expected key=value, got {w:?}")))?;
        if params.insert(k.to_string(), v.to_string()).is_some() {
            return Err(syntax(line, format!("duplicate parameter {k:?}")));
        }
    }
    for k in params.keys() {
        if !name.params().contains(&k.as_str()) {
            let msg = format!("task {name} has no parameter {k:?}");
            if strict {
                return Err(syntax(line, msg));
            }
            warnings.push(format!("line {line}: {msg}"));
        }
    }
    build_task(name, &params, subject).map_err(|e| semantic(line, e))
}

fn parse_num<T: std::str::FromStr>(params: &BTreeMap<String, String>, key: &str, default: T) -> Result<T, String> {
    match params.get(key) {
        Some(v) => v.parse().map_err(|_| format!("bad value {v:?} for {key}")),
        None => Ok(default),
    }
}

fn parse_element(params: &BTreeMap<String, String>, subject: &Subject) -> Result<Option<AlgebraElem>, String> {
    let Ok(alg) = &subject.algebra else {
        return Ok(None);
    };
    if let Some(coords) = params.get("element") {
        let v = parse_list(alg.base(), coords).map_err(|e| e.to_string())?;
        if v.len() != alg.rank() {
            return Err(format!("element has {} coordinates, algebra rank is {}", v.len(), alg.rank()));
        }
        return Ok(Some(AlgebraElem(v)));
    }
    if let Some(m) = params.get("matrix") {
        let n = alg.split_degree().ok_or("matrix= needs a split algebra")?;
        let m = parse_square(alg.center().ring(), m, n).map_err(|e| e.to_string())?;
        return Ok(Some(alg.from_matrix(&m)));
    }
    Ok(None)
}

/// Resolves task parameters against the subject.
pub fn build_task(name: TaskName, params: &BTreeMap<String, String>, subject: &Subject) -> Result<Task, String> {
    let ring = &subject.ring;
    let ext = |key: &str| -> Result<NamedExt, String> {
        let name = params.get(key).map(String::as_str).unwrap_or("trivial");
        let ext = parse_extension(ring, name).map_err(|e| e.to_string())?;
        Ok(NamedExt { name: name.to_string(), ext })
    };
    Ok(match name {
        TaskName::AzumayaVerify => Task::AzumayaVerify { expect: parse_num(params, "expect", true)? },
        TaskName::Nrd => Task::Nrd { element: parse_element(params, subject)?, samples: parse_num(params, "samples", 2000)? },
        TaskName::H90 => {
            let element = parse_element(params, subject)?;
            if element.is_none() && subject.algebra.is_ok() {
                return Err("h90 needs element= or matrix=".into());
            }
            Task::H90 { element }
        }
        TaskName::H90All => Task::H90All,
        TaskName::NpWitness => Task::NpWitness { element: parse_element(params, subject)? },
        TaskName::NpBruteforce => Task::NpBruteforce,
        TaskName::Groups => Task::Groups,
        TaskName::Functor => {
            let kind = match params.get("kind").map(String::as_str).unwrap_or("linear") {
                "linear" => FunctorKind::Linear,
                "unitary" => FunctorKind::Unitary,
                other => return Err(format!("unknown functor kind {other:?}")),
            };
            Task::Functor { kind, d: parse_num(params, "d", 2)?, ext: ext("ext")? }
        }
        TaskName::NormInclusion => Task::NormInclusion { ext: ext("ext")? },
        TaskName::Ta => Task::Ta { t1: ext("t1")?, t2: ext("t2")?, d: parse_num(params, "d", 2)? },
        TaskName::Tb => {
            let text = params.get("modulus").ok_or("tb needs modulus=")?;
            let ext = parse_poly_extension(ring, text).map_err(|e| e.to_string())?;
            Task::Tb { ext, samples: parse_num(params, "samples", 200)? }
        }
        TaskName::InvolutionKind => {
            let expect = match params.get("expect").map(String::as_str) {
                None => None,
                Some("orthogonal") => Some(InvolutionKind::Orthogonal),
                Some("symplectic") => Some(InvolutionKind::Symplectic),
                Some("unitary") => Some(InvolutionKind::Unitary),
                Some(other) => return Err(format!("unknown involution kind {other:?}")),
            };
            Task::InvolutionKind { expect }
        }
    })
}

/// Parses and validates a config. With `strict`, unknown keys and task
/// parameters are syntax errors; otherwise they become warnings.
pub fn parse_config(text: &str, strict: bool) -> Result<ExperimentConfig, ConfigError> {
    let sections = lex(text)?;
    let mut warnings = Vec::new();
    let top = Section { name: "top level", entries: &sections.top };
    top.check_keys(&["seed", "report"], strict, &mut warnings)?;
    let seed = match top.get("seed") {
        Some(e) => e.value.parse().map_err(|_| syntax(e.line, format!("seed must be an unsigned integer, got {:?}", e.value)))?,
        None => 0,
    };
    let report = top.get("report").map(|e| PathBuf::from(&e.value));
    let subject = parse_subject(&sections, strict, &mut warnings)?;
    let mut tasks = Vec::new();
    for (line, text) in &sections.tasks {
        let task = parse_task(*line, text, &subject, strict, &mut warnings)?;
        tasks.push(TaskSpec { line: *line, task });
    }
    Ok(ExperimentConfig { subject, tasks, seed, report, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "\
[ring]
spec = zmod 3
[etale]
s = -1
[algebra]
form = split
degree = 2
involution = hermitian(identity)
[tasks]
np-bruteforce
";

    #[test]
    fn minimal_config_parses() {
        let c = parse_config(MINIMAL, true).unwrap();
        assert_eq!(c.tasks.len(), 1);
        assert!(c.subject.involution.as_ref().unwrap().is_unitary());
        assert_eq!(c.seed, 0);
    }

    #[test]
    fn even_modulus_is_semantic() {
        let text = MINIMAL.replace("zmod 3", "zmod 4");
        let err = parse_config(&text, false).unwrap_err();
        assert_eq!((err.line, err.kind), (2, ErrorKind::Semantic));
    }

    #[test]
    fn unknown_key_needs_strict() {
        let text = MINIMAL.replace("degree = 2", "degree = 2\ntolerance = 0.1");
        let err = parse_config(&text, true).unwrap_err();
        assert_eq!((err.line, err.kind), (8, ErrorKind::Syntax));
        let ok = parse_config(&text, false).unwrap();
        assert_eq!(ok.warnings.len(), 1);
    }

    #[test]
    fn non_unit_s_is_semantic() {
        let err = parse_config(&MINIMAL.replace("s = -1", "s = 0"), false).unwrap_err();
        assert_eq!((err.line, err.kind), (4, ErrorKind::Semantic));
    }

    #[test]
    fn ring_descriptions_round_trip() {
        for text in ["zmod 9", "prime 5", "quotient(prime 3; 1, 0, 1)", "product(prime 3; prime 5)"] {
            let r = parse_ring(text).unwrap();
            assert_eq!(parse_ring(&r.to_string()).unwrap().size(), r.size());
        }
        assert!(parse_ring("zmod 4").is_err());
        assert!(parse_ring("field 3").is_err());
    }

    #[test]
    fn extensions_parse() {
        let r = RingSpec::prime_field(5).unwrap();
        assert_eq!(parse_extension(&r, "split").unwrap().rank(), 2);
        assert_eq!(parse_extension(&r, "quadratic(2)").unwrap().rank(), 2);
        assert_eq!(parse_extension(&r, "product(trivial; quadratic(2))").unwrap().rank(), 3);
        assert_eq!(parse_poly_extension(&r, "-1|0,-1|1").unwrap().degree(), 2);
    }

    #[test]
    fn table_form_keeps_non_azumaya_tables() {
        let text = "[ring]\nspec = prime 3\n[algebra]\nform = table\nrank = 2\ntable = 1,0,0,1,0,1,0,0\n[tasks]\nazumaya-verify expect=false\n";
        let c = parse_config(text, true).unwrap();
        assert!(c.subject.algebra.is_err());
    }

    #[test]
    fn unknown_task_is_syntax() {
        let err = parse_config(&MINIMAL.replace("np-bruteforce", "np-brute"), false).unwrap_err();
        assert_eq!(err.kind, ErrorKind::Syntax);
    }
}
