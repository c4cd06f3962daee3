use std::collections::BTreeMap;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use azumaya_cli::config::build_task;
use azumaya_cli::{load_config, run_config, run_survey, survey, write_records, CliError, ExperimentConfig, TaskName};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "azumaya", version, about = "Exact checks for Azumaya algebras with involution over finite rings")]
struct Cli {
    /// Seed for every random choice; overrides the config's `seed`.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write one JSON record per line here; overrides the config's `report`.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Worker threads; records keep their order.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Treat unknown config keys and task parameters as errors.
    #[arg(long, global = true)]
    strict: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Single {
    #[arg(long)]
    config: PathBuf,

    /// Task parameter `key=value`; replaces the config's tasks of this kind.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every task listed in the config.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
    /// Azumaya test of the config's algebra.
    VerifyAzumaya(Single),
    /// Reduced norm of one element, or multiplicativity on seeded samples.
    Nrd(Single),
    /// Hilbert 90 witness for one unitary element.
    H90(Single),
    /// Hilbert 90 witnesses for every unitary element.
    H90All(Single),
    /// Norm-principle witness for one unit, or for all units.
    NpWitness(Single),
    /// Both sides of the norm principle by enumeration.
    NpBruteforce(Single),
    /// Orders of the unit, unitary and special groups.
    Groups(Single),
    /// A functor value and its transfer to the base.
    Functor(Single),
    /// Reduced-norm inclusion and the transfer axioms (norm-inclusion, ta, tb tasks).
    Axioms {
        #[arg(long)]
        config: PathBuf,
    },
    /// Classify the config's involution.
    InvolutionKind(Single),
    /// Tabulate functor quotient sizes over a family of algebras.
    Survey {
        /// Configs to survey; the built-in family when none are given.
        #[arg(long)]
        config: Vec<PathBuf>,
    },
}

fn single(cfg: &mut ExperimentConfig, name: TaskName, params: &[String]) -> Result<(), CliError> {
    let kept: Vec<_> = cfg.tasks.iter().filter(|t| t.task.name() == name).cloned().collect();
    if !params.is_empty() || kept.is_empty() {
        let mut map = BTreeMap::new();
        for p in params {
            let (k, v) = p.split_once('=').ok_or_else(|| CliError::Setup(format!("--param expects key=value, got {p:?}")))?;
            map.insert(k.to_string(), v.to_string());
        }
        let task = build_task(name, &map, &cfg.subject).map_err(|e| CliError::Setup(format!("{name}: {e}")))?;
        cfg.tasks = vec![azumaya_cli::config::TaskSpec { line: 0, task }];
    } else {
        cfg.tasks = kept;
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let (records, report, table) = match cli.command {
        Command::Survey { config } => {
            let configs = config.iter().map(|p| load_config(p, cli.strict)).collect::<Result<Vec<_>, _>>()?;
            let seed = cli.seed.or_else(|| configs.first().map(|c| c.seed)).unwrap_or(0);
            let records = run_survey(&configs, seed, cli.jobs)?;
            let table = survey::table(&records);
            (records, cli.report, Some(table))
        }
        command => {
            let (path, name, params) = match command {
                Command::Run { config } => (config, None, Vec::new()),
                Command::Axioms { config } => (config, Some(None), Vec::new()),
                Command::VerifyAzumaya(s) => (s.config, Some(Some(TaskName::AzumayaVerify)), s.params),
                Command::Nrd(s) => (s.config, Some(Some(TaskName::Nrd)), s.params),
                Command::H90(s) => (s.config, Some(Some(TaskName::H90)), s.params),
                Command::H90All(s) => (s.config, Some(Some(TaskName::H90All)), s.params),
                Command::NpWitness(s) => (s.config, Some(Some(TaskName::NpWitness)), s.params),
                Command::NpBruteforce(s) => (s.config, Some(Some(TaskName::NpBruteforce)), s.params),
                Command::Groups(s) => (s.config, Some(Some(TaskName::Groups)), s.params),
                Command::Functor(s) => (s.config, Some(Some(TaskName::Functor)), s.params),
                Command::InvolutionKind(s) => (s.config, Some(Some(TaskName::InvolutionKind)), s.params),
                Command::Survey { .. } => unreachable!(),
            };
            let mut cfg = load_config(&path, cli.strict)?;
            for w in &cfg.warnings {
                eprintln!("warning: {}: {w}", path.display());
            }
            match name {
                None => {}
                Some(Some(task)) => single(&mut cfg, task, &params)?,
                Some(None) => {
                    let axioms = [TaskName::NormInclusion, TaskName::Ta, TaskName::Tb];
                    cfg.tasks.retain(|t| axioms.contains(&t.task.name()));
                    if cfg.tasks.is_empty() {
                        return Err(CliError::Setup("config lists no norm-inclusion, ta or tb tasks".into()));
                    }
                }
            }
            let seed = cli.seed.unwrap_or(cfg.seed);
            let records = run_config(&cfg, seed, cli.jobs)?;
            (records, cli.report.or(cfg.report.clone()), None)
        }
    };
    write_records(&records, &mut out, report.as_deref())?;
    if let Some(t) = table {
        use std::io::Write;
        writeln!(out).and_then(|_| write!(out, "{t}")).map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
    }
    for r in &records {
        if r.status != azumaya_cli::Status::Pass {
            eprintln!("{} {}: {}", r.task, r.status, r.detail);
        }
    }
    Ok(azumaya_cli::report::exit_code(&records))
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        // A closed stdout (`| head`) is not worth a message.
        Err(CliError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
