mod check;
mod derive;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pplie_core::acceptance;
use pplie_core::corpus::{self, Corpus};
use pplie_core::{CheckReport, Error};

use crate::check::CheckKind;
use crate::derive::Construction;

#[derive(Parser)]
#[command(name = "pplie", version, about = "Exact checks and constructions for post-Lie and pp-post-Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure. Files may also name bundled corpus entries.
    Check {
        kind: CheckKind,
        #[arg(required = true)]
        files: Vec<String>,
        /// Product to check for `lie` and `pre-lie`.
        #[arg(long)]
        op: Option<String>,
        /// Rota-Baxter weight; defaults to the map's `weight` scalar, then 1.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Evaluate the coalgebra identities directly instead of on the dual algebra.
        #[arg(long)]
        direct: bool,
    },
    /// Build a derived structure and write it to a document.
    Derive {
        construction: Construction,
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Work with the bundled example corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Run the acceptance pipeline.
    Verify {
        /// Directory whose `<name>.txt` files replace bundled fixtures.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Apply a bundled mutation before verifying.
        #[arg(long)]
        mutate: Option<String>,
    },
    /// List fixtures and mutations.
    List,
    /// Write every fixture in canonical form to a directory.
    Export { dir: PathBuf },
}

/// Report detail level from `PPLIE_VERBOSITY`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verbosity {
    Quiet,
    Normal,
    Full,
}

impl Verbosity {
    fn from_env() -> Self {
        match std::env::var("PPLIE_VERBOSITY").as_deref() {
            Ok("0") | Ok("quiet") => Verbosity::Quiet,
            Ok("2") | Ok("full") => Verbosity::Full,
            _ => Verbosity::Normal,
        }
    }
}

pub fn render(report: &CheckReport, v: Verbosity) -> String {
    match v {
        _ if report.passed => "PASS".to_string(),
        Verbosity::Quiet => "FAIL".to_string(),
        Verbosity::Normal => {
            let first = report.first().map(|w| format!("\n  {w}")).unwrap_or_default();
            format!("FAIL ({} violations){first}", report.total)
        }
        Verbosity::Full => report.to_string().trim_end().to_string(),
    }
}

/// A failed command: exit 1 for violations, 2 for usage or input errors.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition { what, report } => Failure {
                code: 1,
                message: format!("precondition failed: {what}\n{}", render(&report, Verbosity::from_env())),
            },
            Error::NotLie(_) | Error::NotPreLie(_) | Error::Singular | Error::DivisionByZero => Failure {
                code: 1,
                message: e.to_string(),
            },
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn verify(dir: Option<PathBuf>, mutate: Option<String>) -> Result<bool, Failure> {
    let mut c = match dir {
        Some(d) => Corpus::with_dir(d)?,
        None => Corpus::bundled(),
    };
    if let Some(m) = mutate {
        let (_, target, text) = corpus::MUTATIONS
            .iter()
            .find(|(name, _, _)| *name == m)
            .ok_or_else(|| Failure::usage(format!("unknown mutation `{m}`")))?;
        c.docs.insert(target.to_string(), pplie_core::io::Document::parse(text)?);
    }
    let verbosity = Verbosity::from_env();
    let results = acceptance::run(&c);
    for crit in &results {
        println!("{crit}");
        for s in &crit.checks {
            if !s.passed && verbosity > Verbosity::Quiet {
                println!("    FAIL {}: {}", s.name, s.detail);
            } else if verbosity == Verbosity::Full {
                println!("    PASS {} {}", s.name, s.detail);
            }
        }
    }
    let failed: Vec<_> = results.iter().filter(|c| !c.passed()).map(|c| c.id).collect();
    match failed.first() {
        None => {
            println!("all criteria pass");
            Ok(true)
        }
        Some(first) => {
            println!("first failing criterion: {first} (failing: {})", failed.join(", "));
            Ok(false)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Check {
            kind,
            files,
            op,
            weight,
            direct,
        } => {
            let opts = check::Options { op, weight, direct };
            let report = check::run(kind, &files, &opts)?;
            println!("{}", render(&report, Verbosity::from_env()));
            Ok(report.passed)
        }
        Command::Derive {
            construction,
            files,
            output,
        } => {
            let doc = derive::run(construction, &files)?;
            match output {
                Some(path) => doc.save(&path)?,
                None => print!("{}", doc.render()),
            }
            Ok(true)
        }
        Command::Corpus { action } => match action {
            CorpusAction::Verify { dir, mutate } => verify(dir, mutate),
            CorpusAction::List => {
                for (name, _) in corpus::FIXTURES {
                    println!("{name}");
                }
                for (name, target, _) in corpus::MUTATIONS {
                    println!("{name} (mutation of {target})");
                }
                Ok(true)
            }
            CorpusAction::Export { dir } => {
                Corpus::bundled().export(dir)?;
                Ok(true)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
