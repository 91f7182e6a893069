//! Argument parsing and dispatch for the `spc` binary.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use spc_core::catalog::CATALOG;
use spc_core::FieldSpec;

use crate::render::render;
use crate::report::Report;
use crate::runner::{run_job, run_job_text, RunOptions, EXIT_INPUT_ERROR, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "spc", version, about = "Symbolic-power containment checker")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a job file.
    Run {
        /// Path to the job file.
        job: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Decide a single containment I^(m) ⊆ I^r.
    Check {
        /// Ring, e.g. `QQ[x,y,z]` or `GF(9001)[x,y,z]`.
        #[arg(long)]
        ring: String,
        /// `;`-separated generators, or a catalog name such as `@fermat(3)`.
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List the named ideals and maps.
    List,
}

#[derive(Debug, Args)]
pub struct Flags {
    /// Also write the JSON report to this path.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Recompute over another field, e.g. `GF(9001)`.
    #[arg(long, value_name = "QQ|GF(p)", value_parser = parse_field)]
    pub field: Option<FieldSpec>,
    /// Re-check every witness with the linear-algebra oracle.
    #[arg(long)]
    pub verify_certificates: bool,
    /// Run heavy tasks (round trips and Lemma 3 over QQ along non-monomial maps).
    #[arg(long)]
    pub slow: bool,
    /// Number of worker threads for independent tasks.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Record per-task wall-clock times in the report.
    #[arg(long)]
    pub timings: bool,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

impl Flags {
    fn options(&self) -> RunOptions {
        RunOptions {
            field_override: self.field,
            verify_certificates: self.verify_certificates,
            slow: self.slow,
            threads: self.threads.map(|n| n as usize),
            timings: self.timings,
        }
    }
}

/// Builds the one-task job text behind `spc check`.
pub fn check_job_text(ring: &str, ideal: &str, m: u32, r: u32) -> String {
    format!("ring {ring}\nideal I = {ideal}\ncheck I {m} {r}\n")
}

fn emit(report: &Report, json: Option<&PathBuf>) -> i32 {
    print!("{}", render(report));
    if let Some(path) = json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_INPUT_ERROR;
        }
    }
    report.summary.exit_code
}

fn catalog_table() -> String {
    let width = CATALOG.iter().map(|c| c.syntax.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in CATALOG {
        out.push_str(&format!("{:<width$}  {:<5}  [{}]  {}\n", c.syntax, c.kind, c.field, c.description));
    }
    out
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Run { job, flags } => emit(&run_job(&job, &flags.options()), flags.json.as_ref()),
        Command::Catalog { action: CatalogAction::List } => {
            print!("{}", catalog_table());
            EXIT_OK
        }
        Command::Check { ring, ideal, m, r, flags } => {
            let text = check_job_text(&ring, &ideal, m, r);
            emit(&run_job_text("check", &text, &flags.options()), flags.json.as_ref())
        }
    }
}
