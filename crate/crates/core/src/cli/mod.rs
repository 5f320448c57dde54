//! The `homtwist` command-line tool: manifest checking, product tables and
//! the built-in example suite.

pub mod manifest;
pub mod run;
pub mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::suite::{run_suite, SuiteOptions};
pub use manifest::{parse_manifest, serialize_manifest, Manifest};
pub use run::{run, ExitCode, RunOutput};
pub use table::table;

#[derive(Parser, Debug)]
#[command(name = "homtwist", version, about = "Exact checks for Hom-algebra constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every task of a manifest.
    Check { file: String },
    /// Print the product table of a named algebra.
    Table { file: String, name: String },
    /// Run the built-in example suite.
    Paper {
        /// Only criteria whose name contains this text, or whose number it is.
        #[arg(long)]
        filter: Option<String>,
        /// Upper limit on the degree bounds of the quantum group scans.
        #[arg(long)]
        bounds: Option<u32>,
    },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Invocation {
    fn new(code: ExitCode, stdout: String, stderr: String) -> Self {
        Invocation {
            code: code.code(),
            stdout,
            stderr,
        }
    }
}

fn load(file: &str) -> std::result::Result<Manifest, Invocation> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Invocation::new(ExitCode::ParseError, String::new(), format!("error: {file}: {e}\n")))?;
    parse_manifest(&text)
        .map_err(|e| Invocation::new(ExitCode::ParseError, String::new(), format!("error: {file}: {e}\n")))
}

/// `homtwist check` on manifest text.
pub fn check_text(text: &str) -> Invocation {
    match parse_manifest(text) {
        Ok(m) => {
            let out = run(&m);
            Invocation::new(out.exit, out.report, String::new())
        }
        Err(e) => Invocation::new(ExitCode::ParseError, String::new(), format!("error: {e}\n")),
    }
}

/// Reads `HOMTWIST_THREADS`; `0`, unset or unparsable means automatic.
pub fn thread_cap() -> Option<usize> {
    std::env::var("HOMTWIST_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

fn configure_threads() {
    if let Some(n) = thread_cap() {
        // Fails only if a pool already exists, in which case it is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs the tool on explicit arguments (the first one is the program name)
/// and captures its output.
pub fn invoke<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::ParseError } else { ExitCode::Ok };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Invocation::new(code, String::new(), text)
            } else {
                Invocation::new(code, text, String::new())
            };
        }
    };
    match cli.command {
        Command::Check { file } => match std::fs::read_to_string(&file) {
            Ok(text) => check_text(&text),
            Err(e) => Invocation::new(ExitCode::ParseError, String::new(), format!("error: {file}: {e}\n")),
        },
        Command::Table { file, name } => match load(&file) {
            Ok(m) => match table(&m, &name) {
                Ok(text) => Invocation::new(ExitCode::Ok, text, String::new()),
                Err(e) => Invocation::new(ExitCode::SemanticError, String::new(), format!("error: {e}\n")),
            },
            Err(inv) => inv,
        },
        Command::Paper { filter, bounds } => {
            let summary = run_suite(&SuiteOptions { filter, bounds });
            let code = if summary.all_passed() { ExitCode::Ok } else { ExitCode::ExpectationFailed };
            Invocation::new(code, summary.to_string(), String::new())
        }
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn main() -> i32 {
    configure_threads();
    let inv = invoke(std::env::args_os());
    let _ = std::io::stdout().write_all(inv.stdout.as_bytes());
    let _ = std::io::stderr().write_all(inv.stderr.as_bytes());
    inv.code
}
