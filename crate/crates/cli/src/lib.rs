//! Command-line front end for `specrec`.
//!
//! [`run`] does all the work and returns the exit code with both output
//! streams, so the binary is a thin shell and tests can drive it in process.

pub mod catalog;
mod commands;
pub mod input;

use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

pub use input::{Document, Input, MatroidDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "specrec", version, about = "Laplacian spectra and the spectral recursion")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Laplacian spectra per dimension.
    Spectrum {
        /// A JSON file, `-` for stdin, or a catalog name.
        input: String,
        #[arg(long, allow_negative_numbers = true)]
        dim: Option<isize>,
        /// Subcomplex to take the relative spectrum against.
        #[arg(long)]
        pair: Option<String>,
    },
    /// The spectrum polynomial S(t, q).
    Spoly { input: String },
    /// Check the spectral recursion. Exits 1 if any vertex fails.
    Check {
        input: String,
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        vertex: Option<String>,
        #[arg(long)]
        all: bool,
        /// Check the order filter dual to a complex input.
        #[arg(long)]
        filter: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    Matroid {
        #[command(subcommand)]
        command: MatroidCommand,
    },
    Shifted {
        #[command(subcommand)]
        command: ShiftedCommand,
    },
    /// Print a named instance as an input document, or list the names.
    Catalog { name: Option<String> },
    /// Randomized cross-checks of the spectral identities. Exits 1 on any failure.
    Battery {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum MatroidCommand {
    /// Spectrum polynomial of the independence complex.
    Spoly {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Krs)]
        method: Method,
    },
    /// KRS decomposition of every basis and the flat-sum identity.
    Krs { input: String },
    /// Spectrum polynomial of the pair (M - e, M / e).
    Pair {
        input: String,
        #[arg(long)]
        element: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Krs,
    Recursive,
    Direct,
    /// All three, with a check that they agree.
    All,
}

#[derive(Subcommand, Debug)]
pub enum ShiftedCommand {
    /// Compare s(K, K') with the conjugate degree sequence. Exits 1 on mismatch.
    Sdt { input: String },
    /// Degree sequence and its conjugate.
    Degree { input: String },
    /// Majorization check of the spectrum by the conjugate degree sequence. Exits 1 on a violation.
    Gm { input: String },
    /// Spectrum polynomial of a shifted complex from degrees alone.
    FastSpectrum {
        input: String,
        #[arg(long)]
        sub: Option<String>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn input_error(msg: impl Into<String>) -> Self {
        Output { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }
}

/// Reads `-` from stdin, an existing path from disk, and anything else from the catalog.
pub fn load_document(arg: &str, stdin: &mut dyn Read) -> Result<Document, String> {
    if arg == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|e| format!("reading stdin: {e}"))?;
        return Document::parse(&text);
    }
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| format!("reading {arg}: {e}"))?;
        return Document::parse(&text);
    }
    catalog::lookup(arg).ok_or_else(|| format!("`{arg}` is neither a file nor a catalog name"))
}

pub fn load(arg: &str, stdin: &mut dyn Read) -> Result<Input, String> {
    load_document(arg, stdin)?.build()
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::dispatch(&cli, stdin) {
        Ok(out) => out,
        Err(msg) => Output::input_error(msg),
    }
}
