use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use taumap::k0::Sign;
use taumap_cli::{run_path, Command, Format};

/// Auslander-Reiten translates and τ-maps of monomial algebras.
///
/// Every command takes an algebra file, or a directory whose files are
/// processed in filename order. Exit status: 0 success, 1 input error,
/// 2 verification failure.
#[derive(Parser)]
#[command(name = "taumap", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimension, basis size, Nakayama flag and components.
    Info { path: PathBuf },
    /// Cartan matrix, entry (i, j) counting basis paths from i to j.
    Cartan { path: PathBuf },
    /// Coxeter matrix ±CᵀC⁻¹.
    Coxeter {
        #[arg(long, value_enum, default_value = "minus")]
        sign: SignArg,
        path: PathBuf,
    },
    /// Dimensions of Ext¹ between simples.
    ExtQuiver { path: PathBuf },
    /// Whether the algebra is Nakayama, with its Kupisch series.
    IsNakayama { path: PathBuf },
    /// Translate of M(i,l) on a Nakayama algebra, or of a simple module.
    Tau {
        /// Vertex and Loewy length, as `i,l`.
        #[arg(
            long,
            value_name = "I,L",
            conflicts_with = "simple",
            required_unless_present = "simple"
        )]
        module: Option<String>,
        /// Vertex of a simple module.
        #[arg(long, value_name = "V")]
        simple: Option<String>,
        path: PathBuf,
    },
    /// Decide whether a τ-map exists and print a witness.
    TauMap { path: PathBuf },
    /// Check the Nakayama τ-map against every indecomposable.
    Verify { path: PathBuf },
    /// Delete a source vertex and print the resulting algebra file.
    Reduce {
        #[arg(long)]
        vertex: String,
        path: PathBuf,
    },
    /// Check the five-term sequences of a simple module.
    FiveTerm {
        #[arg(long)]
        simple: String,
        path: PathBuf,
    },
}

fn parse_module(arg: &str) -> Option<(String, usize)> {
    let (v, l) = arg.rsplit_once(',')?;
    Some((v.trim().to_string(), l.trim().parse().ok()?))
}

fn main() -> ExitCode {
    // clap reports usage errors with status 2, which here means a failed check
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                taumap_cli::commands::EXIT_INPUT
            } else {
                0
            });
        }
    };
    let (command, path) = match cli.command {
        Cmd::Info { path } => (Command::Info, path),
        Cmd::Cartan { path } => (Command::Cartan, path),
        Cmd::Coxeter { sign, path } => {
            let sign = match sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            (Command::Coxeter { sign }, path)
        }
        Cmd::ExtQuiver { path } => (Command::ExtQuiver, path),
        Cmd::IsNakayama { path } => (Command::IsNakayama, path),
        Cmd::Tau {
            module,
            simple,
            path,
        } => match (module, simple) {
            (Some(m), _) => match parse_module(&m) {
                Some((vertex, length)) => (Command::TauModule { vertex, length }, path),
                None => {
                    eprintln!("error: --module expects `vertex,length`, got `{m}`");
                    return ExitCode::from(taumap_cli::commands::EXIT_INPUT);
                }
            },
            (None, Some(vertex)) => (Command::TauSimple { vertex }, path),
            (None, None) => unreachable!("clap requires one of --module and --simple"),
        },
        Cmd::TauMap { path } => (Command::TauMap, path),
        Cmd::Verify { path } => (Command::Verify, path),
        Cmd::Reduce { vertex, path } => (Command::Reduce { vertex }, path),
        Cmd::FiveTerm { simple, path } => (Command::FiveTerm { vertex: simple }, path),
    };
    let format = if cli.json { Format::Json } else { Format::Text };
    let out = run_path(&command, &path, format);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit)
}
