use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use ydforge::commands::DEFAULT_MAX_DIM;
use ydforge::{
    combine, exit_code, parse_input, run_command, CliReport, Command, Options, EXIT_INPUT,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Exact verification of Hopf algebras and generalized Yetter-Drinfeld modules.
#[derive(Parser, Debug)]
#[command(name = "ydforge", version)]
struct Cli {
    command: Command,
    /// A JSON document, or a directory whose `*.json` files are all checked.
    input: PathBuf,
    /// Restrict the command to one named structure.
    #[arg(long, visible_alias = "module")]
    name: Option<String>,
    /// Second structure for binary commands (`regular` for `braid`).
    #[arg(long)]
    with: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (defaults to the number of cores).
    #[arg(long)]
    jobs: Option<usize>,
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("ydforge: {msg}");
    ExitCode::from(EXIT_INPUT as u8)
}

fn inputs(path: &Path) -> std::io::Result<Vec<PathBuf>> {
    if !path.is_dir() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(path)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let max_dim = match std::env::var("YDFORGE_MAX_DIM") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => {
                return input_error(format!(
                    "YDFORGE_MAX_DIM must be a positive integer, got {v:?}"
                ))
            }
        },
        Err(_) => DEFAULT_MAX_DIM,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        pool = pool.num_threads(n.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return input_error(e),
    };
    let files = match inputs(&cli.input) {
        Ok(f) if f.is_empty() => {
            return input_error(format!("{}: no JSON files", cli.input.display()))
        }
        Ok(f) => f,
        Err(e) => return input_error(format!("{}: {e}", cli.input.display())),
    };
    let opts = Options {
        name: cli.name.clone(),
        with: cli.with.clone(),
        max_dim,
    };
    let mut parts = Vec::new();
    for file in &files {
        let bytes = match std::fs::read(file) {
            Ok(b) => b,
            Err(e) => return input_error(format!("{}: {e}", file.display())),
        };
        let doc = match parse_input(&bytes) {
            Ok(d) => d,
            Err(e) => return input_error(format!("{}: {e}", file.display())),
        };
        let report = match pool.install(|| run_command(&doc, cli.command, &opts)) {
            Ok(r) => r,
            Err(e) => return input_error(format!("{}: {e}", file.display())),
        };
        let label = file
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        parts.push((label, report));
    }
    let report: CliReport = if cli.input.is_dir() {
        combine(cli.command.as_str(), parts)
    } else {
        parts.pop().expect("one file").1
    };
    match cli.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(exit_code(&report) as u8)
}
