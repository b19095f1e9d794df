use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use stm::orbit::DEFAULT_ORBIT_CAP;
use stm::pipeline::{load_surface, run_stage, to_text, BasisMode, RunConfig, Stage};
use stm::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Orbit,
    Veech,
    Homology,
    Aut,
    Monodromy,
    Decompose,
    Zariski,
    Pipeline,
}

impl From<Command> for Stage {
    fn from(c: Command) -> Stage {
        match c {
            Command::Orbit => Stage::Orbit,
            Command::Veech => Stage::Veech,
            Command::Homology => Stage::Homology,
            Command::Aut => Stage::Aut,
            Command::Monodromy => Stage::Monodromy,
            Command::Decompose => Stage::Decompose,
            Command::Zariski => Stage::Zariski,
            Command::Pipeline => Stage::Pipeline,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Monodromy of square-tiled surfaces: Veech group, homology, automorphisms and Zariski closure.
#[derive(Debug, Parser)]
#[command(name = "stm", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Catalog name (see `torus`, `octahedron-O`, ...) or a path to a surface JSON file.
    surface: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = 8)]
    max_word_len: usize,
    #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
    orbit_cap: usize,
    #[arg(long, default_value = "auto")]
    basis: BasisMode,
}

fn run(cli: &Cli) -> stm::Result<bool> {
    if cli.max_word_len == 0 || cli.orbit_cap == 0 {
        return Err(Error::Input("--max-word-len and --orbit-cap must be positive".into()));
    }
    if let Ok(threads) = std::env::var("STM_THREADS") {
        let n: usize = threads.parse().ok().filter(|&n| n > 0).ok_or_else(|| Error::Input(format!("STM_THREADS={threads}")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Error::Input(e.to_string()))?;
    }
    let (origami, name) = load_surface(cli.surface.as_deref(), cli.file.as_deref())?;
    let cfg = RunConfig { max_word_len: cli.max_word_len, orbit_cap: cli.orbit_cap, basis: cli.basis, ..RunConfig::default() };
    let report = run_stage(cli.command.into(), &origami, name.as_deref(), &cfg)?;
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable")),
        Format::Text => {
            print!("{}", to_text(&report.json));
            if let Some(line) = report.summary() {
                println!("{line}");
            }
        }
    }
    Ok(report.status().is_ok())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(Error::NotCertified { lower: 0, upper: 0 }.exit_code() as u8),
        Err(e) => {
            eprintln!("stm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
