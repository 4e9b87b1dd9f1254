use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sigma_core::{F2Vector, Game, DEFAULT_CAPACITY};
use sigma_verify::commands::{analyze, config_orbit, min_light, orbit_table};
use sigma_verify::verify::{self, VerifyOptions};
use sigma_verify::{exit, load_graph, CliError, VerificationReport};

#[derive(Parser)]
#[command(
    name = "sigma",
    version,
    about = "Lit-only sigma-game and Reeder's game on small graphs"
)]
struct Cli {
    /// Largest vertex count for exhaustive state-space searches.
    #[arg(long, global = true, default_value_t = DEFAULT_CAPACITY)]
    capacity: usize,
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural and algebraic summary of a graph.
    Analyze { file: PathBuf },
    /// Orbit table, or the orbit of one configuration.
    Orbits {
        file: PathBuf,
        #[arg(long, default_value = "lit")]
        game: GameArg,
        /// Bitstring; character i is the state of vertex i.
        #[arg(long)]
        config: Option<String>,
    },
    /// Minimum light number with a worst configuration and per-orbit witnesses.
    Minlight { file: PathBuf },
    /// Exhaustive checks over enumerated graph families.
    Verify {
        check: Check,
        #[command(flatten)]
        opts: VerifyArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GameArg {
    Lit,
    Reeder,
}

impl From<GameArg> for Game {
    fn from(g: GameArg) -> Game {
        match g {
            GameArg::Lit => Game::Lit,
            GameArg::Reeder => Game::Reeder,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Thm12,
    Thm14,
    OrbitStructure,
    Identities,
    PaperExample,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest vertex count [default: 14 for thm12 and orbit-structure, 12 otherwise]
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads [default: available cores]
    #[arg(long)]
    jobs: Option<usize>,
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) {
    let out = if json {
        serde_json::to_string_pretty(value).expect("report serializes") + "\n"
    } else {
        text(value)
    };
    // a closed pipe (`| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cap = cli.capacity;
    match cli.command {
        Command::Analyze { file } => {
            let g = load_graph(&file)?;
            emit(cli.json, &analyze(&g)?, |r| r.to_text());
        }
        Command::Orbits { file, game, config } => {
            let g = load_graph(&file)?;
            match config {
                Some(bits) => {
                    let f = F2Vector::parse_bitstring_len(&bits, g.vertex_count())?;
                    emit(cli.json, &config_orbit(&g, game.into(), &f, cap)?, |r| {
                        r.to_text()
                    });
                }
                None => emit(cli.json, &orbit_table(&g, game.into(), cap)?, |r| {
                    r.to_text()
                }),
            }
        }
        Command::Minlight { file } => {
            let g = load_graph(&file)?;
            emit(cli.json, &min_light(&g, cap)?, |r| r.to_text());
        }
        Command::Verify { check, opts } => {
            let default_n = match check {
                Check::Thm12 | Check::OrbitStructure => 14,
                Check::PaperExample => 8,
                Check::Thm14 | Check::Identities => 12,
            };
            let options = VerifyOptions {
                max_n: opts.max_n.unwrap_or(default_n),
                trials: opts.trials,
                seed: opts.seed,
                jobs: opts
                    .jobs
                    .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
                capacity: cap,
            };
            let report: VerificationReport = match check {
                Check::Thm12 => verify::verify_pm_trees_one_lit(&options)?,
                Check::Thm14 => verify::verify_subdivisions(&options)?,
                Check::OrbitStructure => verify::verify_orbit_structure(&options)?,
                Check::Identities => verify::verify_identities(&options)?,
                Check::PaperExample => verify::verify_ladder_example(&options)?,
            };
            emit(cli.json, &report, |r| r.to_text());
            return Ok(if report.pass {
                exit::PASS
            } else {
                exit::FAILURE
            });
        }
    }
    Ok(exit::PASS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
