//! Command-line interface.
//!
//! Exit codes: 0 success; 1 instance unsolvable (for `solvable`); 2 invalid
//! input; 3 enumeration cap exceeded; 4 verification found a counterexample.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use addmin::enumeration::{
    describe_solution_set_with, enumerate_maximal_with, enumerate_minimal_with,
};
use addmin::rat::parse_ratio;
use addmin::render;
use addmin::{
    document, is_maximal, is_minimal, maximal_above, minimal_below, oracle, CellKind,
    EnumerationOptions, Error, Feasibility, ProblemInstance, Rat,
};

#[derive(Parser)]
#[command(
    name = "addmin",
    version,
    about = "Exact solver for addition-min fuzzy relation equations",
    max_term_width = 100
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on the number of enumerated subsystems
    #[arg(long, global = true, default_value_t = addmin::DEFAULT_MAX_CELLS)]
    max_cells: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all minimal solutions
    Min { file: PathBuf },
    /// Enumerate all maximal solutions
    Max { file: PathBuf },
    /// Decide solvability (exit 1 when unsolvable)
    Solvable { file: PathBuf },
    /// Classify a point: solution / minimal / maximal
    Check {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. "0.3,1,0.7"
        #[arg(long)]
        x: String,
    },
    /// Print a minimal solution below and a maximal solution above a point
    Bound {
        file: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Full solution-set description (both enumerations)
    Describe { file: PathBuf },
    /// Verify the description with seeded sampling (exit 4 on counterexample)
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        trials: usize,
    },
    /// Emit a random solvable instance with a planted solution
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Grid step for entries, e.g. "1/10" or "0.1"
        #[arg(long, default_value = "1/10")]
        step: String,
    },
}

fn parse_point(text: &str) -> Result<Vec<Rat>, Error> {
    text.split(',')
        .map(|part| Rat::parse_decimal(part.trim()))
        .collect()
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn load(path: &Path) -> Result<ProblemInstance, Error> {
    document::load_instance(path)
}

fn run(cli: Cli) -> Result<u8, Error> {
    let options = EnumerationOptions {
        max_cells: cli.max_cells,
        ..EnumerationOptions::default()
    };
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Min { file } => {
            let instance = load(&file)?;
            let cells = enumerate_minimal_with(&instance, &options)?;
            if json {
                println!("{}", render::cells_json(CellKind::Minimal, &cells));
            } else {
                print!("{}", render::cells_text(CellKind::Minimal, &cells));
            }
            Ok(0)
        }
        Command::Max { file } => {
            let instance = load(&file)?;
            let cells = enumerate_maximal_with(&instance, &options)?;
            if json {
                println!("{}", render::cells_json(CellKind::Maximal, &cells));
            } else {
                print!("{}", render::cells_text(CellKind::Maximal, &cells));
            }
            Ok(0)
        }
        Command::Solvable { file } => {
            let instance = load(&file)?;
            let reason = match instance.precheck() {
                Feasibility::Infeasible(reason) => Some(reason.to_string()),
                Feasibility::PossiblySolvable => {
                    if enumerate_minimal_with(&instance, &options)?.is_empty() {
                        Some("enumeration found no solutions".to_string())
                    } else {
                        None
                    }
                }
            };
            match reason {
                None => {
                    if json {
                        println!("{}", serde_json::json!({"solvable": true}));
                    } else {
                        println!("solvable");
                    }
                    Ok(0)
                }
                Some(reason) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({"solvable": false, "reason": reason})
                        );
                    } else {
                        println!("unsolvable: {reason}");
                    }
                    Ok(1)
                }
            }
        }
        Command::Check { file, x } => {
            let instance = load(&file)?;
            let point = parse_point(&x)?;
            let solution = instance.is_solution(&point)?;
            let (minimal, maximal) = if solution {
                (
                    Some(is_minimal(&instance, &point)?),
                    Some(is_maximal(&instance, &point)?),
                )
            } else {
                (None, None)
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "solution": solution,
                        "minimal": minimal,
                        "maximal": maximal,
                    })
                );
            } else if solution {
                println!(
                    "solution: yes; minimal: {}; maximal: {}",
                    yes_no(minimal.unwrap()),
                    yes_no(maximal.unwrap())
                );
            } else {
                println!("solution: no");
            }
            Ok(0)
        }
        Command::Bound { file, x } => {
            let instance = load(&file)?;
            let point = parse_point(&x)?;
            let below = minimal_below(&instance, &point)?;
            let above = maximal_above(&instance, &point)?;
            if json {
                let to_strings = |v: &[Rat]| v.iter().map(Rat::to_string).collect::<Vec<_>>();
                println!(
                    "{}",
                    serde_json::json!({
                        "minimal_below": to_strings(&below),
                        "maximal_above": to_strings(&above),
                    })
                );
            } else {
                println!("minimal_below: {}", render::point_str(&below));
                println!("maximal_above: {}", render::point_str(&above));
            }
            Ok(0)
        }
        Command::Describe { file } => {
            let instance = load(&file)?;
            let desc = describe_solution_set_with(&instance, &options)?;
            if json {
                println!("{}", render::description_json(&desc));
            } else {
                print!("{}", render::description_text(&desc));
            }
            Ok(0)
        }
        Command::Oracle { file, seed, trials } => {
            let instance = load(&file)?;
            let desc = describe_solution_set_with(&instance, &options)?;
            let report = oracle::verify_description(&instance, &desc, seed, trials);
            if json {
                println!("{}", render::report_json(&report));
            } else {
                print!("{}", render::report_text(&report));
            }
            Ok(if report.passed() { 0 } else { 4 })
        }
        Command::Gen { seed, m, n, step } => {
            let step = parse_ratio(&step)?;
            let (instance, planted) = oracle::random_solvable_instance(seed, m, n, &step)?;
            let doc = document::InstanceDocument::from_instance(
                &instance,
                Some(format!("gen-seed{seed}-m{m}-n{n}")),
                Some(format!("planted solution: {}", render::point_str(&planted))),
            );
            println!("{}", doc.to_json_string());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            if e.use_stderr() {
                let _ = e.print();
                return ExitCode::from(2);
            }
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
