//! Command-line front-end for batch solving, generation and campaigns.
//!
//! Exit codes for `solve`/`trace`: 0 solved, 1 stalled, 2 contradiction
//! (the worst outcome across all input puzzles). Any usage, parse or I/O
//! error exits 64. Other commands exit 0 on success.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use resolute_core::campaign::{
    completeness_audit, run_campaign_detailed, schedule_robustness, CampaignConfig,
};
use resolute_core::generator::{generate_minimal, Seed};
use resolute_core::oracle::{is_minimal, solution_count, solve_unique, SolutionCount};
use resolute_core::{saturate, OutcomeKind, Puzzle, ResolutionTheory};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

const USAGE_ERROR: u8 = 64;

#[derive(Parser)]
#[command(name = "resolute", version, about = "Constructive resolution-rule Sudoku solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Saturate the basic rule set over a puzzle and print the outcome
    Solve {
        /// Print the resolution path, one deduction per line
        #[arg(long)]
        trace: bool,
        /// 81-character puzzle line, or `-` to read lines from stdin
        puzzle: Option<String>,
    },
    /// Shorthand for `solve --trace`
    Trace {
        puzzle: Option<String>,
    },
    /// Generate minimal puzzles, one line each
    Gen {
        /// How many puzzles
        #[arg(long)]
        n: u64,
        /// Master seed; puzzle i draws from substream i
        #[arg(long)]
        seed: u64,
    },
    /// Generate n minimal puzzles, saturate each, print the aggregate report
    Campaign {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Worker threads (default: all cores); the report does not depend on it
        #[arg(long)]
        jobs: Option<usize>,
        /// Scan orders per puzzle (canonical plus seeded perturbations)
        #[arg(long, default_value_t = 1)]
        variants: usize,
        /// Also write the report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Audit puzzles from a file against the exhaustive oracle
    Audit {
        /// File of 81-character puzzle lines
        #[arg(long)]
        file: PathBuf,
        /// Seed for the schedule-perturbation runs
        #[arg(long)]
        seed: u64,
        /// Scan orders per puzzle in the robustness probe
        #[arg(long, default_value_t = 3)]
        variants: usize,
        /// Also write the reports as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Count models of a puzzle; report the unique solution when there is one
    Oracle {
        puzzle: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => USAGE_ERROR,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Solve { trace, puzzle } => cmd_solve(trace, puzzle),
        Command::Trace { puzzle } => cmd_solve(true, puzzle),
        Command::Gen { n, seed } => {
            let seed = Seed::new(seed);
            for i in 0..n {
                println!("{}", generate_minimal(seed, i).to_line());
            }
            Ok(0)
        }
        Command::Campaign {
            n,
            seed,
            jobs,
            variants,
            json,
        } => {
            if n == 0 {
                return Err("campaign needs --n of at least 1".into());
            }
            let cfg = CampaignConfig {
                n,
                seed: Seed::new(seed),
                schedule_variants: variants.max(1),
                jobs,
            };
            let (report, _) = run_campaign_detailed(cfg, &ResolutionTheory::bsrt());
            print!("{}", report.to_text());
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&report).expect("report serializes");
                std::fs::write(&path, body + "\n")
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Ok(0)
        }
        Command::Audit {
            file,
            seed,
            variants,
            json,
        } => {
            let body = std::fs::read_to_string(&file)
                .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
            let puzzles = parse_lines(&body)?;
            if puzzles.is_empty() {
                return Err("audit file contains no puzzle lines".into());
            }
            let theory = ResolutionTheory::bsrt();
            let audit = completeness_audit(&puzzles, &theory).map_err(|e| e.to_string())?;
            let robustness = schedule_robustness(&puzzles, &theory, variants.max(1), seed);
            print!("{}", audit.to_text());
            print!("{}", robustness.to_text());
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&serde_json::json!({
                    "audit": audit,
                    "robustness": robustness,
                }))
                .expect("reports serialize");
                std::fs::write(&path, body + "\n")
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Ok(0)
        }
        Command::Oracle { puzzle } => {
            for puzzle in input_puzzles(puzzle)? {
                match solution_count(&puzzle) {
                    SolutionCount::Zero => println!("solutions: 0"),
                    SolutionCount::TwoPlus => println!("solutions: 2+"),
                    SolutionCount::One => {
                        let grid = solve_unique(&puzzle).expect("count is one");
                        println!("solutions: 1");
                        println!("grid: {}", grid.to_line());
                        println!("minimal: {}", is_minimal(&puzzle));
                    }
                }
            }
            Ok(0)
        }
    }
}

fn cmd_solve(trace: bool, puzzle: Option<String>) -> Result<u8, String> {
    let mut worst = 0u8;
    for puzzle in input_puzzles(puzzle)? {
        let outcome = saturate(&ResolutionTheory::bsrt(), &puzzle.initial_state());
        if trace {
            print!("{}", outcome.trace());
        }
        println!("{}", outcome.kind);
        println!("{}", outcome.final_state.to_line());
        let code = match outcome.kind {
            OutcomeKind::Solved => 0,
            OutcomeKind::Stalled => 1,
            OutcomeKind::Contradiction => 2,
        };
        worst = worst.max(code);
    }
    Ok(worst)
}

/// A single line argument, or all non-empty lines from stdin when the
/// argument is `-` or absent.
fn input_puzzles(arg: Option<String>) -> Result<Vec<Puzzle>, String> {
    match arg.as_deref() {
        Some("-") | None => {
            let mut body = String::new();
            std::io::stdin()
                .read_to_string(&mut body)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            let puzzles = parse_lines(&body)?;
            if puzzles.is_empty() {
                return Err("no puzzle lines on stdin".into());
            }
            Ok(puzzles)
        }
        Some(text) => Ok(vec![Puzzle::parse(text).map_err(|e| e.to_string())?]),
    }
}

fn parse_lines(body: &str) -> Result<Vec<Puzzle>, String> {
    body.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| Puzzle::parse(line).map_err(|e| format!("{line:.20}…: {e}")))
        .collect()
}
