//! Exit-code and output contract of the command-line front-end.

use resolute_testkit::{grid_fixture, SEVENTEEN_CLUE_LINE};
use std::io::Write;
use std::process::{Command, Stdio};

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_resolute"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).unwrap(),
        String::from_utf8(output.stderr).unwrap(),
        output.status.code().unwrap_or(-1),
    )
}

fn run_with_stdin(args: &[&str], input: &str) -> (String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_resolute"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    (
        String::from_utf8(output.stdout).unwrap(),
        output.status.code().unwrap_or(-1),
    )
}

#[test]
fn solved_puzzle_exits_zero() {
    let grid = grid_fixture();
    let mut line = grid.to_line();
    line.replace_range(40..41, ".");
    let (stdout, _, code) = run(&["solve", &line]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("SOLVED\n"));
    assert!(stdout.contains(&grid.to_line()));
}

#[test]
fn empty_puzzle_stalls_with_exit_one() {
    let line = ".".repeat(81);
    let (stdout, _, code) = run(&["solve", &line]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("STALLED\n"));
}

#[test]
fn conflicting_entries_exit_two() {
    let mut line = ".".repeat(81);
    line.replace_range(0..1, "5");
    line.replace_range(3..4, "5");
    let (stdout, _, code) = run(&["solve", &line]);
    assert_eq!(code, 2);
    assert!(stdout.contains("CONTRADICTION\n"));
}

#[test]
fn malformed_line_exits_sixty_four() {
    let (_, stderr, code) = run(&["solve", "not-a-puzzle"]);
    assert_eq!(code, 64);
    assert!(stderr.contains("81"));
}

#[test]
fn unknown_verbs_and_flags_exit_sixty_four() {
    let (_, _, code) = run(&["frobnicate"]);
    assert_eq!(code, 64);
    let (_, _, code) = run(&["gen", "--n", "1", "--seed", "1", "--bogus"]);
    assert_eq!(code, 64);
    let (_, _, code) = run(&["gen", "--n", "not-a-number", "--seed", "1"]);
    assert_eq!(code, 64);
}

#[test]
fn help_exits_zero() {
    let (_, _, code) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn oracle_reports_counts() {
    let (stdout, _, code) = run(&["oracle", &".".repeat(81)]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "solutions: 2+\n");

    let grid = grid_fixture();
    let (stdout, _, _) = run(&["oracle", &grid.to_line()]);
    assert!(stdout.starts_with("solutions: 1\n"));
    assert!(stdout.contains(&format!("grid: {}", grid.to_line())));
    assert!(stdout.contains("minimal: false"));
}

#[test]
fn trace_verb_equals_solve_with_trace() {
    let (via_trace, _, code_a) = run(&["trace", SEVENTEEN_CLUE_LINE]);
    let (via_flag, _, code_b) = run(&["solve", "--trace", SEVENTEEN_CLUE_LINE]);
    assert_eq!(via_trace, via_flag);
    assert_eq!(code_a, code_b);
    assert!(via_trace.starts_with("step 1: "));
}

#[test]
fn stdin_streaming_reports_worst_outcome() {
    let grid = grid_fixture();
    let mut solvable = grid.to_line();
    solvable.replace_range(40..41, ".");
    let input = format!("{}\n{}\n", solvable, ".".repeat(81));
    let (stdout, code) = run_with_stdin(&["solve", "-"], &input);
    assert_eq!(code, 1); // solved + stalled -> stalled wins
    assert!(stdout.contains("SOLVED\n"));
    assert!(stdout.contains("STALLED\n"));
}

#[test]
fn gen_lines_parse_and_repeat() {
    let (first, _, code) = run(&["gen", "--n", "3", "--seed", "9"]);
    assert_eq!(code, 0);
    let (second, _, _) = run(&["gen", "--n", "3", "--seed", "9"]);
    assert_eq!(first, second);
    assert_eq!(first.lines().count(), 3);
    for line in first.lines() {
        assert_eq!(line.len(), 81);
        resolute_core::Puzzle::parse(line).unwrap();
    }
}

#[test]
fn campaign_jobs_flag_does_not_change_output() {
    let (one, _, _) = run(&["campaign", "--n", "6", "--seed", "3", "--jobs", "1"]);
    let (four, _, _) = run(&["campaign", "--n", "6", "--seed", "3", "--jobs", "4"]);
    assert_eq!(one, four);
}

#[test]
fn campaign_json_report_is_machine_readable() {
    let dir = std::env::temp_dir().join("resolute-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("campaign.json");
    let (stdout, _, code) = run(&[
        "campaign",
        "--n",
        "4",
        "--seed",
        "13",
        "--variants",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("schedule_variants: 2"));
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed["n_puzzles"], 4);
    assert_eq!(parsed["master_seed"], 13);
    assert!(parsed["generator_id"].is_string());
}

#[test]
fn audit_file_round_trip_and_unsatisfiable_rejection() {
    let dir = std::env::temp_dir().join("resolute-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    let puzzles = dir.join("puzzles.txt");
    let (gen_out, _, _) = run(&["gen", "--n", "2", "--seed", "21"]);
    std::fs::write(&puzzles, &gen_out).unwrap();
    let (stdout, _, code) = run(&["audit", "--file", puzzles.to_str().unwrap(), "--seed", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("total_soundness_violations: 0"));
    assert!(stdout.contains("agreement:"));

    let bad = dir.join("bad.txt");
    let mut line = ".".repeat(81);
    line.replace_range(0..1, "5");
    line.replace_range(3..4, "5");
    std::fs::write(&bad, line + "\n").unwrap();
    let (_, stderr, code) = run(&["audit", "--file", bad.to_str().unwrap(), "--seed", "4"]);
    assert_eq!(code, 64);
    assert!(stderr.contains("no solution"));
}
