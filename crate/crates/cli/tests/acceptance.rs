//! Acceptance suite: one test per criterion, one pass/fail line each
//! (visible with `--nocapture`).
//!
//! The heavy experiment — 2000 generated minimal puzzles saturated with the
//! basic theory and audited against the exhaustive oracle — runs once and is
//! shared by the criteria that read it.

use resolute_core::campaign::{
    completeness_audit, run_campaign_detailed, CampaignConfig, CampaignReport, InstanceResult,
};
use resolute_core::generator::Seed;
use resolute_core::oracle::{is_minimal, solve_unique};
use resolute_core::rules::{entry_conflicts, urt_cd, urt_ecp, urt_single};
use resolute_core::{
    family_tables, ks_leq, rc_to_bs, saturate, share_a_unit, CellRef, Family, Literal,
    OutcomeKind, Puzzle, ResolutionTheory,
};
use resolute_testkit::{
    block_square_by_enumeration, cd_formula, ecp_formula, entry_conflict_formula, peer_cells,
    prefix_states, random_state, single_formula, vcr_fixed_point_violations, SEVENTEEN_CLUE_LINE,
};
use std::process::Command;
use std::sync::LazyLock;

const CAMPAIGN_N: usize = 2000;
const CAMPAIGN_SEED: u64 = 42;

struct Experiment {
    report: CampaignReport,
    instances: Vec<InstanceResult>,
}

static EXPERIMENT: LazyLock<Experiment> = LazyLock::new(|| {
    let cfg = CampaignConfig::new(CAMPAIGN_N, Seed::new(CAMPAIGN_SEED));
    let (report, instances) = run_campaign_detailed(cfg, &ResolutionTheory::bsrt());
    Experiment { report, instances }
});

fn verdict(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_1_solve_rate_reproduction() {
    let report = &EXPERIMENT.report;
    let pass = (0.37..=0.47).contains(&report.solve_rate);
    verdict(
        "1 (solve-rate reproduction)",
        pass,
        &format!(
            "n={} solved={} rate={:.4}, window [0.37, 0.47], generator {} seed {}",
            report.n_puzzles,
            report.n_solved,
            report.solve_rate,
            report.generator_id,
            report.master_seed
        ),
    );
}

#[test]
fn criterion_2_oracle_soundness() {
    let experiment = &EXPERIMENT;
    let campaign_violations = experiment.report.elimination_soundness_violations;

    let stalled: Vec<Puzzle> = experiment
        .instances
        .iter()
        .filter(|r| r.kind == OutcomeKind::Stalled)
        .take(500)
        .map(|r| r.puzzle.clone())
        .collect();
    assert_eq!(stalled.len(), 500, "campaign produced fewer than 500 stalls");
    let audit = completeness_audit(&stalled, &ResolutionTheory::bsrt()).expect("all satisfiable");

    let pass = campaign_violations == 0 && audit.total_soundness_violations == 0;
    verdict(
        "2 (oracle soundness)",
        pass,
        &format!(
            "campaign violations={campaign_violations} over {} instances; audit violations={} over {} stalled instances",
            experiment.report.n_puzzles,
            audit.total_soundness_violations,
            audit.n_puzzles
        ),
    );
}

#[test]
fn criterion_3_exact_solution_agreement() {
    let instances = &EXPERIMENT.instances;
    let mut solved = 0;
    let mut mismatches = 0;
    for instance in instances {
        if instance.kind != OutcomeKind::Solved {
            continue;
        }
        solved += 1;
        let grid = solve_unique(&instance.puzzle).expect("solved instances are unique");
        if instance.final_state.to_line() != grid.to_line()
            || instance.solved_grid_matches != Some(true)
        {
            mismatches += 1;
        }
    }
    verdict(
        "3 (exact-solution agreement)",
        mismatches == 0 && solved > 0,
        &format!("{solved} solved instances, {mismatches} grid mismatches"),
    );
}

#[test]
fn criterion_4_lattice_and_monotonicity() {
    // order laws on 10,000 random state triples
    let mut law_failures = 0;
    for i in 0..10_000u64 {
        let a = random_state(3 * i);
        let b = a.eliminate_candidate(Literal::from_index((i % 729) as usize));
        let c = b
            .assert_value(Literal::from_index(((7 * i + 13) % 729) as usize))
            .eliminate_candidate(Literal::from_index(((11 * i + 5) % 729) as usize));
        let d = random_state(3 * i + 1);

        let reflexive = ks_leq(&a, &a) && ks_leq(&d, &d);
        let chain_ok = if c.is_contradictory() {
            ks_leq(&a, &b)
        } else {
            ks_leq(&a, &b) && ks_leq(&b, &c) && ks_leq(&a, &c)
        };
        let antisymmetric = (ks_leq(&a, &b) && ks_leq(&b, &a)) == (a == b);
        let random_transitive = !(ks_leq(&a, &d) && ks_leq(&d, &b)) || ks_leq(&a, &b);
        if !(reflexive && chain_ok && antisymmetric && random_transitive) {
            law_failures += 1;
        }
    }

    // every saturation path strictly increasing
    let theory = ResolutionTheory::bsrt();
    let mut path_failures = 0;
    let mut steps_walked = 0usize;
    for instance in EXPERIMENT.instances.iter().take(200) {
        let outcome = saturate(&theory, &instance.puzzle.initial_state());
        let mut current = outcome.path.initial.clone();
        for step in &outcome.path.steps {
            let next = step.action.apply(&current);
            if !(ks_leq(&current, &next) && current != next) {
                path_failures += 1;
            }
            steps_walked += 1;
            current = next;
        }
        if current != outcome.final_state {
            path_failures += 1;
        }
    }

    verdict(
        "4 (lattice and monotonicity)",
        law_failures == 0 && path_failures == 0,
        &format!(
            "10000 triples, {law_failures} law failures; 200 paths / {steps_walked} steps, {path_failures} monotonicity failures"
        ),
    );
}

#[test]
fn criterion_5_vcr_fixed_point() {
    let saturated: Vec<_> = EXPERIMENT
        .instances
        .iter()
        .filter(|r| !r.final_state.is_contradictory())
        .take(200)
        .collect();
    assert_eq!(saturated.len(), 200);
    let mut violations = 0;
    for instance in &saturated {
        violations += vcr_fixed_point_violations(&instance.final_state).len();
    }
    verdict(
        "5 (value-candidate fixed point)",
        violations == 0,
        &format!("200 saturated states × 324 variables, {violations} violations"),
    );
}

#[test]
fn criterion_6_geometry() {
    let by_arithmetic: Vec<((u8, u8), (u8, u8))> = (1..=9)
        .flat_map(|r| (1..=9).map(move |c| ((r, c), rc_to_bs(r, c))))
        .collect();
    let table_ok = by_arithmetic == block_square_by_enumeration();

    let mut peer_failures = 0;
    for r in 1..=9u8 {
        for c in 1..=9u8 {
            let peers = peer_cells(r, c);
            let counted = (0..81)
                .filter(|&i| share_a_unit(CellRef::new(r, c), CellRef::from_index(i)))
                .count();
            if peers.len() != 20 || counted != 20 {
                peer_failures += 1;
            }
        }
    }
    verdict(
        "6 (geometry)",
        table_ok && peer_failures == 0,
        &format!("81-entry block-square table exact: {table_ok}; cells with wrong peer count: {peer_failures}"),
    );
}

#[test]
fn criterion_7_rule_formula_equivalence() {
    let theory = ResolutionTheory::bsrt();
    let mut states = Vec::new();
    for (i, instance) in EXPERIMENT.instances.iter().take(125).enumerate() {
        states.extend(prefix_states(&instance.puzzle, &theory, 2, i as u64));
    }
    let states: Vec<_> = states.into_iter().take(500).collect();
    assert_eq!(states.len(), 500);

    let mut mismatches = 0;
    for state in &states {
        for family in Family::ALL {
            let tables = family_tables(family);
            if urt_ecp(state, tables) != ecp_formula(state, family)
                || urt_single(state, tables) != single_formula(state, family)
                || urt_cd(state, tables) != cd_formula(state, family)
                || entry_conflicts(state, tables) != entry_conflict_formula(state, family)
            {
                mismatches += 1;
            }
        }
    }
    verdict(
        "7 (rule-formula equivalence)",
        mismatches == 0,
        &format!("500 reachable states × 4 families × 4 rules, {mismatches} mismatches"),
    );
}

#[test]
fn criterion_8_minimality() {
    let mut failures = 0;
    for instance in EXPERIMENT.instances.iter().take(200) {
        if !is_minimal(&instance.puzzle) {
            failures += 1;
        }
    }
    verdict(
        "8 (generator minimality)",
        failures == 0,
        &format!("200 generator outputs, {failures} non-minimal"),
    );
}

fn run_cli(args: &[&str]) -> (String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_resolute"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf-8 output"),
        output.status.code().unwrap_or(-1),
    )
}

#[test]
fn criterion_9_determinism_golden_files() {
    let cases: [(&str, Vec<&str>, i32); 3] = [
        ("gen_n5_seed1.txt", vec!["gen", "--n", "5", "--seed", "1"], 0),
        (
            "campaign_n20_seed7.txt",
            vec!["campaign", "--n", "20", "--seed", "7"],
            0,
        ),
        (
            "solve_trace_17clue.txt",
            vec!["solve", "--trace", SEVENTEEN_CLUE_LINE],
            1,
        ),
    ];
    let mut failures = Vec::new();
    for (golden_name, args, expected_code) in &cases {
        let golden_path = format!("{}/tests/golden/{golden_name}", env!("CARGO_MANIFEST_DIR"));
        let golden = std::fs::read_to_string(&golden_path).expect("golden file present");
        let (first, code1) = run_cli(args);
        let (second, code2) = run_cli(args);
        if first != second {
            failures.push(format!("{golden_name}: two runs differ"));
        }
        if first != golden {
            failures.push(format!("{golden_name}: output differs from golden"));
        }
        if code1 != *expected_code || code2 != *expected_code {
            failures.push(format!(
                "{golden_name}: exit codes {code1}/{code2}, expected {expected_code}"
            ));
        }
    }
    verdict(
        "9 (determinism, golden files)",
        failures.is_empty(),
        &if failures.is_empty() {
            "gen/campaign/solve byte-identical across runs and equal to goldens".to_string()
        } else {
            failures.join("; ")
        },
    );
}
