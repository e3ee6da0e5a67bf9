//! Statistical campaigns and oracle audits.
//!
//! A campaign generates `n` minimal puzzles from a master seed, saturates
//! each with a resolution theory, and aggregates: how many solved, how much
//! of the oracle-known information the stalled runs recovered, and how many
//! soundness violations occurred. A sound theory asserts only values present
//! in every model and eliminates only candidates present in no model, so
//! that last count must be zero.
//!
//! Per-puzzle work is independent and runs in parallel; every aggregate is
//! reduced in puzzle-index order, so reports are byte-identical regardless
//! of thread count.

use crate::engine::{saturate, saturate_with, OutcomeKind, ResolutionTheory, Schedule};
use crate::generator::{generate_minimal, Seed, GENERATOR_ID};
use crate::grid::Puzzle;
use crate::literal::LiteralSet;
use crate::oracle::{candidate_oracle, count_solutions, solve_unique, OracleError};
use crate::state::KnowledgeState;
use rayon::prelude::*;
use serde::Serialize;

/// Aggregate results of one campaign run.
///
/// `value_recall` and `elimination_completeness` are means of per-instance
/// fractions over the stalled instances (vacuously 1 when nothing stalled).
/// `elimination_soundness_violations` counts, over all instances, asserted
/// values absent from some model plus eliminated candidates present in some
/// model.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub n_puzzles: usize,
    pub n_solved: usize,
    pub solve_rate: f64,
    pub value_recall: f64,
    pub elimination_soundness_violations: usize,
    pub elimination_completeness: f64,
    pub generator_id: String,
    pub master_seed: u64,
    pub schedule_variants: usize,
    pub schedule_variants_agreeing: usize,
}

impl CampaignReport {
    /// Stable key-value text block; keys in fixed order, fractions with six
    /// decimals.
    pub fn to_text(&self) -> String {
        format!(
            "generator_id: {}\n\
             master_seed: {}\n\
             n_puzzles: {}\n\
             n_solved: {}\n\
             solve_rate: {:.6}\n\
             value_recall: {:.6}\n\
             elimination_completeness: {:.6}\n\
             elimination_soundness_violations: {}\n\
             schedule_variants: {}\n\
             schedule_variants_agreeing: {}\n",
            self.generator_id,
            self.master_seed,
            self.n_puzzles,
            self.n_solved,
            self.solve_rate,
            self.value_recall,
            self.elimination_completeness,
            self.elimination_soundness_violations,
            self.schedule_variants,
            self.schedule_variants_agreeing,
        )
    }
}

/// Campaign parameters beyond the theory itself.
#[derive(Clone, Copy, Debug)]
pub struct CampaignConfig {
    pub n: usize,
    pub seed: Seed,
    /// Saturate each puzzle under this many scan orders (canonical plus
    /// seeded perturbations) and record whether the final states coincide.
    /// Below 2 only the canonical order runs and agreement is trivial.
    pub schedule_variants: usize,
    /// Worker threads; `None` uses the default pool.
    pub jobs: Option<usize>,
}

impl CampaignConfig {
    pub fn new(n: usize, seed: Seed) -> Self {
        CampaignConfig {
            n,
            seed,
            schedule_variants: 1,
            jobs: None,
        }
    }
}

/// Everything measured about one campaign instance.
#[derive(Clone, Debug)]
pub struct InstanceResult {
    pub puzzle: Puzzle,
    pub kind: OutcomeKind,
    pub final_state: KnowledgeState,
    pub value_recall: f64,
    pub elimination_completeness: f64,
    pub soundness_violations: usize,
    /// For solved instances: does the asserted grid equal the oracle's
    /// unique model, literal for literal.
    pub solved_grid_matches: Option<bool>,
    pub schedules_agree: bool,
}

/// Candidates removed along the way, minus the literals that were asserted
/// as values: asserting consumes the literal's own candidate, which is
/// bookkeeping rather than an elimination.
fn eliminations(initial: &KnowledgeState, final_state: &KnowledgeState) -> LiteralSet {
    initial
        .candidates()
        .difference(final_state.candidates())
        .difference(final_state.value_literals())
}

fn audit_against_unique_solution(
    puzzle: &Puzzle,
    final_state: &KnowledgeState,
) -> (f64, f64, usize, Option<bool>) {
    let solution = solve_unique(puzzle)
        .expect("campaign instances are minimal, hence uniquely solvable");
    let solution_lits = solution.literals();
    let asserted = final_state.value_literals();
    let initial = puzzle.initial_state();

    let recall = asserted.intersection(&solution_lits).len() as f64 / 81.0;

    let eliminated = eliminations(&initial, final_state);
    let excluded = initial.candidates().difference(&solution_lits);
    let completeness = if excluded.is_empty() {
        1.0
    } else {
        eliminated.intersection(&excluded).len() as f64 / excluded.len() as f64
    };

    let violations =
        asserted.difference(&solution_lits).len() + eliminated.intersection(&solution_lits).len();

    let matches = (final_state.values_count() == 81)
        .then(|| *asserted == solution_lits);

    (recall, completeness, violations, matches)
}

fn run_instance(
    seed: Seed,
    index: u64,
    theory: &ResolutionTheory,
    schedule_variants: usize,
) -> InstanceResult {
    let puzzle = generate_minimal(seed, index);
    let start = puzzle.initial_state();
    let outcome = saturate(theory, &start);

    let schedules_agree = if schedule_variants >= 2 {
        (1..schedule_variants).all(|j| {
            let schedule = Schedule::shuffled(seed.master.wrapping_add(j as u64));
            saturate_with(theory, &start, &schedule).final_state == outcome.final_state
        })
    } else {
        true
    };

    let (value_recall, elimination_completeness, soundness_violations, solved_grid_matches) =
        audit_against_unique_solution(&puzzle, &outcome.final_state);

    InstanceResult {
        puzzle,
        kind: outcome.kind,
        final_state: outcome.final_state,
        value_recall,
        elimination_completeness,
        soundness_violations,
        solved_grid_matches,
        schedules_agree,
    }
}

/// Run a campaign and keep the per-instance details.
pub fn run_campaign_detailed(
    cfg: CampaignConfig,
    theory: &ResolutionTheory,
) -> (CampaignReport, Vec<InstanceResult>) {
    assert!(cfg.n >= 1, "campaigns need at least one puzzle");
    let work = |i: u64| run_instance(cfg.seed, i, theory, cfg.schedule_variants);
    let instances: Vec<InstanceResult> = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool")
            .install(|| (0..cfg.n as u64).into_par_iter().map(work).collect()),
        None => (0..cfg.n as u64).into_par_iter().map(work).collect(),
    };

    let n_solved = instances
        .iter()
        .filter(|r| r.kind == OutcomeKind::Solved)
        .count();
    let stalled: Vec<&InstanceResult> = instances
        .iter()
        .filter(|r| r.kind != OutcomeKind::Solved)
        .collect();
    let mean_over_stalled = |f: fn(&InstanceResult) -> f64| {
        if stalled.is_empty() {
            1.0
        } else {
            stalled.iter().map(|r| f(r)).sum::<f64>() / stalled.len() as f64
        }
    };

    let report = CampaignReport {
        n_puzzles: cfg.n,
        n_solved,
        solve_rate: n_solved as f64 / cfg.n as f64,
        value_recall: mean_over_stalled(|r| r.value_recall),
        elimination_completeness: mean_over_stalled(|r| r.elimination_completeness),
        elimination_soundness_violations: instances
            .iter()
            .map(|r| r.soundness_violations)
            .sum(),
        generator_id: GENERATOR_ID.to_string(),
        master_seed: cfg.seed.master,
        schedule_variants: cfg.schedule_variants.max(1),
        schedule_variants_agreeing: instances.iter().filter(|r| r.schedules_agree).count(),
    };
    (report, instances)
}

/// Run a campaign with default options (canonical schedule only).
pub fn run_campaign(n: usize, seed: Seed, theory: &ResolutionTheory) -> CampaignReport {
    run_campaign_detailed(CampaignConfig::new(n, seed), theory).0
}

/// Per-instance completeness audit of one puzzle.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceAudit {
    pub puzzle_line: String,
    pub unique: bool,
    pub solved: bool,
    /// Solved-or-not, restricted to unique-solution instances.
    pub def1_pass: Option<bool>,
    /// Fraction of values common to all models that were asserted; `None`
    /// when no value is common to all models.
    pub value_recall: Option<f64>,
    /// Fraction of candidates excluded by every model that were eliminated;
    /// `None` when nothing is excluded.
    pub elimination_completeness: Option<f64>,
    pub soundness_violations: usize,
}

/// Completeness audit over a list of puzzles.
#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub instances: Vec<InstanceAudit>,
    pub n_puzzles: usize,
    pub n_unique: usize,
    pub n_def1_pass: usize,
    pub mean_value_recall: f64,
    pub mean_elimination_completeness: f64,
    pub total_soundness_violations: usize,
}

impl AuditReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, audit) in self.instances.iter().enumerate() {
            let fmt_opt = |v: Option<f64>| match v {
                Some(x) => format!("{x:.6}"),
                None => "n/a".to_string(),
            };
            out.push_str(&format!(
                "puzzle {}: unique={} solved={} def1={} recall={} elimination={} violations={}\n",
                i,
                audit.unique,
                audit.solved,
                match audit.def1_pass {
                    Some(true) => "pass",
                    Some(false) => "fail",
                    None => "n/a",
                },
                fmt_opt(audit.value_recall),
                fmt_opt(audit.elimination_completeness),
                audit.soundness_violations,
            ));
        }
        out.push_str(&format!(
            "n_puzzles: {}\nn_unique: {}\nn_def1_pass: {}\n\
             mean_value_recall: {:.6}\nmean_elimination_completeness: {:.6}\n\
             total_soundness_violations: {}\n",
            self.n_puzzles,
            self.n_unique,
            self.n_def1_pass,
            self.mean_value_recall,
            self.mean_elimination_completeness,
            self.total_soundness_violations,
        ));
        out
    }
}

/// Audit a theory against the three completeness readings: solves unique
/// instances; finds all values common to all models; also eliminates all
/// candidates excluded by every model — plus the hard soundness count that
/// must be zero.
pub fn completeness_audit(
    puzzles: &[Puzzle],
    theory: &ResolutionTheory,
) -> Result<AuditReport, OracleError> {
    let instances: Vec<InstanceAudit> = puzzles
        .par_iter()
        .map(|puzzle| audit_one(puzzle, theory))
        .collect::<Result<_, _>>()?;

    let n_unique = instances.iter().filter(|a| a.unique).count();
    let n_def1_pass = instances.iter().filter(|a| a.def1_pass == Some(true)).count();
    let mean = |get: fn(&InstanceAudit) -> Option<f64>| {
        let defined: Vec<f64> = instances.iter().filter_map(get).collect();
        if defined.is_empty() {
            1.0
        } else {
            defined.iter().sum::<f64>() / defined.len() as f64
        }
    };
    Ok(AuditReport {
        n_puzzles: instances.len(),
        n_unique,
        n_def1_pass,
        mean_value_recall: mean(|a| a.value_recall),
        mean_elimination_completeness: mean(|a| a.elimination_completeness),
        total_soundness_violations: instances.iter().map(|a| a.soundness_violations).sum(),
        instances,
    })
}

fn audit_one(puzzle: &Puzzle, theory: &ResolutionTheory) -> Result<InstanceAudit, OracleError> {
    let unique = count_solutions(puzzle, 2) == 1;
    let oracle_set = candidate_oracle(puzzle)?;

    // values common to all models: cells whose oracle literals are a singleton
    let mut common = LiteralSet::empty();
    let mut cell_counts = [0u8; 81];
    for lit in oracle_set.iter() {
        cell_counts[lit.cell_index()] += 1;
    }
    for lit in oracle_set.iter() {
        if cell_counts[lit.cell_index()] == 1 {
            common.insert(lit);
        }
    }

    let initial = puzzle.initial_state();
    let outcome = saturate(theory, &initial);
    let final_state = &outcome.final_state;
    let asserted = final_state.value_literals();
    let solved = outcome.kind == OutcomeKind::Solved;

    let value_recall = (!common.is_empty())
        .then(|| asserted.intersection(&common).len() as f64 / common.len() as f64);

    let eliminated = eliminations(&initial, final_state);
    let excluded = initial.candidates().difference(&oracle_set);
    let elimination_completeness = (!excluded.is_empty())
        .then(|| eliminated.intersection(&excluded).len() as f64 / excluded.len() as f64);

    let soundness_violations =
        asserted.difference(&common).len() + eliminated.intersection(&oracle_set).len();

    Ok(InstanceAudit {
        puzzle_line: puzzle.to_line(),
        unique,
        solved,
        def1_pass: unique.then_some(solved),
        value_recall,
        elimination_completeness,
        soundness_violations,
    })
}

/// Agreement of final states across perturbed scan orders.
#[derive(Clone, Debug, Serialize)]
pub struct RobustnessReport {
    pub n_puzzles: usize,
    pub variants: usize,
    pub n_agreeing: usize,
}

impl RobustnessReport {
    pub fn agreement(&self) -> f64 {
        if self.n_puzzles == 0 {
            1.0
        } else {
            self.n_agreeing as f64 / self.n_puzzles as f64
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "n_puzzles: {}\nschedule_variants: {}\nn_agreeing: {}\nagreement: {:.6}\n",
            self.n_puzzles,
            self.variants,
            self.n_agreeing,
            self.agreement()
        )
    }
}

/// Saturate each puzzle under `variants` scan orders (canonical plus seeded
/// perturbations; variant `j` uses the shuffle seeded `seed + j`) and report
/// how many puzzles end in the same final state under all of them.
pub fn schedule_robustness(
    puzzles: &[Puzzle],
    theory: &ResolutionTheory,
    variants: usize,
    seed: u64,
) -> RobustnessReport {
    let n_agreeing = puzzles
        .par_iter()
        .map(|puzzle| {
            let start = puzzle.initial_state();
            let reference = saturate(theory, &start).final_state;
            let agree = (1..variants).all(|j| {
                let schedule = Schedule::shuffled(seed.wrapping_add(j as u64));
                saturate_with(theory, &start, &schedule).final_state == reference
            });
            agree as usize
        })
        .sum();
    RobustnessReport {
        n_puzzles: puzzles.len(),
        variants: variants.max(1),
        n_agreeing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;

    fn grid_fixture() -> Grid {
        let solved =
            "892513467475682931361479258713254896624938715958167324539841672286795143147326589";
        Grid::from_cells(
            solved
                .bytes()
                .map(|b| b - b'0')
                .collect::<Vec<u8>>()
                .try_into()
                .unwrap(),
        )
    }

    #[test]
    fn single_instance_campaign_solves_easy_fixture() {
        // not a generated puzzle: audit the pipeline on a near-complete grid
        let grid = grid_fixture();
        let mut line = grid.to_line();
        line.replace_range(40..41, ".");
        let puzzle = Puzzle::parse(&line).unwrap();
        let theory = ResolutionTheory::bsrt();
        let outcome = saturate(&theory, &puzzle.initial_state());
        let (recall, completeness, violations, matches) =
            audit_against_unique_solution(&puzzle, &outcome.final_state);
        assert_eq!(recall, 1.0);
        assert_eq!(completeness, 1.0);
        assert_eq!(violations, 0);
        assert_eq!(matches, Some(true));
    }

    #[test]
    fn small_campaign_is_deterministic() {
        let theory = ResolutionTheory::bsrt();
        let a = run_campaign(10, Seed::new(11), &theory);
        let b = run_campaign(10, Seed::new(11), &theory);
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.n_puzzles, 10);
        assert!(a.n_solved <= a.n_puzzles);
        assert_eq!(a.elimination_soundness_violations, 0);
    }

    #[test]
    fn job_count_does_not_change_the_report() {
        let theory = ResolutionTheory::bsrt();
        let mut cfg = CampaignConfig::new(8, Seed::new(5));
        cfg.jobs = Some(1);
        let serial = run_campaign_detailed(cfg, &theory).0;
        cfg.jobs = Some(4);
        let parallel = run_campaign_detailed(cfg, &theory).0;
        assert_eq!(serial.to_text(), parallel.to_text());
    }

    #[test]
    fn audit_of_empty_puzzle_reports_vacuous_metrics() {
        let puzzles = vec![Puzzle::parse(&".".repeat(81)).unwrap()];
        let report = completeness_audit(&puzzles, &ResolutionTheory::bsrt()).unwrap();
        let audit = &report.instances[0];
        assert!(!audit.unique);
        assert_eq!(audit.def1_pass, None);
        assert_eq!(audit.value_recall, None);
        assert_eq!(audit.elimination_completeness, None);
        assert_eq!(audit.soundness_violations, 0);
    }

    #[test]
    fn audit_rejects_unsatisfiable_puzzles() {
        let mut line = ".".repeat(81);
        line.replace_range(0..1, "5");
        line.replace_range(3..4, "5");
        let puzzles = vec![Puzzle::parse(&line).unwrap()];
        assert_eq!(
            completeness_audit(&puzzles, &ResolutionTheory::bsrt()).unwrap_err(),
            OracleError::NoSolution
        );
    }

    #[test]
    fn solved_unique_audit_has_full_recall() {
        let grid = grid_fixture();
        let mut line = grid.to_line();
        line.replace_range(3..4, ".");
        line.replace_range(60..61, ".");
        let puzzles = vec![Puzzle::parse(&line).unwrap()];
        let report = completeness_audit(&puzzles, &ResolutionTheory::bsrt()).unwrap();
        let audit = &report.instances[0];
        assert_eq!(audit.def1_pass, Some(true));
        assert_eq!(audit.value_recall, Some(1.0));
        assert_eq!(audit.elimination_completeness, Some(1.0));
        assert_eq!(audit.soundness_violations, 0);
    }

    #[test]
    fn robustness_with_one_variant_is_trivially_total() {
        let puzzles: Vec<Puzzle> = (0..3)
            .map(|i| generate_minimal(Seed::new(2), i))
            .collect();
        let report = schedule_robustness(&puzzles, &ResolutionTheory::bsrt(), 1, 9);
        assert_eq!(report.n_agreeing, 3);
        assert_eq!(report.agreement(), 1.0);
    }
}
