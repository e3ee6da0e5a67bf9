//! Deterministic forward-chaining saturation.
//!
//! A resolution theory is a prioritized list of rule schemes over a list of
//! variable families. Saturation repeatedly finds the highest-priority rule
//! with an applicable deduction, applies that rule's first deduction in scan
//! order, records it, and starts over. Exactly one deduction is applied per
//! step, so the recorded path justifies every state transition individually.
//!
//! Each applied deduction strictly grows the state (a value added or a
//! candidate deleted) or terminates with a contradiction, so saturation halts
//! after at most 81 + 729 steps. Identical inputs produce bit-identical
//! outcomes; the scan order can be perturbed through [`Schedule`] to probe
//! how much the final state depends on it.
//!
//! # Trace format (version 1)
//!
//! One line per deduction:
//!
//! ```text
//! step <k>: <RULE>[<family>] <justification-facts> => <action>
//! ```
//!
//! with `<k>` counting from 1, `<RULE>` one of `ECP`, `SINGLE`, `CD`,
//! `ENTRY-CONFLICT`, `<family>` one of `rc`, `rn`, `cn`, `bn`, facts written
//! `value(n,r,c)`, `cand(n,r,c)` or `var(c1,c2)`, and actions written
//! `assert value(n,r,c)`, `eliminate cand(n,r,c)` or `contradiction`. All
//! literals are reported in `(n, r, c)` coordinates, including bn-family
//! deductions. The format is frozen: any change bumps
//! [`TRACE_FORMAT_VERSION`].

use crate::deduction::{Deduction, ResolutionPath};
use crate::family::{family_tables, Family};
use crate::rules::{
    cd_in_variable, ecp_in_variable, entry_conflict_in_variable, single_in_variable,
};
use crate::state::KnowledgeState;
use crate::RuleId;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Version of the textual trace format.
pub const TRACE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TheoryError {
    #[error("two rules share priority {0}")]
    DuplicatePriority(u8),
    #[error("family {0} listed twice")]
    DuplicateFamily(Family),
}

/// A set of resolution rules with distinct priorities, ranging over a list
/// of variable families. Lower priority number fires first.
#[derive(Clone, Debug)]
pub struct ResolutionTheory {
    rules: Vec<(u8, RuleId)>,
    families: Vec<Family>,
}

impl ResolutionTheory {
    pub fn new(
        mut rules: Vec<(u8, RuleId)>,
        families: Vec<Family>,
    ) -> Result<Self, TheoryError> {
        rules.sort_by_key(|&(priority, _)| priority);
        for pair in rules.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(TheoryError::DuplicatePriority(pair[0].0));
            }
        }
        for (i, &f) in families.iter().enumerate() {
            if families[..i].contains(&f) {
                return Err(TheoryError::DuplicateFamily(f));
            }
        }
        Ok(ResolutionTheory { rules, families })
    }

    /// The basic Sudoku resolution theory: entry conflicts, contradiction
    /// detection, elementary propagation and singles, over all four
    /// families. Contradictions surface before further inference; ECP runs
    /// before singles because it is what makes their conditions true.
    pub fn bsrt() -> Self {
        ResolutionTheory::new(
            vec![
                (0, RuleId::EntryConflict),
                (1, RuleId::Cd),
                (2, RuleId::Ecp),
                (3, RuleId::Single),
            ],
            Family::ALL.to_vec(),
        )
        .expect("the basic theory is well-formed")
    }

    /// Rules in firing order.
    pub fn rules(&self) -> impl Iterator<Item = RuleId> + '_ {
        self.rules.iter().map(|&(_, rule)| rule)
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }
}

/// The order deductions are searched for: which family first, which variable
/// inside a family first, and whether literals inside a variable are taken
/// ascending or descending. The canonical schedule is ascending everything,
/// families rc, rn, cn, bn.
#[derive(Clone, Debug)]
pub struct Schedule {
    family_order: [Family; 4],
    var_order: [[u8; 81]; 4],
    reverse_literals: bool,
}

impl Schedule {
    pub fn canonical() -> Self {
        let mut identity = [0u8; 81];
        for (i, slot) in identity.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Schedule {
            family_order: Family::ALL,
            var_order: [identity; 4],
            reverse_literals: false,
        }
    }

    /// A seeded perturbation of the canonical schedule: families and
    /// per-family variable scans are shuffled, literal order may flip.
    pub fn shuffled(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut schedule = Schedule::canonical();
        schedule.family_order.shuffle(&mut rng);
        for order in &mut schedule.var_order {
            order.shuffle(&mut rng);
        }
        schedule.reverse_literals = seed % 2 == 1;
        schedule
    }

    fn family_position(family: Family) -> usize {
        Family::ALL.iter().position(|&f| f == family).unwrap()
    }
}

/// How a saturation run ended.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutcomeKind {
    /// Every rc-cell has a value and the state is not contradictory.
    Solved,
    /// No rule instance applies and at least one cell is valueless.
    Stalled,
    /// A contradiction rule fired or a value conflict was hit.
    Contradiction,
}

impl std::fmt::Display for OutcomeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OutcomeKind::Solved => "SOLVED",
            OutcomeKind::Stalled => "STALLED",
            OutcomeKind::Contradiction => "CONTRADICTION",
        })
    }
}

/// Result of saturating a theory over a state: classification, final state,
/// and the full replayable path.
#[derive(Clone, Debug)]
pub struct ResolutionOutcome {
    pub kind: OutcomeKind,
    pub final_state: KnowledgeState,
    pub path: ResolutionPath,
}

impl ResolutionOutcome {
    /// Render the path in the versioned trace format, one line per step.
    pub fn trace(&self) -> String {
        render_trace(&self.path)
    }
}

/// The first applicable deduction under a schedule, or `None` at a fixed
/// point.
fn first_deduction(
    ks: &KnowledgeState,
    theory: &ResolutionTheory,
    schedule: &Schedule,
) -> Option<Deduction> {
    for rule in theory.rules() {
        for &family in schedule
            .family_order
            .iter()
            .filter(|f| theory.families().contains(f))
        {
            let tables = family_tables(family);
            let order = &schedule.var_order[Schedule::family_position(family)];
            for &local in order {
                let local = local as usize;
                let found = match rule {
                    RuleId::EntryConflict => entry_conflict_in_variable(ks, tables, local),
                    RuleId::Cd => cd_in_variable(ks, tables, local),
                    RuleId::Ecp => {
                        let eliminations = ecp_in_variable(ks, tables, local);
                        if schedule.reverse_literals {
                            eliminations.into_iter().next_back()
                        } else {
                            eliminations.into_iter().next()
                        }
                    }
                    RuleId::Single => single_in_variable(ks, tables, local),
                };
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

/// Saturate under the canonical schedule.
pub fn saturate(theory: &ResolutionTheory, start: &KnowledgeState) -> ResolutionOutcome {
    saturate_with(theory, start, &Schedule::canonical())
}

/// Saturate under an explicit schedule.
pub fn saturate_with(
    theory: &ResolutionTheory,
    start: &KnowledgeState,
    schedule: &Schedule,
) -> ResolutionOutcome {
    let mut ks = start.clone();
    let mut path = ResolutionPath::new(start.clone());
    let kind = loop {
        if ks.is_contradictory() {
            break OutcomeKind::Contradiction;
        }
        match first_deduction(&ks, theory, schedule) {
            None => {
                break if ks.is_complete() {
                    OutcomeKind::Solved
                } else {
                    OutcomeKind::Stalled
                };
            }
            Some(deduction) => {
                debug_assert!(!deduction.action.already_satisfied(&ks));
                ks = deduction.action.apply(&ks);
                path.steps.push(deduction);
            }
        }
    };
    debug_assert!(path.len() <= 81 + 729);
    ResolutionOutcome {
        kind,
        final_state: ks,
        path,
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReplayError {
    #[error("replay mismatch at step {step}: condition of `{deduction}` does not hold")]
    Mismatch { step: usize, deduction: String },
}

/// Re-apply a recorded path from its initial state, re-checking every
/// deduction's condition at its turn.
pub fn replay(path: &ResolutionPath) -> Result<KnowledgeState, ReplayError> {
    let mut ks = path.initial.clone();
    for (i, deduction) in path.steps.iter().enumerate() {
        if !deduction.condition_holds(&ks) {
            return Err(ReplayError::Mismatch {
                step: i + 1,
                deduction: deduction.to_string(),
            });
        }
        ks = deduction.action.apply(&ks);
    }
    Ok(ks)
}

/// Render a path in the versioned trace format.
pub fn render_trace(path: &ResolutionPath) -> String {
    let mut out = String::new();
    for (i, deduction) in path.steps.iter().enumerate() {
        out.push_str(&format!("step {}: {}\n", i + 1, deduction));
    }
    out
}
