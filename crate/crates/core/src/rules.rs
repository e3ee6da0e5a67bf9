//! The universal resolution rules, parameterized by variable family.
//!
//! Three rule schemes work for any family: elementary constraint propagation
//! (an asserted value eliminates every other candidate of its variable),
//! singles (a valueless variable with exactly one candidate gets that value),
//! and contradiction detection (a variable with no value and no candidates
//! has no possible assignment). A fourth scheme, entry conflicts, catches two
//! asserted values colliding inside one variable — possible only when the
//! initial entries were already inconsistent.
//!
//! Instantiated over the four Sudoku families these schemes are exactly the
//! textbook basics: same-cell and same-unit candidate stripping, naked
//! singles in rc, hidden singles in rn/cn/bn, and the no-place-left checks.
//!
//! Generators return deductions in canonical scan order: variables by
//! ascending `(coord1, coord2)`, literals by ascending variable value. The
//! scan order is a reproducibility choice, not part of the rules' meaning.

use crate::deduction::{Action, Deduction, Fact, RuleId};
use crate::family::FamilyTables;
use crate::state::KnowledgeState;

/// Propagation deductions available in one variable: every remaining
/// candidate of a variable that already has an asserted value must go.
/// The justifying value is the first one in scan order.
pub fn ecp_in_variable(
    ks: &KnowledgeState,
    tables: &FamilyTables,
    local: usize,
) -> Vec<Deduction> {
    let mask = tables.mask(local);
    let values = ks.value_literals().intersection(mask);
    let Some(justifying) = values.first() else {
        return Vec::new();
    };
    ks.candidates()
        .intersection(mask)
        .iter()
        .map(|elim| Deduction {
            rule: RuleId::Ecp,
            family: tables.family(),
            facts: vec![Fact::ValueAsserted(justifying), Fact::CandidatePresent(elim)],
            action: Action::EliminateCandidate(elim),
        })
        .collect()
}

/// The single available in one variable, if any: no asserted value and
/// exactly one remaining candidate.
pub fn single_in_variable(
    ks: &KnowledgeState,
    tables: &FamilyTables,
    local: usize,
) -> Option<Deduction> {
    let mask = tables.mask(local);
    if ks.value_literals().intersects(mask) {
        return None;
    }
    let lit = ks.candidates().intersection(mask).sole()?;
    Some(Deduction {
        rule: RuleId::Single,
        family: tables.family(),
        facts: vec![Fact::CandidatePresent(lit)],
        action: Action::AssertValue(lit),
    })
}

/// The contradiction detectable in one variable, if any: no asserted value
/// and zero remaining candidates.
pub fn cd_in_variable(
    ks: &KnowledgeState,
    tables: &FamilyTables,
    local: usize,
) -> Option<Deduction> {
    let mask = tables.mask(local);
    if ks.value_literals().intersects(mask) || ks.candidates().intersects(mask) {
        return None;
    }
    Some(Deduction {
        rule: RuleId::Cd,
        family: tables.family(),
        facts: vec![Fact::VariableExhausted(tables.variable(local))],
        action: Action::Contradiction,
    })
}

/// The entry conflict detectable in one variable, if any: two distinct
/// asserted values in the same variable. In the rc family a cell can hold at
/// most one value by representation, so conflicts surface in rn, cn and bn.
pub fn entry_conflict_in_variable(
    ks: &KnowledgeState,
    tables: &FamilyTables,
    local: usize,
) -> Option<Deduction> {
    let values = ks.value_literals().intersection(tables.mask(local));
    if values.len() < 2 {
        return None;
    }
    let mut iter = values.iter();
    let first = iter.next().unwrap();
    let second = iter.next().unwrap();
    Some(Deduction {
        rule: RuleId::EntryConflict,
        family: tables.family(),
        facts: vec![Fact::ValueAsserted(first), Fact::ValueAsserted(second)],
        action: Action::Contradiction,
    })
}

/// All propagation deductions of one family, in canonical order.
pub fn urt_ecp(ks: &KnowledgeState, tables: &FamilyTables) -> Vec<Deduction> {
    (0..81)
        .flat_map(|local| ecp_in_variable(ks, tables, local))
        .collect()
}

/// All single deductions of one family, in canonical order.
pub fn urt_single(ks: &KnowledgeState, tables: &FamilyTables) -> Vec<Deduction> {
    (0..81)
        .filter_map(|local| single_in_variable(ks, tables, local))
        .collect()
}

/// All contradiction detections of one family, in canonical order.
pub fn urt_cd(ks: &KnowledgeState, tables: &FamilyTables) -> Vec<Deduction> {
    (0..81)
        .filter_map(|local| cd_in_variable(ks, tables, local))
        .collect()
}

/// All entry conflicts of one family, in canonical order.
pub fn entry_conflicts(ks: &KnowledgeState, tables: &FamilyTables) -> Vec<Deduction> {
    (0..81)
        .filter_map(|local| entry_conflict_in_variable(ks, tables, local))
        .collect()
}
