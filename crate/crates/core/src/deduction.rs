//! Deductions and resolution paths.
//!
//! A deduction is one rule application in condition-action form: the facts
//! its condition matched, and the single action it concludes. Actions only
//! assert values or delete candidates (or declare the state contradictory);
//! there is no disjunction, and every literal an action mentions appears in
//! the justification. A resolution path is the ordered record of deductions
//! from an initial state, replayable step by step.

use crate::family::{Family, VariableRef};
use crate::literal::Literal;
use crate::state::KnowledgeState;
use std::fmt;

/// Which rule produced a deduction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RuleId {
    /// An asserted value eliminates every other candidate of its variable.
    Ecp,
    /// A variable with a single remaining candidate gets that value.
    Single,
    /// A variable with no value and no candidates is unsatisfiable.
    Cd,
    /// Two asserted values collide inside one variable.
    EntryConflict,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::Ecp => "ECP",
            RuleId::Single => "SINGLE",
            RuleId::Cd => "CD",
            RuleId::EntryConflict => "ENTRY-CONFLICT",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A positive fact matched by a rule condition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fact {
    /// The literal is an asserted value.
    ValueAsserted(Literal),
    /// The literal is a remaining candidate.
    CandidatePresent(Literal),
    /// The variable has no asserted value and no remaining candidates.
    VariableExhausted(VariableRef),
}

impl Fact {
    pub fn holds_in(&self, ks: &KnowledgeState, tables: &crate::family::FamilyTables) -> bool {
        match *self {
            Fact::ValueAsserted(lit) => ks.is_value(lit),
            Fact::CandidatePresent(lit) => ks.has_candidate(lit),
            Fact::VariableExhausted(var) => {
                let local = (var.coord1 as usize - 1) * 9 + (var.coord2 as usize - 1);
                let mask = tables.mask(local);
                !ks.value_literals().intersects(mask) && !ks.candidates().intersects(mask)
            }
        }
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::ValueAsserted(lit) => {
                write!(f, "value({},{},{})", lit.number(), lit.row(), lit.col())
            }
            Fact::CandidatePresent(lit) => {
                write!(f, "cand({},{},{})", lit.number(), lit.row(), lit.col())
            }
            Fact::VariableExhausted(var) => write!(f, "var({},{})", var.coord1, var.coord2),
        }
    }
}

/// The conclusion of a deduction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Action {
    AssertValue(Literal),
    EliminateCandidate(Literal),
    Contradiction,
}

impl Action {
    /// True when applying the action would change nothing.
    pub fn already_satisfied(&self, ks: &KnowledgeState) -> bool {
        match *self {
            Action::AssertValue(lit) => ks.is_value(lit),
            Action::EliminateCandidate(lit) => !ks.has_candidate(lit),
            Action::Contradiction => ks.is_contradictory(),
        }
    }

    pub fn apply(&self, ks: &KnowledgeState) -> KnowledgeState {
        match *self {
            Action::AssertValue(lit) => ks.assert_value(lit),
            Action::EliminateCandidate(lit) => ks.eliminate_candidate(lit),
            Action::Contradiction => ks.mark_contradiction(),
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::AssertValue(lit) => {
                write!(f, "assert value({},{},{})", lit.number(), lit.row(), lit.col())
            }
            Action::EliminateCandidate(lit) => {
                write!(f, "eliminate cand({},{},{})", lit.number(), lit.row(), lit.col())
            }
            Action::Contradiction => f.write_str("contradiction"),
        }
    }
}

/// One justified rule application.
///
/// Deductions over the bn family carry their facts in `(n, r, c)` terms like
/// every other family; the block-square reading is recoverable from the
/// variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Deduction {
    pub rule: RuleId,
    pub family: Family,
    pub facts: Vec<Fact>,
    pub action: Action,
}

impl Deduction {
    /// Re-check the full rule condition against a state. This is stronger
    /// than checking the listed facts alone: the negative side conditions
    /// (no other candidates for a single, variable untouched for a CD) are
    /// re-derived from the rule and the matched variable.
    pub fn condition_holds(&self, ks: &KnowledgeState) -> bool {
        let tables = crate::family::family_tables(self.family);
        if !self.facts.iter().all(|fact| fact.holds_in(ks, tables)) {
            return false;
        }
        match (self.rule, &self.action) {
            (RuleId::Ecp, Action::EliminateCandidate(elim)) => {
                // the justifying value must share the variable with the target
                match self.facts.as_slice() {
                    [Fact::ValueAsserted(v), Fact::CandidatePresent(e)] => {
                        e == elim
                            && v != e
                            && tables.local_index(*v) == tables.local_index(*e)
                    }
                    _ => false,
                }
            }
            (RuleId::Single, Action::AssertValue(lit)) => match self.facts.as_slice() {
                [Fact::CandidatePresent(c)] => {
                    if c != lit {
                        return false;
                    }
                    let mask = tables.mask(tables.local_index(*lit));
                    let cands = ks.candidates().intersection(mask);
                    !ks.value_literals().intersects(mask) && cands.sole() == Some(*lit)
                }
                _ => false,
            },
            (RuleId::Cd, Action::Contradiction) => {
                matches!(self.facts.as_slice(), [Fact::VariableExhausted(_)])
            }
            (RuleId::EntryConflict, Action::Contradiction) => match self.facts.as_slice() {
                [Fact::ValueAsserted(a), Fact::ValueAsserted(b)] => {
                    a != b && tables.local_index(*a) == tables.local_index(*b)
                }
                _ => false,
            },
            _ => false,
        }
    }
}

impl fmt::Display for Deduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.rule, self.family)?;
        for fact in &self.facts {
            write!(f, " {fact}")?;
        }
        write!(f, " => {}", self.action)
    }
}

/// An initial state plus the ordered deductions applied from it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolutionPath {
    pub initial: KnowledgeState,
    pub steps: Vec<Deduction>,
}

impl ResolutionPath {
    pub fn new(initial: KnowledgeState) -> Self {
        ResolutionPath {
            initial,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}
