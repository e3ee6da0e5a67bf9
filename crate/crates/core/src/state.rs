//! Knowledge states and their partial order.
//!
//! A knowledge state is a set of asserted values plus a set of remaining
//! candidates over the 729-literal space. Resolution only ever adds values
//! and deletes candidates, which induces the order [`ks_leq`]: `a ≤ b` means
//! `b` can appear after `a` in some resolution process.
//!
//! States are value objects: every operation takes the old state and returns
//! a new one. A state can be contradictory — either a contradiction-detection
//! rule fired, or a value was asserted on a cell that already holds a
//! different number. The flag is part of the state, not an error; inconsistent
//! entry sets are first-class inputs.

use crate::literal::{Literal, LiteralSet};

#[derive(Clone, PartialEq, Eq)]
pub struct KnowledgeState {
    /// Per-cell value, row-major; 0 means no value.
    cells: [u8; 81],
    /// The asserted values as literals; always mirrors `cells`.
    value_literals: LiteralSet,
    /// Remaining candidates. Disjoint from `value_literals`: asserting a
    /// value consumes the literal's own candidate.
    candidates: LiteralSet,
    contradiction: bool,
}

impl KnowledgeState {
    /// No values, every literal a candidate — the state induced by the empty
    /// puzzle, and the bottom of the reachable order.
    pub fn unconstrained() -> Self {
        KnowledgeState {
            cells: [0; 81],
            value_literals: LiteralSet::empty(),
            candidates: LiteralSet::full(),
            contradiction: false,
        }
    }

    /// Assemble a state from asserted entries and an explicit candidate set.
    /// Entries must not collide on a cell; candidates on entry cells are
    /// dropped to keep values and candidates disjoint.
    pub fn from_parts(entries: &[Literal], candidates: LiteralSet) -> Self {
        let mut ks = KnowledgeState {
            cells: [0; 81],
            value_literals: LiteralSet::empty(),
            candidates,
            contradiction: false,
        };
        for &lit in entries {
            debug_assert_eq!(ks.cells[lit.cell_index()], 0, "entries collide on a cell");
            ks.cells[lit.cell_index()] = lit.number();
            ks.value_literals.insert(lit);
            ks.candidates.remove(lit);
        }
        ks
    }

    pub fn value_at(&self, r: u8, c: u8) -> Option<u8> {
        let n = self.cells[(r as usize - 1) * 9 + (c as usize - 1)];
        (n != 0).then_some(n)
    }

    pub fn values_count(&self) -> usize {
        self.value_literals.len()
    }

    pub fn is_complete(&self) -> bool {
        self.values_count() == 81
    }

    pub fn is_contradictory(&self) -> bool {
        self.contradiction
    }

    pub fn value_literals(&self) -> &LiteralSet {
        &self.value_literals
    }

    pub fn candidates(&self) -> &LiteralSet {
        &self.candidates
    }

    pub fn is_value(&self, lit: Literal) -> bool {
        self.value_literals.contains(lit)
    }

    pub fn has_candidate(&self, lit: Literal) -> bool {
        self.candidates.contains(lit)
    }

    /// Record `lit` as the value of its cell.
    ///
    /// Idempotent when the same value is already present. If the cell holds a
    /// different number the existing value is retained and the result is
    /// marked contradictory. Otherwise the literal's own candidate is
    /// consumed and the result is ≥ the input in [`ks_leq`].
    pub fn assert_value(&self, lit: Literal) -> Self {
        let mut next = self.clone();
        match self.cells[lit.cell_index()] {
            0 => {
                next.cells[lit.cell_index()] = lit.number();
                next.value_literals.insert(lit);
                next.candidates.remove(lit);
            }
            n if n == lit.number() => {}
            _ => next.contradiction = true,
        }
        next
    }

    /// Remove `lit` from the candidates. Idempotent; the result is ≥ the
    /// input in [`ks_leq`].
    pub fn eliminate_candidate(&self, lit: Literal) -> Self {
        let mut next = self.clone();
        next.candidates.remove(lit);
        next
    }

    /// Mark the state contradictory.
    pub fn mark_contradiction(&self) -> Self {
        let mut next = self.clone();
        next.contradiction = true;
        next
    }

    /// Render the asserted values as an 81-character line, `.` for valueless
    /// cells.
    pub fn to_line(&self) -> String {
        self.cells
            .iter()
            .map(|&n| if n == 0 { '.' } else { (b'0' + n) as char })
            .collect()
    }
}

impl std::fmt::Debug for KnowledgeState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "KnowledgeState(values={}, candidates={}, contradiction={})",
            self.values_count(),
            self.candidates.len(),
            self.contradiction
        )
    }
}

/// The knowledge-state order: `a ≤ b` iff every value of `a` is a value of
/// `b` and every candidate of `b` is a candidate of `a`.
pub fn ks_leq(a: &KnowledgeState, b: &KnowledgeState) -> bool {
    a.value_literals.is_subset(&b.value_literals) && b.candidates.is_subset(&a.candidates)
}
