//! A constructive resolution-rule engine for 9×9 Sudoku.
//!
//! The solver never searches. It starts from the knowledge state induced by a
//! puzzle's entries (asserted values plus every not-yet-impossible candidate)
//! and applies resolution rules — elementary constraint propagation, naked and
//! hidden singles, contradiction detection — until no rule applies. Every step
//! is justified by facts present in the state when it fires, so the resulting
//! [`ResolutionPath`] can be replayed and audited independently.
//!
//! The crate is organized around the four coordinate readings of the grid:
//! a number in a cell is simultaneously a value of an rc-cell, a column choice
//! for a (row, number) pair, a row choice for a (column, number) pair, and a
//! square choice for a (block, number) pair. Each reading is a [`Family`] of
//! 81 nine-literal variables over the same space of 729 literals, and the
//! universal rules are written once against that interface.
//!
//! Alongside the rule engine there is an independent exhaustive backtracking
//! [`oracle`], a seeded minimal-puzzle [`generator`], and a [`campaign`]
//! module that measures how much of the minimal-puzzle population the basic
//! rule set solves and audits every run against the oracle.

pub mod campaign;
pub mod deduction;
pub mod engine;
pub mod family;
pub mod generator;
pub mod grid;
pub mod literal;
pub mod oracle;
pub mod rules;
pub mod state;

pub use deduction::{Action, Deduction, Fact, ResolutionPath, RuleId};
pub use engine::{
    replay, saturate, saturate_with, OutcomeKind, ReplayError, ResolutionOutcome,
    ResolutionTheory, Schedule,
};
pub use family::{families, family_tables, make_families, Family, FamilyTables, VariableRef};
pub use grid::{parse_puzzle, rc_to_bs, share_a_unit, CellRef, Grid, ParseError, Puzzle};
pub use literal::{Literal, LiteralSet};
pub use state::{ks_leq, KnowledgeState};
