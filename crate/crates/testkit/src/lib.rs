//! Brute-force oracles and fixtures for the resolute test suites.
//!
//! Everything here recomputes results from first principles — nested
//! coordinate loops, per-literal membership queries, first-empty-cell
//! search — deliberately avoiding the bitmask fast paths of the library it
//! checks. Test code only; never a dependency of the shipped crates.

pub mod fixtures;
pub mod formula;
pub mod geometry;
pub mod naive;
pub mod states;
pub mod transforms;

pub use fixtures::{grid_fixture, seventeen_clue_fixture, SEVENTEEN_CLUE_LINE};
pub use formula::{
    cd_formula, ecp_formula, entry_conflict_formula, single_formula, vcr_fixed_point_violations,
};
pub use geometry::{block_square_by_enumeration, peer_cells};
pub use naive::{naive_count_solutions, naive_ks_leq};
pub use states::{prefix_states, random_state, random_subset_puzzle};
pub use transforms::{permute_bands, relabel_digits, transpose};
