//! Shared puzzle fixtures.

use resolute_core::{Grid, Puzzle};

/// A 17-clue instance with a unique solution (17 clues is the fewest any
/// uniquely solvable puzzle can have, so it is also minimal). Uniqueness is
/// asserted by the oracle test suite before anything else relies on it.
pub const SEVENTEEN_CLUE_LINE: &str = concat!(
    ".........", // r1
    ".......31", // r2
    "....79...", // r3
    ".132.....", // r4
    "..4...7..", // r5
    "...1.....", // r6
    "5...4.67.", // r7
    "28.......", // r8
    "...3.....", // r9
);

pub fn seventeen_clue_fixture() -> Puzzle {
    Puzzle::parse(SEVENTEEN_CLUE_LINE).expect("fixture line is well-formed")
}

/// A complete valid grid (the unique solution of the 17-clue fixture).
pub fn grid_fixture() -> Grid {
    let solved = "892513467475682931361479258713254896624938715958167324539841672286795143147326589";
    Grid::from_cells(
        solved
            .bytes()
            .map(|b| b - b'0')
            .collect::<Vec<u8>>()
            .try_into()
            .unwrap(),
    )
}
