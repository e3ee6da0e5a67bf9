//! Seeded generation of minimal puzzles.
//!
//! A complete grid is filled by randomized backtracking, then clues are
//! deleted in a random order, keeping a deletion only when the puzzle stays
//! unique (cap-2 oracle check). A single top-down pass is enough: deleting a
//! clue never removes models, so a clue that could not be deleted mid-pass
//! cannot be deleted from the smaller final puzzle either — the result is
//! minimal by construction.
//!
//! All randomness comes from ChaCha8 streams: puzzle `i` of a run seeded
//! with master seed `m` draws from `ChaCha8Rng::seed_from_u64(m)` on stream
//! `i`, first for the grid fill and then for the deletion order. The map
//! from `(m, i)` to puzzle is a pure function, identical on every platform.

use crate::grid::{rc_to_bs, Grid, Puzzle};
use crate::literal::Literal;
use crate::oracle::count_solutions;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Identifies the generation procedure in campaign reports, so a reported
/// population is reproducible from (generator_id, master_seed, n).
pub const GENERATOR_ID: &str = "chacha8-fullgrid-topdown-minimize/v1";

/// Master seed for a generation run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Seed {
    pub master: u64,
}

impl Seed {
    pub fn new(master: u64) -> Self {
        Seed { master }
    }

    fn rng(self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(stream);
        rng
    }
}

impl From<u64> for Seed {
    fn from(master: u64) -> Self {
        Seed { master }
    }
}

fn fill_grid(rng: &mut ChaCha8Rng) -> Grid {
    let mut cells = [0u8; 81];
    let mut row_used = [0u16; 9];
    let mut col_used = [0u16; 9];
    let mut block_used = [0u16; 9];
    // one shuffled digit order per cell, drawn up front so the recursion
    // consumes rng state in a fixed pattern
    let mut orders = Vec::with_capacity(81);
    for _ in 0..81 {
        let mut digits: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];
        digits.shuffle(rng);
        orders.push(digits);
    }

    fn rec(
        pos: usize,
        cells: &mut [u8; 81],
        row_used: &mut [u16; 9],
        col_used: &mut [u16; 9],
        block_used: &mut [u16; 9],
        orders: &[[u8; 9]],
    ) -> bool {
        if pos == 81 {
            return true;
        }
        let (r, c) = (pos / 9, pos % 9);
        let b = rc_to_bs(r as u8 + 1, c as u8 + 1).0 as usize - 1;
        for &n in &orders[pos] {
            let bit = 1u16 << (n - 1);
            if row_used[r] & bit == 0 && col_used[c] & bit == 0 && block_used[b] & bit == 0 {
                row_used[r] |= bit;
                col_used[c] |= bit;
                block_used[b] |= bit;
                cells[pos] = n;
                if rec(pos + 1, cells, row_used, col_used, block_used, orders) {
                    return true;
                }
                row_used[r] &= !bit;
                col_used[c] &= !bit;
                block_used[b] &= !bit;
                cells[pos] = 0;
            }
        }
        false
    }

    let ok = rec(
        0,
        &mut cells,
        &mut row_used,
        &mut col_used,
        &mut block_used,
        &orders,
    );
    assert!(ok, "randomized fill always completes on an empty grid");
    Grid::from_cells(cells)
}

fn minimize_with(grid: &Grid, rng: &mut ChaCha8Rng) -> Puzzle {
    let mut order: [u8; 81] = std::array::from_fn(|i| i as u8);
    order.shuffle(rng);
    let mut kept = [true; 81];
    for &pos in &order {
        kept[pos as usize] = false;
        let puzzle = puzzle_from_kept(grid, &kept);
        if count_solutions(&puzzle, 2) != 1 {
            kept[pos as usize] = true;
        }
    }
    puzzle_from_kept(grid, &kept)
}

fn puzzle_from_kept(grid: &Grid, kept: &[bool; 81]) -> Puzzle {
    let entries: Vec<Literal> = (0..81)
        .filter(|&i| kept[i])
        .map(|i| {
            Literal::new(
                grid.cells()[i],
                (i / 9) as u8 + 1,
                (i % 9) as u8 + 1,
            )
        })
        .collect();
    Puzzle::from_entries(entries).expect("one entry per cell")
}

/// A complete valid grid, deterministic per seed (stream 0).
pub fn generate_full_grid(seed: Seed) -> Grid {
    fill_grid(&mut seed.rng(0))
}

/// Minimize a complete grid by seeded top-down deletion (stream 0).
pub fn minimize(grid: &Grid, seed: Seed) -> Puzzle {
    minimize_with(grid, &mut seed.rng(0))
}

/// Puzzle `index` of the run seeded by `seed`: grid fill and minimization
/// both draw from stream `index`.
pub fn generate_minimal(seed: Seed, index: u64) -> Puzzle {
    let mut rng = seed.rng(index);
    let grid = fill_grid(&mut rng);
    minimize_with(&grid, &mut rng)
}
