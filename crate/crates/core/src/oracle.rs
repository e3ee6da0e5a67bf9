//! Exhaustive backtracking ground truth.
//!
//! Everything the rule engine claims is audited against this module: it
//! counts models by depth-first search with candidate pruning, enumerates
//! the unique model when there is one, reports which literals appear in at
//! least one model, and checks minimality. It shares nothing with the rule
//! machinery beyond the grid geometry — an independent check, not a
//! restatement.

use crate::grid::{rc_to_bs, CellRef, Grid, Puzzle};
use crate::literal::{Literal, LiteralSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("puzzle has no solution")]
    NoSolution,
    #[error("puzzle does not have a unique solution")]
    NotUnique,
}

/// Model count classification, capped at two: `TwoPlus` means at least two
/// distinct models were exhibited.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolutionCount {
    Zero,
    One,
    TwoPlus,
}

impl std::fmt::Display for SolutionCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolutionCount::Zero => "0",
            SolutionCount::One => "1",
            SolutionCount::TwoPlus => "2+",
        })
    }
}

const ALL_NINE: u16 = (1 << 9) - 1;

struct Board {
    cells: [u8; 81],
    row_used: [u16; 9],
    col_used: [u16; 9],
    block_used: [u16; 9],
}

impl Board {
    /// Place the entries; `None` when two entries collide inside a unit.
    fn from_puzzle(p: &Puzzle) -> Option<Board> {
        let mut board = Board {
            cells: [0; 81],
            row_used: [0; 9],
            col_used: [0; 9],
            block_used: [0; 9],
        };
        for lit in p.entries() {
            if !board.place(lit.row(), lit.col(), lit.number()) {
                return None;
            }
        }
        Some(board)
    }

    fn place(&mut self, r: u8, c: u8, n: u8) -> bool {
        let bit = 1u16 << (n - 1);
        let (b, _) = rc_to_bs(r, c);
        let (ri, ci, bi) = (r as usize - 1, c as usize - 1, b as usize - 1);
        if self.row_used[ri] & bit != 0
            || self.col_used[ci] & bit != 0
            || self.block_used[bi] & bit != 0
        {
            return false;
        }
        self.row_used[ri] |= bit;
        self.col_used[ci] |= bit;
        self.block_used[bi] |= bit;
        self.cells[ri * 9 + ci] = n;
        true
    }

    fn unused(&self, cell: usize) -> u16 {
        let (r, c) = (cell / 9, cell % 9);
        let b = rc_to_bs(r as u8 + 1, c as u8 + 1).0 as usize - 1;
        ALL_NINE & !(self.row_used[r] | self.col_used[c] | self.block_used[b])
    }

    /// Count completions up to `cap`, capturing each found grid.
    /// Most-constrained cell first, digits ascending; fully deterministic.
    fn search(&mut self, cap: usize, found: &mut Vec<Grid>) -> usize {
        let mut best_cell = usize::MAX;
        let mut best_mask = 0u16;
        let mut best_count = 10;
        for cell in 0..81 {
            if self.cells[cell] == 0 {
                let mask = self.unused(cell);
                let count = mask.count_ones();
                if count == 0 {
                    return 0;
                }
                if (count as usize) < best_count {
                    best_cell = cell;
                    best_mask = mask;
                    best_count = count as usize;
                    if count == 1 {
                        break;
                    }
                }
            }
        }
        if best_cell == usize::MAX {
            found.push(Grid::from_cells(self.cells));
            return 1;
        }
        let (r, c) = ((best_cell / 9) as u8 + 1, (best_cell % 9) as u8 + 1);
        let mut total = 0;
        for n in 1..=9u8 {
            if best_mask & (1 << (n - 1)) != 0 {
                self.place(r, c, n);
                total += self.search(cap - total, found);
                self.unplace(r, c, n);
                if total >= cap {
                    break;
                }
            }
        }
        total
    }

    fn unplace(&mut self, r: u8, c: u8, n: u8) {
        let bit = 1u16 << (n - 1);
        let (b, _) = rc_to_bs(r, c);
        self.row_used[r as usize - 1] &= !bit;
        self.col_used[c as usize - 1] &= !bit;
        self.block_used[b as usize - 1] &= !bit;
        self.cells[(r as usize - 1) * 9 + (c as usize - 1)] = 0;
    }
}

fn search_capped(p: &Puzzle, cap: usize, found: &mut Vec<Grid>) -> usize {
    match Board::from_puzzle(p) {
        None => 0,
        Some(mut board) => board.search(cap, found),
    }
}

/// Exact model count up to `cap`.
pub fn count_solutions(p: &Puzzle, cap: usize) -> usize {
    assert!(cap >= 1, "cap must be at least 1");
    search_capped(p, cap, &mut Vec::new())
}

/// Cap-2 classification of the model count.
pub fn solution_count(p: &Puzzle) -> SolutionCount {
    match count_solutions(p, 2) {
        0 => SolutionCount::Zero,
        1 => SolutionCount::One,
        _ => SolutionCount::TwoPlus,
    }
}

/// The unique model, when the count is exactly one.
pub fn solve_unique(p: &Puzzle) -> Result<Grid, OracleError> {
    let mut found = Vec::new();
    match search_capped(p, 2, &mut found) {
        1 => Ok(found[0]),
        _ => Err(OracleError::NotUnique),
    }
}

/// Every literal `(n, r, c)` such that some model of `p` assigns `n` to
/// `(r, c)`.
///
/// With a unique model this is exactly its 81 value literals. Otherwise each
/// undecided literal is probed by adding it as a clue and testing
/// solvability — same result as enumerating all models, bounded cost.
pub fn candidate_oracle(p: &Puzzle) -> Result<LiteralSet, OracleError> {
    let mut found = Vec::new();
    match search_capped(p, 2, &mut found) {
        0 => Err(OracleError::NoSolution),
        1 => Ok(found[0].literals()),
        _ => {
            let mut clue_of = [0u8; 81];
            for lit in p.entries() {
                clue_of[lit.cell_index()] = lit.number();
            }
            let mut set = LiteralSet::empty();
            for (i, &clue) in clue_of.iter().enumerate() {
                let cell = CellRef::from_index(i);
                if clue != 0 {
                    set.insert(Literal::new(clue, cell.row(), cell.col()));
                    continue;
                }
                for n in 1..=9 {
                    let lit = Literal::new(n, cell.row(), cell.col());
                    let probed = p.with_entry(lit).expect("cell is empty");
                    if count_solutions(&probed, 1) == 1 {
                        set.insert(lit);
                    }
                }
            }
            Ok(set)
        }
    }
}

/// True iff `p` has a unique solution and deleting any single entry leaves
/// at least two.
pub fn is_minimal(p: &Puzzle) -> bool {
    if count_solutions(p, 2) != 1 {
        return false;
    }
    (0..p.entries().len()).all(|i| count_solutions(&p.without_entry(i), 2) >= 2)
}
