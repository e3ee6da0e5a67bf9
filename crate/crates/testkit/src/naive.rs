//! Dead-simple reference implementations.

use crate::geometry::peer_cells;
use resolute_core::{KnowledgeState, Literal, Puzzle};

/// The knowledge-state order, computed by direct inclusion tests over all
/// 729 literals — no set machinery.
pub fn naive_ks_leq(a: &KnowledgeState, b: &KnowledgeState) -> bool {
    for lit in Literal::all() {
        if a.is_value(lit) && !b.is_value(lit) {
            return false;
        }
        if b.has_candidate(lit) && !a.has_candidate(lit) {
            return false;
        }
    }
    true
}

/// Count completions up to `cap` by first-empty-cell recursion with
/// candidates recomputed from peers at every node.
pub fn naive_count_solutions(p: &Puzzle, cap: usize) -> usize {
    let mut cells = [0u8; 81];
    for lit in p.entries() {
        cells[lit.cell_index()] = lit.number();
    }
    // reject clue sets violating a unit directly
    for lit in p.entries() {
        for (r2, c2) in peer_cells(lit.row(), lit.col()) {
            if cells[(r2 as usize - 1) * 9 + (c2 as usize - 1)] == lit.number() {
                return 0;
            }
        }
    }
    fn rec(cells: &mut [u8; 81], cap: usize) -> usize {
        let Some(empty) = cells.iter().position(|&n| n == 0) else {
            return 1;
        };
        let (r, c) = ((empty / 9) as u8 + 1, (empty % 9) as u8 + 1);
        let mut used = [false; 10];
        for (r2, c2) in peer_cells(r, c) {
            used[cells[(r2 as usize - 1) * 9 + (c2 as usize - 1)] as usize] = true;
        }
        let mut total = 0;
        for n in 1..=9u8 {
            if !used[n as usize] {
                cells[empty] = n;
                total += rec(cells, cap - total);
                cells[empty] = 0;
                if total >= cap {
                    break;
                }
            }
        }
        total
    }
    rec(&mut cells, cap)
}
