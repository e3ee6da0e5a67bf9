//! Grid geometry, puzzles, and the initial knowledge state.
//!
//! The geometry is the standard 9×9 layout: rows and columns 1..=9, blocks
//! numbered row-major over the nine 3×3 boxes, and a square coordinate for
//! the position of a cell inside its block. The `(r, c) ↔ (b, s)` map is a
//! bijection on the 81 cells; everything else here (units, peers, puzzle
//! parsing) is built on top of it.

use crate::literal::{Literal, LiteralSet};
use crate::state::KnowledgeState;
use std::fmt;
use thiserror::Error;

/// A cell position. Block and square coordinates are derived, not stored.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CellRef {
    r: u8,
    c: u8,
}

impl CellRef {
    pub fn new(r: u8, c: u8) -> Self {
        assert!(
            (1..=9).contains(&r) && (1..=9).contains(&c),
            "cell indices must be in 1..=9, got r={r} c={c}"
        );
        CellRef { r, c }
    }

    pub fn row(self) -> u8 {
        self.r
    }

    pub fn col(self) -> u8 {
        self.c
    }

    pub fn block(self) -> u8 {
        rc_to_bs(self.r, self.c).0
    }

    pub fn square(self) -> u8 {
        rc_to_bs(self.r, self.c).1
    }

    /// Row-major index in `0..81`.
    pub fn index(self) -> usize {
        (self.r as usize - 1) * 9 + (self.c as usize - 1)
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < 81, "cell index out of range: {index}");
        CellRef::new((index / 9) as u8 + 1, (index % 9) as u8 + 1)
    }
}

/// Map row-column coordinates to block-square coordinates.
///
/// Blocks tile the grid row-major in 3×3 boxes; the square coordinate walks
/// the cells of a block in the same row-major order.
pub fn rc_to_bs(r: u8, c: u8) -> (u8, u8) {
    assert!(
        (1..=9).contains(&r) && (1..=9).contains(&c),
        "grid indices must be in 1..=9, got r={r} c={c}"
    );
    let b = 3 * ((r - 1) / 3) + (c - 1) / 3 + 1;
    let s = 3 * ((r - 1) % 3) + (c - 1) % 3 + 1;
    (b, s)
}

/// Inverse of [`rc_to_bs`].
pub fn bs_to_rc(b: u8, s: u8) -> (u8, u8) {
    assert!(
        (1..=9).contains(&b) && (1..=9).contains(&s),
        "grid indices must be in 1..=9, got b={b} s={s}"
    );
    let r = 3 * ((b - 1) / 3) + (s - 1) / 3 + 1;
    let c = 3 * ((b - 1) % 3) + (s - 1) % 3 + 1;
    (r, c)
}

/// True iff the two cells are distinct and share a row, column or block.
///
/// A cell does not share a unit with itself.
pub fn share_a_unit(a: CellRef, b: CellRef) -> bool {
    a != b && (a.row() == b.row() || a.col() == b.col() || a.block() == b.block())
}

/// A complete assignment: every cell holds a number.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    cells: [u8; 81],
}

impl Grid {
    /// Build from row-major cell values; every entry must be in 1..=9.
    pub fn from_cells(cells: [u8; 81]) -> Self {
        assert!(
            cells.iter().all(|&n| (1..=9).contains(&n)),
            "complete grids hold digits 1..=9 only"
        );
        Grid { cells }
    }

    pub fn get(&self, r: u8, c: u8) -> u8 {
        self.cells[CellRef::new(r, c).index()]
    }

    pub fn cells(&self) -> &[u8; 81] {
        &self.cells
    }

    /// Check the four constraint groups literally: one value per cell (by
    /// construction), and nine distinct numbers in every row, column and
    /// block.
    pub fn is_valid(&self) -> bool {
        let mut row = [0u16; 9];
        let mut col = [0u16; 9];
        let mut block = [0u16; 9];
        for r in 1..=9u8 {
            for c in 1..=9u8 {
                let bit = 1u16 << (self.get(r, c) - 1);
                let b = rc_to_bs(r, c).0;
                row[r as usize - 1] |= bit;
                col[c as usize - 1] |= bit;
                block[b as usize - 1] |= bit;
            }
        }
        let all = (1u16 << 9) - 1;
        row.iter()
            .chain(&col)
            .chain(&block)
            .all(|&mask| mask == all)
    }

    /// The 81 value literals of this grid.
    pub fn literals(&self) -> LiteralSet {
        LiteralSet::from_iter((0..81).map(|i| {
            let cell = CellRef::from_index(i);
            Literal::new(self.cells[i], cell.row(), cell.col())
        }))
    }

    /// Render as an 81-character line of digits.
    pub fn to_line(&self) -> String {
        self.cells.iter().map(|&n| (b'0' + n) as char).collect()
    }

    /// The puzzle whose entries are all 81 values of this grid.
    pub fn to_puzzle(&self) -> Puzzle {
        Puzzle::parse(&self.to_line()).expect("a complete grid is a well-formed puzzle line")
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grid({})", self.to_line())
    }
}

/// Errors from the puzzle line parser.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("puzzle line must contain exactly 81 cells, found {0}")]
    BadLength(usize),
    #[error("invalid character {ch:?} at cell index {index}")]
    BadChar { index: usize, ch: char },
    #[error("duplicate entry for cell r{r}c{c}")]
    DuplicateCell { r: u8, c: u8 },
}

/// A puzzle instance: a set of clue entries, at most one per cell.
///
/// Entries may conflict across cells (two equal numbers in a unit); such
/// puzzles are representable on purpose and the conflict is detected during
/// resolution, not at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Puzzle {
    entries: Vec<Literal>,
    source_text: String,
}

impl Puzzle {
    /// Parse an 81-character line. Digits 1-9 are clues; `.` and `0` mean
    /// empty. Whitespace anywhere in the input is ignored.
    pub fn parse(text: &str) -> Result<Puzzle, ParseError> {
        let cells: Vec<char> = text.chars().filter(|ch| !ch.is_whitespace()).collect();
        if cells.len() != 81 {
            return Err(ParseError::BadLength(cells.len()));
        }
        let mut entries = Vec::new();
        for (i, &ch) in cells.iter().enumerate() {
            match ch {
                '.' | '0' => {}
                '1'..='9' => {
                    let cell = CellRef::from_index(i);
                    entries.push(Literal::new(ch as u8 - b'0', cell.row(), cell.col()));
                }
                _ => return Err(ParseError::BadChar { index: i, ch }),
            }
        }
        Ok(Puzzle {
            entries,
            source_text: cells.iter().collect(),
        })
    }

    /// Build from an entry list. Rejects two entries on the same cell; this
    /// cannot happen through [`Puzzle::parse`] but other front-ends can reach
    /// it.
    pub fn from_entries(entries: Vec<Literal>) -> Result<Puzzle, ParseError> {
        let mut seen = [false; 81];
        for lit in &entries {
            let idx = lit.cell_index();
            if seen[idx] {
                return Err(ParseError::DuplicateCell {
                    r: lit.row(),
                    c: lit.col(),
                });
            }
            seen[idx] = true;
        }
        let mut cells = ['.'; 81];
        for lit in &entries {
            cells[lit.cell_index()] = (b'0' + lit.number()) as char;
        }
        Ok(Puzzle {
            entries,
            source_text: cells.iter().collect(),
        })
    }

    pub fn entries(&self) -> &[Literal] {
        &self.entries
    }

    pub fn source_text(&self) -> &str {
        &self.source_text
    }

    /// Render as an 81-character line with `.` for empty cells.
    pub fn to_line(&self) -> String {
        let mut cells = ['.'; 81];
        for lit in &self.entries {
            cells[lit.cell_index()] = (b'0' + lit.number()) as char;
        }
        cells.iter().collect()
    }

    /// Remove the entry at `index`, returning the reduced puzzle.
    pub fn without_entry(&self, index: usize) -> Puzzle {
        let mut entries = self.entries.clone();
        entries.remove(index);
        Puzzle::from_entries(entries).expect("removing an entry keeps cells distinct")
    }

    /// Add a clue on a currently-empty cell.
    pub fn with_entry(&self, lit: Literal) -> Result<Puzzle, ParseError> {
        let mut entries = self.entries.clone();
        entries.push(lit);
        Puzzle::from_entries(entries)
    }

    /// The initial knowledge state: the entries as asserted values, and every
    /// literal of every clueless cell as a candidate. Clue cells carry no
    /// candidates at all. Entries that conflict inside a unit are preserved
    /// as values; the conflict surfaces as a deduction during resolution.
    pub fn initial_state(&self) -> KnowledgeState {
        let mut clued = [false; 81];
        for lit in &self.entries {
            clued[lit.cell_index()] = true;
        }
        let mut candidates = LiteralSet::empty();
        for lit in Literal::all() {
            if !clued[lit.cell_index()] {
                candidates.insert(lit);
            }
        }
        KnowledgeState::from_parts(&self.entries, candidates)
    }
}

/// Convenience free-function form of [`Puzzle::parse`].
pub fn parse_puzzle(text: &str) -> Result<Puzzle, ParseError> {
    Puzzle::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_cells_map_to_expected_blocks() {
        assert_eq!(rc_to_bs(1, 1), (1, 1));
        assert_eq!(rc_to_bs(1, 4), (2, 1));
        assert_eq!(rc_to_bs(9, 9), (9, 9));
    }

    #[test]
    fn rc_bs_is_a_bijection() {
        let mut seen = [false; 81];
        for r in 1..=9 {
            for c in 1..=9 {
                let (b, s) = rc_to_bs(r, c);
                let idx = (b as usize - 1) * 9 + (s as usize - 1);
                assert!(!seen[idx], "two cells map to block {b} square {s}");
                seen[idx] = true;
                assert_eq!(bs_to_rc(b, s), (r, c));
            }
        }
        assert!(seen.iter().all(|&x| x));
    }

    #[test]
    #[should_panic(expected = "grid indices")]
    fn rc_to_bs_rejects_out_of_range() {
        rc_to_bs(0, 5);
    }

    #[test]
    fn share_a_unit_examples() {
        let cell = |r, c| CellRef::new(r, c);
        assert!(!share_a_unit(cell(1, 1), cell(1, 1)));
        assert!(share_a_unit(cell(1, 1), cell(1, 9)));
        assert!(share_a_unit(cell(1, 1), cell(2, 2)));
        assert!(!share_a_unit(cell(1, 1), cell(4, 4)));
    }

    #[test]
    fn share_a_unit_symmetric_irreflexive() {
        for i in 0..81 {
            let a = CellRef::from_index(i);
            assert!(!share_a_unit(a, a));
            for j in 0..81 {
                let b = CellRef::from_index(j);
                assert_eq!(share_a_unit(a, b), share_a_unit(b, a));
            }
        }
    }

    #[test]
    fn parse_empty_and_single_clue() {
        let empty = Puzzle::parse(&".".repeat(81)).unwrap();
        assert_eq!(empty.entries().len(), 0);

        let mut line = ".".repeat(81);
        line.replace_range(0..1, "5");
        let one = Puzzle::parse(&line).unwrap();
        assert_eq!(one.entries(), &[Literal::new(5, 1, 1)]);
        assert_eq!(one.to_line(), line);
    }

    #[test]
    fn parse_accepts_zero_for_empty_and_strips_whitespace() {
        let with_zeros = "0".repeat(81);
        assert_eq!(Puzzle::parse(&with_zeros).unwrap().entries().len(), 0);
        let spaced = format!("5 {}\n", ".".repeat(80));
        assert_eq!(Puzzle::parse(&spaced).unwrap().entries().len(), 1);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Puzzle::parse(&".".repeat(80)),
            Err(ParseError::BadLength(80))
        );
        let mut line = ".".repeat(81);
        line.replace_range(3..4, "x");
        assert_eq!(
            Puzzle::parse(&line),
            Err(ParseError::BadChar { index: 3, ch: 'x' })
        );
        assert_eq!(
            Puzzle::from_entries(vec![Literal::new(5, 1, 1), Literal::new(6, 1, 1)]),
            Err(ParseError::DuplicateCell { r: 1, c: 1 })
        );
    }

    #[test]
    fn initial_state_counts() {
        let empty = Puzzle::parse(&".".repeat(81)).unwrap();
        let ks = empty.initial_state();
        assert_eq!(ks.values_count(), 0);
        assert_eq!(ks.candidates().len(), 729);

        let mut line = ".".repeat(81);
        line.replace_range(0..1, "5");
        let one = Puzzle::parse(&line).unwrap();
        let ks = one.initial_state();
        assert_eq!(ks.values_count(), 1);
        assert_eq!(ks.candidates().len(), 720);
        for n in 1..=9 {
            assert!(!ks.has_candidate(Literal::new(n, 1, 1)));
        }
    }

    #[test]
    fn initial_state_non_clue_cells_have_nine_candidates() {
        let mut line = ".".repeat(81);
        line.replace_range(0..1, "5");
        line.replace_range(40..41, "7");
        let ks = Puzzle::parse(&line).unwrap().initial_state();
        for i in 0..81 {
            let cell = CellRef::from_index(i);
            let count = (1..=9)
                .filter(|&n| ks.has_candidate(Literal::new(n, cell.row(), cell.col())))
                .count();
            if i == 0 || i == 40 {
                assert_eq!(count, 0);
            } else {
                assert_eq!(count, 9);
            }
        }
    }
}
