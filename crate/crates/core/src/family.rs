//! The four variable families over the literal space.
//!
//! Every literal `(n, r, c)` can be read four ways: as a choice of number for
//! the rc-cell `(r, c)`, a choice of column for the row-number pair `(r, n)`,
//! a choice of row for the column-number pair `(c, n)`, or a choice of square
//! for the block-number pair `(b, n)`. Each reading partitions the 729
//! literals into 81 variables of 9 literals each, and the universal rules
//! (propagation, singles, contradiction detection) are written once against
//! this partition interface.

use crate::grid::rc_to_bs;
use crate::literal::{Literal, LiteralSet};
use std::fmt;
use std::sync::LazyLock;

/// One of the four coordinate readings of the grid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    Rc,
    Rn,
    Cn,
    Bn,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Rc, Family::Rn, Family::Cn, Family::Bn];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rc => "rc",
            Family::Rn => "rn",
            Family::Cn => "cn",
            Family::Bn => "bn",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A variable named by its family and coordinate pair: `(r,c)`, `(r,n)`,
/// `(c,n)` or `(b,n)`. 4 × 81 = 324 distinct variables exist.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VariableRef {
    pub family: Family,
    pub coord1: u8,
    pub coord2: u8,
}

impl fmt::Display for VariableRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family, self.coord1, self.coord2)
    }
}

/// Precomputed membership tables for one family: which variable each literal
/// belongs to, and the 9-literal mask of each variable.
pub struct FamilyTables {
    family: Family,
    var_of: [u8; 729],
    masks: [LiteralSet; 81],
}

impl FamilyTables {
    pub fn build(family: Family) -> Self {
        let mut var_of = [0u8; 729];
        let mut masks = [LiteralSet::empty(); 81];
        for lit in Literal::all() {
            let (n, r, c) = (lit.number(), lit.row(), lit.col());
            let (coord1, coord2) = match family {
                Family::Rc => (r, c),
                Family::Rn => (r, n),
                Family::Cn => (c, n),
                Family::Bn => (rc_to_bs(r, c).0, n),
            };
            let local = (coord1 as usize - 1) * 9 + (coord2 as usize - 1);
            var_of[lit.index()] = local as u8;
            masks[local].insert(lit);
        }
        FamilyTables {
            family,
            var_of,
            masks,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Local variable index of a literal, in `0..81`.
    pub fn local_index(&self, lit: Literal) -> usize {
        self.var_of[lit.index()] as usize
    }

    /// The 9-literal mask of the variable with the given local index.
    pub fn mask(&self, local: usize) -> &LiteralSet {
        &self.masks[local]
    }

    pub fn variable(&self, local: usize) -> VariableRef {
        VariableRef {
            family: self.family,
            coord1: (local / 9) as u8 + 1,
            coord2: (local % 9) as u8 + 1,
        }
    }

    pub fn variable_of(&self, lit: Literal) -> VariableRef {
        self.variable(self.local_index(lit))
    }
}

/// Build the four family tables. Scan order is rc, rn, cn, bn — the order
/// rules visit families when generating deductions.
pub fn make_families() -> [FamilyTables; 4] {
    Family::ALL.map(FamilyTables::build)
}

static FAMILIES: LazyLock<[FamilyTables; 4]> = LazyLock::new(make_families);

/// Shared immutable family tables.
pub fn families() -> &'static [FamilyTables; 4] {
    &FAMILIES
}

/// The table for one family.
pub fn family_tables(family: Family) -> &'static FamilyTables {
    &families()[Family::ALL.iter().position(|&f| f == family).unwrap()]
}
