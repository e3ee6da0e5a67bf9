//! Literals and dense literal sets.
//!
//! A literal is an `(n, r, c)` triple: "number `n` in the cell at row `r`,
//! column `c`". There are exactly 9 × 9 × 9 = 729 of them, and both asserted
//! values and remaining candidates are expressed over this one space, so a
//! 729-bit set is the working currency of the whole engine.

use std::fmt;

/// Number of distinct literals.
pub const LITERAL_COUNT: usize = 729;

const WORDS: usize = 12; // ceil(729 / 64)
const LAST_WORD_MASK: u64 = (1u64 << (LITERAL_COUNT - 64 * (WORDS - 1))) - 1;

/// One `(n, r, c)` triple, stored as a dense index.
///
/// The index is `(r-1)*81 + (c-1)*9 + (n-1)`, so ascending index order is
/// row-major cell order with numbers innermost. All indices are 1-based in
/// the public API.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(u16);

impl Literal {
    pub fn new(n: u8, r: u8, c: u8) -> Self {
        assert!(
            (1..=9).contains(&n) && (1..=9).contains(&r) && (1..=9).contains(&c),
            "literal indices must be in 1..=9, got n={n} r={r} c={c}"
        );
        Literal((r as u16 - 1) * 81 + (c as u16 - 1) * 9 + (n as u16 - 1))
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < LITERAL_COUNT, "literal index out of range: {index}");
        Literal(index as u16)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn number(self) -> u8 {
        (self.0 % 9) as u8 + 1
    }

    pub fn row(self) -> u8 {
        (self.0 / 81) as u8 + 1
    }

    pub fn col(self) -> u8 {
        (self.0 / 9 % 9) as u8 + 1
    }

    /// Row-major cell index in `0..81`.
    pub fn cell_index(self) -> usize {
        (self.0 / 9) as usize
    }

    /// Iterate over all 729 literals in ascending index order.
    pub fn all() -> impl Iterator<Item = Literal> {
        (0..LITERAL_COUNT).map(Literal::from_index)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.number(), self.row(), self.col())
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Literal{self}")
    }
}

/// A set of literals, packed into 12 machine words.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LiteralSet {
    words: [u64; WORDS],
}

impl LiteralSet {
    pub const fn empty() -> Self {
        LiteralSet { words: [0; WORDS] }
    }

    /// The full literal space: all 729 literals present.
    pub fn full() -> Self {
        let mut words = [u64::MAX; WORDS];
        words[WORDS - 1] = LAST_WORD_MASK;
        LiteralSet { words }
    }

    pub fn contains(&self, lit: Literal) -> bool {
        let i = lit.index();
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, lit: Literal) {
        let i = lit.index();
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, lit: Literal) {
        let i = lit.index();
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True iff every literal of `self` is also in `other`.
    pub fn is_subset(&self, other: &LiteralSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &LiteralSet) -> LiteralSet {
        let mut words = [0; WORDS];
        for (w, (a, b)) in words.iter_mut().zip(self.words.iter().zip(&other.words)) {
            *w = a & b;
        }
        LiteralSet { words }
    }

    pub fn union(&self, other: &LiteralSet) -> LiteralSet {
        let mut words = [0; WORDS];
        for (w, (a, b)) in words.iter_mut().zip(self.words.iter().zip(&other.words)) {
            *w = a | b;
        }
        LiteralSet { words }
    }

    /// Literals of `self` that are not in `other`.
    pub fn difference(&self, other: &LiteralSet) -> LiteralSet {
        let mut words = [0; WORDS];
        for (w, (a, b)) in words.iter_mut().zip(self.words.iter().zip(&other.words)) {
            *w = a & !b;
        }
        LiteralSet { words }
    }

    pub fn intersects(&self, other: &LiteralSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Lowest-index literal, if any.
    pub fn first(&self) -> Option<Literal> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(Literal::from_index(wi * 64 + w.trailing_zeros() as usize));
            }
        }
        None
    }

    /// The sole element when the set is a singleton.
    pub fn sole(&self) -> Option<Literal> {
        if self.len() == 1 {
            self.first()
        } else {
            None
        }
    }

    /// Iterate set members in ascending index order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word_index: 0,
        }
    }

}

impl FromIterator<Literal> for LiteralSet {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Self {
        let mut set = LiteralSet::empty();
        for lit in iter {
            set.insert(lit);
        }
        set
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word_index: usize,
}

impl Iterator for Iter {
    type Item = Literal;

    fn next(&mut self) -> Option<Literal> {
        while self.word_index < WORDS {
            let w = self.words[self.word_index];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word_index] = w & (w - 1);
                return Some(Literal::from_index(self.word_index * 64 + bit));
            }
            self.word_index += 1;
        }
        None
    }
}

impl IntoIterator for &LiteralSet {
    type Item = Literal;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
