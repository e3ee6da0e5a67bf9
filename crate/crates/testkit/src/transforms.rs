//! Solution-count-preserving puzzle transforms, used as oracle sanity
//! checks: a transformed puzzle must have exactly as many models as the
//! original.

use resolute_core::{Literal, Puzzle};

fn map_entries(p: &Puzzle, f: impl Fn(u8, u8, u8) -> (u8, u8, u8)) -> Puzzle {
    let entries: Vec<Literal> = p
        .entries()
        .iter()
        .map(|lit| {
            let (n, r, c) = f(lit.number(), lit.row(), lit.col());
            Literal::new(n, r, c)
        })
        .collect();
    Puzzle::from_entries(entries).expect("transforms are cell bijections")
}

/// Mirror across the main diagonal.
pub fn transpose(p: &Puzzle) -> Puzzle {
    map_entries(p, |n, r, c| (n, c, r))
}

/// Permute the three row bands.
pub fn permute_bands(p: &Puzzle, perm: [u8; 3]) -> Puzzle {
    assert!({
        let mut sorted = perm;
        sorted.sort();
        sorted == [0, 1, 2]
    });
    map_entries(p, |n, r, c| {
        let band = (r - 1) / 3;
        let offset = (r - 1) % 3;
        (n, perm[band as usize] * 3 + offset + 1, c)
    })
}

/// Relabel digits through a permutation of 1..=9 (`perm[n-1]` replaces `n`).
pub fn relabel_digits(p: &Puzzle, perm: [u8; 9]) -> Puzzle {
    assert!({
        let mut sorted = perm;
        sorted.sort();
        sorted == [1, 2, 3, 4, 5, 6, 7, 8, 9]
    });
    map_entries(p, |n, r, c| (perm[n as usize - 1], r, c))
}
