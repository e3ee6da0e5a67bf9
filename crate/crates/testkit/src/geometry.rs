//! Grid geometry derived by enumeration instead of closed-form arithmetic.

/// The 81-entry `(r, c) -> (b, s)` table, built by walking the nine 3×3
/// boxes band by band and numbering the cells of each box in scan order.
/// No division tricks: the layout is spelled out.
pub fn block_square_by_enumeration() -> Vec<((u8, u8), (u8, u8))> {
    let mut table = Vec::with_capacity(81);
    let mut block = 0u8;
    for band in 0..3u8 {
        for stack in 0..3u8 {
            block += 1;
            let mut square = 0u8;
            for row_in_box in 0..3u8 {
                for col_in_box in 0..3u8 {
                    square += 1;
                    let r = band * 3 + row_in_box + 1;
                    let c = stack * 3 + col_in_box + 1;
                    table.push(((r, c), (block, square)));
                }
            }
        }
    }
    table.sort();
    table
}

/// Cells sharing a unit with `(r, c)`, straight from the definition:
/// not the same cell, and same row or same column or same box.
pub fn peer_cells(r: u8, c: u8) -> Vec<(u8, u8)> {
    let same_box = |r1: u8, c1: u8, r2: u8, c2: u8| {
        (r1 - 1) / 3 == (r2 - 1) / 3 && (c1 - 1) / 3 == (c2 - 1) / 3
    };
    let mut peers = Vec::new();
    for r2 in 1..=9 {
        for c2 in 1..=9 {
            if (r2, c2) == (r, c) {
                continue;
            }
            if r2 == r || c2 == c || same_box(r, c, r2, c2) {
                peers.push((r2, c2));
            }
        }
    }
    peers
}
