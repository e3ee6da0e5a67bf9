//! Seeded random states, puzzles and path prefixes for property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use resolute_core::generator::{generate_full_grid, Seed};
use resolute_core::{
    saturate, KnowledgeState, Literal, Puzzle, ResolutionPath, ResolutionTheory,
};

/// An arbitrary knowledge state: random eliminations and a few random value
/// assertions (possibly conflicting) applied to the unconstrained state.
/// Covers contradictory and unreachable states on purpose; the order laws
/// must hold on all of them.
pub fn random_state(seed: u64) -> KnowledgeState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ks = KnowledgeState::unconstrained();
    let eliminations = rng.random_range(0..400);
    for _ in 0..eliminations {
        let lit = Literal::from_index(rng.random_range(0..729));
        ks = ks.eliminate_candidate(lit);
    }
    let assertions = rng.random_range(0..25);
    for _ in 0..assertions {
        let lit = Literal::from_index(rng.random_range(0..729));
        ks = ks.assert_value(lit);
    }
    ks
}

/// A puzzle made of a random subset of a randomly generated complete grid:
/// always satisfiable, not necessarily unique.
pub fn random_subset_puzzle(seed: u64, clue_count: usize) -> Puzzle {
    let grid = generate_full_grid(Seed::new(seed));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed);
    let mut positions: Vec<usize> = (0..81).collect();
    positions.shuffle(&mut rng);
    let entries: Vec<Literal> = positions[..clue_count.min(81)]
        .iter()
        .map(|&i| {
            Literal::new(grid.cells()[i], (i / 9) as u8 + 1, (i % 9) as u8 + 1)
        })
        .collect();
    Puzzle::from_entries(entries).expect("positions are distinct")
}

/// States along a saturation run: the initial state, every prefix state cut
/// at `cuts` random depths, and the final state. All are reachable by rule
/// application from the puzzle's initial state.
pub fn prefix_states(
    puzzle: &Puzzle,
    theory: &ResolutionTheory,
    cuts: usize,
    seed: u64,
) -> Vec<KnowledgeState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = saturate(theory, &puzzle.initial_state());
    let mut states = vec![outcome.path.initial.clone()];
    for _ in 0..cuts {
        if outcome.path.is_empty() {
            break;
        }
        let depth = rng.random_range(0..=outcome.path.len());
        let prefix = ResolutionPath {
            initial: outcome.path.initial.clone(),
            steps: outcome.path.steps[..depth].to_vec(),
        };
        states.push(resolute_core::replay(&prefix).expect("prefixes of a valid path replay"));
    }
    states.push(outcome.final_state);
    states
}
