//! Quantified-formula evaluation by nested coordinate loops.
//!
//! Each universal rule is evaluated the way its formula reads: loop over the
//! variables of a family, loop over the nine literals of each variable, and
//! query the state one literal at a time. Block membership for the bn family
//! comes from an explicit band/stack walk, not from the library's tables.

use resolute_core::{Action, Deduction, Fact, Family, KnowledgeState, Literal, RuleId, VariableRef};

/// The nine literals of variable `(coord1, coord2)` of a family, in
/// ascending value order.
pub fn variable_literals(family: Family, coord1: u8, coord2: u8) -> Vec<Literal> {
    match family {
        Family::Rc => (1..=9).map(|n| Literal::new(n, coord1, coord2)).collect(),
        Family::Rn => (1..=9).map(|c| Literal::new(coord2, coord1, c)).collect(),
        Family::Cn => (1..=9).map(|r| Literal::new(coord2, r, coord1)).collect(),
        Family::Bn => {
            // cells of block `coord1` in square order, by band/stack walk
            let band = (coord1 - 1) / 3;
            let stack = (coord1 - 1) % 3;
            let mut lits = Vec::with_capacity(9);
            for row_in_box in 0..3 {
                for col_in_box in 0..3 {
                    lits.push(Literal::new(
                        coord2,
                        band * 3 + row_in_box + 1,
                        stack * 3 + col_in_box + 1,
                    ));
                }
            }
            lits
        }
    }
}

fn variables(family: Family) -> impl Iterator<Item = (u8, u8, Vec<Literal>)> {
    (1..=9).flat_map(move |coord1| {
        (1..=9).map(move |coord2| (coord1, coord2, variable_literals(family, coord1, coord2)))
    })
}

/// Propagation: for every variable holding an asserted value, every literal
/// of the variable still present as a candidate must be eliminated,
/// justified by the first asserted value in value order.
pub fn ecp_formula(ks: &KnowledgeState, family: Family) -> Vec<Deduction> {
    let mut out = Vec::new();
    for (_, _, lits) in variables(family) {
        let Some(&justifying) = lits.iter().find(|&&l| ks.is_value(l)) else {
            continue;
        };
        for &lit in &lits {
            if ks.has_candidate(lit) {
                out.push(Deduction {
                    rule: RuleId::Ecp,
                    family,
                    facts: vec![Fact::ValueAsserted(justifying), Fact::CandidatePresent(lit)],
                    action: Action::EliminateCandidate(lit),
                });
            }
        }
    }
    out
}

/// Singles: a variable with no asserted value and exactly one candidate
/// concludes that candidate as its value.
pub fn single_formula(ks: &KnowledgeState, family: Family) -> Vec<Deduction> {
    let mut out = Vec::new();
    for (_, _, lits) in variables(family) {
        if lits.iter().any(|&l| ks.is_value(l)) {
            continue;
        }
        let candidates: Vec<Literal> = lits.iter().copied().filter(|&l| ks.has_candidate(l)).collect();
        if let [sole] = candidates.as_slice() {
            out.push(Deduction {
                rule: RuleId::Single,
                family,
                facts: vec![Fact::CandidatePresent(*sole)],
                action: Action::AssertValue(*sole),
            });
        }
    }
    out
}

/// Contradiction detection: a variable with no asserted value and no
/// candidates left admits no assignment.
pub fn cd_formula(ks: &KnowledgeState, family: Family) -> Vec<Deduction> {
    let mut out = Vec::new();
    for (coord1, coord2, lits) in variables(family) {
        if lits.iter().any(|&l| ks.is_value(l) || ks.has_candidate(l)) {
            continue;
        }
        out.push(Deduction {
            rule: RuleId::Cd,
            family,
            facts: vec![Fact::VariableExhausted(VariableRef {
                family,
                coord1,
                coord2,
            })],
            action: Action::Contradiction,
        });
    }
    out
}

/// Entry conflicts: two asserted values inside one variable.
pub fn entry_conflict_formula(ks: &KnowledgeState, family: Family) -> Vec<Deduction> {
    let mut out = Vec::new();
    for (_, _, lits) in variables(family) {
        let values: Vec<Literal> = lits.iter().copied().filter(|&l| ks.is_value(l)).collect();
        if values.len() >= 2 {
            out.push(Deduction {
                rule: RuleId::EntryConflict,
                family,
                facts: vec![Fact::ValueAsserted(values[0]), Fact::ValueAsserted(values[1])],
                action: Action::Contradiction,
            });
        }
    }
    out
}

/// Violations of the value-to-candidate fixed point, checked per variable:
/// a variable has an asserted value iff none of its literals remain
/// candidates. Expected to be empty exactly at saturated, non-contradictory
/// states. Returns the offending variables.
pub fn vcr_fixed_point_violations(ks: &KnowledgeState) -> Vec<VariableRef> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for (coord1, coord2, lits) in variables(family) {
            let value_present = lits.iter().any(|&l| ks.is_value(l));
            let candidates_left = lits.iter().any(|&l| ks.has_candidate(l));
            if value_present != !candidates_left {
                out.push(VariableRef {
                    family,
                    coord1,
                    coord2,
                });
            }
        }
    }
    out
}
