//! Canonical numbering of states and isomorphism testing.
//!
//! States are renamed in order of first reference: the initial state is 0,
//! then the transition table is read row by row in the new numbering and
//! every state not yet numbered takes the next free index when it is first
//! referenced. States never referenced are unreachable and are dropped.
//!
//! Two automata are isomorphic exactly when their reachable parts have the
//! same [`NormalForm`]. Unreachable states play no part in the comparison.

use crate::error::Result;
use crate::model::{CanonicalString, Dfa, DfaStructure, NormalForm};

/// Maps original states to canonical indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateMapping {
    forward: Vec<Option<usize>>,
    reachable_count: usize,
}

impl StateMapping {
    /// Canonical index of `state`, or `None` when it is unreachable.
    pub fn get(&self, state: usize) -> Option<usize> {
        self.forward.get(state).copied().flatten()
    }

    pub fn reachable_count(&self) -> usize {
        self.reachable_count
    }

    /// Number of states in the original automaton.
    pub fn original_count(&self) -> usize {
        self.forward.len()
    }

    pub fn dropped(&self) -> impl Iterator<Item = usize> + '_ {
        self.forward
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(q, _)| q)
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(q, c)| *c == Some(q))
    }

    /// Original state for each canonical index.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.reachable_count];
        for (q, c) in self.forward.iter().enumerate() {
            if let Some(c) = c {
                inv[*c] = q;
            }
        }
        inv
    }
}

/// Canonical string of the reachable part of `d`, with the renaming used.
pub fn canonicalize(d: &DfaStructure) -> (CanonicalString, StateMapping) {
    let k = d.k();
    let mut forward = vec![None; d.n()];
    let mut order = Vec::with_capacity(d.n());
    forward[d.initial()] = Some(0);
    order.push(d.initial());

    let mut cells = Vec::with_capacity(d.n() * k);
    let mut i = 0;
    while i < order.len() * k {
        let target = d.target(order[i / k], i % k);
        let c = *forward[target].get_or_insert_with(|| {
            order.push(target);
            order.len() - 1
        });
        cells.push(c);
        i += 1;
    }

    let reachable_count = order.len();
    let string = CanonicalString::from_parts_unchecked(reachable_count, k, cells);
    debug_assert!(string.is_valid());
    (
        string,
        StateMapping {
            forward,
            reachable_count,
        },
    )
}

/// The structure a valid canonical string describes: `n` states, initial
/// state 0, row `q` of the table taken from cells `q*k .. q*k + k`.
pub fn from_string(s: &CanonicalString) -> Result<DfaStructure> {
    s.validate()?;
    Ok(DfaStructure::from_parts_unchecked(
        s.n(),
        s.k(),
        s.cells().to_vec(),
        0,
    ))
}

pub fn normal_form(d: &Dfa) -> NormalForm {
    normal_form_with_mapping(d).0
}

/// Normal form together with the renaming that produced it. Finals on
/// unreachable states are discarded.
pub fn normal_form_with_mapping(d: &Dfa) -> (NormalForm, StateMapping) {
    let (string, mapping) = canonicalize(d.structure());
    let mut finals: Vec<usize> = d.finals().iter().filter_map(|&f| mapping.get(f)).collect();
    finals.sort_unstable();
    (NormalForm::from_parts_unchecked(string, finals), mapping)
}

/// Whether the reachable parts of `a` and `b`, final states included, are
/// the same up to renaming states.
pub fn isomorphic(a: &Dfa, b: &Dfa) -> bool {
    a.structure().k() == b.structure().k() && normal_form(a) == normal_form(b)
}
