//! Brute-force reference counts.
//!
//! Every total transition function on `n` states with initial state 0 is
//! enumerated, tested for initial connectivity by graph search and numbered
//! by breadth-first search with successors taken in symbol order. Nothing
//! here uses the generator, the counting formulas, or [`crate::canonical`].

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;

use crate::big::BigCount;
use crate::error::{check_params, Error, Result};
use crate::model::CanonicalString;

/// Default cap on the number of enumeration steps.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub n: usize,
    pub k: usize,
    /// `n^(kn)`.
    pub total_functions: BigCount,
    /// Functions whose states are all reachable from state 0.
    pub connected_count: BigCount,
    pub canonical_distinct: BigCount,
    /// Collected strings that fail validation. Expected empty.
    pub mismatches: Vec<CanonicalString>,
}

#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub report: OracleReport,
    pub strings: BTreeSet<CanonicalString>,
}

fn function_count(n: usize, k: usize) -> BigUint {
    BigUint::from(n).pow((n * k) as u32)
}

fn check_budget(required: BigUint, budget: u64) -> Result<()> {
    if required > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            required: required.into(),
            budget,
        });
    }
    Ok(())
}

/// Steps through every table in `[0, n)^(kn)`, last entry fastest.
fn for_each_function(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut delta = vec![0; n * k];
    loop {
        f(&delta);
        let mut i = delta.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            delta[i] += 1;
            if delta[i] < n {
                break;
            }
            delta[i] = 0;
        }
    }
}

/// BFS numbering from state 0. Returns `None` unless every state is
/// reached; otherwise the canonical cells and the old-to-new numbering.
fn bfs_numbering(n: usize, k: usize, delta: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    const UNSEEN: usize = usize::MAX;
    let mut number = vec![UNSEEN; n];
    let mut queue = VecDeque::from([0]);
    number[0] = 0;
    let mut next = 1;
    let mut cells = Vec::with_capacity(n * k);
    while let Some(q) = queue.pop_front() {
        for a in 0..k {
            let t = delta[q * k + a];
            if number[t] == UNSEEN {
                number[t] = next;
                next += 1;
                queue.push_back(t);
            }
            cells.push(number[t]);
        }
    }
    (next == n).then_some((cells, number))
}

/// Counts the distinct canonical strings over all connected transition
/// functions of `(n, k)`. Refuses when `n^(kn)` exceeds `budget`.
pub fn brute_force_icdfa(n: usize, k: usize, budget: u64) -> Result<OracleOutcome> {
    check_params(n, k)?;
    let total = function_count(n, k);
    check_budget(total.clone(), budget)?;

    let mut connected: u64 = 0;
    let mut strings = BTreeSet::new();
    for_each_function(n, k, |delta| {
        if let Some((cells, _)) = bfs_numbering(n, k, delta) {
            connected += 1;
            strings.insert(CanonicalString::from_parts_unchecked(n, k, cells));
        }
    });
    let mismatches = strings.iter().filter(|s| !s.is_valid()).cloned().collect();
    Ok(OracleOutcome {
        report: OracleReport {
            n,
            k,
            total_functions: total.into(),
            connected_count: connected.into(),
            canonical_distinct: strings.len().into(),
            mismatches,
        },
        strings,
    })
}

/// Counts distinct normal forms over every connected transition function
/// and every set of final states. Refuses when `2^n * n^(kn)` exceeds
/// `budget`.
pub fn brute_force_with_finals(n: usize, k: usize, budget: u64) -> Result<BigCount> {
    check_params(n, k)?;
    if n >= 64 {
        return Err(Error::BudgetExceeded {
            required: (function_count(n, k) << n).into(),
            budget,
        });
    }
    check_budget(function_count(n, k) << n, budget)?;

    let mut seen: HashSet<(Vec<usize>, u64)> = HashSet::new();
    for_each_function(n, k, |delta| {
        if let Some((cells, number)) = bfs_numbering(n, k, delta) {
            for mask in 0u64..(1 << n) {
                let renamed = (0..n)
                    .filter(|q| mask >> q & 1 == 1)
                    .fold(0u64, |acc, q| acc | 1 << number[q]);
                seen.insert((cells.clone(), renamed));
            }
        }
    });
    Ok(seen.len().into())
}
