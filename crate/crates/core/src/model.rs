//! Domain types: canonical strings, flag sequences and automaton structures.
//!
//! States are indices `0..n` and symbols are indices `0..k`; the symbol order
//! is the index order. A [`CanonicalString`] lists the transition table row
//! by row, so cell `i` holds the target of state `i / k` under symbol
//! `i % k`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{check_params, Error, Result, RuleViolation};

/// The transition table of an initially connected structure written out as
/// `k * n` cells, one row of `k` targets per state.
///
/// Construction only checks the shape. Whether the cells obey the two
/// canonical-order rules is reported by [`CanonicalString::validate`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalString {
    n: usize,
    k: usize,
    cells: Vec<usize>,
}

impl CanonicalString {
    pub fn new(n: usize, k: usize, cells: Vec<usize>) -> Result<Self> {
        check_params(n, k)?;
        let len = n
            .checked_mul(k)
            .ok_or_else(|| Error::structure("n * k overflows"))?;
        if cells.len() != len {
            return Err(Error::structure(format!(
                "expected {len} cells for n={n}, k={k}, got {}",
                cells.len()
            )));
        }
        if let Some((i, &c)) = cells.iter().enumerate().find(|(_, &c)| c >= n) {
            return Err(Error::structure(format!(
                "cell {i} holds {c}, outside 0..{n}"
            )));
        }
        Ok(CanonicalString { n, k, cells })
    }

    /// Builds a string and rejects it unless it satisfies both rules.
    pub fn new_valid(n: usize, k: usize, cells: Vec<usize>) -> Result<Self> {
        let s = Self::new(n, k, cells)?;
        s.validate()?;
        Ok(s)
    }

    pub(crate) fn from_parts_unchecked(n: usize, k: usize, cells: Vec<usize>) -> Self {
        debug_assert_eq!(cells.len(), n * k);
        CanonicalString { n, k, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<usize> {
        self.cells
    }

    /// Checks the two rules a canonical string obeys and reports the first
    /// violation found scanning left to right.
    ///
    /// * R1: a label larger than every earlier label must be exactly one
    ///   larger (state 0 counts as already seen).
    /// * R2: every label `m` in `1..n` occurs among the first `k * m` cells,
    ///   i.e. before the row of state `m` starts.
    pub fn validate(&self) -> Result<(), RuleViolation> {
        let mut max = 0;
        for (i, &c) in self.cells.iter().enumerate() {
            if c > max {
                if c != max + 1 {
                    return Err(RuleViolation::R1 { index: i, label: c });
                }
                max = c;
            }
            if (i + 1) % self.k == 0 {
                let label = (i + 1) / self.k;
                if label < self.n && max < label {
                    return Err(RuleViolation::R2 {
                        label,
                        deadline: i + 1,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// First-occurrence index of every label `1..n`.
    pub fn flags(&self) -> Result<FlagSequence> {
        self.validate()?;
        let mut flags = Vec::with_capacity(self.n - 1);
        for (i, &c) in self.cells.iter().enumerate() {
            if c == flags.len() + 1 {
                flags.push(i);
            }
        }
        Ok(FlagSequence {
            n: self.n,
            k: self.k,
            flags,
        })
    }
}

impl fmt::Display for CanonicalString {
    /// Renders the single-line text form `n k : c0 c1 ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} :", self.n, self.k)?;
        for c in &self.cells {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

/// Indices of the first occurrence of each label `1..n` in a canonical
/// string, 0-based.
///
/// A sequence is admissible when it is strictly increasing and label `j`
/// first appears no later than index `k * j - 1`. Every admissible sequence
/// is the flag sequence of at least one canonical string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagSequence {
    n: usize,
    k: usize,
    flags: Vec<usize>,
}

impl FlagSequence {
    pub fn new(n: usize, k: usize, flags: Vec<usize>) -> Result<Self> {
        check_params(n, k)?;
        if flags.len() != n - 1 {
            return Err(Error::Flags(format!(
                "expected {} flags for n={n}, got {}",
                n - 1,
                flags.len()
            )));
        }
        for (idx, &f) in flags.iter().enumerate() {
            let label = idx + 1;
            if f > k * label - 1 {
                return Err(Error::Flags(format!(
                    "label {label} first occurs at {f}, after its deadline {}",
                    k * label - 1
                )));
            }
            if idx > 0 && f <= flags[idx - 1] {
                return Err(Error::Flags(format!(
                    "flags must be strictly increasing, got {} then {f}",
                    flags[idx - 1]
                )));
            }
        }
        Ok(FlagSequence { n, k, flags })
    }

    pub(crate) fn from_parts_unchecked(n: usize, k: usize, flags: Vec<usize>) -> Self {
        FlagSequence { n, k, flags }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn flags(&self) -> &[usize] {
        &self.flags
    }

    /// Number of labels allowed in each cell: `None` for flag cells, where
    /// the value is forced, otherwise the radix of the free cell.
    pub(crate) fn cell_radices(&self) -> Vec<Option<usize>> {
        let mut out = Vec::with_capacity(self.n * self.k);
        let mut labels = 1;
        for i in 0..self.n * self.k {
            if self.flags.get(labels - 1) == Some(&i) {
                out.push(None);
                labels += 1;
            } else {
                out.push(Some(labels));
            }
        }
        out
    }
}

/// States, alphabet, total transition function and initial state of an
/// automaton, without its final states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DfaStructure {
    n: usize,
    k: usize,
    delta: Vec<usize>,
    initial: usize,
}

impl DfaStructure {
    /// `delta` is row-major: `delta[q * k + a]` is the target of `q` under
    /// symbol `a`.
    pub fn new(n: usize, k: usize, delta: Vec<usize>, initial: usize) -> Result<Self> {
        check_params(n, k)?;
        if delta.len() != n * k {
            return Err(Error::structure(format!(
                "transition table needs {} entries, got {}",
                n * k,
                delta.len()
            )));
        }
        if let Some((i, &t)) = delta.iter().enumerate().find(|(_, &t)| t >= n) {
            return Err(Error::structure(format!(
                "transition from state {} on symbol {} targets {t}, outside 0..{n}",
                i / k,
                i % k
            )));
        }
        if initial >= n {
            return Err(Error::structure(format!(
                "initial state {initial} outside 0..{n}"
            )));
        }
        Ok(DfaStructure {
            n,
            k,
            delta,
            initial,
        })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R], initial: usize) -> Result<Self> {
        let n = rows.len();
        let k = rows.first().map_or(0, |r| r.as_ref().len());
        if let Some((q, r)) = rows.iter().enumerate().find(|(_, r)| r.as_ref().len() != k) {
            return Err(Error::structure(format!(
                "row {q} has {} entries, expected {k}",
                r.as_ref().len()
            )));
        }
        let delta = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Self::new(n, k, delta, initial)
    }

    pub(crate) fn from_parts_unchecked(
        n: usize,
        k: usize,
        delta: Vec<usize>,
        initial: usize,
    ) -> Self {
        DfaStructure {
            n,
            k,
            delta,
            initial,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn target(&self, state: usize, symbol: usize) -> usize {
        self.delta[state * self.k + symbol]
    }

    pub fn row(&self, state: usize) -> &[usize] {
        &self.delta[state * self.k..(state + 1) * self.k]
    }

    /// Marks the states reachable from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    pub fn is_initially_connected(&self) -> bool {
        self.reachable().iter().all(|&r| r)
    }

    /// Applies a renaming of states: state `q` becomes `perm[q]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::structure(
                "permutation length differs from state count",
            ));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::structure("relabeling is not a permutation"));
            }
        }
        let mut delta = vec![0; self.n * self.k];
        for q in 0..self.n {
            for a in 0..self.k {
                delta[perm[q] * self.k + a] = perm[self.target(q, a)];
            }
        }
        Ok(DfaStructure {
            n: self.n,
            k: self.k,
            delta,
            initial: perm[self.initial],
        })
    }
}

/// A complete deterministic automaton: a structure plus final states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    structure: DfaStructure,
    finals: BTreeSet<usize>,
}

impl Dfa {
    pub fn new(structure: DfaStructure, finals: impl IntoIterator<Item = usize>) -> Result<Self> {
        let finals: BTreeSet<usize> = finals.into_iter().collect();
        if let Some(&f) = finals.iter().find(|&&f| f >= structure.n) {
            return Err(Error::structure(format!(
                "final state {f} outside 0..{}",
                structure.n
            )));
        }
        Ok(Dfa { structure, finals })
    }

    pub fn structure(&self) -> &DfaStructure {
        &self.structure
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals.contains(&q)
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let structure = self.structure.relabel(perm)?;
        let finals = self.finals.iter().map(|&f| perm[f]).collect();
        Ok(Dfa { structure, finals })
    }
}

/// Canonical string plus the final states renumbered in canonical order,
/// sorted ascending. Unique per isomorphism class of initially connected
/// automata.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm {
    string: CanonicalString,
    finals: Vec<usize>,
}

impl NormalForm {
    pub fn new(string: CanonicalString, finals: Vec<usize>) -> Result<Self> {
        string.validate()?;
        if finals.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::structure("finals must be strictly increasing"));
        }
        if let Some(&f) = finals.iter().find(|&&f| f >= string.n) {
            return Err(Error::structure(format!(
                "final state {f} outside 0..{}",
                string.n
            )));
        }
        Ok(NormalForm { string, finals })
    }

    pub(crate) fn from_parts_unchecked(string: CanonicalString, finals: Vec<usize>) -> Self {
        NormalForm { string, finals }
    }

    pub fn string(&self) -> &CanonicalString {
        &self.string
    }

    pub fn finals(&self) -> &[usize] {
        &self.finals
    }
}

impl fmt::Display for NormalForm {
    /// Like the string form, followed by `| f0 f1 ...` when there are finals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.string)?;
        if !self.finals.is_empty() {
            write!(f, " |")?;
            for q in &self.finals {
                write!(f, " {q}")?;
            }
        }
        Ok(())
    }
}
