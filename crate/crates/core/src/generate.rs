//! Exhaustive generation of canonical strings.
//!
//! [`Generator`] walks all valid strings for `(n, k)` in lexicographic order
//! of their cells (cell 0 most significant). Each step moves directly to the
//! successor, so every candidate it builds is emitted: there is no filtering
//! of invalid strings.
//!
//! The successor of a valid string increments the rightmost cell that can
//! grow. A cell can grow while it is below both `n - 1` and one more than the
//! largest label to its left. The suffix after it is then reset to its
//! smallest completion: zeros, except that every label `m` not yet
//! introduced is placed at its deadline `k * m - 1`.
//!
//! Flag sequences give a second, block-wise view of the same set: fixing
//! the first occurrence of each label leaves free cells that range
//! independently, which is how [`partition_by_flags`] splits the work.

use crate::big::BigCount;
use crate::count::fillings;
use crate::error::{check_params, Error, Result};
use crate::model::{CanonicalString, FlagSequence};

/// Lexicographically smallest valid string for `(n, k)`.
pub fn first_string(n: usize, k: usize) -> Result<CanonicalString> {
    check_params(n, k)?;
    let mut cells = vec![0; n * k];
    let mut pm = vec![0; n * k];
    fill_minimal(&mut cells, &mut pm, n, k, 0, 0);
    Ok(CanonicalString::from_parts_unchecked(n, k, cells))
}

/// Lexicographic successor of `s` among valid strings with the same shape,
/// or `None` when `s` is the largest.
pub fn next_string(s: &CanonicalString) -> Result<Option<CanonicalString>> {
    s.validate()?;
    let (n, k) = (s.n(), s.k());
    let mut cells = s.cells().to_vec();
    let mut pm = prefix_max(&cells);
    Ok(step(&mut cells, &mut pm, n, k).then(|| CanonicalString::from_parts_unchecked(n, k, cells)))
}

/// Streams valid strings in increasing order, starting at the smallest one
/// or, when `from` is given, at the first string strictly greater than it.
/// Stops after `limit` strings when a limit is given.
pub fn generate_all(
    n: usize,
    k: usize,
    from: Option<&CanonicalString>,
    limit: Option<u64>,
) -> Result<Generator> {
    let g = match from {
        Some(s) => {
            if (s.n(), s.k()) != (n, k) {
                return Err(Error::structure(format!(
                    "resume string has shape ({}, {}), expected ({n}, {k})",
                    s.n(),
                    s.k()
                )));
            }
            Generator::after(s)?
        }
        None => Generator::new(n, k)?,
    };
    Ok(match limit {
        Some(l) => g.with_limit(l),
        None => g,
    })
}

/// `pm[i]` is the largest label among `cells[..i]`, with state 0 counted as
/// present from the start.
fn prefix_max(cells: &[usize]) -> Vec<usize> {
    let mut pm = Vec::with_capacity(cells.len());
    let mut max = 0;
    for &c in cells {
        pm.push(max);
        max = max.max(c);
    }
    pm
}

fn fill_minimal(
    cells: &mut [usize],
    pm: &mut [usize],
    n: usize,
    k: usize,
    from: usize,
    mut max: usize,
) {
    for p in from..cells.len() {
        pm[p] = max;
        let next = max + 1;
        if next < n && p == k * next - 1 {
            cells[p] = next;
            max = next;
        } else {
            cells[p] = 0;
        }
    }
}

fn step(cells: &mut [usize], pm: &mut [usize], n: usize, k: usize) -> bool {
    let mut i = cells.len();
    while i > 0 {
        i -= 1;
        let bound = (pm[i] + 1).min(n - 1);
        if cells[i] < bound {
            cells[i] += 1;
            let max = pm[i].max(cells[i]);
            fill_minimal(cells, pm, n, k, i + 1, max);
            return true;
        }
    }
    false
}

/// Resumable cursor over the valid strings of one shape.
///
/// Use [`Generator::advance`] and [`Generator::current`] to walk the strings
/// without allocating, or the [`Iterator`] impl to get owned values.
#[derive(Debug, Clone)]
pub struct Generator {
    n: usize,
    k: usize,
    cells: Vec<usize>,
    pm: Vec<usize>,
    started: bool,
    exhausted: bool,
    remaining: Option<u64>,
    emitted: u64,
    touched: u64,
}

impl Generator {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let first = first_string(n, k)?;
        Ok(Self::at(first, false))
    }

    /// Starts with `s` itself.
    pub fn starting_at(s: &CanonicalString) -> Result<Self> {
        s.validate()?;
        Ok(Self::at(s.clone(), false))
    }

    /// Starts with the successor of `s`.
    pub fn after(s: &CanonicalString) -> Result<Self> {
        s.validate()?;
        Ok(Self::at(s.clone(), true))
    }

    fn at(s: CanonicalString, started: bool) -> Self {
        let (n, k) = (s.n(), s.k());
        let cells = s.into_cells();
        let pm = prefix_max(&cells);
        Generator {
            n,
            k,
            cells,
            pm,
            started,
            exhausted: false,
            remaining: None,
            emitted: 0,
            touched: 0,
        }
    }

    pub fn with_limit(mut self, limit: u64) -> Self {
        self.remaining = Some(limit);
        self
    }

    /// Moves to the next string. Returns `false` once the strings, or the
    /// limit, are exhausted.
    pub fn advance(&mut self) -> bool {
        if self.exhausted || self.remaining == Some(0) {
            return false;
        }
        if self.started {
            if !step(&mut self.cells, &mut self.pm, self.n, self.k) {
                self.exhausted = true;
                return false;
            }
        } else {
            self.started = true;
        }
        self.touched += 1;
        self.emitted += 1;
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        true
    }

    /// Cells of the string most recently reached by [`Generator::advance`].
    pub fn current(&self) -> &[usize] {
        &self.cells
    }

    pub fn current_string(&self) -> CanonicalString {
        CanonicalString::from_parts_unchecked(self.n, self.k, self.cells.clone())
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Candidate strings constructed so far. Always equal to
    /// [`Generator::emitted`].
    pub fn candidates_touched(&self) -> u64 {
        self.touched
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl Iterator for Generator {
    type Item = CanonicalString;

    fn next(&mut self) -> Option<CanonicalString> {
        self.advance().then(|| self.current_string())
    }
}

/// Every admissible flag sequence for `(n, k)` in lexicographic order. For
/// `n = 1` this is a single empty sequence.
pub fn enumerate_flags(n: usize, k: usize) -> Result<FlagIter> {
    check_params(n, k)?;
    Ok(FlagIter {
        n,
        k,
        next: Some((0..n - 1).collect()),
    })
}

#[derive(Debug, Clone)]
pub struct FlagIter {
    n: usize,
    k: usize,
    next: Option<Vec<usize>>,
}

impl FlagIter {
    fn starting_at(fs: &FlagSequence) -> Self {
        FlagIter {
            n: fs.n(),
            k: fs.k(),
            next: Some(fs.flags().to_vec()),
        }
    }
}

impl Iterator for FlagIter {
    type Item = FlagSequence;

    fn next(&mut self) -> Option<FlagSequence> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        // label of succ[j] is j + 1, deadline k * (j + 1) - 1
        let grow = (0..succ.len())
            .rev()
            .find(|&j| succ[j] < self.k * (j + 1) - 1);
        if let Some(j) = grow {
            succ[j] += 1;
            for t in j + 1..succ.len() {
                succ[t] = succ[t - 1] + 1;
            }
            self.next = Some(succ);
        }
        Some(FlagSequence::from_parts_unchecked(self.n, self.k, cur))
    }
}

/// All strings whose flag sequence is `fs`, in lexicographic order. The
/// free cells run as a mixed-radix odometer: a cell after the flag of label
/// `j` (and before that of `j + 1`) takes values `0..=j`.
pub fn strings_with_flags(fs: &FlagSequence) -> FillIter {
    let radices = fs.cell_radices();
    let mut cells = vec![0; radices.len()];
    let mut label = 0;
    for (c, r) in cells.iter_mut().zip(&radices) {
        if r.is_none() {
            label += 1;
            *c = label;
        }
    }
    FillIter {
        n: fs.n(),
        k: fs.k(),
        radices,
        cells,
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct FillIter {
    n: usize,
    k: usize,
    radices: Vec<Option<usize>>,
    cells: Vec<usize>,
    done: bool,
}

impl Iterator for FillIter {
    type Item = CanonicalString;

    fn next(&mut self) -> Option<CanonicalString> {
        if self.done {
            return None;
        }
        let out = CanonicalString::from_parts_unchecked(self.n, self.k, self.cells.clone());
        self.done = true;
        for i in (0..self.cells.len()).rev() {
            if let Some(r) = self.radices[i] {
                if self.cells[i] + 1 < r {
                    self.cells[i] += 1;
                    self.done = false;
                    break;
                }
                self.cells[i] = 0;
            }
        }
        Some(out)
    }
}

/// A contiguous run of flag sequences in the order of [`enumerate_flags`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagRange {
    pub first: FlagSequence,
    /// Number of flag sequences in the range.
    pub len: usize,
    /// Number of strings generated by the range.
    pub strings: BigCount,
}

impl FlagRange {
    pub fn flags(&self) -> impl Iterator<Item = FlagSequence> {
        FlagIter::starting_at(&self.first).take(self.len)
    }

    /// Every string of the range, block by block. Within a block the order
    /// is lexicographic, but blocks interleave in the global order.
    pub fn strings(&self) -> impl Iterator<Item = CanonicalString> {
        self.flags().flat_map(|fs| strings_with_flags(&fs))
    }
}

/// Splits the flag sequences of `(n, k)` into at most `parts` contiguous
/// ranges holding roughly equal numbers of strings. A range is closed as
/// soon as the running string count reaches its share of the total.
pub fn partition_by_flags(n: usize, k: usize, parts: usize) -> Result<Vec<FlagRange>> {
    check_params(n, k)?;
    if parts == 0 {
        return Err(Error::structure("parts must be at least 1"));
    }
    let weighted: Vec<(FlagSequence, BigCount)> = enumerate_flags(n, k)?
        .map(|fs| {
            let w = fillings(&fs);
            (fs, w)
        })
        .collect();
    let total: BigCount = weighted.iter().map(|(_, w)| w.clone()).sum();
    let parts_big = BigCount::from(parts);

    let mut ranges = Vec::new();
    let mut cumulative = BigCount::zero();
    let mut start = 0;
    let mut acc = BigCount::zero();
    for (idx, (_, w)) in weighted.iter().enumerate() {
        cumulative += w;
        acc += w;
        let closed = ranges.len() + 1;
        let share = total.clone() * BigCount::from(closed);
        let last = idx + 1 == weighted.len();
        if last || (closed < parts && cumulative.clone() * parts_big.clone() >= share) {
            ranges.push(FlagRange {
                first: weighted[start].0.clone(),
                len: idx + 1 - start,
                strings: std::mem::replace(&mut acc, BigCount::zero()),
            });
            start = idx + 1;
        }
    }
    Ok(ranges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(g: Generator) -> Vec<Vec<usize>> {
        g.map(|s| s.into_cells()).collect()
    }

    #[test]
    fn flags_for_three_states_two_symbols() {
        let all: Vec<Vec<usize>> = enumerate_flags(3, 2)
            .unwrap()
            .map(|f| f.flags().to_vec())
            .collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
    }

    #[test]
    fn flags_degenerate_shapes() {
        let one: Vec<_> = enumerate_flags(1, 5).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert!(one[0].flags().is_empty());
        let unary: Vec<_> = enumerate_flags(3, 1).unwrap().collect();
        assert_eq!(unary.len(), 1);
        assert_eq!(unary[0].flags(), &[0, 1]);
    }

    #[test]
    fn first_strings() {
        assert_eq!(first_string(2, 2).unwrap().cells(), &[0, 1, 0, 0]);
        assert_eq!(first_string(1, 3).unwrap().cells(), &[0, 0, 0]);
        assert_eq!(first_string(3, 1).unwrap().cells(), &[1, 2, 0]);
        assert!(first_string(0, 1).is_err());
    }

    #[test]
    fn successors() {
        let s = CanonicalString::new(2, 2, vec![0, 1, 1, 1]).unwrap();
        assert_eq!(next_string(&s).unwrap().unwrap().cells(), &[1, 0, 0, 0]);
        let s = CanonicalString::new(2, 2, vec![1, 1, 1, 1]).unwrap();
        assert_eq!(next_string(&s).unwrap(), None);
        let s = CanonicalString::new(1, 2, vec![0, 0]).unwrap();
        assert_eq!(next_string(&s).unwrap(), None);
        let bad = CanonicalString::new(3, 2, vec![2, 1, 0, 0, 1, 0]).unwrap();
        assert!(next_string(&bad).is_err());
    }

    #[test]
    fn resume_with_limit() {
        let from = CanonicalString::new(2, 2, vec![0, 1, 1, 1]).unwrap();
        let got = cells(generate_all(2, 2, Some(&from), Some(2)).unwrap());
        assert_eq!(got, vec![vec![1, 0, 0, 0], vec![1, 0, 0, 1]]);
        assert_eq!(
            cells(generate_all(1, 1, None, None).unwrap()),
            vec![vec![0]]
        );
        assert!(generate_all(3, 2, Some(&from), None).is_err());
    }

    #[test]
    fn all_of_three_two() {
        let g = generate_all(3, 2, None, None).unwrap();
        let all = cells(g);
        assert_eq!(all.len(), 216);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn every_step_emits() {
        let mut g = Generator::new(4, 2).unwrap();
        while g.advance() {
            assert!(g.current_string().is_valid());
        }
        assert_eq!(g.emitted(), 5248);
        assert_eq!(g.candidates_touched(), g.emitted());
    }

    #[test]
    fn blocks_match_fillings() {
        let sizes: Vec<usize> = enumerate_flags(3, 2)
            .unwrap()
            .map(|fs| {
                let strings: Vec<_> = strings_with_flags(&fs).collect();
                for s in &strings {
                    assert_eq!(s.flags().unwrap(), fs);
                }
                assert!(strings.windows(2).all(|w| w[0] < w[1]));
                strings.len()
            })
            .collect();
        assert_eq!(sizes, vec![81, 54, 36, 27, 18]);
    }

    #[test]
    fn partitions() {
        let one = partition_by_flags(3, 2, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].len, 5);
        assert_eq!(one[0].strings, 216u64);

        let five = partition_by_flags(3, 2, 5).unwrap();
        let counts: Vec<u64> = five.iter().map(|r| r.strings.to_u64().unwrap()).collect();
        assert_eq!(counts, vec![81, 54, 36, 27, 18]);
        assert!(five.iter().all(|r| r.len == 1));

        let two = partition_by_flags(2, 2, 2).unwrap();
        assert_eq!(two[0].first.flags(), &[0]);
        assert_eq!(two[1].first.flags(), &[1]);
        assert_eq!(two[0].strings, 8u64);
        assert_eq!(two[1].strings, 4u64);

        // more parts than flag sequences
        assert_eq!(partition_by_flags(3, 2, 50).unwrap().len(), 5);
        assert!(partition_by_flags(3, 2, 0).is_err());
    }

    #[test]
    fn partition_union_is_the_whole_set() {
        for parts in 1..=7 {
            let mut got: Vec<_> = partition_by_flags(4, 2, parts)
                .unwrap()
                .iter()
                .flat_map(|r| r.strings().collect::<Vec<_>>())
                .collect();
            got.sort();
            let want: Vec<_> = Generator::new(4, 2).unwrap().collect();
            assert_eq!(got, want);
        }
    }
}
