//! Exact counting of canonical strings.
//!
//! Three independent routes give the number `B_k(n)` of canonical strings,
//! which is also the number of non-isomorphic initially connected structures
//! with `n` states over `k` symbols:
//!
//! * a sum over admissible flag sequences of the number of ways to fill the
//!   free cells ([`count_icdfa`]);
//! * the classical recursion on labelled connected transition functions,
//!   divided by the `(n - 1)!` renamings of the non-initial states
//!   ([`count_liskovets`]);
//! * the completion table behind [`Ranker`], which counts suffixes cell by
//!   cell.
//!
//! [`stirling_bound`] is an upper bound obtained by dropping the deadline
//! rule and keeping only the order-of-introduction rule.

mod rank;

pub use rank::{rank, sample_uniform, unrank, Ranker, Sampler};

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::big::BigCount;
use crate::error::{check_params, Error, Result};
use crate::model::FlagSequence;

fn pow(base: usize, exp: usize) -> BigUint {
    BigUint::from(base).pow(u32::try_from(exp).expect("exponent fits in u32"))
}

/// Number of strings with flag sequence `fs`:
/// `prod_{j=1}^{n-1} j^(f_j - f_{j-1} - 1) * n^(kn - 1 - f_{n-1})`, with
/// `f_0 = -1`.
pub fn fillings(fs: &FlagSequence) -> BigCount {
    let (n, k) = (fs.n(), fs.k());
    let mut product = BigUint::one();
    let mut prev: isize = -1;
    for (idx, &f) in fs.flags().iter().enumerate() {
        let gap = (f as isize - prev - 1) as usize;
        product *= pow(idx + 1, gap);
        prev = f as isize;
    }
    let tail = (n * k) as isize - 1 - prev;
    product *= pow(n, tail as usize);
    product.into()
}

/// `B_k(n)`, the number of canonical strings for `(n, k)`.
pub fn count_icdfa(n: usize, k: usize) -> Result<BigCount> {
    CountTable::new().icdfa(n, k)
}

/// The labelled count `h_k(n)` of connected transition functions with
/// initial state 0, and its quotient `H_k(n) = h_k(n) / (n - 1)!`.
pub fn count_liskovets(n: usize, k: usize) -> Result<(BigCount, BigCount)> {
    CountTable::new().liskovets(n, k)
}

/// `sum_{i=1}^{n} S(kn + 1, i)`, an upper bound on `B_k(n)`.
pub fn stirling_bound(n: usize, k: usize) -> Result<BigCount> {
    CountTable::new().stirling_bound(n, k)
}

/// Number of non-isomorphic initially connected automata with final
/// states: `2^n * B_k(n)`.
pub fn count_with_finals(n: usize, k: usize) -> Result<BigCount> {
    let b = count_icdfa(n, k)?;
    Ok(BigCount::from(pow(2, n)) * b)
}

/// Memoized counts. Entries are written once and never change; the table
/// can be shared between threads.
#[derive(Debug, Default)]
pub struct CountTable {
    icdfa: RwLock<HashMap<(usize, usize), BigCount>>,
    // h_k(1..) for each k
    labelled: RwLock<HashMap<usize, Vec<BigUint>>>,
    // row r holds S(r, 0..=r)
    stirling: RwLock<Vec<Vec<BigUint>>>,
    factorials: RwLock<Vec<BigUint>>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `B_k(n)` by summing over flag sequences.
    ///
    /// `w[f]` accumulates, over all admissible prefixes `f_1 < ... < f_j = f`,
    /// the product of the fill factors up to label `j`. Extending to label
    /// `j + 1` at position `g > f` multiplies by `(j + 1)^(g - f - 1)`, the
    /// choices for the cells strictly between the two flags. This is the
    /// nested sum over flag gaps, evaluated one label at a time.
    pub fn icdfa(&self, n: usize, k: usize) -> Result<BigCount> {
        check_params(n, k)?;
        if let Some(v) = self.icdfa.read().unwrap().get(&(n, k)) {
            return Ok(v.clone());
        }
        let len = n * k;
        let total = if n == 1 {
            BigUint::one()
        } else {
            // label 1: cells before it are forced to 0
            let mut w: Vec<BigUint> = (0..len)
                .map(|f| {
                    if f < k {
                        BigUint::one()
                    } else {
                        BigUint::zero()
                    }
                })
                .collect();
            for label in 2..n {
                let mut next = vec![BigUint::zero(); len];
                for (g, slot) in next.iter_mut().enumerate().take(k * label).skip(label - 1) {
                    for (f, wf) in w.iter().enumerate().take(g) {
                        if !wf.is_zero() {
                            *slot += wf * pow(label, g - f - 1);
                        }
                    }
                }
                w = next;
            }
            w.iter()
                .enumerate()
                .filter(|(_, wf)| !wf.is_zero())
                .map(|(f, wf)| wf * pow(n, len - 1 - f))
                .sum()
        };
        let total = BigCount::from(total);
        self.icdfa.write().unwrap().insert((n, k), total.clone());
        Ok(total)
    }

    /// `h_k(1) = 1`,
    /// `h_k(n) = n^(kn) - sum_{1 <= j < n} C(n-1, j-1) n^(k(n-j)) h_k(j)`,
    /// and `H_k(n) = h_k(n) / (n-1)!`. Fails if the subtraction would go
    /// negative or the division is not exact, neither of which can happen
    /// for correct arithmetic.
    pub fn liskovets(&self, n: usize, k: usize) -> Result<(BigCount, BigCount)> {
        check_params(n, k)?;
        let h = {
            let known = self
                .labelled
                .read()
                .unwrap()
                .get(&k)
                .cloned()
                .unwrap_or_default();
            let mut h = known;
            if h.is_empty() {
                h.push(BigUint::one());
            }
            while h.len() < n {
                let m = h.len() + 1;
                let all = pow(m, k * m);
                let mut unreachable = BigUint::zero();
                for j in 1..m {
                    unreachable += self.binomial(m - 1, j - 1) * pow(m, k * (m - j)) * &h[j - 1];
                }
                if unreachable > all {
                    return Err(Error::Inconsistent(format!("h_{k}({m}) would be negative")));
                }
                h.push(all - unreachable);
            }
            let hn = h[n - 1].clone();
            self.labelled.write().unwrap().insert(k, h);
            hn
        };
        let fact = self.factorial(n - 1);
        if !(&h % &fact).is_zero() {
            return Err(Error::Inconsistent(format!(
                "({}-1)! does not divide h_{k}({n}) = {h}",
                n
            )));
        }
        let quotient = &h / &fact;
        Ok((h.into(), quotient.into()))
    }

    /// Stirling number of the second kind `S(r, i)`.
    pub fn stirling2(&self, r: usize, i: usize) -> BigCount {
        if i > r {
            return BigCount::zero();
        }
        self.ensure_stirling_rows(r);
        self.stirling.read().unwrap()[r][i].clone().into()
    }

    pub fn stirling_bound(&self, n: usize, k: usize) -> Result<BigCount> {
        check_params(n, k)?;
        let r = k * n + 1;
        self.ensure_stirling_rows(r);
        let rows = self.stirling.read().unwrap();
        Ok(rows[r][1..=n.min(r)].iter().sum::<BigUint>().into())
    }

    fn ensure_stirling_rows(&self, r: usize) {
        if self.stirling.read().unwrap().len() > r {
            return;
        }
        let mut rows = self.stirling.write().unwrap();
        if rows.is_empty() {
            rows.push(vec![BigUint::one()]);
        }
        while rows.len() <= r {
            let m = rows.len();
            let prev = &rows[m - 1];
            let mut row = vec![BigUint::zero(); m + 1];
            for i in 1..=m {
                let stay = if i < m { &prev[i] * i } else { BigUint::zero() };
                row[i] = stay + &prev[i - 1];
            }
            rows.push(row);
        }
    }

    pub fn factorial(&self, m: usize) -> BigUint {
        if let Some(v) = self.factorials.read().unwrap().get(m) {
            return v.clone();
        }
        let mut f = self.factorials.write().unwrap();
        if f.is_empty() {
            f.push(BigUint::one());
        }
        while f.len() <= m {
            let i = f.len();
            let v = &f[i - 1] * i;
            f.push(v);
        }
        f[m].clone()
    }

    pub fn binomial(&self, m: usize, r: usize) -> BigUint {
        if r > m {
            return BigUint::zero();
        }
        self.factorial(m) / (self.factorial(r) * self.factorial(m - r))
    }
}
