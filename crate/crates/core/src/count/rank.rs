//! Ranking, unranking and uniform sampling in lexicographic order.
//!
//! Reading a string left to right, the only state that matters for the rest
//! of the string is the position and the largest label seen so far. The
//! table `completions[q][m]` counts the valid ways to fill cells `q..` when
//! the largest label among cells `..q` is `m`. Rank is then the usual sum,
//! over positions, of the completions skipped by taking a smaller value.
//!
//! Strings with a common flag sequence are not contiguous in this order, so
//! the table is indexed by prefix rather than by flag block.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::big::BigCount;
use crate::error::{check_params, Error, Result};
use crate::model::CanonicalString;

/// Rank and unrank for one `(n, k)`.
#[derive(Debug, Clone)]
pub struct Ranker {
    n: usize,
    k: usize,
    completions: Vec<Vec<BigUint>>,
}

impl Ranker {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_params(n, k)?;
        let len = n * k;
        let mut completions = vec![vec![BigUint::zero(); n]; len + 1];
        completions[len][n - 1] = BigUint::one();
        for q in (0..len).rev() {
            for m in 0..n {
                // label m + 1 had to appear among cells ..q
                if m + 1 < n && q >= k * (m + 1) {
                    continue;
                }
                let mut c = &completions[q + 1][m] * (m + 1);
                if m + 1 < n {
                    c += &completions[q + 1][m + 1];
                }
                completions[q][m] = c;
            }
        }
        Ok(Ranker { n, k, completions })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of valid strings, `B_k(n)`.
    pub fn total(&self) -> BigCount {
        self.completions[0][0].clone().into()
    }

    pub fn rank(&self, s: &CanonicalString) -> Result<BigCount> {
        if (s.n(), s.k()) != (self.n, self.k) {
            return Err(Error::structure(format!(
                "string has shape ({}, {}), ranker expects ({}, {})",
                s.n(),
                s.k(),
                self.n,
                self.k
            )));
        }
        s.validate()?;
        let mut r = BigUint::zero();
        let mut max = 0;
        for (q, &c) in s.cells().iter().enumerate() {
            let smaller = c.min(max + 1);
            if smaller > 0 {
                r += &self.completions[q + 1][max] * smaller;
            }
            max = max.max(c);
        }
        Ok(r.into())
    }

    pub fn unrank(&self, r: &BigCount) -> Result<CanonicalString> {
        let total = &self.completions[0][0];
        if r.as_biguint() >= total {
            return Err(Error::RankOutOfRange {
                rank: r.clone(),
                count: total.clone().into(),
            });
        }
        let mut rest = r.as_biguint().clone();
        let mut cells = Vec::with_capacity(self.n * self.k);
        let mut max = 0;
        for q in 0..self.n * self.k {
            let block = &self.completions[q + 1][max];
            let old = block * (max + 1);
            if rest < old {
                let v = (&rest / block).to_usize().expect("quotient is a label");
                rest -= block * v;
                cells.push(v);
            } else {
                rest -= old;
                max += 1;
                cells.push(max);
            }
        }
        debug_assert!(rest.is_zero());
        Ok(CanonicalString::from_parts_unchecked(self.n, self.k, cells))
    }
}

/// 0-based position of `s` among all valid strings of its shape.
pub fn rank(s: &CanonicalString) -> Result<BigCount> {
    s.validate()?;
    Ranker::new(s.n(), s.k())?.rank(s)
}

/// The string at position `r`. Fails with the total count when `r` is out
/// of range.
pub fn unrank(r: &BigCount, n: usize, k: usize) -> Result<CanonicalString> {
    Ranker::new(n, k)?.unrank(r)
}

/// Seeded uniform draws over the valid strings of one shape.
///
/// A draw takes just enough 32-bit words from a ChaCha20 stream to cover the
/// bit length of `B_k(n)` and retries while the value is out of range. The
/// same seed gives the same sequence of strings for a given version of this
/// crate.
#[derive(Debug, Clone)]
pub struct Sampler {
    ranker: Ranker,
    total: BigUint,
    bits: u64,
    rng: ChaCha20Rng,
}

impl Sampler {
    pub fn new(n: usize, k: usize, seed: u64) -> Result<Self> {
        let ranker = Ranker::new(n, k)?;
        let total = ranker.total().into_biguint();
        let bits = total.bits();
        Ok(Sampler {
            ranker,
            total,
            bits,
            rng: ChaCha20Rng::seed_from_u64(seed),
        })
    }

    pub fn draw_rank(&mut self) -> BigCount {
        let words = self.bits.div_ceil(32) as usize;
        let top_bits = self.bits - 32 * (words as u64 - 1);
        let mask = if top_bits == 32 {
            u32::MAX
        } else {
            (1u32 << top_bits) - 1
        };
        let mut buf = vec![0u32; words];
        loop {
            for w in buf.iter_mut() {
                *w = self.rng.next_u32();
            }
            buf[words - 1] &= mask;
            let v = BigUint::from_slice(&buf);
            if v < self.total {
                return v.into();
            }
        }
    }

    pub fn draw(&mut self) -> CanonicalString {
        let r = self.draw_rank();
        self.ranker.unrank(&r).expect("drawn rank is in range")
    }
}

pub fn sample_uniform(n: usize, k: usize, seed: u64) -> Result<CanonicalString> {
    Ok(Sampler::new(n, k, seed)?.draw())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::Generator;

    fn s(n: usize, k: usize, cells: &[usize]) -> CanonicalString {
        CanonicalString::new(n, k, cells.to_vec()).unwrap()
    }

    #[test]
    fn ranks_of_two_two() {
        assert_eq!(rank(&s(2, 2, &[0, 1, 0, 0])).unwrap(), 0u64);
        assert_eq!(rank(&s(2, 2, &[1, 0, 0, 0])).unwrap(), 4u64);
        assert_eq!(rank(&s(2, 2, &[1, 1, 1, 1])).unwrap(), 11u64);
        assert_eq!(rank(&s(1, 1, &[0])).unwrap(), 0u64);
        assert!(rank(&s(3, 2, &[2, 1, 0, 0, 1, 0])).is_err());
    }

    #[test]
    fn unranks_of_two_two() {
        assert_eq!(unrank(&0u64.into(), 2, 2).unwrap().cells(), &[0, 1, 0, 0]);
        assert_eq!(unrank(&11u64.into(), 2, 2).unwrap().cells(), &[1, 1, 1, 1]);
        match unrank(&12u64.into(), 2, 2) {
            Err(Error::RankOutOfRange { count, .. }) => assert_eq!(count, 12u64),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn last_rank_is_last_generated() {
        let last = Generator::new(3, 2).unwrap().last().unwrap();
        assert_eq!(unrank(&215u64.into(), 3, 2).unwrap(), last);
    }

    #[test]
    fn ranker_shape_mismatch() {
        let r = Ranker::new(2, 2).unwrap();
        assert!(r.rank(&s(1, 2, &[0, 0])).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_uniform(1, 2, 99).unwrap().cells(), &[0, 0]);
        let a = sample_uniform(2, 2, 5).unwrap();
        let b = sample_uniform(2, 2, 5).unwrap();
        assert_eq!(a, b);
        let mut x = Sampler::new(4, 3, 1).unwrap();
        let mut y = Sampler::new(4, 3, 1).unwrap();
        for _ in 0..20 {
            let d = x.draw();
            assert!(d.is_valid());
            assert_eq!(d, y.draw());
        }
    }
}
