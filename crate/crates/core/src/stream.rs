//! Writing generated strings as text, optionally on several threads.
//!
//! A parallel run splits the requested rank interval into fixed-size
//! chunks. Each worker unranks the first string of its chunk and steps the
//! generator from there; chunks are written in rank order, so the bytes are
//! the same for any number of jobs.

use std::io::{self, Write};
use std::thread;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::big::BigCount;
use crate::count::Ranker;
use crate::error::{check_params, Error, Result};
use crate::generate::Generator;
use crate::model::CanonicalString;
use crate::text::push_string_line;

const CHUNK: u64 = 1 << 16;

/// A validated request for [`write_generated`].
#[derive(Debug, Clone)]
pub struct GenRequest {
    n: usize,
    k: usize,
    from: Option<CanonicalString>,
    limit: Option<u64>,
    jobs: usize,
}

impl GenRequest {
    pub fn new(
        n: usize,
        k: usize,
        from: Option<CanonicalString>,
        limit: Option<u64>,
        jobs: usize,
    ) -> Result<Self> {
        check_params(n, k)?;
        if jobs == 0 {
            return Err(Error::structure("jobs must be at least 1"));
        }
        if let Some(s) = &from {
            if (s.n(), s.k()) != (n, k) {
                return Err(Error::structure(format!(
                    "resume string has shape ({}, {}), expected ({n}, {k})",
                    s.n(),
                    s.k()
                )));
            }
            s.validate()?;
        }
        Ok(GenRequest {
            n,
            k,
            from,
            limit,
            jobs,
        })
    }
}

/// Writes one line per generated string and returns how many were written.
pub fn write_generated<W: Write>(out: &mut W, req: &GenRequest) -> io::Result<u64> {
    if req.jobs == 1 {
        return write_sequential(out, req);
    }
    let ranker = Ranker::new(req.n, req.k).expect("request was validated");
    let start = match &req.from {
        Some(s) => {
            ranker
                .rank(s)
                .expect("request was validated")
                .into_biguint()
                + 1u32
        }
        None => BigUint::zero(),
    };
    let total = ranker.total().into_biguint();
    let mut end = total;
    if let Some(l) = req.limit {
        end = end.min(&start + l);
    }

    let mut written = 0;
    let mut cursor = start;
    while cursor < end {
        let mut wave = Vec::with_capacity(req.jobs);
        for _ in 0..req.jobs {
            if cursor >= end {
                break;
            }
            let len = (&end - &cursor).to_u64().map_or(CHUNK, |r| r.min(CHUNK));
            wave.push((cursor.clone(), len));
            cursor += len;
        }
        let buffers: Vec<Vec<u8>> = thread::scope(|scope| {
            let handles: Vec<_> = wave
                .iter()
                .map(|(first, len)| {
                    let ranker = &ranker;
                    scope.spawn(move || render_chunk(ranker, first, *len))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("generation worker panicked"))
                .collect()
        });
        for buf in &buffers {
            out.write_all(buf)?;
        }
        written += wave.iter().map(|(_, len)| len).sum::<u64>();
    }
    Ok(written)
}

fn render_chunk(ranker: &Ranker, first: &BigUint, len: u64) -> Vec<u8> {
    let s = ranker
        .unrank(&BigCount::from(first.clone()))
        .expect("chunk start is in range");
    let (n, k) = (s.n(), s.k());
    let mut g = Generator::starting_at(&s)
        .expect("unranked strings are valid")
        .with_limit(len);
    let mut buf = Vec::with_capacity(len as usize * (6 + 2 * n * k));
    while g.advance() {
        push_string_line(&mut buf, n, k, g.current());
    }
    debug_assert_eq!(g.emitted(), len);
    buf
}

fn write_sequential<W: Write>(out: &mut W, req: &GenRequest) -> io::Result<u64> {
    let mut g = match &req.from {
        Some(s) => Generator::after(s),
        None => Generator::new(req.n, req.k),
    }
    .expect("request was validated");
    if let Some(l) = req.limit {
        g = g.with_limit(l);
    }
    let mut buf = Vec::with_capacity(1 << 16);
    while g.advance() {
        push_string_line(&mut buf, req.n, req.k, g.current());
        if buf.len() >= 1 << 16 {
            out.write_all(&buf)?;
            buf.clear();
        }
    }
    out.write_all(&buf)?;
    Ok(g.emitted())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(req: &GenRequest) -> (Vec<u8>, u64) {
        let mut out = Vec::new();
        let count = write_generated(&mut out, req).unwrap();
        (out, count)
    }

    #[test]
    fn jobs_do_not_change_bytes() {
        let seq = render(&GenRequest::new(4, 2, None, None, 1).unwrap());
        assert_eq!(seq.1, 5248);
        for jobs in [2, 3, 8] {
            assert_eq!(
                render(&GenRequest::new(4, 2, None, None, jobs).unwrap()),
                seq
            );
        }
    }

    #[test]
    fn resume_and_limit_in_parallel() {
        let from = CanonicalString::new(3, 2, vec![1, 0, 0, 2, 0, 0]).unwrap();
        let a = render(&GenRequest::new(3, 2, Some(from.clone()), Some(40), 1).unwrap());
        let b = render(&GenRequest::new(3, 2, Some(from), Some(40), 4).unwrap());
        assert_eq!(a.1, 40);
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(GenRequest::new(3, 2, None, None, 0).is_err());
        let bad = CanonicalString::new(3, 2, vec![2, 1, 0, 0, 1, 0]).unwrap();
        assert!(GenRequest::new(3, 2, Some(bad), None, 1).is_err());
        let other = CanonicalString::new(1, 1, vec![0]).unwrap();
        assert!(GenRequest::new(3, 2, Some(other), None, 1).is_err());
    }
}
