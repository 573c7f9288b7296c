//! Canonical strings for initially connected deterministic finite automata.
//!
//! An automaton whose states are all reachable from the initial state has a
//! canonical numbering of its states: the initial state is 0, and the other
//! states are numbered in the order they are first referenced when the
//! transition table is read row by row. Writing the table out in that
//! numbering gives a string that is the same for two automata exactly when
//! they are isomorphic.
//!
//! The crate provides
//!
//! * the string and automaton types, with validity checking ([`model`]);
//! * canonicalization, normal forms with final states and isomorphism
//!   testing ([`canonical`]);
//! * lexicographic generation of every canonical string of a given shape
//!   ([`generate`], [`stream`]);
//! * exact counts, an upper bound, rank/unrank and uniform sampling
//!   ([`count`]);
//! * brute-force reference counts ([`oracle`]) and the text formats
//!   ([`text`]).
//!
//! ```
//! use icdfa::{canonicalize, count_icdfa, DfaStructure};
//!
//! let d = DfaStructure::from_rows(&[[0, 1], [0, 4], [1, 4], [3, 2], [0, 4]], 0)?;
//! let (s, mapping) = canonicalize(&d);
//! assert_eq!(s.to_string(), "3 2 : 0 1 0 2 0 2");
//! assert_eq!(mapping.reachable_count(), 3);
//! assert_eq!(count_icdfa(3, 2)?.to_string(), "216");
//! # Ok::<(), icdfa::Error>(())
//! ```

mod big;
pub mod canonical;
pub mod count;
mod error;
pub mod generate;
pub mod model;
pub mod oracle;
pub mod stream;
pub mod text;

pub use big::BigCount;
pub use canonical::{canonicalize, from_string, isomorphic, normal_form, StateMapping};
pub use count::{
    count_icdfa, count_liskovets, count_with_finals, fillings, rank, sample_uniform,
    stirling_bound, unrank, CountTable, Ranker, Sampler,
};
pub use error::{Error, Result, RuleViolation};
pub use generate::{
    enumerate_flags, first_string, generate_all, next_string, partition_by_flags, Generator,
};
pub use model::{CanonicalString, Dfa, DfaStructure, FlagSequence, NormalForm};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/canonical-strings.md")]
    mod canonical_strings {}
    #[doc = include_str!("../../../book/src/generation.md")]
    mod generation {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/ranking.md")]
    mod ranking {}
}
