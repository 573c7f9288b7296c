use thiserror::Error;

use crate::big::BigCount;

/// A rule of the canonical string representation that a well-formed string
/// failed to satisfy.
///
/// `R1` is reported at the first cell introducing a label that is not the
/// successor of the largest label seen so far. `R2` is reported for the first
/// label `m` that does not occur among the first `k * m` cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum RuleViolation {
    #[error("rule R1 violated at index {index}: label {label} appears before label {}", label - 1)]
    R1 { index: usize, label: usize },
    #[error("rule R2 violated: label {label} does not occur among the first {deadline} cells")]
    R2 { label: usize, deadline: usize },
}

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input does not have the shape required by the type (wrong
    /// length, out-of-range index, zero dimensions). Distinct from
    /// [`Error::Rule`], which concerns well-formed strings only.
    #[error("malformed input: {0}")]
    Structure(String),
    #[error("string is not canonical: {0}")]
    Rule(#[from] RuleViolation),
    #[error("invalid flag sequence: {0}")]
    Flags(String),
    #[error("rank {rank} out of range: there are {count} strings")]
    RankOutOfRange { rank: BigCount, count: BigCount },
    #[error("oracle needs {required} enumeration steps but the budget is {budget}")]
    BudgetExceeded { required: BigCount, budget: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Rejects zero dimensions.
pub(crate) fn check_params(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::structure("state count must be at least 1"));
    }
    if k == 0 {
        return Err(Error::structure("alphabet size must be at least 1"));
    }
    Ok(())
}
