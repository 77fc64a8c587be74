use thiserror::Error;

/// Errors raised by constructors and checked operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("window has {got} entries but the period is {n}")]
    WrongLength { n: usize, got: usize },
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("window entries {a} and {b} are congruent modulo {n}")]
    DuplicateResidue { n: usize, a: i64, b: i64 },
    #[error("window sums to {got}, expected {expected}")]
    BadSum { expected: i64, got: i64 },
    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("code {0:?} has no zero entry")]
    AllPositive(Vec<u32>),
    #[error("partition {partition} has a part of size at least {n}")]
    NotInParN { partition: String, n: usize },
    #[error("indices {i} and {j} are congruent modulo {n}")]
    SameResidue { n: usize, i: i64, j: i64 },
    #[error("indices must satisfy i < j, got ({i}, {j})")]
    NotIncreasing { i: i64, j: i64 },
    #[error("the full residue set does not index a cyclically decreasing element")]
    FullSubset,
    #[error("residue {r} is outside 1..={n}")]
    ResidueOutOfRange { n: usize, r: usize },
    #[error("partitions {0} and {1} have different weights")]
    WeightMismatch(String, String),
    #[error("expansions have degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("expansion is not in the span of the affine Schur functions; residue at {0}")]
    NotInSpan(String),
    #[error("cycle supports overlap modulo {n} at residue {r}")]
    OverlappingCycles { n: usize, r: i64 },
    #[error("{0} is not an involution")]
    NotAnInvolution(String),
    #[error("({p}, {q}) is not a cycle of the involution")]
    NotACycle { p: i64, q: i64 },
    #[error("{p} is not the smaller end of its cycle (y({p}) = {q})")]
    NotACycleStart { p: i64, q: i64 },
    #[error("the toggle preconditions fail: {0}")]
    NotAToggleInstance(String),
    #[error("{0} is not covered by {1} in the involution Bruhat order")]
    NotACover(String, String),
    #[error("no atom of the finite involution admits the cover ({0}, {1})")]
    NoAtomWithCover(usize, usize),
    #[error("several atoms of the finite involution admit the cover ({0}, {1})")]
    AmbiguousAtom(usize, usize),
    #[error("malformed virtual permutation: {0}")]
    BadVirtual(String),
    #[error("soundness guard tripped: widening the search range by {0} found new elements")]
    SearchRangeTooSmall(i64),
    #[error("length {got} exceeds the configured bound {bound}")]
    ScaleGuard { got: usize, bound: usize },
    #[error("parse error: {msg} (at `{token}`)")]
    Parse { msg: String, token: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(msg: impl Into<String>, token: impl Into<String>) -> Self {
        Error::Parse {
            msg: msg.into(),
            token: token.into(),
        }
    }
}
