use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("candidate set is empty")]
    EmptyCandidateSet,

    #[error("candidate `{0}` declared twice")]
    DuplicateCandidate(String),

    #[error("invalid candidate name `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidCandidateName(String),

    #[error("unknown candidate `{0}`")]
    UnknownCandidate(String),

    #[error("comparison of `{0}` with itself")]
    SelfComparison(String),

    #[error("preferences are cyclic: closing them forces {0} > {1} and {1} > {0}")]
    Cycle(String, String),

    #[error("vote weight must be a positive integer no larger than 2^31-1, got {0}")]
    InvalidWeight(u64),

    #[error("total vote weight {0} is even; an odd total is required")]
    EvenTotalWeight(u64),

    #[error("profile has no votes")]
    NoVotes,

    #[error("vote ranges over {found} candidates but the profile has {expected}")]
    CandidateMismatch { expected: usize, found: usize },

    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("candidate `{0}` appears more than once in the agenda")]
    DuplicateLeaf(String),

    #[error("candidate `{0}` is missing from the agenda")]
    MissingCandidate(String),

    #[error("majority relation between {0} and {1} is unknown")]
    IncompleteGraph(String, String),

    #[error("search budget of {budget} evaluations exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("{unknown} unknown pairs exceed the enumeration bound of {bound}")]
    TooManyUnknownPairs { unknown: usize, bound: usize },

    #[error("exact search supports at most {max} candidates, got {found}")]
    TooManyCandidates { max: usize, found: usize },

    #[error("integers sum to {0}, which is odd")]
    OddSum(u64),

    #[error("partition integers must be positive")]
    NonPositiveInteger,

    #[error("extra candidates must be disjoint from the instance candidates (`{0}` clashes)")]
    CandidateClash(String),
}
