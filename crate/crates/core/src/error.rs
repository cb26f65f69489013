use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0:?} lies outside [0, 1]")]
    DegreeOutOfRange(String),
    #[error("malformed degree {0:?}")]
    MalformedDegree(String),
    #[error("degree {0:?} has more than 9 fractional digits")]
    ExcessPrecision(String),
    #[error("a hesitant fuzzy element needs at least one degree")]
    EmptyElement,
    #[error("subsequence length {q} outside 1..={len}")]
    SubsequenceLength { q: usize, len: usize },
    #[error("sequences differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("operands are defined over different universes")]
    UniverseMismatch,
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("element {0:?} appears more than once in the universe")]
    DuplicateElement(String),
    #[error("set {set:?} has no membership for element {element:?}")]
    MissingElement { set: String, element: String },
    #[error("set {set:?} assigns a membership to unknown element {element:?}")]
    UnknownElement { set: String, element: String },
    #[error("set {set:?} has an empty membership at element {element:?}")]
    EmptyMembership { set: String, element: String },
    #[error("set {set:?}, element {element:?}: {source}")]
    BadDegree {
        set: String,
        element: String,
        #[source]
        source: Box<Error>,
    },
    #[error("a family needs at least one member")]
    EmptyFamily,
    #[error("family member name {0:?} is used twice")]
    DuplicateMember(String),
    #[error("family {family:?} references unknown set {set:?}")]
    UnknownMember { family: String, set: String },
    #[error("the tail-truncated relation has no equality variant")]
    NoEqualityForTail,
    #[error("the tail-truncated relation cannot be used for ranking")]
    NoRankingForTail,
    #[error("unknown set {0:?}")]
    UnknownSet(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown law {0:?}")]
    UnknownLaw(String),
    #[error("binding lacks variable {0:?}")]
    MissingVariable(String),
    #[error("binding has variable {0:?} that the law does not use")]
    UnexpectedVariable(String),
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
    #[error("document: {0}")]
    Document(String),
    #[error("score table: {0}")]
    ScoreTable(String),
    #[error("expression: {message} at offset {offset}")]
    Expression { offset: usize, message: String },
}
