use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("cover relation contains a cycle: {}", .0.join(" < "))]
    CycleDetected(Vec<String>),
    #[error("poset has no least element")]
    NoBottom,
    #[error("poset has no greatest element")]
    NoTop,
    #[error("bounded poset must be non-trivial (bottom = top)")]
    Trivial,
    #[error("poset is empty")]
    Empty,
    #[error("poset has {0} elements, the dense representation supports at most 64")]
    TooLarge(usize),
    #[error("subset belongs to a different poset")]
    ForeignSubset,
    #[error("element `{0}` has no complement")]
    EmptyComplementSet(String),
    #[error("poset size {size} exceeds the cap {cap} for this exhaustive check")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("unknown predicate or suite `{0}`")]
    PredicateUnknown(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
}

pub type Result<T> = std::result::Result<T, Error>;
