use thiserror::Error;

/// Every failure the library can report.
///
/// `Parse` is a malformed-input failure; every other variant is a domain
/// failure on well-formed input. [`Error::reason`] gives the stable
/// machine-readable code printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(u32),
    #[error("alphabet size {0} is not supported (2..=255, text forms need <= 26)")]
    BaseTooLarge(u32),
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(u32, u32),
    #[error("subtraction would be negative")]
    NegativeResult,
    #[error("value is zero")]
    ZeroValue,
    #[error("value is out of range")]
    OutOfRange,
    #[error("letter index {letter} is outside an alphabet of size {k}")]
    LetterOutOfRange { letter: u32, k: u32 },
    #[error("words do not form a prefix code")]
    NotPrefixCode,
    #[error("word {0} is not in the code")]
    NotInCode(String),
    #[error("not all children of {0} are in the code")]
    ChildrenMissing(String),
    #[error("domain words do not form a prefix code")]
    DomainNotPrefixCode,
    #[error("word {0} is not in the domain code")]
    NotInDomainCode(String),
    #[error("length {0} is below the longest domain word")]
    LengthTooSmall(usize),
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(u32, u32),
    #[error("element is not injective")]
    NotInjective,
    #[error("block is not a class of the congruence")]
    NotAClass,
    #[error("heights or indices are not congruent modulo k-1")]
    IndexMismatch,
    #[error("elements are equal")]
    NotDistinct,
    #[error("element is zero")]
    ZeroElement,
    #[error("element is not plep")]
    NotPlep,
    #[error("code is not fixed-length")]
    NotFixedLength,
    #[error("representative is not in the code")]
    RepNotInCode,
    #[error("index {0} is divisible by k")]
    DivisibleIndex(u64),
    #[error("unknown gate {0:?}")]
    UnknownGate(String),
    #[error("target word is empty")]
    EmptyTarget,
    #[error("language is empty")]
    EmptyLanguage,
    #[error("transition graph has a cycle")]
    CyclicGraph,
    #[error("word {0} is not in the image code")]
    NotInImageCode(String),
    #[error("formula arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("formula is not surjective: some y has B(x,y) = 0 for all x")]
    NotSurjective,
    #[error("instance too large for brute force: {0} variables")]
    TooLarge(usize),
    #[error("word longer than the padding length")]
    TooLong,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }

    /// Stable kebab-case reason code.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::BaseTooSmall(_) => "base-too-small",
            Error::BaseTooLarge(_) => "base-too-large",
            Error::BaseMismatch(..) => "base-mismatch",
            Error::NegativeResult => "negative-result",
            Error::ZeroValue => "zero-value",
            Error::OutOfRange => "out-of-range",
            Error::LetterOutOfRange { .. } => "letter-out-of-range",
            Error::NotPrefixCode => "not-prefix-code",
            Error::NotInCode(_) => "not-in-code",
            Error::ChildrenMissing(_) => "children-missing",
            Error::DomainNotPrefixCode => "domain-not-prefix-code",
            Error::NotInDomainCode(_) => "not-in-domain-code",
            Error::LengthTooSmall(_) => "length-too-small",
            Error::AlphabetMismatch(..) => "alphabet-mismatch",
            Error::NotInjective => "not-injective",
            Error::NotAClass => "not-a-class",
            Error::IndexMismatch => "index-mismatch",
            Error::NotDistinct => "not-distinct",
            Error::ZeroElement => "zero-element",
            Error::NotPlep => "not-plep",
            Error::NotFixedLength => "not-fixed-length",
            Error::RepNotInCode => "rep-not-in-code",
            Error::DivisibleIndex(_) => "divisible-index",
            Error::UnknownGate(_) => "unknown-gate",
            Error::EmptyTarget => "empty-target",
            Error::EmptyLanguage => "empty-language",
            Error::CyclicGraph => "cyclic-graph",
            Error::NotInImageCode(_) => "not-in-image-code",
            Error::ArityMismatch(_) => "arity-mismatch",
            Error::NotSurjective => "not-surjective",
            Error::TooLarge(_) => "too-large",
            Error::TooLong => "too-long",
            Error::Parse { .. } => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
