use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet has no letters")]
    EmptyAlphabet,
    #[error("not a permutation of the base alphabet: {0}")]
    NotAPermutation(String),
    #[error("cannot parse letter `{0}`")]
    BadLetter(String),
    #[error("cannot parse alphabet spec `{0}`")]
    BadAlphabetSpec(String),
    #[error("letter `{0}` does not belong to alphabet `{1}`")]
    LetterNotInAlphabet(String, String),
    #[error("root over alphabet `{0}` used with alphabet `{1}`")]
    RootAlphabetMismatch(String, String),
    #[error("operation requires an all-isotropic half-integer alphabet, got `{0}`")]
    NotHalfTruncation(String),
    #[error("exploration exceeded the cap of {cap} states")]
    CapExceeded { cap: usize },
    #[error("equivalence undecided within the cap of {cap} pairs")]
    Indeterminate { cap: usize },
    #[error("set is not closed under crystal operators: `{0}` maps outside the set")]
    SetNotClosed(String),
    #[error("shape not admissible over alphabet `{0}`: {1}")]
    InadmissibleShape(String, String),
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("invalid matrix: {0}")]
    BadMatrix(String),
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("result differs between truncations ({0}); enlarge the alphabet")]
    TruncationUnstable(String),
    #[error("polynomial is not in the span of the basis: offending monomial {0}")]
    NotInSpan(String),
    #[error("bad input: {0}")]
    BadInput(String),
}
