use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count must be positive, got {0}")]
    InvalidStrands(usize),
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i16, strands: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("interval [{lo},{hi}] is outside A_{ambient}")]
    IntervalOutOfRange { lo: usize, hi: usize, ambient: usize },
    #[error("invalid index pair ({i},{j}) for ambient {n}")]
    InvalidPair { i: usize, j: usize, n: usize },
    #[error("invalid box configuration: {0}")]
    InvalidBox(String),
    #[error("intervals are at distance {0}, expected 2")]
    NotAtDistanceTwo(usize),
    #[error("word is not a pure braid")]
    NotPure,
    #[error("unknown identity family {0:?}")]
    UnknownFamily(String),
    #[error("parameters out of range: {0}")]
    ParamsOutOfRange(String),
    #[error("presentation word mixes symbol kinds or ambients")]
    MixedPresentationWord,
    #[error("dihedral label must be at least 2, got {0}")]
    InvalidLabel(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
