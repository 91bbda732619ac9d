use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight is not dominant: {side} coordinates {left} and {right} at index {index} are not strictly decreasing")]
    NotDominant {
        side: &'static str,
        index: usize,
        left: i64,
        right: i64,
    },
    #[error("cannot parse weight: {0}")]
    WeightParse(String),
    #[error("cannot parse base word: bad letter {letter:?} at index {index}")]
    WordParse { index: usize, letter: char },
    #[error("cannot parse root set: {0}")]
    RootSetParse(String),
    #[error("cannot parse diagram: {0}")]
    DiagramParse(String),
    #[error("dimension mismatch: weight is gl({m}|{n}), base is gl({bm}|{bn})")]
    DimensionMismatch {
        m: usize,
        n: usize,
        bm: usize,
        bn: usize,
    },
    #[error("root ({i},{j}) out of range for gl({m}|{n})")]
    RootOutOfRange {
        i: usize,
        j: usize,
        m: usize,
        n: usize,
    },
    #[error("roots ({0},{1}) and ({2},{3}) are comparable")]
    NotIncomparable(usize, usize, usize, usize),
    #[error("root {0} is not simple in base {1}")]
    RootNotSimpleInBase(String, String),
    #[error("not an iso-set: {0}")]
    NotIsoSet(String),
    #[error("row lengths do not describe a base: {0}")]
    InvalidRowLengths(String),
    #[error("index set is not an atom of this weight")]
    InvalidAtomIndexSet,
    #[error("diagram is not in the dagger space: {0}")]
    NotDaggerDiagram(String),
    #[error("diagram cannot be read as a weight: {0}")]
    NotAWeightDiagram(String),
    #[error("too many starred cells for exhaustive search ({0} > {1})")]
    TooManyStars(usize, usize),
    #[error("enumeration too large: C({0},{1}) bases")]
    EnumerationTooLarge(usize, usize),
    #[error("oracle produced a non-contiguous row {0}")]
    NonContiguousRow(usize),
    #[error("empty display window: from {0} is greater than to {1}")]
    InvalidWindow(i64, i64),
}

pub type Result<T> = std::result::Result<T, Error>;
