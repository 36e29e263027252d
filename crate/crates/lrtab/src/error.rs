use thiserror::Error;

/// Errors reported by the library.
///
/// Predicates that merely answer a yes/no question return `bool`;
/// an `Error` means the question itself was malformed, for example a
/// filling handed to a comparison that is not of the expected type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing")]
    InvalidPartition,

    #[error("inner partition is not contained in the outer partition")]
    NotNested,

    #[error("|beta| - |gamma| = {boxes} does not match |alpha| = {weight}")]
    WeightMismatch { boxes: usize, weight: usize },

    #[error("filling has {got} rows but the shape has {want}")]
    RowCountMismatch { got: usize, want: usize },

    #[error("row {row} holds {got} entries but the shape has {want} boxes there")]
    RowArityMismatch { row: usize, got: usize, want: usize },

    #[error("entries must be positive integers")]
    ZeroEntry,

    #[error("not an LR filling: {0}")]
    NotLrFilling(&'static str),

    #[error("content {got} does not match the requested alpha {want}")]
    ContentMismatch { got: String, want: String },

    #[error("fillings do not have the same type")]
    TypeMismatch,

    #[error("box moves are undefined: the shape is not a horizontal or vertical strip")]
    NotAStrip,

    #[error("operation requires a rook strip shape")]
    NotARookStrip,

    #[error("a column word determines a filling only when every column holds at most one box")]
    AmbiguousWord,

    #[error("word of length {got} does not fit a shape with {want} boxes")]
    WordLengthMismatch { got: usize, want: usize },

    #[error("word entries do not have content {want}")]
    WordContentMismatch { want: String },

    #[error("not a permutation of 1..=n")]
    InvalidPermutation,

    #[error("permutations act on different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("letter s{letter} is out of range for permutations of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },

    #[error("word is not a reduced word for the target permutation")]
    NotReducedWordFor,

    #[error("expected x < z in Bruhat order")]
    NotBruhatBelow,

    #[error("permutation is not in the parabolic quotient for the given content")]
    NotInQuotient,

    #[error("Z is not dominated by X: entries <= {entry} in columns <= {col} count {z_count} for Z but {x_count} for X")]
    NotDominated {
        entry: usize,
        col: usize,
        z_count: usize,
        x_count: usize,
    },

    #[error("the fillings are equal, so there is no step to take")]
    EqualFillings,

    #[error("partition sequence must grow from the inner to the outer shape")]
    InvalidPartitionSequence,

    #[error("tie break position {pos} does not carry the required value")]
    InvalidTieBreak { pos: usize },

    #[error("cannot parse {0:?} as a partition")]
    PartitionParse(String),

    #[error("cannot parse {0:?} as a column word")]
    WordParse(String),

    #[error("cannot parse filling: {0}")]
    FillingParse(String),
}
