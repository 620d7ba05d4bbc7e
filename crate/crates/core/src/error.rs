use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank n must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("cell ({row}, {col}) lies outside the diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("beta numbers must be strictly decreasing and positive: {0:?}")]
    InvalidBetaNumbers(Vec<usize>),

    #[error("{partition} is not a {n}-core (its abacus is not flush)")]
    NotACore { partition: String, n: usize },

    #[error("level vector must start with b0 = 0, got {0:?}")]
    LevelVectorOffset(Vec<usize>),

    #[error("level vector has {got} entries, expected {expected}")]
    LevelVectorLength { expected: usize, got: usize },

    #[error("root alpha_{u},{v} is not a positive root for n = {n}")]
    RootOutOfRange { u: usize, v: usize, n: usize },

    #[error("tableau for n = {n} needs {expected} entries, got {got}")]
    TableauShape { n: usize, expected: usize, got: usize },

    #[error("invalid alcove coordinates: {0}")]
    InvalidAlcoveCoords(String),

    #[error("invalid region tableau: {0}")]
    InvalidRegionTableau(String),

    #[error("alcove is not m-minimal for any region: {0}")]
    NotMinimalAlcove(String),

    #[error("m must be at least 1")]
    LevelTooSmall,

    #[error("enumeration would produce {needed} items, above the cap of {cap}")]
    CapExceeded { needed: u128, cap: usize },

    #[error("cannot remove the first column of a tableau with n = 2")]
    ColumnRemovalBase,

    #[error("column sums {mu:?} out of range: {reason}")]
    ColumnSumsOutOfRange { mu: Vec<usize>, reason: String },

    #[error("column sums {mu:?} matched {found} regions, expected exactly one")]
    ColumnSumsNotUnique { mu: Vec<usize>, found: usize },

    #[error("phi operator needs k >= 3, got {0}")]
    PhiIndexTooSmall(usize),

    #[error("generator index {index} out of range for n = {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("plotting is only supported for n = 3, got n = {0}")]
    UnsupportedDimension(usize),
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::RankTooSmall(n))
    } else {
        Ok(())
    }
}
