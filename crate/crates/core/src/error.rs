use thiserror::Error;

/// Errors surfaced by the library.
///
/// Variant names are stable: the CLI prints them on stderr and maps
/// `Parse` to exit code 2, everything else to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A column violates the one-column condition; `z` is the smallest
    /// letter at which it breaks. `col` locates the column inside a
    /// tableau when there is one.
    #[error("NotAdmissible: column {col:?} breaks the one-column condition at {z}")]
    NotAdmissible { col: Option<usize>, z: i64 },

    #[error("NotCoadmissible: column is not coadmissible for rank {n}")]
    NotCoadmissible { n: usize },

    #[error("NotColumnStrict: column {col} is not strictly increasing at cell {row}")]
    NotColumnStrict { col: usize, row: usize },

    #[error("SplitNotSemistandard: split form decreases in row {row} between columns {col} and {}", col + 1)]
    SplitNotSemistandard { row: usize, col: usize },

    /// The sliding cell has no neighbour below or to the right: the
    /// elementary slide is finished and the cell leaves the shape.
    #[error("NoNeighbor: the empty cell has left the shape")]
    NoNeighbor,

    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),

    #[error("OrbitMismatch: the two vectors lie in different B_n-orbits")]
    OrbitMismatch,

    /// `complement(pi-rotate(T))` failed to validate, so only the
    /// insertion-based evacuation applies.
    #[error("RotatedNotAdmissible: {0}")]
    RotatedNotAdmissible(Box<Error>),

    #[error("InstanceTooLarge: {0}")]
    InstanceTooLarge(String),

    #[error("BudgetExceeded: exploration budget exhausted")]
    BudgetExceeded,

    #[error("Invalid: {0}")]
    Invalid(String),

    #[error("Parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
