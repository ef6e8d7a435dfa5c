//! Error type shared by the whole crate.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong building frames, BPAs, matrices, or
/// documents. Display messages are written for CLI users; the variants
/// themselves are matched in tests.
#[derive(Debug, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("frame has no elements")]
    EmptyFrame,

    #[error("frame has {0} elements, the maximum is 64")]
    TooManyElements(usize),

    #[error("{labels} element labels but {positions} positions")]
    PositionLengthMismatch { labels: usize, positions: usize },

    #[error("position for element `{0}` is not finite")]
    NonFinitePosition(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("subset references element indices outside the frame")]
    BitsOutOfRange,

    #[error("focal sets belong to different frames")]
    FrameMismatch,

    #[error("frame has no positions")]
    NoEmbedding,

    #[error("operation undefined for an empty focal set")]
    EmptySet,

    #[error("mass {0} is outside [0, 1]")]
    MassOutOfRange(f64),

    #[error("masses sum to {0}, expected 1")]
    MassSumViolation(f64),

    #[error("positive mass assigned to the empty set")]
    EmptySetMass,

    #[error("focal set {0} appears more than once")]
    DuplicateFocalSet(String),

    #[error("total conflict between the two bodies of evidence (k = {0})")]
    TotalConflict(f64),

    #[error("similarity matrices are built over different joint supports")]
    SupportMismatch,

    #[error("expected a {expected} matrix, got a {found} matrix")]
    MatrixKindMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("alpha {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("tuning parameter k must be positive and finite, got {0}")]
    TuningOutOfRange(f64),

    #[error("shift index {0} is outside [2, 12]")]
    StepOutOfRange(u32),

    #[error("case {0} is outside [1, 20]")]
    CaseOutOfRange(u32),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    // The cause is embedded in the message, so it is deliberately not
    // exposed as source(): chain-walking printers would repeat it.
    #[error("line {line}: {cause}")]
    AtLine { line: usize, cause: Box<Error> },

    #[error("no bpa named `{0}` in the document")]
    UnknownBpa(String),

    #[error("bpa name `{0}` declared more than once")]
    DuplicateBpa(String),

    #[error("`{0}` cannot be written in the document grammar")]
    Unrepresentable(String),
}

impl Error {
    /// Annotates any error with the document line it came from.
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            cause: Box::new(self),
        }
    }
}
