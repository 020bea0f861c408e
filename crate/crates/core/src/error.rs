use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("quiver has an oriented cycle; only finite-dimensional (acyclic) algebras are supported")]
    OrientedCycle,

    #[error("representations live over different algebras")]
    AlgebraMismatch,

    #[error("representation violates a relation of its algebra")]
    RelationViolated,

    #[error("non-split endomorphism ring: End/rad has dimension {0} but no idempotent was found over the rationals")]
    NonSplitEndomorphism(usize),

    #[error("resolution exceeds cap {0}")]
    ResolutionCap(usize),

    #[error("algebra is not hereditary")]
    NotHereditary,

    #[error("infinite family encountered at dimension vector {0:?}")]
    InfiniteFamily(Vec<usize>),

    #[error("enumeration incomplete: {0}")]
    EnumerationIncomplete(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no admissible summand for a transformation of the second kind")]
    NoAdmissibleSummand,

    #[error("relation does not lift to parallel paths: {0}")]
    RelationLift(String),

    #[error("covering property fails numerically: {0}")]
    CoveringProperty(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("dimension cap {cap} exceeded (dim {dim})")]
    DimCap { cap: usize, dim: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("closed form disagrees with computation: closed form {closed}, computed {computed}")]
    ClosedFormMismatch { closed: usize, computed: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
