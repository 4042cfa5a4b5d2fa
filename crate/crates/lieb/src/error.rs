//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Indices carried by the variants are 1-based so that messages match the
/// way basis elements are written in documents and on the command line.
#[derive(Debug, Error)]
pub enum Error {
    /// An index or a size does not fit the declared dimension.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The Jacobi identity fails on the basis triple `(i, j, k)`.
    #[error("Jacobi identity violated on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    /// The same unordered pair of basis elements was given two brackets.
    #[error("duplicate bracket entry for pair ({i}, {j})")]
    DuplicateBracketEntry { i: usize, j: usize },

    /// A bracket entry pairs a basis element with itself.
    #[error("bracket entry [{i}, {i}] is zero by antisymmetry and may not be declared")]
    DiagonalBracketEntry { i: usize },

    /// A multivector has the wrong grade for the requested operation.
    #[error("grade mismatch: expected grade {expected}, found {found}")]
    GradeMismatch { expected: usize, found: String },

    /// A configured size bound would be exceeded.
    #[error("bound exceeded: {what} requires {required}, limit is {limit}")]
    BoundExceeded { what: String, required: usize, limit: usize },

    /// The subspace passed in does not live in the algebra itself.
    #[error("subspace is not a subspace of the Lie algebra")]
    NotASubspaceOfG,

    /// Two operands belong to algebras of different dimension.
    #[error("operands belong to different algebras (dimensions {left} and {right})")]
    AlgebraMismatch { left: usize, right: usize },

    /// A grade outside `0..=dim` was requested.
    #[error("grade {grade} is out of range for an algebra of dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    /// A nonzero input was required.
    #[error("input must be nonzero")]
    ZeroInput,

    /// A homogeneous multivector was required.
    #[error("input mixes several grades")]
    MixedGrade,

    /// A form has an arity or grade unsuitable for the operation.
    #[error("arity/grade mismatch: {0}")]
    ArityGradeMismatch(String),

    /// A form has the wrong arity.
    #[error("arity mismatch: expected arity {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    /// A declared symmetry does not hold for the supplied tensor.
    #[error("declared symmetry {0} does not hold")]
    SymmetryViolation(String),

    /// A gradation does not respect the bracket.
    #[error(
        "gradation closure violated: [{i}, {j}] has a component along basis element {component} of the wrong degree"
    )]
    ClosureViolation { i: usize, j: usize, component: usize },

    /// A degree is not a valid element of the declared group.
    #[error("degree of basis element {basis} is not a valid group element: {reason}")]
    ModulusViolation { basis: usize, reason: String },

    /// A form does not vanish on the invariant subspace it is reduced by.
    #[error("form does not vanish on the invariant subspace")]
    KernelConditionFailed,

    /// The subspace is not an ideal with traceless restricted action.
    #[error("subspace is not a traceless ideal")]
    NotTracelessIdeal,

    /// The multivector is not decomposable.
    #[error("multivector is not decomposable")]
    NotDecomposable,

    /// The multivector is not invariant under the adjoint action.
    #[error("multivector is not invariant")]
    NotInvariant,

    /// The algebra is not nilpotent.
    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,

    /// A cochain degree exceeds the algebra dimension.
    #[error("cochain degree {degree} exceeds the algebra dimension {dim}")]
    DegreeOverflow { degree: usize, dim: usize },

    /// No catalog entry has this name.
    #[error("unknown name: {0}")]
    UnknownName(String),

    /// A catalog parameter is missing or outside its allowed range.
    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// JSON input could not be decoded.
    #[error("invalid JSON document: {0}")]
    Json(#[from] serde_json::Error),

    /// A file could not be read.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True when the input was well formed but a mathematical condition failed.
    ///
    /// The command-line tool exits with status 1 for these and 2 otherwise.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::JacobiViolation { .. }
                | Error::ClosureViolation { .. }
                | Error::ModulusViolation { .. }
                | Error::KernelConditionFailed
                | Error::NotTracelessIdeal
                | Error::NotDecomposable
                | Error::NotInvariant
                | Error::NotNilpotent
        )
    }
}
