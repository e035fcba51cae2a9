//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong while building complexes, running linear
/// algebra, or deciding realizability.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A facet lists the same vertex twice.
    #[error("facet {0:?} repeats a vertex")]
    RepeatedVertexInFacet([u32; 4]),

    /// A complex needs at least one facet.
    #[error("facet list is empty")]
    EmptyFacetList,

    /// The operation requires a closed pseudomanifold.
    #[error("complex is not a closed pseudomanifold")]
    NotClosed,

    /// Vector or matrix sizes do not line up.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Two cochains of different degrees were combined.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// A cup product would exceed the dimension of the complex.
    #[error("cup product of degree {0} exceeds dimension 3")]
    DegreeOverflow(usize),

    /// A cochain that must be a cocycle is not one.
    #[error("cochain is not a cocycle")]
    NotACocycle,

    /// A chain that must be a cycle has nonzero boundary.
    #[error("chain is not a cycle")]
    NotACycle,

    /// Classes from different cohomology contexts were mixed.
    #[error("classes live over different cohomology contexts")]
    ContextMismatch,

    /// The duality system is inconsistent or underdetermined; the input
    /// violates the closed-manifold trust assumption.
    #[error("duality system has no unique solution (complex is not a closed manifold mod 2)")]
    NoSolution,

    /// The Jacobian does not drop rank by exactly one at the given point.
    #[error("jacobian kernel is not one-dimensional at this point")]
    NotRankDropOne,

    /// The singular locus is not cut out transversally at the given point.
    #[error("singular locus is degenerate at this point")]
    DegenerateLocus,

    /// A vertex map fails to send some simplex into a simplex.
    #[error("vertex map does not send simplex {0:?} into a simplex of the target")]
    InvalidMap(Vec<u32>),

    /// The prescribed locus violates one of its structural invariants.
    #[error("invalid locus: {0}")]
    InvalidLocus(String),

    /// Requested built-in triangulation does not exist.
    #[error("unknown builtin '{0}' (expected one of S3, T3, RP3, S2xS1, RP2xS1)")]
    UnknownBuiltin(String),

    /// Malformed problem input (JSON shape, missing fields, bad labels).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An upstream failure, tagged with the pipeline stage that hit it.
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps an error with the name of the stage that produced it.
    pub fn at_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
