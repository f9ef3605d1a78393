//! Error type shared by every module of the engine.

use thiserror::Error;

/// All failure modes of the engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Rectangle with zero (or negative) extent in some axis.
    #[error("degenerate rectangle: extent {0} is not positive")]
    DegenerateRectangle(f64),
    /// The source normalizes onto a rectangle corner, where no path type is defined.
    #[error("source lies on a rectangle corner")]
    SourceAtCorner,
    /// Region weight outside the supported open interval (0, sqrt(2)) \ {1}.
    #[error("weight {0} outside supported range (0, sqrt(2)), weight 1 handled separately")]
    WeightOutOfRange(f64),
    /// Polyline with a repeated consecutive vertex.
    #[error("degenerate polyline: repeated consecutive vertex")]
    DegeneratePolyline,
    /// Path type not defined for this weight regime or target region.
    #[error("path type {0} not admissible here")]
    TypeNotAdmissible(u8),
    /// The refraction-root bracket contains no sign change.
    #[error("no bracketed root for the refraction residual")]
    RootSolveFailure,
    /// No path type reconstructed successfully; indicates an internal inconsistency.
    #[error("no feasible path type (internal consistency failure)")]
    NoFeasibleType,
    /// A reconstructed vertex fell beyond the rectangle's right edge.
    #[error("path interacts with the right edge of the rectangle")]
    RightEdgeInteraction,
    /// Both endpoints lie strictly outside the rectangle; no exact answer exists.
    #[error(
        "source and target both lie strictly outside the weighted rectangle; \
             this configuration has no exact solution over the rationals with k-th roots"
    )]
    SourceOutsideUnsupported,
    /// Operation requires the source on the top boundary.
    #[error("source is not on the rectangle boundary")]
    SourceNotOnBoundary,
    /// Operation requires the source strictly inside the rectangle.
    #[error("source is not strictly inside the rectangle")]
    SourceNotInside,
    /// Requested bisector pair is not in the catalog for this regime.
    #[error("bisector pair ({0}, {1}) not in the catalog")]
    PairNotInCatalog(u8, u8),
    /// Grid sampling over an empty bounding box.
    #[error("empty bounding box")]
    EmptyBbox,
    /// Refinement input vertex does not lie on any rectangle edge.
    #[error("polyline vertex lies on no rectangle edge")]
    VertexOffEdge,
    /// Reduction modulo a prime that divides the leading coefficient.
    #[error("leading coefficient vanishes modulo {0}")]
    LeadingCoefficientVanishes(u64),
    /// Factorization requested for a polynomial with repeated factors.
    #[error("polynomial is not squarefree modulo its prime")]
    NotSquarefree,
    /// Argument outside the real domain of the residual expression.
    #[error("argument outside the domain of the residual expression")]
    DomainViolation,
}

pub type Result<T> = std::result::Result<T, Error>;
