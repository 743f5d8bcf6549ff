use thiserror::Error;

/// Errors raised by geometric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("homogeneous coordinates must not all vanish")]
    ZeroPoint,
    #[error("points are not collinear")]
    NonCollinear,
    #[error("cross ratio is indeterminate (0/0)")]
    IndeterminateCrossRatio,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("auxiliary points are degenerate: {0}")]
    DegenerateAuxiliary(&'static str),
    #[error("reference frame points must be distinct")]
    DegenerateFrame,
    #[error("collineation matrix is singular")]
    SingularCollineation,
    #[error("body is unbounded")]
    UnboundedBody,
    #[error("body has empty interior")]
    EmptyInterior,
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("points must be interior")]
    PointsNotInterior,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("nesting test unsupported for this pair of bodies")]
    UnsupportedPair,
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("inner body is not contained in outer body")]
    NotNested,
    #[error("value out of range")]
    OutOfRange,
    #[error("points too close to the boundary for a stable result")]
    NumericallyUnstable,
    #[error("triple is collinear")]
    CollinearTriple,
    #[error("degenerate construction: {0}")]
    DegenerateConstruction(&'static str),
    #[error("no equality placement exists for these flats")]
    InfeasibleFlats,
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("invalid quadric: {0}")]
    InvalidQuadric(&'static str),
    #[error("line lies entirely in the absolute")]
    LineInAbsolute,
    #[error("line is tangent to the absolute")]
    Tangent,
    #[error("point lies outside the metric domain of the absolute")]
    OutsideDomain,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("point lies on the hyperplane")]
    PointOnHyperplane,
}

pub type Result<T> = std::result::Result<T, GeometryError>;
