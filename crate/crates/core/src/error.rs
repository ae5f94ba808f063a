use std::fmt;

use thiserror::Error;

/// Grid vertex `(i, j)`.
pub type Vertex = (i64, i64);

/// Which clause of a precondition failed, for errors that carry one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause(pub String);

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // projective layer
    #[error("points do not span a plane")]
    DegenerateSpan,
    #[error("planes do not meet in a single point")]
    DegenerateMeet,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("too many coincident points for a cross-ratio")]
    TooManyCoincident,
    #[error("invalid perspective collineation: {0}")]
    InvalidPerspectivity(Clause),
    #[error("homogeneous coordinates are all zero")]
    ZeroVector,

    // line geometry
    #[error("points coincide")]
    CoincidentPoints,
    #[error("line lies in the plane")]
    LineInPlane,
    #[error("point lies on the line")]
    PointOnLine,
    #[error("lines are not pairwise skew")]
    NotPairwiseSkew,
    #[error("point is not on the line")]
    PointNotOnLine,
    #[error("lines do not meet in a single point")]
    LinesDoNotMeet,
    #[error("transversal is not unique")]
    DegenerateTransversal,
    #[error("linear system for the quadric is rank deficient")]
    RankDeficient,
    #[error("point is not on the quadric")]
    PointNotOnQuadric,
    #[error("known generator is invalid")]
    GeneratorInvalid,
    #[error("point is not on the conic")]
    PointNotOnConic,
    #[error("line is not in the plane of the conic")]
    LineNotInPlane,
    #[error("line is a component of the conic")]
    LineInConic,
    #[error("split requires an irrational extension")]
    IrrationalBranch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(Clause),

    // nets
    #[error("window too small")]
    WindowTooSmall,
    #[error("vertex {0:?} outside the window")]
    OutOfWindow(Vertex),
    #[error("net is not conjugate at face {0:?}")]
    NotConjugate(Vertex),
    #[error("singular face {0:?}")]
    SingularFace(Vertex),
    #[error("window exhausted after {0} Laplace steps")]
    WindowExhausted(usize),
    #[error("not an A-net at vertex {0:?}")]
    NotAnAnet(Vertex),
    #[error("windows are incompatible")]
    WindowMismatch,

    // congruences
    #[error("congruence entry undefined at {0:?}")]
    UndefinedEntry(Vertex),
    #[error("not a W-congruence at face {0:?}")]
    NotWCongruence(Vertex),
    #[error("seed vertices must have pairwise different parity")]
    BadSeedParity,
    #[error("seed point at {0:?} is not on its congruence line")]
    SeedOffLine(Vertex),
    #[error("plane at {0:?} does not contain the congruence line")]
    PlaneOffLine(Vertex),
    #[error("degenerate projection at {0:?}")]
    DegenerateProjection(Vertex),
    #[error("route mismatch at {0:?}")]
    RouteMismatch(Vertex),
    #[error("point at {0:?} is not on the common congruence")]
    NotOnCommonCongruence(Vertex),

    // cycles
    #[error("corresponding points of opposite nets coincide at {0:?}")]
    CoincidentOpposites(Vertex),
    #[error("degenerate choice at face {face:?}, slot {slot}")]
    DegenerateChoice { face: Vertex, slot: String },
    #[error("missing parameter for slot {0}")]
    MissingParameter(String),
    #[error("axes data not in suitable position: {bullet} at index {index}")]
    SuitabilityViolated { bullet: u8, index: i64 },
    #[error("f11 is not on the quadric and face plane")]
    F11OffQuadric,
    #[error("degenerate transport at {0:?}")]
    DegenerateTransport(Vertex),
    #[error("lines are not in a regulus")]
    NotARegulus,
    #[error("plane is incident with line {0}")]
    PlaneIncident(usize),
    #[error("edge condition violated at edge {0}")]
    EdgeConditionViolated(usize),
    #[error("no valid configuration after {0} attempts")]
    RetriesExhausted(usize),
    #[error("degenerate quadric")]
    DegenerateQuadric,

    // io
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point at {vertex:?} is ideal in chart {chart}")]
    IdealPoint { vertex: Vertex, chart: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(Clause(msg.into()))
    }
}
