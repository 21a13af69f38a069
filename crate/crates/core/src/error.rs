use thiserror::Error;

use crate::mis::WitnessSolution;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("polygon needs at least three vertices")]
    TooFewVertices,
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("polygon edges {0} and {1} intersect")]
    SelfIntersecting(usize, usize),
    #[error("three consecutive collinear vertices at index {0}")]
    CollinearVertices(usize),
    #[error("ray leaves the polygon immediately")]
    NoHit,
    #[error("point {0} lies outside the polygon")]
    PointOutside(String),
    #[error("polygon is not x-monotone")]
    NotMonotone,
    #[error("graph was not built in monotone mode")]
    NotMonotoneVig,
    #[error("k must be at least 1")]
    KOutOfRange,
    #[error("points do not see each other")]
    NotVisible,
    #[error("epsilon must be positive")]
    NonPositiveEps,
    #[error("visibility region has no usable primary edge")]
    DegenerateRegion,
    #[error("string gap collides with a region vertex")]
    CloneCollision,
    #[error("invalid string index pair ({0}, {1})")]
    IndexError(usize, usize),
    #[error("instance too large for exhaustive search ({0} > {1})")]
    TooLarge(usize, usize),
    #[error("candidate bound violated: {0}")]
    BoundViolation(String),
    #[error("budget exceeded ({reason}); best witness set found has size {}", best.size)]
    BudgetExceeded {
        best: Box<WitnessSolution>,
        reason: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
