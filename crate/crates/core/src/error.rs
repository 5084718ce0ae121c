use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("HalfPlanePoint invariant violated: {0} is not in the half-plane (need im > 0, or im = 0 and re < 0)")]
    NotInHalfPlane(String),

    #[error("Surface invariant violated: degree e = {0} must be >= 0")]
    NegativeSurfaceDegree(i64),

    #[error("GluingParams invariant violated: glued type m = {0} must be one of 1, 2, 3, 4")]
    InvalidGluedType(i64),

    #[error("GluingParams invariant violated: shifts (j1, j2) = ({0}, {1}) must satisfy j1 = j2 + 1")]
    ShiftMismatch(i64, i64),

    #[error("GluingParams invariant violated: {0}")]
    ComponentMismatch(String),

    #[error("GluingParams invariant violated: matrix M must have positive determinant, got {0}")]
    NonPositiveDeterminant(String),

    #[error("NamedObject invariant violated: DirectSum must be nonempty")]
    EmptyDirectSum,

    #[error("DimVector4 invariant violated: entries must be nonnegative integers, got {0}")]
    NotAHeartDimension(String),

    #[error("precondition violated: total rank r1 + r2 = {0} must be positive")]
    NonPositiveTotalRank(String),

    #[error("precondition violated: support constant C = {0} must be positive")]
    NonPositiveConstant(f64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
