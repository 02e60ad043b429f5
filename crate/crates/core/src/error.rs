use std::fmt;

use thiserror::Error;

/// A specific broken input requirement, reported inside [`GeomError::Precondition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    ZeroDirection,
    SingularFrame,
    GsGtNotParallel,
    LParallelToGs,
    OriginOnL,
    AxisParallelToGs,
    AxisEqualsL,
    OriginOffAxis,
    GpNotParallel,
    OriginOnG,
    SampleOffG,
    SampleOnXAxis,
    SampleOnYAxis,
    AxisParallelToG,
    SampleOnAxis,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Violation::ZeroDirection => "direction vector must be nonzero",
            Violation::SingularFrame => "frame matrix must be invertible",
            Violation::GsGtNotParallel => "G_S and G_T must be parallel",
            Violation::LParallelToGs => "L must not be parallel to G_S and G_T",
            Violation::OriginOnL => "L must not pass through the origin",
            Violation::AxisParallelToGs => "Axis must not be parallel to G_S and G_T",
            Violation::AxisEqualsL => "Axis must differ from L",
            Violation::OriginOffAxis => "Origin must lie on Axis",
            Violation::GpNotParallel => "G and P must be parallel",
            Violation::OriginOnG => "G must not pass through the origin",
            Violation::SampleOffG => "the sample point must lie on G",
            Violation::SampleOnXAxis => "the sample point must have nonzero y",
            Violation::SampleOnYAxis => "the sample point must have nonzero x",
            Violation::AxisParallelToG => "Axis must not be parallel to G and P",
            Violation::SampleOnAxis => "the sample point must not lie on Axis",
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("the two points coincide, so they do not determine a line")]
    Coincident,
    #[error("the lines are parallel and have no unique intersection")]
    Parallel,
    #[error("L passes through the origin")]
    OriginOnL,
    #[error("construction unavailable: {0}")]
    CaseUnavailable(&'static str),
    #[error("degenerate linear system: {0}")]
    Singular(&'static str),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("precondition violated: {0}")]
    Precondition(Violation),
    #[error("the ray from the projection centre is parallel to the projection line")]
    ParallelProjection,
    #[error("the point to project coincides with the projection centre")]
    OriginSample,
    #[error("the origin does not lie on the axis")]
    OriginOffAxis,
    #[error("the transversal direction is parallel to the axis")]
    DegenerateTransversal,
}

impl GeomError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            GeomError::Coincident => "E_COINCIDENT",
            GeomError::Parallel => "E_PARALLEL",
            GeomError::OriginOnL => "E_ORIGIN_ON_L",
            GeomError::CaseUnavailable(_) => "E_CASE_UNAVAILABLE",
            GeomError::Singular(_) => "E_SINGULAR",
            GeomError::Inconsistent(_) => "E_INCONSISTENT",
            GeomError::Precondition(_) => "E_PRECONDITION",
            GeomError::ParallelProjection => "E_PARALLEL_PROJECTION",
            GeomError::OriginSample => "E_ORIGIN_SAMPLE",
            GeomError::OriginOffAxis => "E_ORIGIN_OFF_AXIS",
            GeomError::DegenerateTransversal => "E_DEGENERATE_TRANSVERSAL",
        }
    }

    /// True when the error means a guaranteed property failed, i.e. a bug.
    pub fn is_internal(&self) -> bool {
        matches!(self, GeomError::Inconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
