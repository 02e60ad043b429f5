//! Exact rational plane constructions.
//!
//! * [`projection_one`]: the double projection points `P_hor`, `P_ver` on a
//!   transversal, in the standard coordinate frame.
//! * [`projection_general`]: the same point for an arbitrary axis and origin,
//!   reduced to the standard frame by an affine change of coordinates.
//! * [`parallelogram`]: the axis intersection `ν` of a projected parallelogram,
//!   which does not depend on the sample point, and its mirror `μ`.
//! * [`parallelogram_general`]: `ν` for an arbitrary axis and origin.
//!
//! All arithmetic is exact; see [`scalar`].

pub mod check;
pub mod error;
pub mod kernel;
pub mod parallelogram;
pub mod parallelogram_general;
pub mod projection_general;
pub mod projection_one;
pub mod random;
pub mod scalar;
pub mod scene;
pub mod svg;
pub mod text;

pub use error::{GeomError, Result, Violation};
pub use kernel::{
    contains, dist_sq, frame_to_standard, intersect, is_parallel, line_from_points,
    reflect_through, side_of, Direction, Frame, Line, Point,
};
pub use scalar::Scalar;
