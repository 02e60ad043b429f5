//! The double projection point for an arbitrary `Axis` and `Origin`.
//!
//! `Z_S`, `Z_T` now join `Origin` to `S`, `T`, and `Axis` meets `G_S`, `G_T`
//! in `S_Axis`, `T_Axis`. The point `P ∈ L` is characterised by the parallel
//! `Axis_P` through it: the segment from `P` to `Z_T` along `Axis_P` matches
//! the segment from `Origin` to `S_Axis`, and symmetrically for `T`, with
//! `P` on the same side of `Z_T` as `S_Axis` (resp. of `Z_S` as `T_Axis`).
//!
//! The main case is computed by sending `Origin` to `(0,0)` and `Axis` to the
//! x-axis with an affine frame, taking `P_hor` there, and mapping back.

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result, Violation};
use crate::kernel::{
    contains, dist_sq, frame_to_standard, intersect, is_parallel, line_from_points, side_of,
    Direction, Line, Point,
};
use crate::projection_one::{p_hor, PropOneInput};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropTwoInput {
    g_s: Line,
    g_t: Line,
    l: Line,
    axis: Line,
    origin: Point,
}

impl PropTwoInput {
    pub fn new(g_s: Line, g_t: Line, l: Line, axis: Line, origin: Point) -> Result<Self> {
        let violation = if !is_parallel(&g_s, &g_t) {
            Some(Violation::GsGtNotParallel)
        } else if is_parallel(&l, &g_s) {
            Some(Violation::LParallelToGs)
        } else if is_parallel(&axis, &g_s) {
            Some(Violation::AxisParallelToGs)
        } else if axis == l {
            Some(Violation::AxisEqualsL)
        } else if !contains(&axis, &origin) {
            Some(Violation::OriginOffAxis)
        } else if contains(&l, &origin) {
            Some(Violation::OriginOnL)
        } else {
            None
        };
        match violation {
            Some(v) => Err(GeomError::Precondition(v)),
            None => Ok(PropTwoInput {
                g_s,
                g_t,
                l,
                axis,
                origin,
            }),
        }
    }

    pub fn g_s(&self) -> &Line {
        &self.g_s
    }

    pub fn g_t(&self) -> &Line {
        &self.g_t
    }

    pub fn l(&self) -> &Line {
        &self.l
    }

    pub fn axis(&self) -> &Line {
        &self.axis
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn s(&self) -> Point {
        intersect(&self.l, &self.g_s).expect("validated")
    }

    pub fn t(&self) -> Point {
        intersect(&self.l, &self.g_t).expect("validated")
    }

    pub fn s_axis(&self) -> Point {
        intersect(&self.axis, &self.g_s).expect("validated")
    }

    pub fn t_axis(&self) -> Point {
        intersect(&self.axis, &self.g_t).expect("validated")
    }

    pub fn z_s(&self) -> Line {
        line_from_points(&self.origin, &self.s()).expect("origin is off L")
    }

    pub fn z_t(&self) -> Line {
        line_from_points(&self.origin, &self.t()).expect("origin is off L")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PropTwoCase {
    #[serde(rename = "MAIN")]
    Main,
    /// `S_Axis = S`
    #[serde(rename = "S_COINCIDES")]
    SCoincides,
    /// `T_Axis = T`
    #[serde(rename = "T_COINCIDES")]
    TCoincides,
}

impl PropTwoCase {
    pub fn tag(self) -> &'static str {
        match self {
            PropTwoCase::Main => "MAIN",
            PropTwoCase::SCoincides => "S_COINCIDES",
            PropTwoCase::TCoincides => "T_COINCIDES",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropTwoResult {
    pub p: Point,
    pub axis_p: Line,
    /// `Axis_P ∩ Z_S`; absent when `Axis_P = Z_S`.
    pub s_p: Option<Point>,
    /// `Axis_P ∩ Z_T`; absent when `Axis_P = Z_T`.
    pub t_p: Option<Point>,
    pub case: PropTwoCase,
    pub s_axis: Point,
    pub t_axis: Point,
    pub s: Point,
    pub t: Point,
    pub z_s: Line,
    pub z_t: Line,
    pub l: Line,
    pub axis: Line,
    pub origin: Point,
}

/// Named outcomes of every claim about a [`PropTwoResult`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropTwoChecks {
    pub p_on_l: bool,
    pub axis_p_parallel_to_axis: bool,
    pub p_on_axis_p: bool,
    pub dist_s_axis_matches_p_to_t_p: bool,
    pub dist_t_axis_matches_p_to_s_p: bool,
    pub s_axis_same_side_of_z_t: bool,
    pub t_axis_same_side_of_z_s: bool,
    pub case_shape: bool,
}

impl PropTwoChecks {
    pub fn named(&self) -> [(&'static str, bool); 8] {
        [
            ("p_on_l", self.p_on_l),
            ("axis_p_parallel_to_axis", self.axis_p_parallel_to_axis),
            ("p_on_axis_p", self.p_on_axis_p),
            (
                "dist_s_axis_matches_p_to_t_p",
                self.dist_s_axis_matches_p_to_t_p,
            ),
            (
                "dist_t_axis_matches_p_to_s_p",
                self.dist_t_axis_matches_p_to_s_p,
            ),
            ("s_axis_same_side_of_z_t", self.s_axis_same_side_of_z_t),
            ("t_axis_same_side_of_z_s", self.t_axis_same_side_of_z_s),
            ("case_shape", self.case_shape),
        ]
    }

    pub fn all(&self) -> bool {
        self.named().iter().all(|(_, ok)| *ok)
    }
}

/// Strict same-side test: equal signs, and off the dividing line unless the
/// reference point is the centre itself (then the claim degenerates to `0 = 0`).
fn same_side(line: &Line, reference: &Point, p: &Point, origin: &Point) -> bool {
    let a = side_of(line, reference);
    let b = side_of(line, p);
    a == b && (a != 0 || reference == origin)
}

/// Evaluates every claim for the given result.
pub fn verify_p2(r: &PropTwoResult) -> PropTwoChecks {
    let p_on_l = contains(&r.l, &r.p);
    let axis_p_parallel_to_axis = is_parallel(&r.axis_p, &r.axis);
    let p_on_axis_p = contains(&r.axis_p, &r.p);
    let dist_s = match &r.t_p {
        Some(t_p) => dist_sq(&r.s_axis, &r.origin) == dist_sq(&r.p, t_p),
        None => false,
    };
    let dist_t = match &r.s_p {
        Some(s_p) => dist_sq(&r.t_axis, &r.origin) == dist_sq(&r.p, s_p),
        None => false,
    };
    let side_s = same_side(&r.z_t, &r.s_axis, &r.p, &r.origin);
    let side_t = same_side(&r.z_s, &r.t_axis, &r.p, &r.origin);
    match r.case {
        PropTwoCase::Main => PropTwoChecks {
            p_on_l,
            axis_p_parallel_to_axis,
            p_on_axis_p,
            dist_s_axis_matches_p_to_t_p: dist_s,
            dist_t_axis_matches_p_to_s_p: dist_t,
            s_axis_same_side_of_z_t: side_s,
            t_axis_same_side_of_z_s: side_t,
            case_shape: r.axis_p != r.axis,
        },
        PropTwoCase::SCoincides => PropTwoChecks {
            p_on_l,
            axis_p_parallel_to_axis,
            p_on_axis_p,
            dist_s_axis_matches_p_to_t_p: dist_s,
            // only the S-side claims are made in this case
            dist_t_axis_matches_p_to_s_p: true,
            s_axis_same_side_of_z_t: side_of(&r.z_t, &r.s_axis) == side_of(&r.z_t, &r.p),
            t_axis_same_side_of_z_s: true,
            case_shape: r.p == r.s_axis
                && r.p == r.s
                && r.axis_p == r.axis
                && r.axis == r.z_s
                && r.t_p.as_ref() == Some(&r.origin),
        },
        PropTwoCase::TCoincides => PropTwoChecks {
            p_on_l,
            axis_p_parallel_to_axis,
            p_on_axis_p,
            dist_s_axis_matches_p_to_t_p: true,
            dist_t_axis_matches_p_to_s_p: dist_t,
            s_axis_same_side_of_z_t: true,
            t_axis_same_side_of_z_s: side_of(&r.z_s, &r.t_axis) == side_of(&r.z_s, &r.p),
            case_shape: r.p == r.t_axis
                && r.p == r.t
                && r.axis_p == r.axis
                && r.axis == r.z_t
                && r.s_p.as_ref() == Some(&r.origin),
        },
    }
}

/// Assembles the main-case result for an arbitrary candidate on `L`, so the
/// claims can also be evaluated at points other than the constructed one.
pub fn main_case_at(input: &PropTwoInput, candidate: &Point) -> PropTwoResult {
    let z_s = input.z_s();
    let z_t = input.z_t();
    let axis_p = input.axis.parallel_through(candidate);
    PropTwoResult {
        p: candidate.clone(),
        s_p: intersect(&axis_p, &z_s).ok(),
        t_p: intersect(&axis_p, &z_t).ok(),
        axis_p,
        case: PropTwoCase::Main,
        s_axis: input.s_axis(),
        t_axis: input.t_axis(),
        s: input.s(),
        t: input.t(),
        z_s,
        z_t,
        l: input.l.clone(),
        axis: input.axis.clone(),
        origin: input.origin.clone(),
    }
}

/// Constructs `P`, reducing the main case with a frame whose transversal is
/// the direction of `G_S`.
pub fn construct_p(input: &PropTwoInput) -> Result<PropTwoResult> {
    construct_p_via(input, &input.g_s.direction())
}

/// As [`construct_p`], with a caller-chosen transversal for the frame.
pub fn construct_p_via(input: &PropTwoInput, transversal: &Direction) -> Result<PropTwoResult> {
    let s = input.s();
    let t = input.t();
    let s_axis = input.s_axis();
    let t_axis = input.t_axis();

    let result = if s_axis == s {
        PropTwoResult {
            p: s.clone(),
            axis_p: input.axis.clone(),
            s_p: None,
            t_p: Some(input.origin.clone()),
            case: PropTwoCase::SCoincides,
            s_axis,
            t_axis,
            s,
            t,
            z_s: input.z_s(),
            z_t: input.z_t(),
            l: input.l.clone(),
            axis: input.axis.clone(),
            origin: input.origin.clone(),
        }
    } else if t_axis == t {
        PropTwoResult {
            p: t.clone(),
            axis_p: input.axis.clone(),
            s_p: Some(input.origin.clone()),
            t_p: None,
            case: PropTwoCase::TCoincides,
            s_axis,
            t_axis,
            s,
            t,
            z_s: input.z_s(),
            z_t: input.z_t(),
            l: input.l.clone(),
            axis: input.axis.clone(),
            origin: input.origin.clone(),
        }
    } else {
        let frame = frame_to_standard(&input.origin, &input.axis, transversal)?;
        let reduced = PropOneInput::new(
            frame.apply_line(&input.g_s),
            frame.apply_line(&input.g_t),
            frame.apply_line(&input.l),
        )?;
        let p_std = p_hor(&reduced)?.point;
        let p = frame.inverse().apply(&p_std);
        main_case_at(input, &p)
    };

    let checks = verify_p2(&result);
    if let Some((name, _)) = checks.named().iter().find(|(_, ok)| !ok) {
        return Err(GeomError::Inconsistent(format!(
            "constructed point fails check `{name}`"
        )));
    }
    Ok(result)
}
