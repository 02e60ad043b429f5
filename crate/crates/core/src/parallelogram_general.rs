//! `ν` for an arbitrary `Axis` and `Origin`.
//!
//! The offset points are `S = sample − offset·d` and `T = sample + offset·d`
//! where `d` is the canonical direction vector of `Axis` (first nonzero
//! component 1), so the Euclidean offset is `offset·|d|`. Projections and
//! reflections are taken about `Origin`, and `ν` is where the line through
//! `T̄` and `−S̄` meets `Axis`.

use std::fmt;

use num::{Signed, Zero};

use crate::error::{GeomError, Result, Violation};
use crate::kernel::{
    contains, intersect, is_parallel, line_from_points, reflect_through, Direction, Line, Point,
};
use crate::parallelogram::project_through;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropFourInput {
    g: Line,
    p: Line,
    axis: Line,
    origin: Point,
    offset: Scalar,
    sample: Point,
    direction: Direction,
}

impl PropFourInput {
    pub fn new(
        g: Line,
        p: Line,
        axis: Line,
        origin: Point,
        offset: Scalar,
        sample: Point,
    ) -> Result<Self> {
        let direction = axis.direction();
        Self::with_direction(g, p, axis, origin, offset, sample, direction)
    }

    /// As [`PropFourInput::new`] but measuring `offset` along `direction`,
    /// which must be parallel to `axis`. Used to transport a scene through
    /// an affine frame without renormalising the offset vector.
    pub fn with_direction(
        g: Line,
        p: Line,
        axis: Line,
        origin: Point,
        offset: Scalar,
        sample: Point,
        direction: Direction,
    ) -> Result<Self> {
        let violation = if !is_parallel(&g, &p) {
            Some(Violation::GpNotParallel)
        } else if is_parallel(&axis, &g) {
            Some(Violation::AxisParallelToG)
        } else if !contains(&axis, &origin) {
            Some(Violation::OriginOffAxis)
        } else if contains(&g, &origin) {
            Some(Violation::OriginOnG)
        } else if !contains(&g, &sample) {
            Some(Violation::SampleOffG)
        } else if contains(&axis, &sample) {
            Some(Violation::SampleOnAxis)
        } else if !direction.is_parallel(&axis.direction()) {
            Some(Violation::ZeroDirection)
        } else {
            None
        };
        if let Some(v) = violation {
            return Err(GeomError::Precondition(v));
        }
        let input = PropFourInput {
            g,
            p,
            axis,
            origin,
            offset: offset.abs(),
            sample,
            direction,
        };
        for q in [input.s(), input.t()] {
            let ray = Direction::between(&input.origin, &q)?;
            if ray.is_parallel(&input.g.direction()) {
                return Err(GeomError::ParallelProjection);
            }
        }
        Ok(input)
    }

    pub fn g(&self) -> &Line {
        &self.g
    }

    pub fn p(&self) -> &Line {
        &self.p
    }

    pub fn axis(&self) -> &Line {
        &self.axis
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn offset(&self) -> &Scalar {
        &self.offset
    }

    pub fn sample(&self) -> &Point {
        &self.sample
    }

    pub fn direction(&self) -> &Direction {
        &self.direction
    }

    pub fn s(&self) -> Point {
        self.sample.offset(&self.direction, &-self.offset.clone())
    }

    pub fn t(&self) -> Point {
        self.sample.offset(&self.direction, &self.offset)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropFourResult {
    pub s: Point,
    pub t: Point,
    pub s_bar: Point,
    pub t_bar: Point,
    pub neg_s_bar: Point,
    pub neg_t_bar: Point,
    pub connecting_line: Option<Line>,
    pub nu_point: Point,
}

pub fn nu_general(input: &PropFourInput) -> Result<PropFourResult> {
    let s = input.s();
    let t = input.t();
    let s_bar = project_through(&input.origin, &s, &input.p)?;
    let t_bar = project_through(&input.origin, &t, &input.p)?;
    let neg_s_bar = reflect_through(&s_bar, &input.origin);
    let neg_t_bar = reflect_through(&t_bar, &input.origin);
    let (connecting_line, nu_point) = if t_bar == neg_s_bar {
        (None, input.origin.clone())
    } else {
        let line = line_from_points(&t_bar, &neg_s_bar)?;
        let hit = intersect(&line, &input.axis).map_err(|_| {
            GeomError::Inconsistent("parallelogram diagonal is parallel to Axis".into())
        })?;
        (Some(line), hit)
    };
    Ok(PropFourResult {
        s,
        t,
        s_bar,
        t_bar,
        neg_s_bar,
        neg_t_bar,
        connecting_line,
        nu_point,
    })
}

/// A sample that could not be processed, with its position in the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleFailure {
    pub index: usize,
    pub sample: Point,
    pub error: GeomError,
}

impl fmt::Display for SampleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sample #{} {}: {}", self.index, self.sample, self.error)
    }
}

impl std::error::Error for SampleFailure {}

/// True iff every sample yields the same `ν` point.
pub fn nu_general_invariance(
    g: &Line,
    p: &Line,
    axis: &Line,
    origin: &Point,
    offset: &Scalar,
    samples: &[Point],
) -> std::result::Result<bool, SampleFailure> {
    let mut first: Option<Point> = None;
    let mut same = true;
    for (index, sample) in samples.iter().enumerate() {
        let fail = |error| SampleFailure {
            index,
            sample: sample.clone(),
            error,
        };
        let input = PropFourInput::new(
            g.clone(),
            p.clone(),
            axis.clone(),
            origin.clone(),
            offset.clone(),
            sample.clone(),
        )
        .map_err(fail)?;
        let point = nu_general(&input).map_err(fail)?.nu_point;
        match &first {
            None => first = Some(point),
            Some(q) => same &= *q == point,
        }
    }
    Ok(same)
}

/// Points on `g` away from `axis`, stepping the x-coordinate (or y for
/// vertical `g`) by `step` from `start`. Helper for sampling scenes.
pub fn samples_on(
    g: &Line,
    axis: &Line,
    start: &Scalar,
    step: &Scalar,
    count: usize,
) -> Vec<Point> {
    let mut out = Vec::with_capacity(count);
    let mut k = start.clone();
    while out.len() < count {
        let q = if g.is_vertical() {
            Point::new(g.x_intercept().expect("vertical"), k.clone())
        } else {
            let y = (g.c() - g.a() * &k) / g.b();
            Point::new(k.clone(), y)
        };
        if !contains(axis, &q) {
            out.push(q);
        }
        k += step;
        if step.is_zero() {
            break;
        }
    }
    out
}
