//! The parallelogram of central projections and its axis intersection `ν`.
//!
//! For parallel lines `G`, `P` (with `G` missing the origin), a sample
//! `(x̂|ŷ)` on `G` and an offset `ε`, the points `S = (x̂−ε|ŷ)` and
//! `T = (x̂+ε|ŷ)` are projected through the origin onto `P`, giving `S̄`,
//! `T̄`. With their reflections `−S̄`, `−T̄` they form a parallelogram; the
//! line through `T̄` and `−S̄` meets the x-axis in `ν`, which depends only on
//! `ε` and the axis intercepts of `G` and `P`, never on the sample.

use num::{Signed, Zero};

use crate::error::{GeomError, Result, Violation};
use crate::kernel::{
    contains, intersect, is_parallel, line_from_points, reflect_through, Direction, Line, Point,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropThreeInput {
    g: Line,
    p: Line,
    epsilon: Scalar,
    sample: Point,
}

impl PropThreeInput {
    /// Validates the configuration. A negative `epsilon` is replaced by its
    /// absolute value (it only swaps `S` and `T`).
    pub fn new(g: Line, p: Line, epsilon: Scalar, sample: Point) -> Result<Self> {
        if !is_parallel(&g, &p) {
            return Err(GeomError::Precondition(Violation::GpNotParallel));
        }
        if contains(&g, &Point::origin()) {
            return Err(GeomError::Precondition(Violation::OriginOnG));
        }
        if !contains(&g, &sample) {
            return Err(GeomError::Precondition(Violation::SampleOffG));
        }
        if sample.y.is_zero() {
            return Err(GeomError::Precondition(Violation::SampleOnXAxis));
        }
        let input = PropThreeInput {
            g,
            p,
            epsilon: epsilon.abs(),
            sample,
        };
        for q in [input.s(), input.t()] {
            let ray = Direction::between(&Point::origin(), &q)?;
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

    pub fn epsilon(&self) -> &Scalar {
        &self.epsilon
    }

    pub fn sample(&self) -> &Point {
        &self.sample
    }

    pub fn s(&self) -> Point {
        Point::new(&self.sample.x - &self.epsilon, self.sample.y.clone())
    }

    pub fn t(&self) -> Point {
        Point::new(&self.sample.x + &self.epsilon, self.sample.y.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelogramWitness {
    pub s: Point,
    pub t: Point,
    pub s_bar: Point,
    pub t_bar: Point,
    pub neg_s_bar: Point,
    pub neg_t_bar: Point,
    /// Line through `T̄` and `−S̄`; `None` when the parallelogram has
    /// collapsed into the origin (`P` through the origin).
    pub connecting_line: Option<Line>,
    pub nu: Scalar,
}

/// Intersection of `p` with the line through the origin and `q`.
pub fn project_through_origin(q: &Point, p: &Line) -> Result<Point> {
    project_through(&Point::origin(), q, p)
}

/// Intersection of `p` with the line through `centre` and `q`.
pub fn project_through(centre: &Point, q: &Point, p: &Line) -> Result<Point> {
    if q == centre {
        return Err(GeomError::OriginSample);
    }
    let (vx, vy) = q.minus(centre);
    let denom = p.a() * &vx + p.b() * &vy;
    if denom.is_zero() {
        return Err(GeomError::ParallelProjection);
    }
    let k = -p.eval(centre) / denom;
    Ok(Point::new(&centre.x + &k * vx, &centre.y + &k * vy))
}

/// The x-coordinate where `l` meets the x-axis.
fn x_axis_crossing(l: &Line) -> Result<Scalar> {
    intersect(l, &Line::x_axis()).map(|q| q.x).map_err(|_| {
        GeomError::Inconsistent("parallelogram diagonal is parallel to the x-axis".into())
    })
}

/// Runs the geometric construction: project, reflect, connect, intersect.
pub fn parallelogram(input: &PropThreeInput) -> Result<ParallelogramWitness> {
    let s = input.s();
    let t = input.t();
    let s_bar = project_through_origin(&s, &input.p)?;
    let t_bar = project_through_origin(&t, &input.p)?;
    let origin = Point::origin();
    let neg_s_bar = reflect_through(&s_bar, &origin);
    let neg_t_bar = reflect_through(&t_bar, &origin);
    let (connecting_line, nu) = if t_bar == neg_s_bar {
        (None, Scalar::zero())
    } else {
        let line = line_from_points(&t_bar, &neg_s_bar)?;
        let nu = x_axis_crossing(&line)?;
        (Some(line), nu)
    };
    Ok(ParallelogramWitness {
        s,
        t,
        s_bar,
        t_bar,
        neg_s_bar,
        neg_t_bar,
        connecting_line,
        nu,
    })
}

pub fn nu(input: &PropThreeInput) -> Result<Scalar> {
    Ok(parallelogram(input)?.nu)
}

/// Where the line through `S̄` and `−T̄` meets the x-axis; equals `−ν`.
pub fn minus_nu_check(input: &PropThreeInput) -> Result<Scalar> {
    let w = parallelogram(input)?;
    if w.s_bar == w.neg_t_bar {
        return Ok(Scalar::zero());
    }
    x_axis_crossing(&line_from_points(&w.s_bar, &w.neg_t_bar)?)
}

/// `ν = b_P·ε/b_G` for non-vertical `G`, `P`; `ν = p·ε/r` for `G: x = r`,
/// `P: x = p`.
pub fn nu_closed_form(g: &Line, p: &Line, epsilon: &Scalar) -> Result<Scalar> {
    if !is_parallel(g, p) {
        return Err(GeomError::Precondition(Violation::GpNotParallel));
    }
    if g.passes_origin() {
        return Err(GeomError::Precondition(Violation::OriginOnG));
    }
    let eps = epsilon.abs();
    let (num, den) = if g.is_vertical() {
        (p.x_intercept(), g.x_intercept())
    } else {
        (p.y_intercept(), g.y_intercept())
    };
    let (num, den) = (num.expect("parallel"), den.expect("parallel"));
    Ok(num * eps / den)
}

fn slopes_and_intercepts(input: &PropThreeInput) -> Result<(Scalar, Scalar, Scalar)> {
    let unavailable = || GeomError::CaseUnavailable("G and P are vertical");
    let m = input.g.slope().ok_or_else(unavailable)?;
    let b_g = input.g.y_intercept().ok_or_else(unavailable)?;
    let b_p = input.p.y_intercept().ok_or_else(unavailable)?;
    Ok((m, b_g, b_p))
}

/// `S̄ = b_P/(b_G + m·ε)·(x̂−ε|ŷ)`, `T̄ = b_P/(b_G − m·ε)·(x̂+ε|ŷ)`.
pub fn s_bar_t_bar_closed_form(input: &PropThreeInput) -> Result<(Point, Point)> {
    let (m, b_g, b_p) = slopes_and_intercepts(input)?;
    let eps = &input.epsilon;
    let den_s = &b_g + &m * eps;
    let den_t = &b_g - &m * eps;
    if den_s.is_zero() || den_t.is_zero() {
        return Err(GeomError::ParallelProjection);
    }
    Ok((
        input.s().scaled(&(&b_p / den_s)),
        input.t().scaled(&(&b_p / den_t)),
    ))
}

/// The line `y = (m·x̂ + b_G)/(x̂·b_G + m·ε²)·(b_G·x − b_P·ε)`, kept in
/// implicit form so the vertical case `x̂·b_G + m·ε² = 0` needs no branch.
pub fn connecting_line_closed_form(input: &PropThreeInput) -> Result<Line> {
    let (m, b_g, b_p) = slopes_and_intercepts(input)?;
    let eps = &input.epsilon;
    let x_hat = &input.sample.x;
    let y_hat = &m * x_hat + &b_g;
    let a = &y_hat * &b_g;
    let b = -(x_hat * &b_g + &m * eps * eps);
    let c = &y_hat * &b_p * eps;
    Line::new(a, b, c)
}

/// Validated input for the mirrored invariant `μ`: offsets are vertical,
/// `S_v = (x̂|ŷ−ε)`, `T_v = (x̂|ŷ+ε)`, and the diagonal meets the y-axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuInput {
    swapped: PropThreeInput,
}

impl MuInput {
    pub fn new(g: Line, p: Line, epsilon: Scalar, sample: Point) -> Result<Self> {
        let swapped = PropThreeInput::new(g.swapped(), p.swapped(), epsilon, sample.swapped())
            .map_err(|e| match e {
                GeomError::Precondition(Violation::SampleOnXAxis) => {
                    GeomError::Precondition(Violation::SampleOnYAxis)
                }
                other => other,
            })?;
        Ok(MuInput { swapped })
    }

    pub fn g(&self) -> Line {
        self.swapped.g.swapped()
    }

    pub fn p(&self) -> Line {
        self.swapped.p.swapped()
    }

    pub fn epsilon(&self) -> &Scalar {
        &self.swapped.epsilon
    }

    pub fn sample(&self) -> Point {
        self.swapped.sample.swapped()
    }

    /// The same scene with `x` and `y` exchanged, as a `ν` input.
    pub fn as_swapped(&self) -> &PropThreeInput {
        &self.swapped
    }
}

/// Parallelogram witness of the `μ` construction, in original coordinates;
/// its `nu` field holds `μ`, the y-coordinate of the axis crossing.
pub fn mu_parallelogram(input: &MuInput) -> Result<ParallelogramWitness> {
    let w = parallelogram(&input.swapped)?;
    Ok(ParallelogramWitness {
        s: w.s.swapped(),
        t: w.t.swapped(),
        s_bar: w.s_bar.swapped(),
        t_bar: w.t_bar.swapped(),
        neg_s_bar: w.neg_s_bar.swapped(),
        neg_t_bar: w.neg_t_bar.swapped(),
        connecting_line: w.connecting_line.map(|l| l.swapped()),
        nu: w.nu,
    })
}

pub fn mu(input: &MuInput) -> Result<Scalar> {
    nu(&input.swapped)
}
