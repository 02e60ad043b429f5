//! The double projection point on a transversal, in the standard frame.
//!
//! Two parallel lines `G_S`, `G_T` meet a transversal `L` (not through the
//! origin) in `S` and `T`; `Z_S`, `Z_T` join the origin to `S`, `T`. Case A
//! (`G` not horizontal) yields `P_hor`: the point of `L` whose horizontal
//! shifts by the x-intercepts `a_S`, `a_T` land on `Z_T`, `Z_S`. Case B
//! (`G` not vertical) yields `P_ver`, with vertical shifts by the
//! y-intercepts `b_S`, `b_T`.
//!
//! Three independent routes compute the same point:
//! [`p_hor`]/[`p_ver`] solve the four-equation system for `ϱ`, `α`, `β`;
//! [`p_hor_closed_form`]/[`p_ver_closed_form`] evaluate the case-specific
//! formulas in slopes and intercepts; [`oracle_point`] solves the two
//! membership conditions directly.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result, Violation};
use crate::kernel::{
    contains, intersect, is_parallel, line_from_points, solve2, Direction, Line, Point,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisKind {
    X,
    Y,
}

/// Which of the two projection points is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProjectionCase {
    /// Case A: horizontal shifts, point `P_hor`.
    #[serde(rename = "HORIZONTAL_A")]
    HorizontalA,
    /// Case B: vertical shifts, point `P_ver`.
    #[serde(rename = "VERTICAL_B")]
    VerticalB,
}

impl ProjectionCase {
    pub fn tag(self) -> &'static str {
        match self {
            ProjectionCase::HorizontalA => "HORIZONTAL_A",
            ProjectionCase::VerticalB => "VERTICAL_B",
        }
    }
}

/// Validated configuration `(G_S, G_T, L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropOneInput {
    g_s: Line,
    g_t: Line,
    l: Line,
}

impl PropOneInput {
    pub fn new(g_s: Line, g_t: Line, l: Line) -> Result<Self> {
        if !is_parallel(&g_s, &g_t) {
            return Err(GeomError::Precondition(Violation::GsGtNotParallel));
        }
        if is_parallel(&l, &g_s) {
            return Err(GeomError::Parallel);
        }
        if contains(&l, &Point::origin()) {
            return Err(GeomError::OriginOnL);
        }
        Ok(PropOneInput { g_s, g_t, l })
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

    pub fn s(&self) -> Point {
        intersect(&self.l, &self.g_s).expect("validated: L not parallel to G_S")
    }

    pub fn t(&self) -> Point {
        intersect(&self.l, &self.g_t).expect("validated: L not parallel to G_T")
    }

    /// Direction `(w1|w2)` of `L`.
    pub fn w(&self) -> Direction {
        self.l.direction()
    }

    /// Case A applies: `G_S`, `G_T` not parallel to the x-axis.
    pub fn has_horizontal_case(&self) -> bool {
        !self.g_s.is_horizontal()
    }

    /// Case B applies: `G_S`, `G_T` not parallel to the y-axis.
    pub fn has_vertical_case(&self) -> bool {
        !self.g_s.is_vertical()
    }
}

/// Everything the construction determines, enough to re-check all four
/// linear equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropOneWitness {
    pub point: Point,
    pub rho: Scalar,
    pub alpha: Scalar,
    pub beta: Scalar,
    pub s: Point,
    pub t: Point,
    /// `a_S` in case A, `b_S` in case B.
    pub shift_s: Scalar,
    /// `a_T` in case A, `b_T` in case B.
    pub shift_t: Scalar,
    pub case: ProjectionCase,
}

/// `a_S`/`a_T` for [`AxisKind::X`], `b_S`/`b_T` for [`AxisKind::Y`].
pub fn axis_intercept(g: &Line, axis: AxisKind) -> Result<Scalar> {
    match axis {
        AxisKind::X => g.x_intercept().ok_or(GeomError::CaseUnavailable(
            "the line is parallel to the x-axis",
        )),
        AxisKind::Y => g.y_intercept().ok_or(GeomError::CaseUnavailable(
            "the line is parallel to the y-axis",
        )),
    }
}

fn checked_div(n: Scalar, d: &Scalar, what: &'static str) -> Result<Scalar> {
    if d.is_zero() {
        Err(GeomError::Singular(what))
    } else {
        Ok(n / d)
    }
}

/// The two quotients for `ϱ` obtained from equations (1),(2) and (3),(4).
pub fn rho_pair(input: &PropOneInput) -> Result<(Scalar, Scalar)> {
    let a_s = axis_intercept(&input.g_s, AxisKind::X)?;
    let a_t = axis_intercept(&input.g_t, AxisKind::X)?;
    let (s, t, w) = (input.s(), input.t(), input.w());
    let rho1 = checked_div(
        &s.y * &t.x - &s.x * &t.y + &a_s * &t.y,
        &(&w.dx * &t.y - &w.dy * &t.x),
        "w1·y_T − w2·x_T vanishes",
    )?;
    let rho2 = checked_div(
        &s.y * &a_t,
        &(&w.dx * &s.y - &w.dy * &s.x),
        "w1·y_S − w2·x_S vanishes",
    )?;
    Ok((rho1, rho2))
}

/// The two quotients for `ϱ̃` (vertical case).
pub fn rho_tilde_pair(input: &PropOneInput) -> Result<(Scalar, Scalar)> {
    let b_s = axis_intercept(&input.g_s, AxisKind::Y)?;
    let b_t = axis_intercept(&input.g_t, AxisKind::Y)?;
    let (s, t, w) = (input.s(), input.t(), input.w());
    let rho1 = checked_div(
        &t.y * &s.x - &t.x * &s.y + &b_s * &t.x,
        &(&w.dy * &t.x - &w.dx * &t.y),
        "w2·x_T − w1·y_T vanishes",
    )?;
    let rho2 = checked_div(
        &s.x * &b_t,
        &(&w.dy * &s.x - &w.dx * &s.y),
        "w2·x_S − w1·y_S vanishes",
    )?;
    Ok((rho1, rho2))
}

/// Coefficient `k` with `v = k·q`, for `v` known to be parallel to nonzero `q`.
fn ratio_along(v: (Scalar, Scalar), q: &Point) -> Scalar {
    let norm = &q.x * &q.x + &q.y * &q.y;
    (v.0 * &q.x + v.1 * &q.y) / norm
}

fn build_witness(
    input: &PropOneInput,
    rho: Scalar,
    shift_s: Scalar,
    shift_t: Scalar,
    case: ProjectionCase,
) -> PropOneWitness {
    let (s, t, w) = (input.s(), input.t(), input.w());
    let point = s.offset(&w, &rho);
    let shifted = |k: &Scalar| match case {
        ProjectionCase::HorizontalA => (&point.x - k, point.y.clone()),
        ProjectionCase::VerticalB => (point.x.clone(), &point.y - k),
    };
    let alpha = ratio_along(shifted(&shift_s), &t);
    let beta = ratio_along(shifted(&shift_t), &s);
    PropOneWitness {
        point,
        rho,
        alpha,
        beta,
        s,
        t,
        shift_s,
        shift_t,
        case,
    }
}

fn agreed(pair: (Scalar, Scalar)) -> Result<Scalar> {
    if pair.0 != pair.1 {
        return Err(GeomError::Inconsistent(format!(
            "the two quotients disagree: {} vs {}",
            pair.0, pair.1
        )));
    }
    Ok(pair.0)
}

/// `P_hor = S + ϱ·w`.
pub fn p_hor(input: &PropOneInput) -> Result<PropOneWitness> {
    let rho = agreed(rho_pair(input)?)?;
    let a_s = axis_intercept(&input.g_s, AxisKind::X)?;
    let a_t = axis_intercept(&input.g_t, AxisKind::X)?;
    Ok(build_witness(
        input,
        rho,
        a_s,
        a_t,
        ProjectionCase::HorizontalA,
    ))
}

/// `P_ver = S + ϱ̃·w`.
pub fn p_ver(input: &PropOneInput) -> Result<PropOneWitness> {
    let rho = agreed(rho_tilde_pair(input)?)?;
    let b_s = axis_intercept(&input.g_s, AxisKind::Y)?;
    let b_t = axis_intercept(&input.g_t, AxisKind::Y)?;
    Ok(build_witness(
        input,
        rho,
        b_s,
        b_t,
        ProjectionCase::VerticalB,
    ))
}

pub fn projection_point(input: &PropOneInput, case: ProjectionCase) -> Result<PropOneWitness> {
    match case {
        ProjectionCase::HorizontalA => p_hor(input),
        ProjectionCase::VerticalB => p_ver(input),
    }
}

/// Checks all four linear equations of the witness exactly, plus `P ∈ L`.
pub fn witness_holds(input: &PropOneInput, w: &PropOneWitness) -> bool {
    let dir = input.w();
    let (s, t) = (&w.s, &w.t);
    let px = &s.x + &w.rho * &dir.dx;
    let py = &s.y + &w.rho * &dir.dy;
    let on_l = contains(&input.l, &w.point) && px == w.point.x && py == w.point.y;
    let eqs = match w.case {
        ProjectionCase::HorizontalA => {
            &px - &w.shift_s == &w.alpha * &t.x
                && py == &w.alpha * &t.y
                && &px - &w.shift_t == &w.beta * &s.x
                && py == &w.beta * &s.y
        }
        ProjectionCase::VerticalB => {
            &py - &w.shift_s == &w.alpha * &t.y
                && px == &w.alpha * &t.x
                && &py - &w.shift_t == &w.beta * &s.y
                && px == &w.beta * &s.x
        }
    };
    on_l && eqs
}

/// True iff `candidate` is on `L` and its two shifted copies lie on `Z_T`
/// and `Z_S` respectively.
pub fn satisfies_definition(
    input: &PropOneInput,
    case: ProjectionCase,
    candidate: &Point,
) -> Result<bool> {
    let origin = Point::origin();
    let z_s = line_from_points(&origin, &input.s())?;
    let z_t = line_from_points(&origin, &input.t())?;
    let (shift_s, shift_t) = match case {
        ProjectionCase::HorizontalA => (
            Point::new(axis_intercept(&input.g_s, AxisKind::X)?, Scalar::zero()),
            Point::new(axis_intercept(&input.g_t, AxisKind::X)?, Scalar::zero()),
        ),
        ProjectionCase::VerticalB => (
            Point::new(Scalar::zero(), axis_intercept(&input.g_s, AxisKind::Y)?),
            Point::new(Scalar::zero(), axis_intercept(&input.g_t, AxisKind::Y)?),
        ),
    };
    let shifted = |k: &Point| Point::new(&candidate.x - &k.x, &candidate.y - &k.y);
    Ok(contains(&input.l, candidate)
        && contains(&z_t, &shifted(&shift_s))
        && contains(&z_s, &shifted(&shift_t)))
}

/// Which explicit formula applies, by orientation of `G` then of `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedFormBranch {
    /// Neither `G` nor `L` parallel to an axis.
    General,
    /// `G` in general position, `L: y = b_L`.
    LHorizontal,
    /// `G` in general position, `L: x = a_L`.
    LVertical,
    /// `G` horizontal, `L` in general position (case B only).
    GHorizontal,
    /// `G` horizontal, `L` vertical (case B only).
    GHorizontalLVertical,
    /// `G` vertical, `L` in general position (case A only).
    GVertical,
    /// `G` vertical, `L` horizontal (case A only).
    GVerticalLHorizontal,
}

pub fn closed_form_branch(input: &PropOneInput, case: ProjectionCase) -> Result<ClosedFormBranch> {
    let g = &input.g_s;
    let l = &input.l;
    use ClosedFormBranch::*;
    let branch = if g.is_horizontal() {
        if case == ProjectionCase::HorizontalA {
            return Err(GeomError::CaseUnavailable(
                "G_S, G_T are horizontal, so P_hor does not exist",
            ));
        }
        if l.is_vertical() {
            GHorizontalLVertical
        } else {
            GHorizontal
        }
    } else if g.is_vertical() {
        if case == ProjectionCase::VerticalB {
            return Err(GeomError::CaseUnavailable(
                "G_S, G_T are vertical, so P_ver does not exist",
            ));
        }
        if l.is_horizontal() {
            GVerticalLHorizontal
        } else {
            GVertical
        }
    } else if l.is_horizontal() {
        LHorizontal
    } else if l.is_vertical() {
        LVertical
    } else {
        General
    };
    Ok(branch)
}

/// Slope and intercept data read off the three lines.
struct Params {
    m: Scalar,
    b_s: Scalar,
    b_t: Scalar,
    m_l: Scalar,
    b_l: Scalar,
}

fn slope_params(input: &PropOneInput) -> Params {
    let zero = Scalar::zero;
    Params {
        m: input.g_s.slope().unwrap_or_else(zero),
        b_s: input.g_s.y_intercept().unwrap_or_else(zero),
        b_t: input.g_t.y_intercept().unwrap_or_else(zero),
        m_l: input.l.slope().unwrap_or_else(zero),
        b_l: input.l.y_intercept().unwrap_or_else(zero),
    }
}

const SINGULAR_CF: &str = "closed-form denominator vanishes";

/// `P_hor` from the explicit formula for its orientation branch.
pub fn p_hor_closed_form(input: &PropOneInput) -> Result<Point> {
    let branch = closed_form_branch(input, ProjectionCase::HorizontalA)?;
    let Params {
        m,
        b_s,
        b_t,
        m_l,
        b_l,
    } = slope_params(input);
    use ClosedFormBranch::*;
    let point = match branch {
        General => {
            let den = &b_l * &m * (&m - &m_l);
            let x = checked_div(
                &b_l * &b_l * &m + &b_s * &b_t * &m_l - &m * &b_l * (&b_s + &b_t),
                &den,
                SINGULAR_CF,
            )?;
            let y = checked_div(
                &b_l * &b_l * &m * &m + &b_s * &b_t * &m_l * &m_l
                    - &m * &m_l * &b_l * (&b_s + &b_t),
                &den,
                SINGULAR_CF,
            )?;
            Point::new(x, y)
        }
        LHorizontal => Point::new(checked_div(&b_l - &b_s - &b_t, &m, SINGULAR_CF)?, b_l),
        LVertical => {
            let a_l = input.l.x_intercept().expect("vertical L");
            let tail = checked_div(&b_s * &b_t, &(&a_l * &m), SINGULAR_CF)?;
            let y = &m * &a_l + &b_s + &b_t + tail;
            Point::new(a_l, y)
        }
        GVertical => {
            let a_s = axis_intercept(&input.g_s, AxisKind::X)?;
            let a_t = axis_intercept(&input.g_t, AxisKind::X)?;
            let x = checked_div(&b_l * (&a_s + &a_t) + &m_l * &a_s * &a_t, &b_l, SINGULAR_CF)?;
            let y = &m_l * &x + &b_l;
            Point::new(x, y)
        }
        GVerticalLHorizontal => {
            let a_s = axis_intercept(&input.g_s, AxisKind::X)?;
            let a_t = axis_intercept(&input.g_t, AxisKind::X)?;
            Point::new(a_s + a_t, b_l)
        }
        GHorizontal | GHorizontalLVertical => unreachable!("rejected by closed_form_branch"),
    };
    Ok(point)
}

/// `P_ver` from the explicit formula for its orientation branch.
pub fn p_ver_closed_form(input: &PropOneInput) -> Result<Point> {
    let branch = closed_form_branch(input, ProjectionCase::VerticalB)?;
    let Params {
        m,
        b_s,
        b_t,
        m_l,
        b_l,
    } = slope_params(input);
    use ClosedFormBranch::*;
    let point = match branch {
        General => {
            let den = &b_l * (&m - &m_l);
            let x = checked_div((&b_l - &b_t) * (&b_l - &b_s), &den, SINGULAR_CF)?;
            let y = checked_div(
                &m_l * (&b_s * &b_t - &b_l * &b_s - &b_l * &b_t) + &b_l * &b_l * &m,
                &den,
                SINGULAR_CF,
            )?;
            Point::new(x, y)
        }
        LHorizontal => {
            let x = checked_div((&b_l - &b_s) * (&b_l - &b_t), &(&b_l * &m), SINGULAR_CF)?;
            Point::new(x, b_l)
        }
        LVertical => {
            let a_l = input.l.x_intercept().expect("vertical L");
            let y = &m * &a_l + &b_t + &b_s;
            Point::new(a_l, y)
        }
        GHorizontal => {
            let x = checked_div((&b_t - &b_l) * (&b_l - &b_s), &(&b_l * &m_l), SINGULAR_CF)?;
            let y = checked_div(&b_l * &b_s + &b_l * &b_t - &b_s * &b_t, &b_l, SINGULAR_CF)?;
            Point::new(x, y)
        }
        GHorizontalLVertical => {
            let a_l = input.l.x_intercept().expect("vertical L");
            Point::new(a_l, b_s + b_t)
        }
        GVertical | GVerticalLHorizontal => unreachable!("rejected by closed_form_branch"),
    };
    Ok(point)
}

pub fn closed_form_point(input: &PropOneInput, case: ProjectionCase) -> Result<Point> {
    match case {
        ProjectionCase::HorizontalA => p_hor_closed_form(input),
        ProjectionCase::VerticalB => p_ver_closed_form(input),
    }
}

/// Solves the two membership conditions of the definition directly.
///
/// With `P(t) = B + t·w` on `L`, the condition `P(t) − shift_S ∈ Z_T` is the
/// 2×2 system `P(t) − shift_S = α·T` in `(t, α)`, and likewise
/// `P(t) − shift_T = β·S` in `(t, β)`. Both must give the same `t`.
pub fn oracle_point(input: &PropOneInput, case: ProjectionCase) -> Result<Point> {
    let (shift_s, shift_t) = match case {
        ProjectionCase::HorizontalA => {
            let x_axis = Line::x_axis();
            let unavailable = |_| GeomError::CaseUnavailable("G_S, G_T are parallel to the x-axis");
            (
                intersect(&input.g_s, &x_axis).map_err(unavailable)?,
                intersect(&input.g_t, &x_axis).map_err(unavailable)?,
            )
        }
        ProjectionCase::VerticalB => {
            let y_axis = Line::y_axis();
            let unavailable = |_| GeomError::CaseUnavailable("G_S, G_T are parallel to the y-axis");
            (
                intersect(&input.g_s, &y_axis).map_err(unavailable)?,
                intersect(&input.g_t, &y_axis).map_err(unavailable)?,
            )
        }
    };
    let base = input.l.anchor();
    let w = input.l.direction();
    let solve_t = |shift: &Point, ray: &Point| -> Result<Scalar> {
        let (t, _coef) = solve2(
            &w.dx,
            &-ray.x.clone(),
            &w.dy,
            &-ray.y.clone(),
            &(&shift.x - &base.x),
            &(&shift.y - &base.y),
        )
        .ok_or(GeomError::Singular("membership system is degenerate"))?;
        Ok(t)
    };
    let t_first = solve_t(&shift_s, &input.t())?;
    let t_second = solve_t(&shift_t, &input.s())?;
    if t_first != t_second {
        return Err(GeomError::Inconsistent(format!(
            "membership conditions select different points (t = {t_first} vs {t_second})"
        )));
    }
    Ok(base.offset(&w, &t_first))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Line;
    use crate::scalar::{int, rat};

    fn picture_one() -> PropOneInput {
        PropOneInput::new(
            Line::slope_intercept(int(2), int(4)),
            Line::slope_intercept(int(2), int(2)),
            Line::horizontal(int(1)),
        )
        .unwrap()
    }

    #[test]
    fn intercepts_of_picture_one() {
        let i = picture_one();
        assert_eq!(axis_intercept(i.g_s(), AxisKind::X).unwrap(), int(-2));
        assert_eq!(axis_intercept(i.g_t(), AxisKind::X).unwrap(), int(-1));
        assert_eq!(axis_intercept(i.g_s(), AxisKind::Y).unwrap(), int(4));
        assert_eq!(axis_intercept(i.g_t(), AxisKind::Y).unwrap(), int(2));
        assert_eq!(
            axis_intercept(&Line::vertical(int(5)), AxisKind::X).unwrap(),
            int(5)
        );
        assert!(matches!(
            axis_intercept(&Line::vertical(int(5)), AxisKind::Y),
            Err(GeomError::CaseUnavailable(_))
        ));
    }

    #[test]
    fn picture_one_points() {
        let i = picture_one();
        assert_eq!(i.s(), Point::new(rat(-3, 2), int(1)));
        assert_eq!(i.t(), Point::new(rat(-1, 2), int(1)));
        let (r1, r2) = rho_pair(&i).unwrap();
        assert_eq!(r1, r2);
        let (t1, t2) = rho_tilde_pair(&i).unwrap();
        assert_eq!(t1, t2);

        let hor = p_hor(&i).unwrap();
        assert_eq!(hor.point, Point::new(rat(-5, 2), int(1)));
        assert!(witness_holds(&i, &hor));
        let ver = p_ver(&i).unwrap();
        assert_eq!(ver.point, Point::new(rat(3, 2), int(1)));
        assert!(witness_holds(&i, &ver));

        assert_eq!(p_hor_closed_form(&i).unwrap(), hor.point);
        assert_eq!(p_ver_closed_form(&i).unwrap(), ver.point);
        assert_eq!(
            oracle_point(&i, ProjectionCase::HorizontalA).unwrap(),
            hor.point
        );
        assert_eq!(
            oracle_point(&i, ProjectionCase::VerticalB).unwrap(),
            ver.point
        );
    }

    #[test]
    fn statement_conditions_hold_for_picture_one() {
        let i = picture_one();
        let z_s = line_from_points(&Point::origin(), &i.s()).unwrap();
        let z_t = line_from_points(&Point::origin(), &i.t()).unwrap();
        assert_eq!(z_s, Line::slope_intercept(rat(-2, 3), int(0)));
        assert_eq!(z_t, Line::slope_intercept(int(-2), int(0)));
        let p = p_hor(&i).unwrap().point;
        assert!(contains(&z_t, &Point::new(&p.x - int(-2), p.y.clone())));
        assert!(contains(&z_s, &Point::new(&p.x - int(-1), p.y.clone())));
        let q = p_ver(&i).unwrap().point;
        assert!(contains(&z_t, &Point::new(q.x.clone(), &q.y - int(4))));
        assert!(contains(&z_s, &Point::new(q.x.clone(), &q.y - int(2))));
    }

    #[test]
    fn vertical_g_with_horizontal_l() {
        let i = PropOneInput::new(
            Line::vertical(int(-2)),
            Line::vertical(int(-1)),
            Line::horizontal(int(1)),
        )
        .unwrap();
        assert_eq!(
            closed_form_branch(&i, ProjectionCase::HorizontalA).unwrap(),
            ClosedFormBranch::GVerticalLHorizontal
        );
        let expect = Point::from_ints(-3, 1);
        assert_eq!(p_hor_closed_form(&i).unwrap(), expect);
        assert_eq!(
            oracle_point(&i, ProjectionCase::HorizontalA).unwrap(),
            expect
        );
        assert_eq!(p_hor(&i).unwrap().point, expect);
        assert!(matches!(p_ver(&i), Err(GeomError::CaseUnavailable(_))));
        assert!(matches!(
            p_ver_closed_form(&i),
            Err(GeomError::CaseUnavailable(_))
        ));
    }

    #[test]
    fn horizontal_g_with_vertical_l() {
        let i = PropOneInput::new(
            Line::horizontal(int(4)),
            Line::horizontal(int(2)),
            Line::vertical(int(3)),
        )
        .unwrap();
        let expect = Point::from_ints(3, 6);
        assert_eq!(p_ver_closed_form(&i).unwrap(), expect);
        assert_eq!(oracle_point(&i, ProjectionCase::VerticalB).unwrap(), expect);
        assert_eq!(p_ver(&i).unwrap().point, expect);
        assert!(matches!(p_hor(&i), Err(GeomError::CaseUnavailable(_))));
        assert!(matches!(
            p_hor_closed_form(&i),
            Err(GeomError::CaseUnavailable(_))
        ));
    }

    #[test]
    fn coincident_g_lines() {
        let g = Line::slope_intercept(int(3), int(-2));
        let i = PropOneInput::new(g.clone(), g, Line::slope_intercept(rat(-1, 2), int(5))).unwrap();
        for case in [ProjectionCase::HorizontalA, ProjectionCase::VerticalB] {
            let w = projection_point(&i, case).unwrap();
            assert!(witness_holds(&i, &w));
            assert_eq!(closed_form_point(&i, case).unwrap(), w.point);
            assert_eq!(oracle_point(&i, case).unwrap(), w.point);
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        let gs = Line::slope_intercept(int(2), int(4));
        let gt = Line::slope_intercept(int(2), int(2));
        assert_eq!(
            PropOneInput::new(
                gs.clone(),
                gt.clone(),
                Line::slope_intercept(int(1), int(0))
            ),
            Err(GeomError::OriginOnL)
        );
        assert_eq!(
            PropOneInput::new(
                gs.clone(),
                gt.clone(),
                Line::slope_intercept(int(2), int(7))
            ),
            Err(GeomError::Parallel)
        );
        assert_eq!(
            PropOneInput::new(
                gs,
                Line::slope_intercept(int(3), int(2)),
                Line::horizontal(int(1))
            ),
            Err(GeomError::Precondition(Violation::GsGtNotParallel))
        );
    }
}
