//! Points, lines, directions and affine frames over exact rationals, plus the
//! incidence predicates every construction is built from.

use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{GeomError, Result, Violation};
use crate::scalar::{format_scalar, int, sign, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Point::new(Scalar::zero(), Scalar::zero())
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `self + k·d`
    pub fn offset(&self, d: &Direction, k: &Scalar) -> Point {
        Point::new(&self.x + k * &d.dx, &self.y + k * &d.dy)
    }

    pub fn scaled(&self, k: &Scalar) -> Point {
        Point::new(k * &self.x, k * &self.y)
    }

    /// Componentwise `self - other`, as a raw pair.
    pub fn minus(&self, other: &Point) -> (Scalar, Scalar) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = Scalar::new(1.into(), 2.into());
        Point::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    /// Swap the coordinates: `(x|y) -> (y|x)`.
    pub fn swapped(&self) -> Point {
        Point::new(self.y.clone(), self.x.clone())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            format_scalar(&self.x),
            format_scalar(&self.y)
        )
    }
}

/// A nonzero direction vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Direction {
    pub dx: Scalar,
    pub dy: Scalar,
}

impl Direction {
    pub fn new(dx: Scalar, dy: Scalar) -> Result<Self> {
        if dx.is_zero() && dy.is_zero() {
            return Err(GeomError::Precondition(Violation::ZeroDirection));
        }
        Ok(Direction { dx, dy })
    }

    pub fn from_ints(dx: i64, dy: i64) -> Result<Self> {
        Direction::new(int(dx), int(dy))
    }

    pub fn between(from: &Point, to: &Point) -> Result<Self> {
        let (dx, dy) = to.minus(from);
        Direction::new(dx, dy)
    }

    /// Scaled so the first nonzero component is 1.
    pub fn canonical(&self) -> Direction {
        let k = if self.dx.is_zero() {
            &self.dy
        } else {
            &self.dx
        };
        Direction {
            dx: &self.dx / k,
            dy: &self.dy / k,
        }
    }

    /// Cross product `self × other`; zero iff parallel.
    pub fn cross(&self, other: &Direction) -> Scalar {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    pub fn is_parallel(&self, other: &Direction) -> bool {
        self.cross(other).is_zero()
    }
}

/// The locus `a·x + b·y = c`, always stored in canonical form: the first
/// nonzero of `(a, b)` is 1. Structural equality is therefore line equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    a: Scalar,
    b: Scalar,
    c: Scalar,
}

impl Line {
    /// Builds and canonicalizes `a·x + b·y = c`. Fails if `a = b = 0`.
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(GeomError::Precondition(Violation::ZeroDirection));
        };
        Ok(Line {
            a: a / &lead,
            b: b / &lead,
            c: c / &lead,
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Line::new(int(a), int(b), int(c))
    }

    /// `y = m·x + k`
    pub fn slope_intercept(m: Scalar, k: Scalar) -> Line {
        Line::new(-m, Scalar::one(), k).expect("b = 1")
    }

    /// `x = k`
    pub fn vertical(k: Scalar) -> Line {
        Line::new(Scalar::one(), Scalar::zero(), k).expect("a = 1")
    }

    /// `y = k`
    pub fn horizontal(k: Scalar) -> Line {
        Line::new(Scalar::zero(), Scalar::one(), k).expect("b = 1")
    }

    pub fn x_axis() -> Line {
        Line::horizontal(Scalar::zero())
    }

    pub fn y_axis() -> Line {
        Line::vertical(Scalar::zero())
    }

    /// Line through `p` with direction `d`.
    pub fn through(p: &Point, d: &Direction) -> Line {
        let a = d.dy.clone();
        let b = -d.dx.clone();
        let c = &a * &p.x + &b * &p.y;
        Line::new(a, b, c).expect("direction is nonzero")
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    /// `a·x + b·y − c` at `p`.
    pub fn eval(&self, p: &Point) -> Scalar {
        &self.a * &p.x + &self.b * &p.y - &self.c
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.is_zero()
    }

    /// Canonical direction vector, first nonzero component 1.
    pub fn direction(&self) -> Direction {
        Direction {
            dx: self.b.clone(),
            dy: -self.a.clone(),
        }
        .canonical()
    }

    /// Slope `m` of a non-vertical line.
    pub fn slope(&self) -> Option<Scalar> {
        (!self.is_vertical()).then(|| -&self.a / &self.b)
    }

    /// Intersection with the y-axis, for non-vertical lines.
    pub fn y_intercept(&self) -> Option<Scalar> {
        (!self.is_vertical()).then(|| &self.c / &self.b)
    }

    /// Intersection with the x-axis, for non-horizontal lines.
    pub fn x_intercept(&self) -> Option<Scalar> {
        (!self.is_horizontal()).then(|| &self.c / &self.a)
    }

    pub fn passes_origin(&self) -> bool {
        self.c.is_zero()
    }

    /// Some point on the line.
    pub fn anchor(&self) -> Point {
        if self.is_vertical() {
            Point::new(&self.c / &self.a, Scalar::zero())
        } else {
            Point::new(Scalar::zero(), &self.c / &self.b)
        }
    }

    /// Parallel line through `p`.
    pub fn parallel_through(&self, p: &Point) -> Line {
        Line::through(p, &self.direction())
    }

    pub fn swapped(&self) -> Line {
        Line::new(self.b.clone(), self.a.clone(), self.c.clone()).expect("nonzero normal")
    }
}

fn fmt_coeff(f: &mut fmt::Formatter<'_>, k: &Scalar) -> fmt::Result {
    f.write_str(&format_scalar(k))
}

fn fmt_signed_tail(f: &mut fmt::Formatter<'_>, k: &Scalar) -> fmt::Result {
    if k.is_negative() {
        write!(f, "-{}", format_scalar(&-k.clone()))
    } else {
        write!(f, "+{}", format_scalar(k))
    }
}

/// Prints `y=<r>`, `x=<r>` or `y=<r>x±<r>`; parses back to the same line.
impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vertical() {
            f.write_str("x=")?;
            return fmt_coeff(f, &self.c);
        }
        let m = self.slope().expect("non-vertical");
        let k = self.y_intercept().expect("non-vertical");
        f.write_str("y=")?;
        if m.is_zero() {
            return fmt_coeff(f, &k);
        }
        if m.is_one() {
            f.write_str("x")?;
        } else if (-m.clone()).is_one() {
            f.write_str("-x")?;
        } else {
            fmt_coeff(f, &m)?;
            f.write_str("x")?;
        }
        if k.is_zero() {
            return Ok(());
        }
        fmt_signed_tail(f, &k)
    }
}

pub fn line_from_points(p: &Point, q: &Point) -> Result<Line> {
    if p == q {
        return Err(GeomError::Coincident);
    }
    let d = Direction::between(p, q)?;
    Ok(Line::through(p, &d))
}

pub fn is_parallel(l1: &Line, l2: &Line) -> bool {
    (&l1.a * &l2.b - &l2.a * &l1.b).is_zero()
}

pub fn intersect(l1: &Line, l2: &Line) -> Result<Point> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(GeomError::Parallel);
    }
    let x = (&l1.c * &l2.b - &l2.c * &l1.b) / &det;
    let y = (&l1.a * &l2.c - &l2.a * &l1.c) / &det;
    Ok(Point::new(x, y))
}

pub fn contains(l: &Line, p: &Point) -> bool {
    l.eval(p).is_zero()
}

/// Sign of `a·x + b·y − c` for the canonical triple of `l`.
pub fn side_of(l: &Line, p: &Point) -> i8 {
    sign(&l.eval(p))
}

/// `2·center − p`
pub fn reflect_through(p: &Point, center: &Point) -> Point {
    let two = int(2);
    Point::new(&two * &center.x - &p.x, &two * &center.y - &p.y)
}

pub fn dist_sq(p: &Point, q: &Point) -> Scalar {
    let (dx, dy) = p.minus(q);
    &dx * &dx + &dy * &dy
}

/// Solves `[[a11, a12], [a21, a22]]·(u, v) = (r1, r2)` by Cramer's rule.
pub fn solve2(
    a11: &Scalar,
    a12: &Scalar,
    a21: &Scalar,
    a22: &Scalar,
    r1: &Scalar,
    r2: &Scalar,
) -> Option<(Scalar, Scalar)> {
    let det = a11 * a22 - a12 * a21;
    if det.is_zero() {
        return None;
    }
    let u = (r1 * a22 - a12 * r2) / &det;
    let v = (a11 * r2 - r1 * a21) / &det;
    Some((u, v))
}

/// Invertible affine map `p ↦ linear·p + translation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    linear: [[Scalar; 2]; 2],
    translation: (Scalar, Scalar),
}

impl Frame {
    pub fn new(linear: [[Scalar; 2]; 2], translation: (Scalar, Scalar)) -> Result<Self> {
        let f = Frame {
            linear,
            translation,
        };
        if f.determinant().is_zero() {
            return Err(GeomError::Precondition(Violation::SingularFrame));
        }
        Ok(f)
    }

    pub fn identity() -> Self {
        Frame {
            linear: [[int(1), int(0)], [int(0), int(1)]],
            translation: (int(0), int(0)),
        }
    }

    /// `(x|y) -> (y|x)`
    pub fn swap() -> Self {
        Frame {
            linear: [[int(0), int(1)], [int(1), int(0)]],
            translation: (int(0), int(0)),
        }
    }

    pub fn linear(&self) -> &[[Scalar; 2]; 2] {
        &self.linear
    }

    pub fn translation(&self) -> &(Scalar, Scalar) {
        &self.translation
    }

    pub fn determinant(&self) -> Scalar {
        let m = &self.linear;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    fn apply_linear(&self, x: &Scalar, y: &Scalar) -> (Scalar, Scalar) {
        let m = &self.linear;
        (&m[0][0] * x + &m[0][1] * y, &m[1][0] * x + &m[1][1] * y)
    }

    pub fn apply(&self, p: &Point) -> Point {
        let (x, y) = self.apply_linear(&p.x, &p.y);
        Point::new(x + &self.translation.0, y + &self.translation.1)
    }

    pub fn apply_direction(&self, d: &Direction) -> Direction {
        let (dx, dy) = self.apply_linear(&d.dx, &d.dy);
        Direction { dx, dy }
    }

    /// Image of the line as a point set.
    pub fn apply_line(&self, l: &Line) -> Line {
        let p = self.apply(&l.anchor());
        let d = self.apply_direction(&l.direction());
        Line::through(&p, &d)
    }

    pub fn inverse(&self) -> Frame {
        let m = &self.linear;
        let det = self.determinant();
        let inv = [
            [&m[1][1] / &det, -&m[0][1] / &det],
            [-&m[1][0] / &det, &m[0][0] / &det],
        ];
        let (tx, ty) = &self.translation;
        let t = (
            -(&inv[0][0] * tx + &inv[0][1] * ty),
            -(&inv[1][0] * tx + &inv[1][1] * ty),
        );
        Frame {
            linear: inv,
            translation: t,
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Frame) -> Frame {
        let a = &self.linear;
        let b = &other.linear;
        let linear = [
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ];
        let (tx, ty) = self.apply_linear(&other.translation.0, &other.translation.1);
        Frame {
            linear,
            translation: (tx + &self.translation.0, ty + &self.translation.1),
        }
    }
}

/// Affine frame sending `origin` to `(0,0)`, the canonical direction of
/// `axis` to `(1,0)` and `transversal` to `(0,1)`. Shear and scale only, so
/// every coefficient stays rational.
pub fn frame_to_standard(origin: &Point, axis: &Line, transversal: &Direction) -> Result<Frame> {
    if !contains(axis, origin) {
        return Err(GeomError::OriginOffAxis);
    }
    let d = axis.direction();
    let det = d.cross(transversal);
    if det.is_zero() {
        return Err(GeomError::DegenerateTransversal);
    }
    // inverse of the column matrix [d | transversal]
    let linear = [
        [&transversal.dy / &det, -&transversal.dx / &det],
        [-&d.dy / &det, &d.dx / &det],
    ];
    let t = (
        -(&linear[0][0] * &origin.x + &linear[0][1] * &origin.y),
        -(&linear[1][0] * &origin.x + &linear[1][1] * &origin.y),
    );
    Frame::new(linear, t)
}
