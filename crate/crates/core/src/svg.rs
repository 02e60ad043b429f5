//! Standalone SVG 1.1 figures of a construction.
//!
//! Geometry stays exact until the final coordinate transform; only then are
//! pixel coordinates printed with [`PRECISION`] significant digits. Lines are
//! clipped to the viewport rectangle with rational arithmetic, and every
//! marker carries its exact coordinates in `data-x`/`data-y`.

use std::fmt::Write as _;

use num::Zero;

use crate::kernel::{intersect, line_from_points, Line, Point};
use crate::parallelogram::ParallelogramWitness;
use crate::parallelogram_general::nu_general;
use crate::projection_general::construct_p;
use crate::projection_one::{p_hor, p_ver};
use crate::scalar::{format_decimal, int, Scalar};
use crate::scene::{
    mu_input, prop_four_input, prop_one_input, prop_three_input, prop_two_input, Construction,
    RunError, Scene,
};

/// Significant digits of rendered pixel coordinates.
pub const PRECISION: usize = 12;

pub const DEFAULT_SIZE: u32 = 640;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Viewport {
    pub xmin: Scalar,
    pub xmax: Scalar,
    pub ymin: Scalar,
    pub ymax: Scalar,
    pub width: u32,
    pub height: u32,
}

impl Viewport {
    pub fn new(
        xmin: Scalar,
        xmax: Scalar,
        ymin: Scalar,
        ymax: Scalar,
        width: u32,
        height: u32,
    ) -> Result<Viewport, String> {
        if xmin >= xmax || ymin >= ymax {
            return Err("viewport needs xmin < xmax and ymin < ymax".into());
        }
        if width == 0 || height == 0 {
            return Err("viewport width and height must be positive".into());
        }
        Ok(Viewport {
            xmin,
            xmax,
            ymin,
            ymax,
            width,
            height,
        })
    }

    /// Smallest square integer window holding every point with a margin.
    pub fn fit<'a>(points: impl IntoIterator<Item = &'a Point>, width: u32, height: u32) -> Self {
        let origin = Point::origin();
        let mut lo = (origin.x.clone(), origin.y.clone());
        let mut hi = lo.clone();
        for p in points {
            lo.0 = lo.0.min(p.x.clone());
            lo.1 = lo.1.min(p.y.clone());
            hi.0 = hi.0.max(p.x.clone());
            hi.1 = hi.1.max(p.y.clone());
        }
        let pad = |lo: &Scalar, hi: &Scalar| (hi - lo) / int(10) + int(1);
        let (px, py) = (pad(&lo.0, &hi.0), pad(&lo.1, &hi.1));
        let mut xmin = (&lo.0 - px.clone()).floor();
        let mut xmax = (&hi.0 + px).ceil();
        let mut ymin = (&lo.1 - py.clone()).floor();
        let mut ymax = (&hi.1 + py).ceil();
        let (sx, sy) = (&xmax - &xmin, &ymax - &ymin);
        // widen the narrower range symmetrically so both axes share a scale
        if sx > sy {
            let extra = &sx - &sy;
            ymin -= (&extra / int(2)).floor();
            ymax = &ymin + &sx;
        } else if sy > sx {
            let extra = &sy - &sx;
            xmin -= (&extra / int(2)).floor();
            xmax = &xmin + &sy;
        }
        Viewport {
            xmin,
            xmax,
            ymin,
            ymax,
            width,
            height,
        }
    }

    fn contains(&self, p: &Point) -> bool {
        p.x >= self.xmin && p.x <= self.xmax && p.y >= self.ymin && p.y <= self.ymax
    }

    fn px(&self, p: &Point) -> (String, String) {
        let sx = (&p.x - &self.xmin) / (&self.xmax - &self.xmin) * int(self.width as i64);
        let sy = (&self.ymax - &p.y) / (&self.ymax - &self.ymin) * int(self.height as i64);
        (
            format_decimal(&sx, PRECISION),
            format_decimal(&sy, PRECISION),
        )
    }

    /// The visible part of `l`, if it crosses the window in more than a point.
    pub fn clip(&self, l: &Line) -> Option<(Point, Point)> {
        let borders = [
            Line::vertical(self.xmin.clone()),
            Line::vertical(self.xmax.clone()),
            Line::horizontal(self.ymin.clone()),
            Line::horizontal(self.ymax.clone()),
        ];
        let mut hits: Vec<Point> = borders
            .iter()
            .filter_map(|b| intersect(l, b).ok())
            .filter(|p| self.contains(p))
            .collect();
        // order along the line's direction
        let d = l.direction();
        hits.sort_by_key(|p| &p.x * &d.dx + &p.y * &d.dy);
        hits.dedup();
        match (hits.first(), hits.last()) {
            (Some(a), Some(b)) if a != b => Some((a.clone(), b.clone())),
            _ => None,
        }
    }
}

/// How the drawing window is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Window {
    /// Square window fitted around the markers, at this pixel size.
    Fit {
        width: u32,
        height: u32,
    },
    Fixed(Viewport),
}

impl Default for Window {
    fn default() -> Self {
        Window::Fit {
            width: DEFAULT_SIZE,
            height: DEFAULT_SIZE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Marker {
    pub label: String,
    pub point: Point,
    pub class: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Figure {
    pub title: String,
    pub lines: Vec<(String, Line, &'static str)>,
    pub segments: Vec<(String, Point, Point, &'static str)>,
    pub polygons: Vec<(String, Vec<Point>)>,
    pub markers: Vec<Marker>,
}

impl Figure {
    fn new(title: &str) -> Self {
        Figure {
            title: title.to_string(),
            lines: Vec::new(),
            segments: Vec::new(),
            polygons: Vec::new(),
            markers: Vec::new(),
        }
    }

    fn line(&mut self, label: &str, l: &Line, class: &'static str) {
        if !self.lines.iter().any(|(_, m, _)| m == l) {
            self.lines.push((label.to_string(), l.clone(), class));
        }
    }

    fn line_through(&mut self, label: &str, p: &Point, q: &Point, class: &'static str) {
        if let Ok(l) = line_from_points(p, q) {
            self.line(label, &l, class);
        }
    }

    fn segment(&mut self, label: &str, p: &Point, q: &Point, class: &'static str) {
        self.segments
            .push((label.to_string(), p.clone(), q.clone(), class));
    }

    fn mark(&mut self, label: &str, p: &Point, class: &'static str) {
        self.markers.push(Marker {
            label: label.to_string(),
            point: p.clone(),
            class,
        });
    }

    fn axes(&mut self) {
        self.line("x-axis", &Line::x_axis(), "axis");
        self.line("y-axis", &Line::y_axis(), "axis");
    }

    fn parallelogram(&mut self, w: &ParallelogramWitness, centre: &Point) {
        self.line_through("S̄ −S̄", &w.s, centre, "ray");
        self.line_through("T̄ −T̄", &w.t, centre, "ray");
        if w.s_bar == w.t_bar {
            // ε = 0: the four corners sit on one segment through the centre
            self.segment(
                "collapsed",
                &w.s_bar,
                &w.neg_s_bar,
                "parallelogram collapsed",
            );
        } else {
            self.polygons.push((
                "parallelogram".into(),
                vec![
                    w.s_bar.clone(),
                    w.t_bar.clone(),
                    w.neg_s_bar.clone(),
                    w.neg_t_bar.clone(),
                ],
            ));
        }
        if let Some(l) = &w.connecting_line {
            self.line("T̄ −S̄", l, "diagonal");
        }
        self.line_through("S̄ −T̄", &w.s_bar, &w.neg_t_bar, "diagonal mirrored");
        self.mark("S", &w.s, "input");
        self.mark("T", &w.t, "input");
        self.mark("S̄", &w.s_bar, "corner");
        self.mark("T̄", &w.t_bar, "corner");
        self.mark("−S̄", &w.neg_s_bar, "corner");
        self.mark("−T̄", &w.neg_t_bar, "corner");
    }
}

fn shifted(p: &Point, dx: &Scalar, dy: &Scalar) -> Point {
    Point::new(&p.x - dx, &p.y - dy)
}

/// Collects the geometry to draw for `which` on `scene`.
pub fn figure_for(scene: &Scene, which: Construction) -> Result<Figure, RunError> {
    let mut fig = Figure::new(which.tag());
    let zero = Scalar::zero();
    match which {
        Construction::Phor | Construction::Pver => {
            let input = prop_one_input(scene, which)?;
            let (s, t) = (input.s(), input.t());
            fig.axes();
            fig.line("G_S", input.g_s(), "given");
            fig.line("G_T", input.g_t(), "given");
            fig.line("L", input.l(), "given");
            fig.line_through("Z_S", &Point::origin(), &s, "ray");
            fig.line_through("Z_T", &Point::origin(), &t, "ray");
            fig.mark("S", &s, "input");
            fig.mark("T", &t, "input");
            if input.has_horizontal_case() {
                let w = p_hor(&input)?;
                let to_t = shifted(&w.point, &w.shift_s, &zero);
                let to_s = shifted(&w.point, &w.shift_t, &zero);
                fig.segment("a_S", &w.point, &to_t, "shift");
                fig.segment("a_T", &w.point, &to_s, "shift");
                fig.mark("P_hor", &w.point, "result");
                fig.mark("P_hor−a_S", &to_t, "aux");
                fig.mark("P_hor−a_T", &to_s, "aux");
            }
            if input.has_vertical_case() {
                let w = p_ver(&input)?;
                let to_t = shifted(&w.point, &zero, &w.shift_s);
                let to_s = shifted(&w.point, &zero, &w.shift_t);
                fig.segment("b_S", &w.point, &to_t, "shift");
                fig.segment("b_T", &w.point, &to_s, "shift");
                fig.mark("P_ver", &w.point, "result");
                fig.mark("P_ver−b_S", &to_t, "aux");
                fig.mark("P_ver−b_T", &to_s, "aux");
            }
        }
        Construction::P2 => {
            let input = prop_two_input(scene)?;
            let r = construct_p(&input)?;
            fig.line("G_S", input.g_s(), "given");
            fig.line("G_T", input.g_t(), "given");
            fig.line("L", input.l(), "given");
            fig.line("Axis", input.axis(), "axis");
            fig.line("Z_S", &r.z_s, "ray");
            fig.line("Z_T", &r.z_t, "ray");
            fig.line("Axis_P", &r.axis_p, "result");
            fig.segment("Origin S_Axis", &r.origin, &r.s_axis, "shift");
            fig.segment("Origin T_Axis", &r.origin, &r.t_axis, "shift");
            if let Some(t_p) = &r.t_p {
                fig.segment("P T_P", &r.p, t_p, "shift");
                fig.mark("T_P", t_p, "aux");
            }
            if let Some(s_p) = &r.s_p {
                fig.segment("P S_P", &r.p, s_p, "shift");
                fig.mark("S_P", s_p, "aux");
            }
            fig.mark("Origin", &r.origin, "input");
            fig.mark("S", &r.s, "input");
            fig.mark("T", &r.t, "input");
            fig.mark("S_Axis", &r.s_axis, "aux");
            fig.mark("T_Axis", &r.t_axis, "aux");
            fig.mark("P", &r.p, "result");
        }
        Construction::Nu => {
            let input = prop_three_input(scene)?;
            let w = crate::parallelogram::parallelogram(&input)?;
            fig.axes();
            fig.line("G", input.g(), "given");
            fig.line("P", input.p(), "given");
            fig.parallelogram(&w, &Point::origin());
            fig.mark("(x̂|ŷ)", input.sample(), "input");
            fig.mark("ν", &Point::new(w.nu.clone(), zero.clone()), "result");
            fig.mark("−ν", &Point::new(-w.nu.clone(), zero), "aux");
        }
        Construction::Mu => {
            let input = mu_input(scene)?;
            let w = crate::parallelogram::mu_parallelogram(&input)?;
            fig.axes();
            fig.line("G", &input.g(), "given");
            fig.line("P", &input.p(), "given");
            fig.parallelogram(&w, &Point::origin());
            fig.mark("(x̂|ŷ)", &input.sample(), "input");
            fig.mark("μ", &Point::new(zero, w.nu.clone()), "result");
        }
        Construction::NuGeneral => {
            let input = prop_four_input(scene)?;
            let r = nu_general(&input)?;
            let w = ParallelogramWitness {
                s: r.s.clone(),
                t: r.t.clone(),
                s_bar: r.s_bar.clone(),
                t_bar: r.t_bar.clone(),
                neg_s_bar: r.neg_s_bar.clone(),
                neg_t_bar: r.neg_t_bar.clone(),
                connecting_line: r.connecting_line.clone(),
                nu: Scalar::zero(),
            };
            fig.line("G", input.g(), "given");
            fig.line("P", input.p(), "given");
            fig.line("Axis", input.axis(), "axis");
            fig.parallelogram(&w, input.origin());
            fig.mark("Origin", input.origin(), "input");
            fig.mark("(x̂|ŷ)", input.sample(), "input");
            fig.mark("ν", &r.nu_point, "result");
        }
    }
    Ok(fig)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Serialises `fig` into a standalone document.
pub fn render_svg(fig: &Figure, window: &Window) -> String {
    let fitted;
    let vp = match window {
        Window::Fixed(v) => v,
        Window::Fit { width, height } => {
            fitted = Viewport::fit(fig.markers.iter().map(|m| &m.point), *width, *height);
            &fitted
        }
    };
    let mut out = String::new();
    let (w, h) = (vp.width, vp.height);
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"0 0 {w} {h}\" data-xmin=\"{}\" data-xmax=\"{}\" data-ymin=\"{}\" data-ymax=\"{}\">",
        vp.xmin, vp.xmax, vp.ymin, vp.ymax
    );
    let _ = writeln!(out, "<title>{}</title>", escape(&fig.title));
    out.push_str(
        "<style>\
         .given{stroke:#1f4e99;stroke-width:1.5}\
         .axis{stroke:#888;stroke-width:1}\
         .ray{stroke:#aaa;stroke-width:1;stroke-dasharray:4 3}\
         .result{stroke:#b22;stroke-width:1.5}\
         .diagonal{stroke:#2a2;stroke-width:1.5}\
         .mirrored{stroke-dasharray:6 3}\
         .shift{stroke:#c80;stroke-width:1.5}\
         .parallelogram{fill:#2a2;fill-opacity:0.12;stroke:#2a2;stroke-width:1}\
         .collapsed{stroke-width:2.5}\
         text{font-family:sans-serif;font-size:13px}\
         </style>\n",
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>"
    );

    out.push_str("<g id=\"lines\">\n");
    for (label, l, class) in &fig.lines {
        if let Some((a, b)) = vp.clip(l) {
            let (x1, y1) = vp.px(&a);
            let (x2, y2) = vp.px(&b);
            let _ = writeln!(
                out,
                "<line class=\"{class}\" data-label=\"{}\" data-line=\"{}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>",
                escape(label),
                escape(&l.to_string())
            );
        }
    }
    out.push_str("</g>\n<g id=\"shapes\">\n");
    for (label, pts) in &fig.polygons {
        let coords: Vec<String> = pts
            .iter()
            .map(|p| {
                let (x, y) = vp.px(p);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            out,
            "<polygon class=\"parallelogram\" data-label=\"{}\" points=\"{}\"/>",
            escape(label),
            coords.join(" ")
        );
    }
    for (label, a, b, class) in &fig.segments {
        let (x1, y1) = vp.px(a);
        let (x2, y2) = vp.px(b);
        let _ = writeln!(
            out,
            "<line class=\"{class}\" data-label=\"{}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>",
            escape(label)
        );
    }
    out.push_str("</g>\n<g id=\"markers\">\n");
    for m in &fig.markers {
        let (x, y) = vp.px(&m.point);
        let fill = match m.class {
            "result" => "#b22",
            "corner" => "#2a2",
            "aux" => "#c80",
            _ => "#1f4e99",
        };
        let _ = writeln!(
            out,
            "<g class=\"marker {}\" data-label=\"{}\" data-x=\"{}\" data-y=\"{}\">\
             <circle cx=\"{x}\" cy=\"{y}\" r=\"3.5\" fill=\"{fill}\"/>\
             <text x=\"{x}\" y=\"{y}\" dx=\"6\" dy=\"-6\">{}</text></g>",
            m.class,
            escape(&m.label),
            m.point.x,
            m.point.y,
            escape(&m.label)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn render_figure(
    scene: &Scene,
    which: Construction,
    window: &Window,
) -> Result<String, RunError> {
    Ok(render_svg(&figure_for(scene, which)?, window))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::scene::Builtin;

    fn marker<'a>(fig: &'a Figure, label: &str) -> &'a Point {
        &fig.markers.iter().find(|m| m.label == label).unwrap().point
    }

    #[test]
    fn picture_one_markers() {
        let fig = figure_for(&Builtin::Pic1.scene(), Construction::Phor).unwrap();
        assert_eq!(*marker(&fig, "P_hor"), Point::new(rat(-5, 2), int(1)));
        assert_eq!(*marker(&fig, "P_ver"), Point::new(rat(3, 2), int(1)));
        let svg = render_svg(&fig, &Window::default());
        assert!(svg.contains("data-label=\"P_hor\" data-x=\"-5/2\" data-y=\"1\""));
        assert_eq!(svg, render_svg(&fig, &Window::default()));
    }

    #[test]
    fn picture_three_markers() {
        let fig = figure_for(&Builtin::Pic3.scene(), Construction::Nu).unwrap();
        assert_eq!(*marker(&fig, "ν"), Point::from_ints(2, 0));
        assert_eq!(*marker(&fig, "S̄"), Point::new(rat(-2, 3), rat(2, 3)));
        assert_eq!(*marker(&fig, "−T̄"), Point::from_ints(2, 2));
        assert_eq!(fig.polygons.len(), 1);
    }

    #[test]
    fn zero_epsilon_draws_a_segment_through_the_origin() {
        let scene = Scene {
            epsilon: Some(int(0)),
            ..Builtin::Pic3.scene()
        };
        let fig = figure_for(&scene, Construction::Nu).unwrap();
        assert!(fig.polygons.is_empty());
        let (_, a, b, _) = fig
            .segments
            .iter()
            .find(|s| s.3.contains("collapsed"))
            .unwrap();
        assert_eq!(a.midpoint(b), Point::origin());
        assert!(render_svg(&fig, &Window::default()).contains("parallelogram collapsed"));
    }

    #[test]
    fn clipping_is_exact() {
        let vp = Viewport::new(int(-4), int(4), int(-4), int(4), 100, 100).unwrap();
        let (a, b) = vp.clip(&Line::slope_intercept(int(2), int(4))).unwrap();
        assert_eq!(a, Point::from_ints(-4, -4));
        assert_eq!(b, Point::from_ints(0, 4));
        assert!(vp.clip(&Line::horizontal(int(9))).is_none());
        // touching a corner only
        assert!(vp.clip(&Line::slope_intercept(int(1), int(8))).is_none());
        assert_eq!(vp.px(&Point::origin()), ("50".into(), "50".into()));
    }

    #[test]
    fn fitted_window_is_square() {
        let pts = [Point::from_ints(-10, 1), Point::from_ints(3, 2)];
        let vp = Viewport::fit(pts.iter(), 200, 200);
        assert_eq!(&vp.xmax - &vp.xmin, &vp.ymax - &vp.ymin);
        assert!(pts.iter().all(|p| vp.contains(p)));
    }

    #[test]
    fn rejects_empty_viewport() {
        assert!(Viewport::new(int(1), int(1), int(0), int(1), 10, 10).is_err());
        assert!(Viewport::new(int(0), int(1), int(0), int(1), 0, 10).is_err());
    }
}
