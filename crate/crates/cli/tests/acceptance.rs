//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p planeproj-cli --test acceptance -- --nocapture`
//! to see the report. Every comparison is exact rational equality, so the
//! pinned tolerance is zero throughout; the pinned runtime limits apply to
//! the criteria that state one.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use planeproj::check::all_branches;
use planeproj::parallelogram::{minus_nu_check, nu, parallelogram, PropThreeInput};
use planeproj::parallelogram_general::{nu_general, PropFourInput};
use planeproj::projection_general::{construct_p, verify_p2, PropTwoCase, PropTwoInput};
use planeproj::projection_one::{
    closed_form_branch, closed_form_point, oracle_point, p_hor, p_ver, projection_point, rho_pair,
    rho_tilde_pair, ProjectionCase, PropOneInput,
};
use planeproj::random::{self, LineKind};
use planeproj::scalar::{int, rat, sign, zero};
use planeproj::text::parse_line;
use planeproj::{GeomError, Line, Point, Scalar, Violation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exact arithmetic: results must be identical, not merely close.
const TOLERANCE: u32 = 0;
const SEED: u64 = 20240601;

const PICTURE_LIMIT: Duration = Duration::from_secs(1);
const LEMMA_LIMIT: Duration = Duration::from_secs(30);

const LEMMA_TRIALS: usize = 1000;
const CLOSED_FORM_PER_STRATUM: usize = 150;
const P2_MAIN_TRIALS: usize = 500;
const P2_DEGENERATE_TRIALS: usize = 50;
const NU_TRIPLES: usize = 100;
const SLOPE_TRIPLES: usize = 20;
const SAMPLES: usize = 10;
const NU_GENERAL_SCENES: usize = 100;

struct Outcome {
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    elapsed: Duration,
    result: Result<String, String>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.result.is_ok() && self.limit.is_none_or(|l| self.elapsed < l)
    }

    fn line(&self) -> String {
        let limit = match self.limit {
            Some(l) => format!("< {}s", l.as_secs()),
            None => "none".into(),
        };
        let detail = match &self.result {
            Ok(d) => d.clone(),
            Err(d) => format!("FAILED: {d}"),
        };
        format!(
            "{} {}. {} | tolerance {} (exact) | {:.3}s, limit {} | {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            TOLERANCE,
            self.elapsed.as_secs_f64(),
            limit,
            detail,
        )
    }
}

fn run(
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    body: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = body();
    Outcome {
        id,
        title,
        limit,
        elapsed: start.elapsed(),
        result,
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn line(text: &str) -> Line {
    parse_line(text).unwrap()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn picture_one() -> Result<String, String> {
    let input = PropOneInput::new(line("y=2x+4"), line("y=2x+2"), line("y=1")).map_err(err)?;
    let h = p_hor(&input).map_err(err)?;
    let v = p_ver(&input).map_err(err)?;
    expect("S", input.s(), Point::new(rat(-3, 2), int(1)))?;
    expect("T", input.t(), Point::new(rat(-1, 2), int(1)))?;
    expect("a_S", h.shift_s, int(-2))?;
    expect("a_T", h.shift_t, int(-1))?;
    expect("b_S", v.shift_s, int(4))?;
    expect("b_T", v.shift_t, int(2))?;
    expect("P_hor", h.point, Point::new(rat(-5, 2), int(1)))?;
    expect("P_ver", v.point, Point::new(rat(3, 2), int(1)))?;
    Ok("S, T, a_S, a_T, b_S, b_T, P_hor, P_ver match".into())
}

fn picture_three() -> Result<String, String> {
    let input = PropThreeInput::new(
        line("y=2x+4"),
        line("y=2x+2"),
        int(4),
        Point::from_ints(0, 4),
    )
    .map_err(err)?;
    let w = parallelogram(&input).map_err(err)?;
    expect("S̄", w.s_bar, Point::new(rat(-2, 3), rat(2, 3)))?;
    expect("T̄", w.t_bar, Point::from_ints(-2, -2))?;
    expect("ν", nu(&input).map_err(err)?, int(2))?;
    expect(
        "reflected diagonal",
        minus_nu_check(&input).map_err(err)?,
        int(-2),
    )?;
    Ok("S̄, T̄, ν = 2, reflected diagonal = -2".into())
}

fn lemma_identity() -> Result<String, String> {
    let mut r = rng(3);
    let mut pairs = 0;
    for trial in 0..LEMMA_TRIALS {
        let input = random::any_prop_one_input(&mut r);
        for (name, pair) in [
            (
                "rho_pair",
                input.has_horizontal_case().then(|| rho_pair(&input)),
            ),
            (
                "rho_tilde_pair",
                input.has_vertical_case().then(|| rho_tilde_pair(&input)),
            ),
        ] {
            let Some(pair) = pair else { continue };
            let (a, b) = pair.map_err(|e| format!("trial {trial} {name}: {e}"))?;
            if a != b {
                return Err(format!("trial {trial} {name}: {a} != {b} on {input:?}"));
            }
            pairs += 1;
        }
    }
    Ok(format!(
        "{LEMMA_TRIALS} configurations, {pairs} pairs equal"
    ))
}

fn closed_form_equivalence() -> Result<String, String> {
    let mut r = rng(4);
    let mut per_branch = BTreeMap::new();
    let mut configs = 0;
    for g_kind in LineKind::ALL {
        for l_kind in LineKind::ALL {
            for _ in 0..CLOSED_FORM_PER_STRATUM {
                // None marks an impossible stratum (L parallel to G)
                let Some(input) = random::prop_one_input(&mut r, g_kind, l_kind) else {
                    break;
                };
                configs += 1;
                for case in [ProjectionCase::HorizontalA, ProjectionCase::VerticalB] {
                    let Ok(built) = projection_point(&input, case) else {
                        continue;
                    };
                    let formula = closed_form_point(&input, case).map_err(err)?;
                    let oracle = oracle_point(&input, case).map_err(err)?;
                    if built.point != formula || built.point != oracle {
                        return Err(format!(
                            "{case:?} on {input:?}: {} / {formula} / {oracle}",
                            built.point
                        ));
                    }
                    let branch = closed_form_branch(&input, case).map_err(err)?;
                    *per_branch.entry((case, branch)).or_insert(0usize) += 1;
                }
            }
        }
    }
    let missing: Vec<_> = all_branches()
        .into_iter()
        .filter(|b| !per_branch.contains_key(b))
        .collect();
    if configs < 1000 || !missing.is_empty() {
        return Err(format!(
            "{configs} configurations, branches missing {missing:?}"
        ));
    }
    let thinnest = per_branch.values().min().copied().unwrap_or(0);
    Ok(format!(
        "{configs} configurations, {} case branches each hit at least {thinnest} times",
        per_branch.len()
    ))
}

fn general_projection() -> Result<String, String> {
    let mut r = rng(5);
    for trial in 0..P2_MAIN_TRIALS {
        let input = random::prop_two_main(&mut r);
        let res = construct_p(&input).map_err(err)?;
        let c = verify_p2(&res);
        if res.case != PropTwoCase::Main
            || !c.dist_s_axis_matches_p_to_t_p
            || !c.dist_t_axis_matches_p_to_s_p
            || !c.s_axis_same_side_of_z_t
            || !c.t_axis_same_side_of_z_s
            || !c.all()
        {
            return Err(format!("main trial {trial}: {:?} {c:?}", res.case));
        }
    }
    for (through_t, want) in [
        (false, PropTwoCase::SCoincides),
        (true, PropTwoCase::TCoincides),
    ] {
        for trial in 0..P2_DEGENERATE_TRIALS {
            let input = random::prop_two_degenerate(&mut r, through_t);
            let res = construct_p(&input).map_err(err)?;
            // P equals the coinciding point and Axis_P equals Axis
            let trivial = match want {
                PropTwoCase::SCoincides => res.p == res.s_axis && res.p == input.s(),
                _ => res.p == res.t_axis && res.p == input.t(),
            } && &res.axis_p == input.axis();
            if res.case != want || !trivial || !verify_p2(&res).all() {
                return Err(format!("{want:?} trial {trial}: got {:?}", res.case));
            }
        }
    }
    Ok(format!(
        "{P2_MAIN_TRIALS} main inputs, {P2_DEGENERATE_TRIALS} per degenerate case"
    ))
}

/// `b_P·|ε|/b_G`, or `p·|ε|/r` for vertical lines.
fn nu_expected(g: &Line, p: &Line, eps: &Scalar) -> Scalar {
    let (num, den) = if g.is_vertical() {
        (p.x_intercept(), g.x_intercept())
    } else {
        (p.y_intercept(), g.y_intercept())
    };
    let abs = if sign(eps) < 0 {
        -eps.clone()
    } else {
        eps.clone()
    };
    num.unwrap() * abs / den.unwrap()
}

fn nu_invariances() -> Result<String, String> {
    let mut r = rng(6);
    for t in 0..NU_TRIPLES {
        let (g, p, eps) = random::prop_three_triple(&mut r, t % 4 == 3);
        let want = nu_expected(&g, &p, &eps);
        let mut drawn = Vec::new();
        for _ in 0..SAMPLES {
            let input = random::prop_three_sample(&mut r, &g, &p, &eps, &drawn);
            drawn.push(input.sample().clone());
            let v = nu(&input).map_err(err)?;
            if v != want {
                return Err(format!(
                    "triple {t}: ν = {v}, expected {want} ({g}, {p}, ε = {eps})"
                ));
            }
        }
    }
    for t in 0..SLOPE_TRIPLES {
        let b_g = random::nonzero_rational(&mut r);
        let b_p = random::rational(&mut r);
        let eps = random::rational(&mut r);
        let mut slopes: Vec<Scalar> = Vec::new();
        let mut first: Option<Scalar> = None;
        while slopes.len() < SAMPLES {
            let m = random::rational(&mut r);
            let x = random::rational(&mut r);
            let sample = Point::new(x.clone(), &m * &x + &b_g);
            let Ok(input) = PropThreeInput::new(
                Line::slope_intercept(m.clone(), b_g.clone()),
                Line::slope_intercept(m.clone(), b_p.clone()),
                eps.clone(),
                sample,
            ) else {
                continue;
            };
            if slopes.contains(&m) {
                continue;
            }
            slopes.push(m);
            let v = nu(&input).map_err(err)?;
            match &first {
                None => first = Some(v),
                Some(v0) if *v0 != v => {
                    return Err(format!("slope triple {t}: ν = {v} and {v0}"));
                }
                Some(_) => {}
            }
        }
    }
    Ok(format!(
        "{NU_TRIPLES}×{SAMPLES} samples match the closed form, {SLOPE_TRIPLES}×{SAMPLES} slopes constant"
    ))
}

fn nu_general_invariances() -> Result<String, String> {
    let mut r = rng(7);
    for s in 0..NU_GENERAL_SCENES {
        let scene = random::prop_four_scene(&mut r);
        let mut drawn = Vec::new();
        let mut first: Option<Point> = None;
        for _ in 0..SAMPLES {
            let input = random::prop_four_sample(&mut r, &scene, &drawn);
            drawn.push(input.sample().clone());
            let q = nu_general(&input).map_err(err)?.nu_point;
            match &first {
                None => first = Some(q),
                Some(q0) if *q0 != q => return Err(format!("scene {s}: {q} and {q0}")),
                Some(_) => {}
            }
        }
        let input = random::prop_four_sample(&mut r, &scene, &[]);
        let f = random::frame(&mut r);
        let moved = PropFourInput::with_direction(
            f.apply_line(input.g()),
            f.apply_line(input.p()),
            f.apply_line(input.axis()),
            f.apply(input.origin()),
            input.offset().clone(),
            f.apply(input.sample()),
            f.apply_direction(input.direction()),
        )
        .map_err(err)?;
        let image = f.apply(&first.unwrap());
        let got = nu_general(&moved).map_err(err)?.nu_point;
        if got != image {
            return Err(format!("scene {s}: moved ν point {got}, image {image}"));
        }
    }
    Ok(format!(
        "{NU_GENERAL_SCENES}×{SAMPLES} samples constant, {NU_GENERAL_SCENES} frames equivariant"
    ))
}

fn degenerate_suite() -> Result<String, String> {
    let mut r = rng(8);
    let origin = Point::origin();
    for t in 0..50 {
        let (g, _, eps) = random::prop_three_triple(&mut r, t % 4 == 3);
        let p = random::parallel_to(&mut r, &g);
        let flat = random::prop_three_sample(&mut r, &g, &p, &zero(), &[]);
        expect("ν at ε = 0", nu(&flat).map_err(err)?, zero())?;
        let through = Line::new(g.a().clone(), g.b().clone(), zero()).unwrap();
        let point = random::prop_three_sample(&mut r, &g, &through, &eps, &[]);
        let w = parallelogram(&point).map_err(err)?;
        for corner in [&w.s_bar, &w.t_bar, &w.neg_s_bar, &w.neg_t_bar] {
            expect("corner with P through the origin", corner, &origin)?;
        }
        expect("ν with P through the origin", w.nu, zero())?;
    }

    // an intersection point on a coordinate axis is its own projection
    let trivial = [
        ("y=2x-2", "y=2x+2", "y=-x+1", true, true),
        ("y=2x+4", "y=2x+2", "y=x+1", false, true),
        ("y=2x+4", "y=2x+2", "y=-x+4", true, false),
        ("y=2x+4", "y=2x+2", "y=3x+2", false, false),
    ];
    for (gs, gt, l, on_s, horizontal) in trivial {
        let input = PropOneInput::new(line(gs), line(gt), line(l)).map_err(err)?;
        let got = if horizontal {
            p_hor(&input)
        } else {
            p_ver(&input)
        }
        .map_err(err)?;
        let want = if on_s { input.s() } else { input.t() };
        expect("trivial projection", got.point, want)?;
    }

    let (g_s, g_t) = (line("y=2x+4"), line("y=2x+2"));
    let codes = [
        (
            PropOneInput::new(g_s.clone(), g_t.clone(), line("y=-3x")).map(|_| ()),
            "E_ORIGIN_ON_L",
        ),
        (
            PropOneInput::new(g_s.clone(), g_t.clone(), line("y=2x-5")).map(|_| ()),
            "E_PARALLEL",
        ),
        (
            PropTwoInput::new(
                g_s.clone(),
                g_t.clone(),
                line("y=1"),
                line("y=2x-1"),
                Point::from_ints(1, 1),
            )
            .map(|_| ()),
            "E_PRECONDITION",
        ),
        (
            PropThreeInput::new(g_s.clone(), g_t.clone(), int(2), Point::from_ints(0, 4))
                .map(|_| ()),
            "E_PARALLEL_PROJECTION",
        ),
    ];
    for (outcome, code) in codes {
        match outcome {
            Ok(()) => return Err(format!("expected {code}, got an answer")),
            Err(e) => expect("error code", e.code(), code)?,
        }
    }
    let axis = PropTwoInput::new(
        g_s,
        g_t,
        line("y=1"),
        line("y=2x-1"),
        Point::from_ints(1, 1),
    );
    expect(
        "axis violation",
        axis.unwrap_err(),
        GeomError::Precondition(Violation::AxisParallelToGs),
    )?;
    Ok(
        "ε = 0 and P through the origin over 50 triples each, 4 trivial cases, 4 error codes"
            .into(),
    )
}

fn planeproj(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_planeproj"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Label and exact coordinates as written on an SVG marker.
type Marker = (&'static str, &'static str, &'static str);

fn cli_and_figures() -> Result<String, String> {
    let markers: [(&str, &[Marker]); 2] = [
        (
            "pic1",
            &[
                ("S", "-3/2", "1"),
                ("T", "-1/2", "1"),
                ("P_hor", "-5/2", "1"),
                ("P_ver", "3/2", "1"),
            ],
        ),
        (
            "pic3",
            &[
                ("S̄", "-2/3", "2/3"),
                ("T̄", "-2", "-2"),
                ("ν", "2", "0"),
                ("−ν", "-2", "0"),
            ],
        ),
    ];
    for (name, points) in markers {
        let a = planeproj(&["figure", "--builtin", name]);
        let b = planeproj(&["figure", "--builtin", name]);
        if a.status.code() != Some(0) || a.stdout != b.stdout {
            return Err(format!("{name}: status {:?} or output differs", a.status));
        }
        let svg = String::from_utf8(a.stdout).map_err(err)?;
        for (label, x, y) in points {
            let tag = format!(r#"data-label="{label}" data-x="{x}" data-y="{y}""#);
            if !svg.contains(&tag) {
                return Err(format!("{name}: no marker {label} at ({x}, {y})"));
            }
        }
    }
    let check = planeproj(&["check", "--seed", "1", "--trials", "1000"]);
    if check.status.code() != Some(0) {
        return Err(format!(
            "check exited {:?}:\n{}",
            check.status.code(),
            String::from_utf8_lossy(&check.stdout)
        ));
    }
    Ok("pic1/pic3 SVG byte-identical with markers, check --seed 1 --trials 1000 exits 0".into())
}

#[test]
fn acceptance_criteria() {
    let outcomes = [
        run(
            1,
            "picture 1 reproduction",
            Some(PICTURE_LIMIT),
            picture_one,
        ),
        run(
            2,
            "picture 3 reproduction",
            Some(PICTURE_LIMIT),
            picture_three,
        ),
        run(
            3,
            "intercept quotient identity",
            Some(LEMMA_LIMIT),
            lemma_identity,
        ),
        run(
            4,
            "closed form and oracle agreement",
            None,
            closed_form_equivalence,
        ),
        run(5, "general projection contract", None, general_projection),
        run(6, "parallelogram invariants", None, nu_invariances),
        run(
            7,
            "general invariance and equivariance",
            None,
            nu_general_invariances,
        ),
        run(
            8,
            "degenerate cases and error codes",
            None,
            degenerate_suite,
        ),
        run(9, "CLI and figures", None, cli_and_figures),
    ];
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<u8> = outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| o.id)
        .collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
