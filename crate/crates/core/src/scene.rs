//! Named scenes, construction dispatch and the exact JSON result document.
//!
//! A [`Scene`] is a bag of optional named inputs. [`run_construction`] pulls
//! the ones a construction needs, validates them through that
//! construction's input type and reports everything as exact `p/q` strings.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GeomError;
use crate::kernel::{Line, Point};
use crate::parallelogram::{
    minus_nu_check, mu_parallelogram, nu_closed_form, parallelogram, MuInput, ParallelogramWitness,
    PropThreeInput,
};
use crate::parallelogram_general::{nu_general, PropFourInput};
use crate::projection_general::{construct_p, verify_p2, PropTwoInput};
use crate::projection_one::{
    closed_form_branch, closed_form_point, oracle_point, projection_point, ProjectionCase,
    PropOneInput,
};
use crate::scalar::{int, rat, Scalar};
use crate::text::{parse_line, parse_point, parse_scalar, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Construction {
    Phor,
    Pver,
    P2,
    Nu,
    Mu,
    NuGeneral,
}

impl Construction {
    pub const ALL: [Construction; 6] = [
        Construction::Phor,
        Construction::Pver,
        Construction::P2,
        Construction::Nu,
        Construction::Mu,
        Construction::NuGeneral,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Construction::Phor => "PHOR",
            Construction::Pver => "PVER",
            Construction::P2 => "P2",
            Construction::Nu => "NU",
            Construction::Mu => "MU",
            Construction::NuGeneral => "NU_GENERAL",
        }
    }

    /// CLI subcommand running this construction.
    pub fn subcommand(self) -> &'static str {
        match self {
            Construction::Phor => "phor",
            Construction::Pver => "pver",
            Construction::P2 => "construct-p",
            Construction::Nu => "nu",
            Construction::Mu => "mu",
            Construction::NuGeneral => "nu-general",
        }
    }

    /// Accepts either the tag or the subcommand name, case-insensitively.
    pub fn parse(text: &str) -> Option<Construction> {
        Construction::ALL.into_iter().find(|c| {
            c.tag().eq_ignore_ascii_case(text) || c.subcommand().eq_ignore_ascii_case(text)
        })
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Scene {
    pub g_s: Option<Line>,
    pub g_t: Option<Line>,
    pub l: Option<Line>,
    pub axis: Option<Line>,
    pub g: Option<Line>,
    pub p: Option<Line>,
    pub origin: Option<Point>,
    /// `ε` for `NU`/`MU`, the axis offset for `NU_GENERAL`.
    pub epsilon: Option<Scalar>,
    pub sample: Option<Point>,
}

/// On-disk scene: every field is the text syntax of its value. Keys match
/// the `inputs` object of a result document; lowercase aliases are accepted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    #[serde(
        rename = "G_S",
        alias = "g_s",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub g_s: Option<String>,
    #[serde(
        rename = "G_T",
        alias = "g_t",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub g_t: Option<String>,
    #[serde(
        rename = "L",
        alias = "l",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub l: Option<String>,
    #[serde(
        rename = "Axis",
        alias = "axis",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub axis: Option<String>,
    #[serde(
        rename = "G",
        alias = "g",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub g: Option<String>,
    #[serde(
        rename = "P",
        alias = "p",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub p: Option<String>,
    #[serde(
        rename = "Origin",
        alias = "origin",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub origin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SceneError {
    Json(String),
    Field {
        field: &'static str,
        error: ParseError,
    },
}

impl fmt::Display for SceneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SceneError::Json(msg) => write!(f, "invalid scene file: {msg}"),
            SceneError::Field { field, error } => write!(f, "scene field {field}: {error}"),
        }
    }
}

impl std::error::Error for SceneError {}

fn parse_field<T>(
    field: &'static str,
    text: &Option<String>,
    parse: fn(&str) -> Result<T, ParseError>,
) -> Result<Option<T>, SceneError> {
    text.as_deref()
        .map(|t| parse(t).map_err(|error| SceneError::Field { field, error }))
        .transpose()
}

impl Scene {
    pub fn from_file(file: &SceneFile) -> Result<Scene, SceneError> {
        Ok(Scene {
            g_s: parse_field("G_S", &file.g_s, parse_line)?,
            g_t: parse_field("G_T", &file.g_t, parse_line)?,
            l: parse_field("L", &file.l, parse_line)?,
            axis: parse_field("Axis", &file.axis, parse_line)?,
            g: parse_field("G", &file.g, parse_line)?,
            p: parse_field("P", &file.p, parse_line)?,
            origin: parse_field("Origin", &file.origin, parse_point)?,
            epsilon: parse_field("epsilon", &file.epsilon, parse_scalar)?,
            sample: parse_field("sample", &file.sample, parse_point)?,
        })
    }

    pub fn to_file(&self) -> SceneFile {
        let s = |v: &Option<Line>| v.as_ref().map(Line::to_string);
        SceneFile {
            g_s: s(&self.g_s),
            g_t: s(&self.g_t),
            l: s(&self.l),
            axis: s(&self.axis),
            g: s(&self.g),
            p: s(&self.p),
            origin: self.origin.as_ref().map(Point::to_string),
            epsilon: self.epsilon.as_ref().map(Scalar::to_string),
            sample: self.sample.as_ref().map(Point::to_string),
        }
    }

    pub fn from_json(text: &str) -> Result<Scene, SceneError> {
        let file: SceneFile =
            serde_json::from_str(text).map_err(|e| SceneError::Json(e.to_string()))?;
        Scene::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("plain strings serialize")
    }

    /// Present inputs keyed by their symbol names, as text.
    pub fn inputs(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                m.insert(k.to_string(), v);
            }
        };
        let line = |v: &Option<Line>| v.as_ref().map(Line::to_string);
        put("G_S", line(&self.g_s));
        put("G_T", line(&self.g_t));
        put("L", line(&self.l));
        put("Axis", line(&self.axis));
        put("G", line(&self.g));
        put("P", line(&self.p));
        put("Origin", self.origin.as_ref().map(Point::to_string));
        put("epsilon", self.epsilon.as_ref().map(Scalar::to_string));
        put("sample", self.sample.as_ref().map(Point::to_string));
        m
    }

    /// Shell command that reruns `which` on this scene.
    pub fn to_command(&self, which: Construction) -> String {
        let mut cmd = format!("planeproj {}", which.subcommand());
        let mut flag = |name: &str, v: Option<String>| {
            if let Some(v) = v {
                cmd.push_str(&format!(" --{name} '{v}'"));
            }
        };
        let line = |v: &Option<Line>| v.as_ref().map(Line::to_string);
        flag("line-gs", line(&self.g_s));
        flag("line-gt", line(&self.g_t));
        flag("line-l", line(&self.l));
        flag("line-axis", line(&self.axis));
        flag("line-g", line(&self.g));
        flag("line-p", line(&self.p));
        flag("origin", self.origin.as_ref().map(Point::to_string));
        flag("epsilon", self.epsilon.as_ref().map(Scalar::to_string));
        flag("sample", self.sample.as_ref().map(Point::to_string));
        cmd.push_str(" --json");
        cmd
    }
}

/// Why a construction could not run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    /// A required scene input was not supplied.
    Missing {
        construction: Construction,
        field: &'static str,
    },
    Geom(GeomError),
}

impl RunError {
    pub fn code(&self) -> &'static str {
        match self {
            RunError::Missing { .. } => "E_PARSE",
            RunError::Geom(e) => e.code(),
        }
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Missing {
                construction,
                field,
            } => write!(f, "{construction} needs the input {field}"),
            RunError::Geom(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for RunError {}

impl From<GeomError> for RunError {
    fn from(e: GeomError) -> Self {
        RunError::Geom(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub construction: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    pub case: Option<String>,
    pub witnesses: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
}

impl ResultDocument {
    fn empty(which: Construction, scene: &Scene) -> Self {
        ResultDocument {
            construction: which.tag().to_string(),
            inputs: scene.inputs(),
            outputs: BTreeMap::new(),
            case: None,
            witnesses: BTreeMap::new(),
            error: None,
        }
    }

    pub fn failure(which: Construction, scene: &Scene, err: &RunError) -> Self {
        ResultDocument {
            error: Some(ErrorReport {
                code: err.code().to_string(),
                message: err.to_string(),
            }),
            ..ResultDocument::empty(which, scene)
        }
    }

    /// Document for input that never became a scene.
    pub fn unparsed(which: Construction, message: String) -> Self {
        ResultDocument {
            error: Some(ErrorReport {
                code: "E_PARSE".to_string(),
                message,
            }),
            ..ResultDocument::empty(which, &Scene::default())
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("string maps serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    fn output(&mut self, k: &str, v: impl ToString) {
        self.outputs.insert(k.to_string(), v.to_string());
    }

    fn witness(&mut self, k: &str, v: impl ToString) {
        self.witnesses.insert(k.to_string(), v.to_string());
    }
}

fn need<T: Clone>(which: Construction, field: &'static str, v: &Option<T>) -> Result<T, RunError> {
    v.clone().ok_or(RunError::Missing {
        construction: which,
        field,
    })
}

pub fn prop_one_input(scene: &Scene, which: Construction) -> Result<PropOneInput, RunError> {
    Ok(PropOneInput::new(
        need(which, "G_S", &scene.g_s)?,
        need(which, "G_T", &scene.g_t)?,
        need(which, "L", &scene.l)?,
    )?)
}

pub fn prop_two_input(scene: &Scene) -> Result<PropTwoInput, RunError> {
    let w = Construction::P2;
    Ok(PropTwoInput::new(
        need(w, "G_S", &scene.g_s)?,
        need(w, "G_T", &scene.g_t)?,
        need(w, "L", &scene.l)?,
        need(w, "Axis", &scene.axis)?,
        need(w, "Origin", &scene.origin)?,
    )?)
}

pub fn prop_three_input(scene: &Scene) -> Result<PropThreeInput, RunError> {
    let w = Construction::Nu;
    Ok(PropThreeInput::new(
        need(w, "G", &scene.g)?,
        need(w, "P", &scene.p)?,
        need(w, "epsilon", &scene.epsilon)?,
        need(w, "sample", &scene.sample)?,
    )?)
}

pub fn mu_input(scene: &Scene) -> Result<MuInput, RunError> {
    let w = Construction::Mu;
    Ok(MuInput::new(
        need(w, "G", &scene.g)?,
        need(w, "P", &scene.p)?,
        need(w, "epsilon", &scene.epsilon)?,
        need(w, "sample", &scene.sample)?,
    )?)
}

pub fn prop_four_input(scene: &Scene) -> Result<PropFourInput, RunError> {
    let w = Construction::NuGeneral;
    Ok(PropFourInput::new(
        need(w, "G", &scene.g)?,
        need(w, "P", &scene.p)?,
        need(w, "Axis", &scene.axis)?,
        need(w, "Origin", &scene.origin)?,
        need(w, "epsilon", &scene.epsilon)?,
        need(w, "sample", &scene.sample)?,
    )?)
}

fn parallelogram_witnesses(doc: &mut ResultDocument, w: &ParallelogramWitness) {
    doc.witness("S", &w.s);
    doc.witness("T", &w.t);
    doc.witness("S_bar", &w.s_bar);
    doc.witness("T_bar", &w.t_bar);
    doc.witness("neg_S_bar", &w.neg_s_bar);
    doc.witness("neg_T_bar", &w.neg_t_bar);
    if let Some(line) = &w.connecting_line {
        doc.witness("connecting_line", line);
    }
}

pub fn run_construction(scene: &Scene, which: Construction) -> Result<ResultDocument, RunError> {
    let mut doc = ResultDocument::empty(which, scene);
    match which {
        Construction::Phor | Construction::Pver => {
            let input = prop_one_input(scene, which)?;
            let (case, name, shift) = if which == Construction::Phor {
                (ProjectionCase::HorizontalA, "P_hor", "a")
            } else {
                (ProjectionCase::VerticalB, "P_ver", "b")
            };
            let w = projection_point(&input, case)?;
            let closed = closed_form_point(&input, case)?;
            let oracle = oracle_point(&input, case)?;
            if closed != w.point || oracle != w.point {
                return Err(GeomError::Inconsistent(format!(
                    "{name} = {}, closed form {closed}, oracle {oracle}",
                    w.point
                ))
                .into());
            }
            doc.output(name, &w.point);
            doc.case = Some(case.tag().to_string());
            doc.witness("S", &w.s);
            doc.witness("T", &w.t);
            doc.witness(&format!("{shift}_S"), &w.shift_s);
            doc.witness(&format!("{shift}_T"), &w.shift_t);
            doc.witness("rho", &w.rho);
            doc.witness("alpha", &w.alpha);
            doc.witness("beta", &w.beta);
            doc.witness(
                "closed_form_branch",
                format!("{:?}", closed_form_branch(&input, case)?),
            );
        }
        Construction::P2 => {
            let input = prop_two_input(scene)?;
            let r = construct_p(&input)?;
            doc.output("P", &r.p);
            doc.output("Axis_P", &r.axis_p);
            doc.case = Some(r.case.tag().to_string());
            doc.witness("S", &r.s);
            doc.witness("T", &r.t);
            doc.witness("S_Axis", &r.s_axis);
            doc.witness("T_Axis", &r.t_axis);
            doc.witness("Z_S", &r.z_s);
            doc.witness("Z_T", &r.z_t);
            if let Some(q) = &r.s_p {
                doc.witness("S_P", q);
            }
            if let Some(q) = &r.t_p {
                doc.witness("T_P", q);
            }
            for (name, ok) in verify_p2(&r).named() {
                doc.witness(&format!("check.{name}"), ok);
            }
        }
        Construction::Nu => {
            let input = prop_three_input(scene)?;
            let w = parallelogram(&input)?;
            doc.output("nu", &w.nu);
            doc.output("minus_nu", minus_nu_check(&input)?);
            doc.case = Some(
                if input.g().is_vertical() {
                    "VERTICAL"
                } else {
                    "NON_VERTICAL"
                }
                .into(),
            );
            parallelogram_witnesses(&mut doc, &w);
            doc.witness(
                "nu_closed_form",
                nu_closed_form(input.g(), input.p(), input.epsilon())?,
            );
        }
        Construction::Mu => {
            let input = mu_input(scene)?;
            let w = mu_parallelogram(&input)?;
            doc.output("mu", &w.nu);
            doc.case = Some(
                if input.g().is_horizontal() {
                    "HORIZONTAL"
                } else {
                    "NON_HORIZONTAL"
                }
                .into(),
            );
            parallelogram_witnesses(&mut doc, &w);
            let swapped = input.as_swapped();
            doc.witness(
                "mu_closed_form",
                nu_closed_form(swapped.g(), swapped.p(), swapped.epsilon())?,
            );
        }
        Construction::NuGeneral => {
            let input = prop_four_input(scene)?;
            let r = nu_general(&input)?;
            doc.output("nu_point", &r.nu_point);
            doc.witness("S", &r.s);
            doc.witness("T", &r.t);
            doc.witness("S_bar", &r.s_bar);
            doc.witness("T_bar", &r.t_bar);
            doc.witness("neg_S_bar", &r.neg_s_bar);
            doc.witness("neg_T_bar", &r.neg_t_bar);
            if let Some(line) = &r.connecting_line {
                doc.witness("connecting_line", line);
            }
            let d = input.direction();
            doc.witness("offset_direction", format!("({}, {})", d.dx, d.dy));
        }
    }
    Ok(doc)
}

/// The scenes of the four reference pictures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    Pic1,
    Pic2,
    Pic3,
    Pic4,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::Pic1, Builtin::Pic2, Builtin::Pic3, Builtin::Pic4];

    pub fn parse(text: &str) -> Option<Builtin> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(text))
    }

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Pic1 => "pic1",
            Builtin::Pic2 => "pic2",
            Builtin::Pic3 => "pic3",
            Builtin::Pic4 => "pic4",
        }
    }

    pub fn construction(self) -> Construction {
        match self {
            Builtin::Pic1 => Construction::Phor,
            Builtin::Pic2 => Construction::P2,
            Builtin::Pic3 => Construction::Nu,
            Builtin::Pic4 => Construction::NuGeneral,
        }
    }

    pub fn scene(self) -> Scene {
        match self {
            Builtin::Pic1 => Scene {
                g_s: Some(Line::slope_intercept(int(2), int(4))),
                g_t: Some(Line::slope_intercept(int(2), int(2))),
                l: Some(Line::horizontal(int(1))),
                ..Scene::default()
            },
            Builtin::Pic2 => Scene {
                g_s: Some(Line::slope_intercept(rat(1, 3), int(1))),
                g_t: Some(Line::slope_intercept(rat(1, 3), int(2))),
                l: Some(Line::slope_intercept(rat(-1, 6), int(4))),
                axis: Some(Line::x_axis()),
                origin: Some(Point::origin()),
                ..Scene::default()
            },
            Builtin::Pic3 => Scene {
                g: Some(Line::slope_intercept(int(2), int(4))),
                p: Some(Line::slope_intercept(int(2), int(2))),
                epsilon: Some(int(4)),
                sample: Some(Point::from_ints(0, 4)),
                ..Scene::default()
            },
            Builtin::Pic4 => Scene {
                axis: Some(Line::x_axis()),
                origin: Some(Point::origin()),
                ..Builtin::Pic3.scene()
            },
        }
    }
}
