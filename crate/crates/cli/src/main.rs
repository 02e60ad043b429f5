//! `planeproj`: run the constructions on exact scenes, check the properties
//! on random scenes, and draw figures.
//!
//! Exit status: 0 success, 2 unparsable input, 3 violated precondition,
//! 4 internal inconsistency.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use planeproj::check::check_suite;
use planeproj::scene::{run_construction, Builtin, Construction, ResultDocument, RunError, Scene};
use planeproj::svg::{render_figure, Viewport, Window, DEFAULT_SIZE};
use planeproj::text::{parse_line, parse_point, parse_scalar, ParseError};
use planeproj::Scalar;

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "planeproj",
    version,
    about = "Exact double projections and parallelogram invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Horizontal-shift projection point P_hor (needs G_S, G_T, L)
    Phor(RunArgs),
    /// Vertical-shift projection point P_ver (needs G_S, G_T, L)
    Pver(RunArgs),
    /// Projection point for an arbitrary Axis and Origin
    ConstructP(RunArgs),
    /// Axis invariant ν of the parallelogram (needs G, P, epsilon, sample)
    Nu(RunArgs),
    /// y-axis invariant μ with vertical offsets
    Mu(RunArgs),
    /// ν point for an arbitrary Axis and Origin; --epsilon is the offset
    NuGeneral(RunArgs),
    /// Run the seeded property suite
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Render an SVG figure of a built-in or custom scene
    Figure(FigureArgs),
}

#[derive(Args, Clone, Default)]
struct SceneArgs {
    /// JSON scene file; flags given alongside override its fields
    #[arg(long)]
    scene: Option<String>,
    #[arg(long = "line-gs", allow_hyphen_values = true)]
    line_gs: Option<String>,
    #[arg(long = "line-gt", allow_hyphen_values = true)]
    line_gt: Option<String>,
    #[arg(long = "line-l", allow_hyphen_values = true)]
    line_l: Option<String>,
    #[arg(long = "line-axis", allow_hyphen_values = true)]
    line_axis: Option<String>,
    #[arg(long = "line-g", allow_hyphen_values = true)]
    line_g: Option<String>,
    #[arg(long = "line-p", allow_hyphen_values = true)]
    line_p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    origin: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    sample: Option<String>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    scene: SceneArgs,
    /// Print the full result document as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FigureArgs {
    /// pic1, pic2, pic3 or pic4
    #[arg(long)]
    builtin: Option<String>,
    /// Construction to draw for a custom scene (phor, pver, construct-p, nu, mu, nu-general)
    #[arg(long)]
    construction: Option<String>,
    #[command(flatten)]
    scene: SceneArgs,
    /// Write the SVG here instead of stdout
    #[arg(long = "svg-out")]
    svg_out: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    xmin: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    xmax: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ymin: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ymax: Option<String>,
    #[arg(long)]
    width: Option<u32>,
    #[arg(long)]
    height: Option<u32>,
}

/// Input that could not be turned into a scene.
struct UsageError(String);

impl From<ParseError> for UsageError {
    fn from(e: ParseError) -> Self {
        UsageError(e.to_string())
    }
}

fn field<T>(
    flag: &str,
    text: &Option<String>,
    parse: fn(&str) -> Result<T, ParseError>,
) -> Result<Option<T>, UsageError> {
    match text {
        None => Ok(None),
        Some(t) => parse(t)
            .map(Some)
            .map_err(|e| UsageError(format!("--{flag} '{t}': {e}"))),
    }
}

fn build_scene(args: &SceneArgs, base: Scene) -> Result<Scene, UsageError> {
    let mut scene = match &args.scene {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read {path}: {e}")))?;
            Scene::from_json(&text).map_err(|e| UsageError(e.to_string()))?
        }
        None => base,
    };
    macro_rules! apply {
        ($slot:ident, $flag:literal, $src:ident, $parse:ident) => {
            if let Some(v) = field($flag, &args.$src, $parse)? {
                scene.$slot = Some(v);
            }
        };
    }
    apply!(g_s, "line-gs", line_gs, parse_line);
    apply!(g_t, "line-gt", line_gt, parse_line);
    apply!(l, "line-l", line_l, parse_line);
    apply!(axis, "line-axis", line_axis, parse_line);
    apply!(g, "line-g", line_g, parse_line);
    apply!(p, "line-p", line_p, parse_line);
    apply!(origin, "origin", origin, parse_point);
    apply!(epsilon, "epsilon", epsilon, parse_scalar);
    apply!(sample, "sample", sample, parse_point);
    Ok(scene)
}

fn exit_for(err: &RunError) -> u8 {
    match err {
        RunError::Missing { .. } => EXIT_PARSE,
        RunError::Geom(e) if e.is_internal() => EXIT_INTERNAL,
        RunError::Geom(_) => EXIT_PRECONDITION,
    }
}

fn print_document(doc: &ResultDocument, json: bool) {
    if json {
        println!("{}", doc.to_json());
        return;
    }
    if let Some(e) = &doc.error {
        eprintln!("error {}: {}", e.code, e.message);
        return;
    }
    for (k, v) in &doc.outputs {
        println!("{k} = {v}");
    }
    if let Some(case) = &doc.case {
        println!("case = {case}");
    }
}

fn run(which: Construction, args: &RunArgs) -> u8 {
    let scene = match build_scene(&args.scene, Scene::default()) {
        Ok(s) => s,
        Err(UsageError(msg)) => {
            let doc = ResultDocument::unparsed(which, msg);
            print_document(&doc, args.json);
            return EXIT_PARSE;
        }
    };
    match run_construction(&scene, which) {
        Ok(doc) => {
            print_document(&doc, args.json);
            0
        }
        Err(err) => {
            print_document(&ResultDocument::failure(which, &scene, &err), args.json);
            exit_for(&err)
        }
    }
}

fn scalar_flag(flag: &str, v: &Option<String>) -> Result<Option<Scalar>, UsageError> {
    field(flag, v, parse_scalar)
}

fn window(args: &FigureArgs) -> Result<Window, UsageError> {
    let bounds = [
        scalar_flag("xmin", &args.xmin)?,
        scalar_flag("xmax", &args.xmax)?,
        scalar_flag("ymin", &args.ymin)?,
        scalar_flag("ymax", &args.ymax)?,
    ];
    let width = args.width.unwrap_or(DEFAULT_SIZE);
    let height = args.height.unwrap_or(DEFAULT_SIZE);
    match bounds {
        [None, None, None, None] => Ok(Window::Fit { width, height }),
        [Some(xmin), Some(xmax), Some(ymin), Some(ymax)] => {
            Viewport::new(xmin, xmax, ymin, ymax, width, height)
                .map(Window::Fixed)
                .map_err(UsageError)
        }
        _ => Err(UsageError(
            "give all of --xmin --xmax --ymin --ymax, or none of them".into(),
        )),
    }
}

fn figure(args: &FigureArgs) -> u8 {
    let prepared = (|| {
        let (base, which) = match &args.builtin {
            Some(name) => {
                let b = Builtin::parse(name)
                    .ok_or_else(|| UsageError(format!("unknown built-in scene '{name}'")))?;
                (b.scene(), b.construction())
            }
            None => (Scene::default(), Construction::Phor),
        };
        let which = match &args.construction {
            Some(name) => Construction::parse(name)
                .ok_or_else(|| UsageError(format!("unknown construction '{name}'")))?,
            None if args.builtin.is_none() => {
                return Err(UsageError(
                    "figure needs --builtin or --construction".into(),
                ))
            }
            None => which,
        };
        Ok((build_scene(&args.scene, base)?, which, window(args)?))
    })();
    let (scene, which, win) = match prepared {
        Ok(v) => v,
        Err(UsageError(msg)) => {
            eprintln!("error E_PARSE: {msg}");
            return EXIT_PARSE;
        }
    };
    let svg = match render_figure(&scene, which, &win) {
        Ok(svg) => svg,
        Err(err) => {
            eprintln!("error {}: {err}", err.code());
            return exit_for(&err);
        }
    };
    match &args.svg_out {
        Some(path) => {
            if let Err(e) = fs::write(path, svg) {
                eprintln!("cannot write {path}: {e}");
                return EXIT_PARSE;
            }
        }
        None => print!("{svg}"),
    }
    0
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Phor(a) => run(Construction::Phor, a),
        Command::Pver(a) => run(Construction::Pver, a),
        Command::ConstructP(a) => run(Construction::P2, a),
        Command::Nu(a) => run(Construction::Nu, a),
        Command::Mu(a) => run(Construction::Mu, a),
        Command::NuGeneral(a) => run(Construction::NuGeneral, a),
        Command::Check { seed, trials } => {
            if *trials == 0 {
                eprintln!("error E_PARSE: --trials must be at least 1");
                EXIT_PARSE
            } else {
                let summary = check_suite(*seed, *trials);
                println!("{summary}");
                if summary.all_passed() {
                    0
                } else {
                    EXIT_INTERNAL
                }
            }
        }
        Command::Figure(a) => figure(a),
    };
    ExitCode::from(code)
}
