//! `gaugediag` command line.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 degenerate
//! input, 4 parameter out of range, 5 internal error.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gaugediag::completion::{complete_via_diametric_simplex, is_complete, supercompletion, DiametricOptions};
use gaugediag::convex2d::io::{from_json, to_json};
use gaugediag::diagrams::output::{fmt_g10, to_csv, to_svg};
use gaugediag::diagrams::{boundary_curves, sample_with_reports, GaugeClass, Sample};
use gaugediag::diameters::{diameter, width};
use gaugediag::families::{build, FamilySpec};
use gaugediag::radii::{circumradius, inradius};
use gaugediag::{GaugeContext, GeomError, Mode, Point2, Polygon};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "gaugediag", version, about = "Radii, diameters and diagrams of planar convex bodies under asymmetric gauges")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Min,
    Hm,
    Am,
    Max,
    All,
}

impl ModeArg {
    fn modes(self) -> Vec<Mode> {
        match self {
            ModeArg::Min => vec![Mode::Min],
            ModeArg::Hm => vec![Mode::Hm],
            ModeArg::Am => vec![Mode::Am],
            ModeArg::Max => vec![Mode::Max],
            ModeArg::All => Mode::ALL.to_vec(),
        }
    }

    fn single(self) -> Result<Mode, CliError> {
        match self.modes()[..] {
            [m] => Ok(m),
            _ => Err(CliError::Param("this subcommand needs a single mode".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    Triangle,
    Union,
    Reuleaux,
}

#[derive(clap::Args)]
struct GaugeArgs {
    /// Gauge polygon JSON.
    #[arg(long)]
    gauge: PathBuf,
    /// Use the gauge as given instead of moving it to its Minkowski center.
    #[arg(long)]
    no_center: bool,
}

#[derive(Subcommand)]
enum Command {
    /// r, R, D_m, w_m and the diagram point of a body.
    Compute {
        #[arg(long)]
        body: PathBuf,
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
    },
    /// Write C_m.
    Symmetrize {
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a completion of a body.
    Complete {
        #[arg(long)]
        body: PathBuf,
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Largest vertex count for the diametric-triangle search.
        #[arg(long, default_value_t = 512)]
        max_vertices: usize,
        /// Relative slack for diametral pairs.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Sample a diagram to CSV, optionally with an SVG plot.
    Diagram {
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Boundary curves drawn in the SVG; defaults to triangle for triangle gauges.
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
    },
    /// Check every applicable inequality on sampled bodies.
    Verify {
        #[command(flatten)]
        gauge: GaugeArgs,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a member of a named family.
    Family {
        /// t_alpha, s_lambda, z_lambda, reuleaux, min_equality_pair, random_hull,
        /// equilateral_t or interpolate.
        #[arg(long)]
        name: String,
        #[arg(long)]
        param: Option<f64>,
        /// Points per arc (reuleaux) or point count (random_hull).
        #[arg(long)]
        resolution: Option<usize>,
        /// Endpoints for interpolate.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        between: Option<Vec<PathBuf>>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where min_equality_pair writes its gauge.
        #[arg(long)]
        gauge_output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Io(PathBuf, std::io::Error),
    Geom(GeomError),
    Param(String),
    NotFound(String),
    /// Already reported on stdout.
    Verify,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "{m}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Geom(e) => write!(f, "{e}"),
            CliError::Param(m) => write!(f, "{m}"),
            CliError::NotFound(m) => write!(f, "{m}"),
            CliError::Verify => write!(f, "inequality violated"),
        }
    }
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        CliError::Geom(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        use GeomError::*;
        match self {
            CliError::Verify => 1,
            CliError::Parse(_) | CliError::Io(..) => 2,
            CliError::NotFound(_) => 3,
            CliError::Param(_) => 4,
            CliError::Geom(e) => match e {
                Parse(_) => 2,
                EmptyInput | NonFinite | ZeroDirection | OriginNotInterior | OriginOutside | Degenerate(_)
                | GaugeDegenerate | SingularMatrix | Empty | Unbounded => 3,
                ParamOutOfRange { .. } => 4,
                NumericalBreakdown(_) | RouteMismatch { .. } | FireyChain(_) | Completion(_) => 5,
            },
        }
    }
}

type Res<T> = Result<T, CliError>;

fn read_polygon(path: &Path) -> Res<Polygon> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    match from_json(&text) {
        Ok(p) => Ok(p.polygon),
        Err(GeomError::EmptyInput | GeomError::NonFinite) => {
            Err(CliError::Parse(format!("{}: no usable vertices", path.display())))
        }
        Err(e) => Err(CliError::Parse(format!("{}: {e}", path.display()))),
    }
}

fn load_gauge(args: &GaugeArgs) -> Res<GaugeContext> {
    let c = read_polygon(&args.gauge)?;
    Ok(if args.no_center {
        GaugeContext::uncentered(&c)?
    } else {
        GaugeContext::new(&c)?
    })
}

fn write_out(path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(p.to_path_buf(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn round10(v: f64) -> f64 {
    // + 0.0 turns -0 into 0
    fmt_g10(v).parse::<f64>().unwrap_or(v) + 0.0
}

// Rounding noise below 1e-12 of the scale is printed as 0.
fn snap(v: f64, scale: f64) -> f64 {
    if v.abs() <= 1e-12 * scale {
        0.0
    } else {
        v
    }
}

fn num(v: f64) -> Value {
    serde_json::Number::from_f64(round10(v)).map_or(Value::Null, Value::Number)
}

fn point(p: Point2) -> Value {
    json!([num(p.x), num(p.y)])
}

fn polygon_json(p: &Polygon) -> Res<String> {
    let sc = p.vertices().iter().fold(0.0f64, |m, q| m.max(q.x.abs()).max(q.y.abs()));
    let v: Vec<Point2> = p
        .vertices()
        .iter()
        .map(|q| Point2::new(round10(snap(q.x, sc)), round10(snap(q.y, sc))))
        .collect();
    Ok(to_json(&Polygon::from_points(&v)?) + "\n")
}

fn polygon_value(p: &Polygon) -> Res<Value> {
    serde_json::from_str(&polygon_json(p)?).map_err(|e| CliError::Parse(e.to_string()))
}

fn compute(body: &Path, gauge: &GaugeArgs, mode: ModeArg) -> Res<()> {
    let k = read_polygon(body)?;
    let ctx = load_gauge(gauge)?;
    let big_r = circumradius(&k, &ctx.gauge)?.rho;
    let r = inradius(&k, &ctx.gauge)?.rho;
    let modes = mode.modes();
    let mut out = Map::new();
    out.insert("s".into(), num(ctx.asymmetry));
    out.insert("r".into(), num(r));
    out.insert("R".into(), num(big_r));
    out.insert("x".into(), if big_r > 0.0 { num(r / big_r) } else { Value::Null });
    for &m in &modes {
        let d = diameter(&k, &ctx, m)?;
        let w = width(&k, &ctx, m)?;
        let y = if big_r > 0.0 { num(d.value / (2.0 * big_r)) } else { Value::Null };
        out.insert(format!("D_{m}"), num(d.value));
        out.insert(format!("w_{m}"), num(w.value));
        let pair = json!([point(d.pair[0]), point(d.pair[1])]);
        if modes.len() == 1 {
            out.insert("y".into(), y);
            out.insert("diametral_pair".into(), pair);
        } else {
            out.insert(format!("y_{m}"), y);
            out.insert(format!("diametral_pair_{m}"), pair);
        }
    }
    out.insert("centered_gauge".into(), polygon_value(&ctx.gauge)?);
    let sc = ctx.gauge.scale();
    out.insert("shift".into(), point(Point2::new(snap(ctx.shift.x, sc), snap(ctx.shift.y, sc))));
    println!("{}", Value::Object(out));
    Ok(())
}

fn complete(k: &Polygon, ctx: &GaugeContext, mode: Mode, opts: DiametricOptions) -> Res<Polygon> {
    if let Some(c) = complete_via_diametric_simplex(k, ctx, mode, opts)? {
        return Ok(c.completion);
    }
    let sup = supercompletion(k, ctx, mode)?;
    if is_complete(&sup, ctx, mode).complete {
        return Ok(sup);
    }
    Err(CliError::NotFound(
        "no diametric triangle among the vertices and the supercompletion is not complete".into(),
    ))
}

fn family(
    name: &str,
    param: Option<f64>,
    resolution: Option<usize>,
    between: Option<&[PathBuf]>,
) -> Res<gaugediag::families::FamilyBody> {
    let need = || param.ok_or_else(|| CliError::Param(format!("family {name} needs --param")));
    let spec = match name.to_ascii_lowercase().as_str() {
        "equilateral_t" | "t" => FamilySpec::EquilateralT,
        "t_alpha" => FamilySpec::TAlpha(need()?),
        "s_lambda" => FamilySpec::SLambda(need()?),
        "z_lambda" => FamilySpec::ZLambda(need()?),
        "reuleaux" => FamilySpec::Reuleaux(resolution.unwrap_or(256)),
        "min_equality_pair" => FamilySpec::MinEqualityPair(need()?),
        "random_hull" => {
            let seed = need()?;
            if seed < 0.0 || seed.fract() != 0.0 {
                return Err(CliError::Param(format!("random_hull seed must be a whole number, got {seed}")));
            }
            FamilySpec::RandomHull {
                seed: seed as u64,
                n: resolution.unwrap_or(8),
            }
        }
        "interpolate" => {
            let [a, b] = between.ok_or_else(|| CliError::Param("interpolate needs --between FROM TO".into()))? else {
                unreachable!("clap enforces two values")
            };
            FamilySpec::Interpolate(Box::new(read_polygon(a)?), Box::new(read_polygon(b)?), need()?)
        }
        other => return Err(CliError::Param(format!("unknown family {other}"))),
    };
    Ok(build(&spec)?)
}

fn first_violation(samples: &[Sample]) -> Option<&Sample> {
    samples.iter().find(|s| !s.report.all_satisfied())
}

fn run(cli: Cli) -> Res<()> {
    match cli.command {
        Command::Compute { body, gauge, mode } => compute(&body, &gauge, mode),
        Command::Symmetrize { gauge, mode, output } => {
            let ctx = load_gauge(&gauge)?;
            eprintln!("gauge shift: [{}, {}]", fmt_g10(ctx.shift.x), fmt_g10(ctx.shift.y));
            write_out(output.as_deref(), &polygon_json(ctx.sym(mode.single()?))?)
        }
        Command::Complete {
            body,
            gauge,
            mode,
            output,
            max_vertices,
            tol,
        } => {
            if !(tol > 0.0 && tol < 1.0) {
                return Err(CliError::Param(format!("--tol must lie in (0, 1), got {tol}")));
            }
            let k = read_polygon(&body)?;
            let ctx = load_gauge(&gauge)?;
            let c = complete(&k, &ctx, mode.single()?, DiametricOptions { max_vertices, tol })?;
            write_out(output.as_deref(), &polygon_json(&c)?)
        }
        Command::Diagram {
            gauge,
            mode,
            samples,
            seed,
            output,
            svg,
            class,
        } => {
            let ctx = load_gauge(&gauge)?;
            let mut records = Vec::new();
            for m in mode.modes() {
                records.extend(sample_with_reports(&ctx, m, samples, seed)?.into_iter().map(|s| s.record));
            }
            write_out(Some(&output), &to_csv(&records))?;
            if let Some(path) = svg {
                let m = mode.single()?;
                let class = match class {
                    Some(ClassArg::Triangle) => GaugeClass::Triangle,
                    Some(ClassArg::Union) => GaugeClass::UnionBound,
                    Some(ClassArg::Reuleaux) => GaugeClass::Reuleaux,
                    None if ctx.is_triangle() => GaugeClass::Triangle,
                    None => GaugeClass::UnionBound,
                };
                let title = format!("{m} diagram, {samples} samples, seed {seed}");
                write_out(Some(&path), &to_svg(&records, &boundary_curves(m, class), &title))?;
            }
            Ok(())
        }
        Command::Verify {
            gauge,
            mode,
            samples,
            seed,
        } => {
            let ctx = load_gauge(&gauge)?;
            let mut summary = Map::new();
            for m in mode.modes() {
                let run = sample_with_reports(&ctx, m, samples, seed)?;
                if let Some(bad) = first_violation(&run) {
                    let v = bad.report.violations().next().expect("violation");
                    eprintln!(
                        "{m} sample {}: {} fails (lhs {}, rhs {})",
                        bad.record.body_id,
                        v.name,
                        fmt_g10(v.lhs),
                        fmt_g10(v.rhs)
                    );
                    print!("{}", polygon_json(&bad.body)?);
                    return Err(CliError::Verify);
                }
                let margin = run.iter().map(|s| s.report.min_margin()).fold(f64::INFINITY, f64::min);
                summary.insert(m.to_string(), json!({ "samples": samples, "violations": 0, "min_margin": num(margin) }));
            }
            println!("{}", Value::Object(summary));
            Ok(())
        }
        Command::Family {
            name,
            param,
            resolution,
            between,
            output,
            gauge_output,
        } => {
            let fb = family(&name, param, resolution, between.as_deref())?;
            write_out(output.as_deref(), &polygon_json(&fb.body)?)?;
            match (fb.gauge, gauge_output) {
                (Some(g), Some(path)) => write_out(Some(&path), &polygon_json(&g)?),
                (Some(_), None) => {
                    eprintln!("note: {name} also defines a gauge; pass --gauge-output to save it");
                    Ok(())
                }
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Verify) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.code())
        }
    }
}
