//! (r/R, D_m/2R) diagrams: points, inequality checks, boundary curves,
//! seeded sampling and a falsification run for the triangle-dominance
//! conjecture.

pub mod curves;
pub mod inequalities;
pub mod output;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::context::GaugeContext;
use crate::convex2d::{Point2, Polygon};
use crate::diameters::width;
use crate::error::Result;
use crate::families::{self, interpolate, normalize_in, random_hull, substream, Normalization};
use crate::symmetry::Mode;

pub use curves::{boundary_curves, triangle_region_margin, GaugeClass, Polyline};
pub use inequalities::{check, measure, verify_inequalities, Inequality, InequalityReport, Measured};

#[derive(Clone, Debug, Serialize)]
pub struct DiagramRecord {
    pub body_id: String,
    pub family: String,
    pub mode: Mode,
    pub r: f64,
    #[serde(rename = "R")]
    pub big_r: f64,
    #[serde(rename = "D")]
    pub d: f64,
    pub w: f64,
    pub x: f64,
    pub y: f64,
}

/// A record with the body it came from and its inequality report.
#[derive(Clone, Debug)]
pub struct Sample {
    pub record: DiagramRecord,
    pub body: Polygon,
    pub report: InequalityReport,
}

fn evaluate(k: &Polygon, ctx: &GaugeContext, mode: Mode, id: String, family: &str) -> Result<Sample> {
    let m = measure(k, ctx, mode)?;
    let w = width(k, ctx, mode)?.value;
    let record = DiagramRecord {
        body_id: id,
        family: family.to_string(),
        mode,
        r: m.r,
        big_r: m.big_r,
        d: m.d,
        w,
        x: m.r / m.big_r,
        y: m.d / (2.0 * m.big_r),
    };
    Ok(Sample {
        record,
        body: k.clone(),
        report: check(&m, ctx, mode),
    })
}

/// `(r/R, D_m/2R)` of `k` in the gauge of `ctx`.
pub fn diagram_point(k: &Polygon, ctx: &GaugeContext, mode: Mode) -> Result<DiagramRecord> {
    Ok(evaluate(k, ctx, mode, String::new(), "")?.record)
}

/// Body `i` of a sampling run: 60% random hulls, 20% family members, 20% interpolants
/// toward the gauge; every body is normalised to R = 1 with t = 0.
pub fn sample_body(ctx: &GaugeContext, seed: u64, i: u64) -> Result<(Polygon, &'static str)> {
    let mut rng = substream(seed, i);
    let c = &ctx.gauge;
    let u: f64 = rng.gen();
    let hull = |rng: &mut rand_chacha::ChaCha8Rng| {
        let n = rng.gen_range(3..=12);
        random_hull(rng.gen(), n, Normalization::OptInGauge(c))
    };
    if u < 0.6 {
        return Ok((hull(&mut rng)?, "random_hull"));
    }
    if u < 0.8 {
        let (k, fam) = match rng.gen_range(0..6) {
            0 => (families::t_alpha(rng.gen_range(1.0 / 3.0..=2.0 / 3.0))?, "T_alpha"),
            1 => (families::s_lambda(rng.gen_range(0.5..=1.0))?, "S_lambda"),
            2 => (families::z_lambda(rng.gen_range(0.01..0.99))?, "Z_lambda"),
            3 => (c.negate(), "neg_gauge"),
            4 => (ctx.sym(Mode::ALL[rng.gen_range(0..4)]).clone(), "symmetrization"),
            _ => {
                let t: f64 = rng.gen_range(0.0..std::f64::consts::PI);
                let d = Point2::new(t.cos(), t.sin());
                (Polygon::from_points(&[-d, d])?, "segment")
            }
        };
        return Ok((normalize_in(&k, c)?, fam));
    }
    let k = hull(&mut rng)?;
    let t = rng.gen_range(0.0..=1.0);
    Ok((normalize_in(&interpolate(&k, c, t)?, c)?, "interpolant"))
}

/// `n` samples with inequality reports, deterministic per seed and
/// independent of the thread count.
pub fn sample_with_reports(ctx: &GaugeContext, mode: Mode, n: usize, seed: u64) -> Result<Vec<Sample>> {
    (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let (k, fam) = sample_body(ctx, seed, i)?;
            evaluate(&k, ctx, mode, format!("{seed}-{i}"), fam)
        })
        .collect()
}

pub fn sample_diagram(ctx: &GaugeContext, mode: Mode, n: usize, seed: u64) -> Result<Vec<DiagramRecord>> {
    Ok(sample_with_reports(ctx, mode, n, seed)?
        .into_iter()
        .map(|s| s.record)
        .collect())
}

/// Labelled reference bodies for a triangle gauge `T` (in the coordinates
/// of [`families`]): the gauge, its reflection, `T_m`, the edge segment
/// and the median segment.
pub fn anchor_bodies(mode: Mode) -> Vec<(&'static str, Polygon)> {
    let t = families::triangle();
    let tm = crate::symmetry::symmetrize(&t, mode).expect("triangle is centred");
    let edge = Polygon::from_points(&[families::P2, families::P3]).expect("segment");
    let median = families::s_lambda(1.0).expect("in range");
    vec![("S", t.clone()), ("-S", t.negate()), ("S_m", tm), ("L_D", edge), ("L_w", median)]
}

/// Anchor records for the triangle gauge in `mode`.
pub fn anchor_records(mode: Mode) -> Result<Vec<DiagramRecord>> {
    let ctx = GaugeContext::new(&families::triangle())?;
    anchor_bodies(mode)
        .into_iter()
        .map(|(name, k)| Ok(evaluate(&k, &ctx, mode, name.to_string(), "anchor")?.record))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub gauge: Polygon,
    pub body: Polygon,
    pub x: f64,
    pub y: f64,
    pub margin: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureOutcome {
    pub label: &'static str,
    pub gauges: usize,
    pub bodies_per_gauge: usize,
    pub checked: usize,
    pub min_margin: f64,
    pub counterexamples: Vec<Counterexample>,
}

/// Falsification run: is every MAX diagram point of random centred gauges
/// inside the triangle-gauge region? Only ever reports; never a proof.
pub fn dominance_conjecture(gauges: usize, bodies: usize, seed: u64, tol: f64) -> Result<ConjectureOutcome> {
    let per_gauge: Vec<(f64, Vec<Counterexample>)> = (0..gauges as u64)
        .into_par_iter()
        .map(|g| {
            let mut rng = substream(seed ^ 0xc0_17ec, g);
            let n = rng.gen_range(3..=10);
            let c = random_hull(rng.gen(), n, Normalization::None)?;
            let ctx = GaugeContext::new(&c)?;
            let body_seed: u64 = rng.gen();
            let mut worst = f64::INFINITY;
            let mut bad = Vec::new();
            for i in 0..bodies as u64 {
                let (k, _) = sample_body(&ctx, body_seed, i)?;
                let m = measure(&k, &ctx, Mode::Max)?;
                let (x, y) = (m.r / m.big_r, m.d / (2.0 * m.big_r));
                let margin = triangle_region_margin(Mode::Max, x, y);
                worst = worst.min(margin);
                if margin < -tol {
                    bad.push(Counterexample {
                        gauge: ctx.gauge.clone(),
                        body: k,
                        x,
                        y,
                        margin,
                    });
                }
            }
            Ok((worst, bad))
        })
        .collect::<Result<_>>()?;
    let min_margin = per_gauge.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    Ok(ConjectureOutcome {
        label: "CONJECTURED",
        gauges,
        bodies_per_gauge: bodies,
        checked: gauges * bodies,
        min_margin,
        counterexamples: per_gauge.into_iter().flat_map(|p| p.1).collect(),
    })
}
