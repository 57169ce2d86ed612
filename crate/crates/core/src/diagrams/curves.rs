//! Boundary curves of the (r/R, D/2R) diagrams.

use serde::{Deserialize, Serialize};

use crate::symmetry::Mode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GaugeClass {
    /// Equilateral (any) triangle gauge.
    Triangle,
    /// Union over all Minkowski-centred gauges of the general bounds.
    UnionBound,
    /// The Reuleaux triangle gauge; only the HM diagram is known.
    Reuleaux,
}

#[derive(Clone, Debug, Serialize)]
pub struct Polyline {
    pub label: String,
    /// Bodies realising the curve, when known.
    pub family: String,
    pub points: Vec<(f64, f64)>,
    pub conjectured: bool,
}

const STEP: f64 = 1e-3;

fn sample(label: &str, family: &str, t0: f64, t1: f64, f: impl Fn(f64) -> (f64, f64)) -> Polyline {
    let n = (((t1 - t0).abs() / STEP).ceil() as usize).max(1);
    let points = (0..=n)
        .map(|i| f(t0 + (t1 - t0) * i as f64 / n as f64))
        .collect();
    Polyline {
        label: label.to_string(),
        family: family.to_string(),
        points,
        conjectured: false,
    }
}

fn hline(label: &str, family: &str, y: f64, x0: f64, x1: f64) -> Polyline {
    sample(label, family, x0, x1, |x| (x, y))
}

fn vline(label: &str, family: &str, x: f64, y0: f64, y1: f64) -> Polyline {
    sample(label, family, y0, y1, |y| (x, y))
}

fn conjectured(mut p: Polyline) -> Polyline {
    p.conjectured = true;
    p
}

// Closed forms for the Reuleaux triangle: s, delta_HM, rho_HM.
fn reuleaux_constants() -> (f64, f64, f64) {
    let s3 = 3f64.sqrt();
    (1.0 / (s3 - 1.0), s3 / (11f64.sqrt() - s3), 3.0 * (s3 + 1.0) / 8.0)
}

fn reuleaux_hm() -> Vec<Polyline> {
    let (s, d, r) = reuleaux_constants();
    // r/R of the completion RT*, from R(RT*, RT) = (s+1) delta / rho - s
    let xs = 1.0 / ((s + 1.0) * d / r - s);
    let (x0, y0) = (xs / s, d / s);
    let k = -8.0 * s / (4.0 * d - (s + 1.0).powi(2)).powi(2);
    vec![
        hline("D = 2 delta R", "(1-t)L_D + tRT", d, 0.0, 1.0),
        sample("D = 2 delta r", "", xs, 1.0, |x| (x, d * x)),
        sample("-RT* to RT*", "", 0.0, 1.0, |t| (x0 + (xs - x0) * t, y0 + (xs * d - y0) * t)),
        conjectured(hline("D = 2 delta R / s", "", y0, 1.0 / (2.0 * s), x0)),
        conjectured(sample("quadratic through L_w and -T", "", y0, r, |y| {
            (k * (y - r) * (y - (2.0 * d / s - r)), y)
        })),
    ]
}

/// Sampled boundary polylines, parameter step 1e-3.
pub fn boundary_curves(mode: Mode, class: GaugeClass) -> Vec<Polyline> {
    use GaugeClass::*;
    match (mode, class) {
        (Mode::Hm, Reuleaux) => reuleaux_hm(),
        (_, Reuleaux) => Vec::new(),
        (Mode::Am, Triangle | UnionBound) => vec![
            hline("D = 2R", "(1-t)L + tC", 1.0, 0.0, 1.0),
            sample("4r + 2R = 3D", "(1-t)(-C) + tC", 0.25, 1.0, |x| (x, (2.0 * x + 1.0) / 3.0)),
            sample("(D/2R)(1-D/2R) = r/R", "", 0.5, 1.0, |y| (y * (1.0 - y), y)),
        ],
        (Mode::Max, Triangle) => vec![
            hline("D = 2R", "(1-t)L_D + tT", 1.0, 0.0, 1.0),
            sample("r = D/2", "(1-t)T + tT_MAX", 0.5, 1.0, |x| (x, x)),
            hline("D = R", "T_alpha", 0.5, 0.25, 0.5),
            sample("(D/R-1/2)(3/2-D/R) = r/R", "S_lambda", 0.5, 0.75, |y| {
                ((2.0 * y - 0.5) * (1.5 - 2.0 * y), y)
            }),
            vline("r = 0", "segments", 0.0, 0.75, 1.0),
        ],
        (Mode::Max, UnionBound) => vec![
            hline("D = 2R", "", 1.0, 0.0, 1.0),
            sample("r = D/2", "", 0.5, 1.0, |x| (x, x)),
            hline("D = R", "", 0.5, 2.0 / 9.0, 0.5),
            sample("(2D/3R)(1-2D/3R) = r/R", "", 0.5, 0.75, |y| {
                let u = 4.0 * y / 3.0;
                (u * (1.0 - u), y)
            }),
            vline("r = 0", "segments", 0.0, 0.75, 1.0),
        ],
        (Mode::Hm, Triangle) => vec![
            hline("D = 3R", "(1-t)L_D + tT", 1.5, 0.0, 1.0),
            sample("3r = D", "(1-t)T + tT_MAX", 0.5, 1.0, |x| (x, 1.5 * x)),
            hline("R = 2D/3", "T_alpha", 0.75, 0.25, 0.5),
            sample("(4/9)(D/R-3/4)(9/4-D/R) = r/R", "S_lambda", 0.75, 1.125, |y| {
                let u = 2.0 * y;
                (4.0 / 9.0 * (u - 0.75) * (2.25 - u), y)
            }),
            vline("r = 0", "segments", 0.0, 1.125, 1.5),
        ],
        (Mode::Hm, UnionBound) => {
            let y0 = 9.0 / 16.0;
            vec![
                hline("D = 3R", "", 1.5, 0.0, 1.0),
                vline("r = R", "", 1.0, 1.0, 1.5),
                sample("2r = D", "", y0, 1.0, |x| (x, x)),
                hline("D = 9R/8", "", y0, y0 * (1.0 - y0), y0),
                sample("(D/2R)(1-D/2R) = r/R", "", y0, 1.0, |y| (y * (1.0 - y), y)),
                vline("r = 0", "", 0.0, 1.0, 1.5),
            ]
        }
        (Mode::Min, Triangle) => vec![
            hline("D = 3R", "(1-t)L + tT", 1.5, 0.0, 1.0),
            sample("2r + R = D", "(1-t)(-T) + tT", 0.25, 1.0, |x| (x, x + 0.5)),
            sample("(D/3R)(1-D/3R) = r/R", "", 0.75, 1.5, |y| (4.0 / 9.0 * y * (1.5 - y), y)),
        ],
        (Mode::Min, UnionBound) => vec![
            hline("D = 3R", "", 1.5, 0.0, 1.0),
            vline("r = R", "", 1.0, 1.0, 1.5),
            sample("r + R = D", "", 0.5, 1.0, |x| (x, (x + 1.0) / 2.0)),
            hline("D = 3R/2", "", 0.75, 0.1875, 0.5),
            sample("(D/2R)(1-D/2R) = r/R", "", 0.75, 1.0, |y| (y * (1.0 - y), y)),
            vline("r = 0", "", 0.0, 1.0, 1.5),
        ],
    }
}

/// Signed distance-like margin of `(x, y)` inside the triangle-gauge region
/// of `mode`: the smallest slack of its defining inequalities.
pub fn triangle_region_margin(mode: Mode, x: f64, y: f64) -> f64 {
    let m = [
        x,
        1.0 - x,
        match mode {
            Mode::Am => (1.0 - y)
                .min(y - (2.0 * x + 1.0) / 3.0)
                .min(x - y * (1.0 - y)),
            Mode::Max => (1.0 - y)
                .min(y - x)
                .min(y - 0.5)
                .min(x - (2.0 * y - 0.5) * (1.5 - 2.0 * y)),
            Mode::Hm => {
                let u = 2.0 * y;
                (1.5 - y)
                    .min(y - 1.5 * x)
                    .min(y - 0.75)
                    .min(x - 4.0 / 9.0 * (u - 0.75) * (2.25 - u))
            }
            Mode::Min => (1.5 - y)
                .min(y - x - 0.5)
                .min(x - 4.0 / 9.0 * y * (1.5 - y)),
        },
    ];
    m.iter().copied().fold(f64::INFINITY, f64::min)
}
