#![allow(dead_code)]

use gaugediag::convex2d::{Mat2, Point2, Polygon};
use gaugediag::GaugeContext;
use proptest::prelude::*;

pub fn pts(v: &[(f64, f64)]) -> Vec<Point2> {
    v.iter().map(|&(x, y)| Point2::new(x, y)).collect()
}

/// Full-dimensional polygon from 3..=max points in [-1, 1]^2.
pub fn polygon(max: usize) -> impl Strategy<Value = Polygon> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 3..=max).prop_filter_map("thin hull", |v| {
        let p = Polygon::from_points(&pts(&v)).ok()?;
        (p.is_full_dimensional() && p.area() > 1e-2).then_some(p)
    })
}

/// Minkowski-centred gauge context.
pub fn gauge(max: usize) -> impl Strategy<Value = GaugeContext> {
    polygon(max).prop_filter_map("context", |c| GaugeContext::new(&c).ok())
}

/// Well-conditioned non-singular 2x2 matrix.
pub fn matrix() -> impl Strategy<Value = Mat2> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64)
        .prop_filter("near singular", |m| {
            let det = m.0 * m.3 - m.1 * m.2;
            det.abs() > 0.2
        })
        .prop_map(|m| [[m.0, m.1], [m.2, m.3]])
}

pub fn direction() -> impl Strategy<Value = Point2> {
    (0.0..std::f64::consts::TAU).prop_map(|t| Point2::new(t.cos(), t.sin()))
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}
