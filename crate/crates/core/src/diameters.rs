//! Diameter, width, s-length and s-breadth of a body in a symmetrized gauge.
//!
//! `D_m(K, C) = 2 R((K - K) / 2, C_m)`, computed both as an LP and as the
//! largest `C_m`-norm of a vertex difference; the two must agree.
//! `w_m(K, C) = 2 r((K - K) / 2, C_m)`.

use serde::{Deserialize, Serialize};

use crate::context::GaugeContext;
use crate::convex2d::{GaugeEvaluator, Point2, Polygon};
use crate::error::{GeomError, Result};
use crate::radii::{circumradius, inradius};
use crate::symmetry::{difference_body, Mode};
use crate::tol::EPS_CMP;

#[derive(Clone, Debug, Serialize)]
pub struct DiameterResult {
    pub value: f64,
    /// Vertex pair realising the diameter.
    pub pair: [Point2; 2],
    pub mode: Mode,
    pub lp_value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct WidthResult {
    pub value: f64,
    /// Unit direction of a minimal breadth.
    pub direction: Point2,
    pub degenerate: bool,
}

/// Gauge used for an s-length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LengthKind {
    Min,
    Hm,
    Am,
    /// The asymmetric gauge `C` itself.
    MinAsym,
}

/// Normalisation of an s-breadth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BreadthKind {
    Am,
    Max,
}

/// Diameter of `k` in the symmetric gauge `sym`, by both routes. `mode`
/// only labels the result.
pub fn diameter_wrt(k: &Polygon, sym: &Polygon, mode: Mode) -> Result<DiameterResult> {
    let ev = GaugeEvaluator::new(sym)?;
    let v = k.vertices();
    let mut best = (0.0, [v[0], v[0]]);
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = ev.norm(v[j] - v[i]);
            if d > best.0 {
                best = (d, [v[i], v[j]]);
            }
        }
    }
    let lp_value = 2.0 * circumradius(&difference_body(k), sym)?.rho;
    if (lp_value - best.0).abs() > EPS_CMP * best.0.max(1.0) {
        return Err(GeomError::RouteMismatch {
            lp: lp_value,
            pairs: best.0,
        });
    }
    Ok(DiameterResult {
        value: best.0,
        pair: best.1,
        mode,
        lp_value,
    })
}

pub fn diameter(k: &Polygon, ctx: &GaugeContext, mode: Mode) -> Result<DiameterResult> {
    diameter_wrt(k, ctx.sym(mode), mode)
}

/// Width of `k` in the symmetric gauge `sym`.
pub fn width_wrt(k: &Polygon, sym: &Polygon) -> Result<WidthResult> {
    if !k.is_full_dimensional() {
        let direction = if k.is_segment() {
            (k.vertices()[1] - k.vertices()[0]).perp().normalized().unwrap_or(Point2::new(1.0, 0.0))
        } else {
            Point2::new(1.0, 0.0)
        };
        return Ok(WidthResult {
            value: 0.0,
            direction,
            degenerate: true,
        });
    }
    let kam = difference_body(k);
    let value = 2.0 * inradius(&kam, sym)?.rho;
    let direction = kam
        .facets()
        .iter()
        .map(|f| f.normal)
        .min_by(|a, b| breadth_ratio(k, sym, *a).total_cmp(&breadth_ratio(k, sym, *b)))
        .unwrap_or(Point2::new(1.0, 0.0));
    Ok(WidthResult {
        value,
        direction,
        degenerate: false,
    })
}

pub fn width(k: &Polygon, ctx: &GaugeContext, mode: Mode) -> Result<WidthResult> {
    width_wrt(k, ctx.sym(mode))
}

/// `(h_K(u) + h_K(-u)) / h_S(u)` for a symmetric gauge `S`.
pub fn breadth_ratio(k: &Polygon, sym: &Polygon, u: Point2) -> f64 {
    (k.support(u) + k.support(-u)) / sym.support(u)
}

// Directions where the breadth ratio can be extremal.
fn critical_directions(k: &Polygon, sym: &Polygon) -> Vec<Point2> {
    let mut dirs: Vec<Point2> = sym.facets().iter().map(|f| f.normal).collect();
    let kk = difference_body(k);
    if kk.is_full_dimensional() {
        dirs.extend(kk.facets().iter().map(|f| f.normal));
    } else if kk.is_segment() {
        let d = kk.vertices()[1] - kk.vertices()[0];
        if let Some(u) = d.perp().normalized() {
            dirs.push(u);
            dirs.push(-u);
        }
    }
    dirs
}

/// Diameter as the largest breadth ratio over critical directions.
pub fn diameter_by_breadths(k: &Polygon, sym: &Polygon) -> f64 {
    critical_directions(k, sym)
        .iter()
        .map(|&u| breadth_ratio(k, sym, u))
        .fold(0.0, f64::max)
}

/// Width as the smallest breadth ratio over critical directions.
pub fn width_by_breadths(k: &Polygon, sym: &Polygon) -> f64 {
    critical_directions(k, sym)
        .iter()
        .map(|&u| breadth_ratio(k, sym, u))
        .fold(f64::INFINITY, f64::min)
}

/// Longest chord of `k` parallel to `s`, as a vector in direction `s`.
pub fn longest_chord(k: &Polygon, s: Point2) -> Result<Point2> {
    let u = s.normalized().ok_or(GeomError::ZeroDirection)?;
    let kk = crate::convex2d::minkowski_sum(k, &k.negate());
    if kk.is_full_dimensional() {
        return kk.chord_through_origin(s);
    }
    // K - K is a centred segment or the origin.
    let d = kk.vertices()[kk.len() - 1];
    let tol = EPS_CMP * kk.scale();
    if kk.is_segment() && d.cross(u).abs() <= tol {
        return Ok(u * d.norm());
    }
    Ok(Point2::ORIGIN)
}

/// s-length: the `C_x`-norm of the longest chord of `k` in direction `s`.
pub fn s_length(k: &Polygon, ctx: &GaugeContext, s: Point2, kind: LengthKind) -> Result<f64> {
    let z = longest_chord(k, s)?;
    let g = match kind {
        LengthKind::Min => ctx.sym(Mode::Min),
        LengthKind::Hm => ctx.sym(Mode::Hm),
        LengthKind::Am => ctx.sym(Mode::Am),
        LengthKind::MinAsym => &ctx.gauge,
    };
    g.gauge_norm(z)
}

/// s-breadth of `k` in direction `s`.
pub fn s_breadth(k: &Polygon, ctx: &GaugeContext, s: Point2, kind: BreadthKind) -> Result<f64> {
    if s.norm() == 0.0 {
        return Err(GeomError::ZeroDirection);
    }
    let bk = k.support(s) + k.support(-s);
    let (hp, hm) = (ctx.gauge.support(s), ctx.gauge.support(-s));
    Ok(match kind {
        BreadthKind::Am => 2.0 * bk / (hp + hm),
        BreadthKind::Max => bk / hp.max(hm),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> Polygon {
        let h = 3f64.sqrt() / 2.0;
        Polygon::from_points(&[
            Point2::new(0.0, 1.0),
            Point2::new(-h, -0.5),
            Point2::new(h, -0.5),
        ])
        .unwrap()
    }

    #[test]
    fn triangle_in_itself() {
        let ctx = GaugeContext::new(&tri()).unwrap();
        let t = ctx.gauge.clone();
        let dmax = diameter(&t, &ctx, Mode::Max).unwrap().value;
        let dhm = diameter(&t, &ctx, Mode::Hm).unwrap().value;
        let dmin = diameter(&t, &ctx, Mode::Min).unwrap().value;
        let dam = diameter(&t, &ctx, Mode::Am).unwrap().value;
        assert!((dmax - 2.0).abs() < 1e-9);
        assert!((dhm - 3.0).abs() < 1e-9);
        assert!((dmin - 3.0).abs() < 1e-9);
        assert!((dam - 2.0).abs() < 1e-9);
        for m in Mode::ALL {
            let w = width(&t, &ctx, m).unwrap().value;
            let o = width_by_breadths(&t, ctx.sym(m));
            assert!((w - o).abs() < 1e-9, "{m}: {w} vs {o}");
            let d = diameter_by_breadths(&t, ctx.sym(m));
            let e = diameter(&t, &ctx, m).unwrap().value;
            assert!((d - e).abs() < 1e-9, "{m}");
        }
    }

    #[test]
    fn segment_body() {
        let ctx = GaugeContext::new(&tri()).unwrap();
        let seg = Polygon::from_points(&[Point2::new(-0.5, 0.0), Point2::new(0.5, 0.0)]).unwrap();
        let w = width(&seg, &ctx, Mode::Am).unwrap();
        assert!(w.degenerate && w.value == 0.0);
        assert!((w.direction.x.abs()) < 1e-12);
        let z = longest_chord(&seg, Point2::new(2.0, 0.0)).unwrap();
        assert!((z - Point2::new(1.0, 0.0)).norm() < 1e-12);
        let z = longest_chord(&seg, Point2::new(0.0, 1.0)).unwrap();
        assert_eq!(z, Point2::ORIGIN);
    }

    #[test]
    fn s_length_and_breadth() {
        let ctx = GaugeContext::new(&tri()).unwrap();
        let t = ctx.gauge.clone();
        let s = Point2::new(0.0, 1.0);
        // chord of T - T along the axis has length 3
        let z = longest_chord(&t, s).unwrap();
        assert!((z.y - 1.5).abs() < 1e-12);
        let lam = s_length(&t, &ctx, s, LengthKind::Am).unwrap();
        assert!((lam - 1.5 / ctx.sym(Mode::Am).chord_through_origin(s).unwrap().y).abs() < 1e-12);
        let b = s_breadth(&t, &ctx, s, BreadthKind::Am).unwrap();
        assert!((b - 2.0).abs() < 1e-12);
        let b = s_breadth(&t, &ctx, s, BreadthKind::Max).unwrap();
        assert!((b - 1.5).abs() < 1e-12);
        assert_eq!(
            s_breadth(&t, &ctx, Point2::ORIGIN, BreadthKind::Am).unwrap_err(),
            GeomError::ZeroDirection
        );
    }
}
