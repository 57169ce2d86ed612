use serde::{Deserialize, Serialize};

use super::{convex_hull, Point2, Polygon};
use crate::error::{GeomError, Result};
use crate::lp::{LinearProgram, LpStatus};
use crate::tol::EPS_GEOM;

/// Closed halfplane `{x : <normal, x> <= offset}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub normal: Point2,
    pub offset: f64,
}

impl HalfPlane {
    pub fn new(normal: Point2, offset: f64) -> Self {
        HalfPlane { normal, offset }
    }

    /// Euclidean signed distance, positive outside.
    pub fn signed_distance(&self, p: Point2) -> f64 {
        (self.normal.dot(p) - self.offset) / self.normal.norm()
    }

    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        self.signed_distance(p) <= tol
    }
}

/// Intersection of finitely many halfplanes.
///
/// Feasibility and the exact bounding box come from four LPs; the box is
/// then clipped by every halfplane, and output vertices are recomputed as
/// intersections of their two supporting lines.
pub fn halfplane_intersection(hs: &[HalfPlane]) -> Result<Polygon> {
    let mut live = Vec::with_capacity(hs.len());
    for h in hs {
        if !h.normal.is_finite() || !h.offset.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if h.normal.norm() == 0.0 {
            if h.offset < 0.0 {
                return Err(GeomError::Empty);
            }
            continue;
        }
        let n = h.normal.norm();
        live.push(HalfPlane::new(h.normal * (1.0 / n), h.offset / n));
    }
    if live.is_empty() {
        return Err(GeomError::Unbounded);
    }

    let mut ext = [0.0f64; 4];
    let mut lp_pts = Vec::with_capacity(4);
    for (k, c) in [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]].iter().enumerate() {
        let mut lp = LinearProgram::new(c)?;
        for h in &live {
            lp.add_constraint(&[h.normal.x, h.normal.y], h.offset)?;
        }
        let s = lp.solve(k as u64)?;
        match s.status {
            LpStatus::Infeasible => return Err(GeomError::Empty),
            LpStatus::Unbounded => return Err(GeomError::Unbounded),
            LpStatus::Optimal => {}
        }
        ext[k] = s.value;
        lp_pts.push(Point2::new(s.x[0], s.x[1]));
    }
    let (xlo, xhi, ylo, yhi) = (ext[0], -ext[1], ext[2], -ext[3]);
    let size = (xhi - xlo).max(yhi - ylo).max(0.0);
    let mag = xlo.abs().max(xhi.abs()).max(ylo.abs()).max(yhi.abs());
    let pad = 0.1 * size + 1e-6 * mag.max(1e-12);
    let mut ring: Vec<(Point2, Option<usize>)> = vec![
        (Point2::new(xlo - pad, ylo - pad), None),
        (Point2::new(xhi + pad, ylo - pad), None),
        (Point2::new(xhi + pad, yhi + pad), None),
        (Point2::new(xlo - pad, yhi + pad), None),
    ];
    for (k, h) in live.iter().enumerate() {
        ring = clip(&ring, h, k);
        if ring.is_empty() {
            break;
        }
    }

    let scale = size.max(mag * 1e-6).max(1e-300);
    let pts: Vec<Point2> = ring.iter().map(|p| p.0).collect();
    let area = shoelace(&pts);
    if ring.len() < 3 || area <= EPS_GEOM * scale * scale {
        let mut all = pts;
        all.extend(lp_pts);
        return convex_hull(&all);
    }

    let n = ring.len();
    let exact: Vec<Point2> = (0..n)
        .map(|i| {
            let (p, out) = ring[i];
            let inc = ring[(i + n - 1) % n].1;
            match (inc, out) {
                (Some(a), Some(b)) if a != b => match line_meet(&live[a], &live[b]) {
                    Some(q) if q.dist(p) <= 1e-6 * scale => q,
                    _ => p,
                },
                _ => p,
            }
        })
        .collect();
    convex_hull(&exact)
}

fn shoelace(p: &[Point2]) -> f64 {
    let n = p.len();
    if n < 3 {
        return 0.0;
    }
    0.5 * (0..n).map(|i| p[i].cross(p[(i + 1) % n])).sum::<f64>()
}

fn line_meet(a: &HalfPlane, b: &HalfPlane) -> Option<Point2> {
    let det = a.normal.cross(b.normal);
    if det.abs() < 1e-9 {
        return None;
    }
    Some(Point2::new(
        (a.offset * b.normal.y - b.offset * a.normal.y) / det,
        (a.normal.x * b.offset - b.normal.x * a.offset) / det,
    ))
}

// Each entry is a vertex and the id of the line carrying the edge that
// leaves it.
fn clip(ring: &[(Point2, Option<usize>)], h: &HalfPlane, k: usize) -> Vec<(Point2, Option<usize>)> {
    let n = ring.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (cur, id) = ring[i];
        let nxt = ring[(i + 1) % n].0;
        let sc = h.normal.dot(cur) - h.offset;
        let sn = h.normal.dot(nxt) - h.offset;
        if sc <= 0.0 {
            out.push((cur, id));
            if sn > 0.0 {
                out.push((cur.lerp(nxt, sc / (sc - sn)), Some(k)));
            }
        } else if sn <= 0.0 {
            out.push((cur.lerp(nxt, sc / (sc - sn)), id));
        }
    }
    out
}
