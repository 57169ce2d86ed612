//! Planar convex polygons in canonical form and the basic operations on them.
//!
//! A [`Polygon`] is the convex hull of finitely many points, stored as its
//! vertex list in counter-clockwise order starting at the lexicographically
//! smallest vertex, with duplicate and collinear points removed. Points and
//! segments are valid (lower-dimensional) polygons.

mod halfplane;
mod hull;
pub mod io;
mod minkowski;

pub use halfplane::{halfplane_intersection, HalfPlane};
pub use hull::convex_hull;
pub use minkowski::minkowski_sum;

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::tol::EPS_GEOM;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3d cross product.
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_inf(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    /// Rotation by +90 degrees.
    pub fn perp(self) -> Point2 {
        Point2::new(-self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn normalized(self) -> Option<Point2> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }

    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    pub fn lerp(self, o: Point2, t: f64) -> Point2 {
        self + (o - self) * t
    }

    pub fn lex_cmp(&self, o: &Point2) -> std::cmp::Ordering {
        self.x.total_cmp(&o.x).then(self.y.total_cmp(&o.y))
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

/// 2x2 matrix in row-major order.
pub type Mat2 = [[f64; 2]; 2];

/// Convex polygon in canonical form.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    verts: Vec<Point2>,
}

impl Polygon {
    /// Convex hull of `pts`, canonicalised.
    pub fn from_points(pts: &[Point2]) -> Result<Polygon> {
        convex_hull(pts)
    }

    pub fn point(p: Point2) -> Polygon {
        Polygon { verts: vec![p] }
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_canonical(verts: Vec<Point2>) -> Polygon {
        debug_assert!(!verts.is_empty());
        Polygon { verts }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.verts.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.verts.len() == 2
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.verts.len() >= 3
    }

    pub fn bbox(&self) -> (Point2, Point2) {
        let mut lo = self.verts[0];
        let mut hi = self.verts[0];
        for v in &self.verts[1..] {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// Length scale used for relative tolerances: the larger of the bounding
    /// box extent and the largest coordinate magnitude, floored at 1e-300.
    pub fn scale(&self) -> f64 {
        let (lo, hi) = self.bbox();
        let ext = (hi.x - lo.x).max(hi.y - lo.y);
        let mag = lo.norm_inf().max(hi.norm_inf());
        ext.max(mag).max(1e-300)
    }

    pub fn area(&self) -> f64 {
        let n = self.verts.len();
        if n < 3 {
            return 0.0;
        }
        let mut a = 0.0;
        for i in 0..n {
            a += self.verts[i].cross(self.verts[(i + 1) % n]);
        }
        0.5 * a
    }

    pub fn centroid_of_vertices(&self) -> Point2 {
        let n = self.verts.len() as f64;
        let s = self.verts.iter().fold(Point2::ORIGIN, |a, &v| a + v);
        s * (1.0 / n)
    }

    /// Outward facets with unit normals, edge `i` running from vertex `i` to
    /// vertex `i + 1`. Empty unless full-dimensional.
    pub fn facets(&self) -> Vec<HalfPlane> {
        let n = self.verts.len();
        if n < 3 {
            return Vec::new();
        }
        (0..n)
            .map(|i| {
                let a = self.verts[i];
                let b = self.verts[(i + 1) % n];
                let e = b - a;
                let nrm = Point2::new(e.y, -e.x) * (1.0 / e.norm());
                HalfPlane::new(nrm, nrm.dot(a))
            })
            .collect()
    }

    /// Support function value `max_{v} <s, v>`.
    pub fn support(&self, s: Point2) -> f64 {
        self.verts
            .iter()
            .map(|v| s.dot(*v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Support value and the face attaining it (one vertex or an edge).
    pub fn support_face(&self, s: Point2) -> Result<(f64, Vec<Point2>)> {
        if s.norm() == 0.0 {
            return Err(GeomError::ZeroDirection);
        }
        let h = self.support(s);
        let tol = EPS_GEOM * self.scale() * s.norm();
        let face = self
            .verts
            .iter()
            .copied()
            .filter(|v| s.dot(*v) >= h - tol)
            .collect();
        Ok((h, face))
    }

    /// Index of a vertex attaining the support value (lowest index on ties).
    pub fn support_vertex(&self, s: Point2) -> usize {
        let mut best = 0;
        let mut bv = f64::NEG_INFINITY;
        for (i, v) in self.verts.iter().enumerate() {
            let d = s.dot(*v);
            if d > bv {
                bv = d;
                best = i;
            }
        }
        best
    }

    pub fn translate(&self, t: Point2) -> Polygon {
        Polygon::from_points(&self.verts.iter().map(|&v| v + t).collect::<Vec<_>>())
            .expect("translate of a valid polygon")
    }

    /// Homothety about the origin; negative factors reflect.
    pub fn scale_by(&self, k: f64) -> Polygon {
        if k == 0.0 {
            return Polygon::point(Point2::ORIGIN);
        }
        Polygon::from_points(&self.verts.iter().map(|&v| v * k).collect::<Vec<_>>())
            .expect("scale of a valid polygon")
    }

    pub fn negate(&self) -> Polygon {
        self.scale_by(-1.0)
    }

    pub fn linear_map(&self, m: Mat2) -> Result<Polygon> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let size = m.iter().flatten().map(|x| x * x).sum::<f64>();
        if !det.is_finite() || det.abs() <= 1e-14 * size {
            return Err(GeomError::SingularMatrix);
        }
        let pts: Vec<Point2> = self
            .verts
            .iter()
            .map(|v| Point2::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y))
            .collect();
        Polygon::from_points(&pts)
    }

    /// Point membership with absolute slack `tol`.
    pub fn contains_point(&self, p: Point2, tol: f64) -> bool {
        match self.verts.len() {
            1 => self.verts[0].dist(p) <= tol,
            2 => dist_to_segment(p, self.verts[0], self.verts[1]) <= tol,
            _ => self.facets().iter().all(|f| f.signed_distance(p) <= tol),
        }
    }

    /// `other ⊂ self` up to absolute slack `tol`.
    pub fn contains(&self, other: &Polygon, tol: f64) -> bool {
        if self.is_full_dimensional() {
            let fs = self.facets();
            other
                .verts
                .iter()
                .all(|&q| fs.iter().all(|f| f.signed_distance(q) <= tol))
        } else {
            other.verts.iter().all(|&q| self.contains_point(q, tol))
        }
    }

    /// Mutual containment up to `tol`.
    pub fn approx_eq(&self, other: &Polygon, tol: f64) -> bool {
        self.contains(other, tol) && other.contains(self, tol)
    }

    /// True if the origin is an interior point with margin `tol`.
    pub fn has_origin_interior(&self, tol: f64) -> bool {
        self.is_full_dimensional() && self.facets().iter().all(|f| f.offset > tol)
    }

    /// Gauge (Minkowski functional) of `x` with respect to this body.
    ///
    /// Returns `+inf` along recession directions when the origin is on the
    /// boundary.
    pub fn gauge_norm(&self, x: Point2) -> Result<f64> {
        if !self.is_full_dimensional() {
            return Err(GeomError::Degenerate("gauge needs a full-dimensional body"));
        }
        let tol = EPS_GEOM * self.scale();
        let mut val: f64 = 0.0;
        for f in self.facets() {
            if f.offset < -tol {
                return Err(GeomError::OriginOutside);
            }
            let ax = f.normal.dot(x);
            if f.offset <= tol {
                if ax > EPS_GEOM * x.norm() {
                    return Ok(f64::INFINITY);
                }
            } else {
                val = val.max(ax / f.offset);
            }
        }
        Ok(val)
    }

    /// Polar body `{y : <x, y> <= 1 for x in self}`.
    pub fn polar(&self) -> Result<Polygon> {
        if !self.is_full_dimensional() {
            return Err(GeomError::Degenerate("polar needs a full-dimensional body"));
        }
        let tol = EPS_GEOM * self.scale();
        let fs = self.facets();
        if fs.iter().any(|f| f.offset <= tol) {
            return Err(GeomError::OriginNotInterior);
        }
        let pts: Vec<Point2> = fs.iter().map(|f| f.normal * (1.0 / f.offset)).collect();
        Polygon::from_points(&pts)
    }

    /// Boundary point `z` with `z = lambda s`, `lambda > 0`, for a body with
    /// the origin in its interior.
    pub fn chord_through_origin(&self, s: Point2) -> Result<Point2> {
        if s.norm() == 0.0 {
            return Err(GeomError::ZeroDirection);
        }
        let g = self.gauge_norm(s)?;
        if !(g > 0.0 && g.is_finite()) {
            return Err(GeomError::OriginNotInterior);
        }
        Ok(s * (1.0 / g))
    }

    /// Hausdorff distance between the two polygons.
    pub fn hausdorff(&self, other: &Polygon) -> f64 {
        directed_hausdorff(self, other).max(directed_hausdorff(other, self))
    }

    /// Euclidean distance from `p` to this polygon (0 inside).
    pub fn distance_to_point(&self, p: Point2) -> f64 {
        if self.is_full_dimensional() && self.contains_point(p, 0.0) {
            return 0.0;
        }
        let n = self.verts.len();
        if n == 1 {
            return self.verts[0].dist(p);
        }
        (0..n)
            .map(|i| dist_to_segment(p, self.verts[i], self.verts[(i + 1) % n]))
            .fold(f64::INFINITY, f64::min)
    }
}

fn directed_hausdorff(a: &Polygon, b: &Polygon) -> f64 {
    // The farthest point of a convex polygon from a convex set is a vertex.
    a.verts
        .iter()
        .map(|&v| b.distance_to_point(v))
        .fold(0.0, f64::max)
}

pub(crate) fn dist_to_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let d = b - a;
    let l2 = d.dot(d);
    if l2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(d) / l2).clamp(0.0, 1.0);
    p.dist(a + d * t)
}

/// Fast repeated gauge evaluation for a fixed body with the origin in its
/// interior. Large bodies use an angular binary search.
#[derive(Clone, Debug)]
pub struct GaugeEvaluator {
    // w_i = a_i / b_i: the gauge is max_i <w_i, x>.
    w: Vec<Point2>,
    // angle of vertex i, rotated so that angles are increasing from index 0
    ang: Vec<f64>,
    start: usize,
}

impl GaugeEvaluator {
    pub fn new(body: &Polygon) -> Result<Self> {
        if !body.is_full_dimensional() {
            return Err(GeomError::GaugeDegenerate);
        }
        let tol = EPS_GEOM * body.scale();
        let fs = body.facets();
        if fs.iter().any(|f| f.offset <= tol) {
            return Err(GeomError::OriginNotInterior);
        }
        let w: Vec<Point2> = fs.iter().map(|f| f.normal * (1.0 / f.offset)).collect();
        let raw: Vec<f64> = body.vertices().iter().map(|v| v.y.atan2(v.x)).collect();
        let start = (0..raw.len())
            .min_by(|&i, &j| raw[i].total_cmp(&raw[j]))
            .unwrap_or(0);
        let n = raw.len();
        let ang = (0..n).map(|k| raw[(start + k) % n]).collect();
        Ok(GaugeEvaluator { w, ang, start })
    }

    pub fn norm(&self, x: Point2) -> f64 {
        let n = self.w.len();
        if n <= 24 {
            return self.w.iter().map(|w| w.dot(x)).fold(0.0, f64::max);
        }
        if x.x == 0.0 && x.y == 0.0 {
            return 0.0;
        }
        let th = x.y.atan2(x.x);
        // k = number of rotated vertex angles <= th; the ray lies on the edge
        // leaving rotated vertex k - 1 (cyclically).
        let k = self.ang.partition_point(|&a| a <= th);
        let edge = (self.start + k + n - 1) % n;
        let mut best: f64 = 0.0;
        for d in [n - 1, 0, 1] {
            best = best.max(self.w[(edge + d) % n].dot(x));
        }
        best
    }
}
