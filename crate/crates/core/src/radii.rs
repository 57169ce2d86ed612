//! Circumradius, inradius and Minkowski asymmetry via 3-variable LPs.
//!
//! `R(K, C) = min { rho : K ⊂ t + rho C }` and
//! `r(K, C) = max { rho : t + rho C ⊂ K }`. Each optimum comes with a
//! containment certificate: 2 or 3 touching points of the inner body on the
//! boundary of the outer one whose outer normals have 0 in their convex hull.

use serde::Serialize;

use crate::convex2d::{convex_hull, Point2, Polygon};
use crate::error::{GeomError, Result};
use crate::lp::{LinearProgram, LpStatus};
use crate::tol::{EPS_CMP, EPS_GEOM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Containment {
    /// `K ⊂ t + rho C`
    Circumscribed,
    /// `t + rho C ⊂ K`
    Inscribed,
}

/// A touching point and the outer unit normal of a supporting line of the
/// outer body through it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Touch {
    pub point: Point2,
    pub normal: Point2,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContainmentResult {
    pub kind: Containment,
    pub rho: f64,
    pub t: Point2,
    pub certificate: Vec<Touch>,
    /// Set for an inradius of a lower-dimensional body (rho is 0).
    pub degenerate: bool,
}

impl ContainmentResult {
    /// The pair (inner, outer) realised by this result.
    pub fn bodies(&self, k: &Polygon, c: &Polygon) -> (Polygon, Polygon) {
        let placed = c.scale_by(self.rho).translate(self.t);
        match self.kind {
            Containment::Circumscribed => (k.clone(), placed),
            Containment::Inscribed => (placed, k.clone()),
        }
    }
}

const LP_SEED: u64 = 0x5eed;

/// Circumradius of `k` with respect to a full-dimensional gauge `c`.
pub fn circumradius(k: &Polygon, c: &Polygon) -> Result<ContainmentResult> {
    if !c.is_full_dimensional() {
        return Err(GeomError::GaugeDegenerate);
    }
    if k.is_point() {
        return Ok(ContainmentResult {
            kind: Containment::Circumscribed,
            rho: 0.0,
            t: k.vertices()[0],
            certificate: Vec::new(),
            degenerate: false,
        });
    }
    let fs = c.facets();
    // variables (t_x, t_y, rho): h_K(a) - a.t <= rho b  for each facet (a, b)
    let mut lp = LinearProgram::new(&[0.0, 0.0, 1.0])?;
    let hk: Vec<f64> = fs.iter().map(|f| k.support(f.normal)).collect();
    for (f, h) in fs.iter().zip(&hk) {
        lp.add_constraint(&[-f.normal.x, -f.normal.y, -f.offset], -h)?;
    }
    lp.add_constraint(&[0.0, 0.0, -1.0], 0.0)?;
    let sol = lp.solve(LP_SEED)?;
    if sol.status != LpStatus::Optimal {
        return Err(GeomError::NumericalBreakdown(format!(
            "circumradius LP ended {:?}",
            sol.status
        )));
    }
    let t = Point2::new(sol.x[0], sol.x[1]);
    let rho = sol.x[2].max(0.0);
    let tol = EPS_CMP * k.scale().max(c.scale() * rho).max(1e-12);
    let mut cands = Vec::new();
    for (f, h) in fs.iter().zip(&hk) {
        let slack = f.normal.dot(t) + rho * f.offset - h;
        if slack <= tol {
            let v = k.vertices()[k.support_vertex(f.normal)];
            cands.push(Touch {
                point: v,
                normal: f.normal,
            });
        }
    }
    Ok(ContainmentResult {
        kind: Containment::Circumscribed,
        rho,
        t,
        certificate: if rho > 0.0 { select_certificate(&cands) } else { Vec::new() },
        degenerate: false,
    })
}

/// Inradius of `k` with respect to a full-dimensional gauge `c`.
///
/// A lower-dimensional `k` yields `rho = 0` with `degenerate` set.
pub fn inradius(k: &Polygon, c: &Polygon) -> Result<ContainmentResult> {
    if !c.is_full_dimensional() {
        return Err(GeomError::GaugeDegenerate);
    }
    if !k.is_full_dimensional() {
        return Ok(ContainmentResult {
            kind: Containment::Inscribed,
            rho: 0.0,
            t: k.vertices()[0],
            certificate: Vec::new(),
            degenerate: true,
        });
    }
    let fs = k.facets();
    // maximise rho: u.t + rho h_C(u) <= c  for each facet (u, c) of K
    let mut lp = LinearProgram::new(&[0.0, 0.0, -1.0])?;
    let hc: Vec<f64> = fs.iter().map(|f| c.support(f.normal)).collect();
    for (f, h) in fs.iter().zip(&hc) {
        lp.add_constraint(&[f.normal.x, f.normal.y, *h], f.offset)?;
    }
    lp.add_constraint(&[0.0, 0.0, -1.0], 0.0)?;
    let sol = lp.solve(LP_SEED)?;
    if sol.status != LpStatus::Optimal {
        return Err(GeomError::NumericalBreakdown(format!(
            "inradius LP ended {:?}",
            sol.status
        )));
    }
    let t = Point2::new(sol.x[0], sol.x[1]);
    let rho = sol.x[2].max(0.0);
    let tol = EPS_CMP * k.scale();
    let mut cands = Vec::new();
    for (f, h) in fs.iter().zip(&hc) {
        let slack = f.offset - f.normal.dot(t) - rho * h;
        if slack <= tol {
            let v = c.vertices()[c.support_vertex(f.normal)];
            cands.push(Touch {
                point: t + v * rho,
                normal: f.normal,
            });
        }
    }
    Ok(ContainmentResult {
        kind: Containment::Inscribed,
        rho,
        t,
        certificate: if rho > 0.0 { select_certificate(&cands) } else { Vec::new() },
        degenerate: false,
    })
}

// Smallest subset whose normals capture the origin: an opposite pair if one
// exists, otherwise the triple with the largest margin.
fn select_certificate(c: &[Touch]) -> Vec<Touch> {
    let n = c.len();
    let mut best_pair: Option<(f64, usize, usize)> = None;
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (c[i].normal, c[j].normal);
            let err = a.cross(b).abs() + (a.dot(b) + 1.0).abs();
            if a.dot(b) < 0.0 && err <= 1e-6 && best_pair.is_none_or(|p| err < p.0) {
                best_pair = Some((err, i, j));
            }
        }
    }
    if let Some((_, i, j)) = best_pair {
        return vec![c[i], c[j]];
    }
    let mut best: Option<(f64, [usize; 3])> = None;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let m = origin_margin(c[i].normal, c[j].normal, c[k].normal);
                if best.is_none_or(|b| m > b.0) {
                    best = Some((m, [i, j, k]));
                }
            }
        }
    }
    match best {
        Some((_, ids)) => ids.iter().map(|&i| c[i]).collect(),
        None => c.to_vec(),
    }
}

// Smallest barycentric coordinate of the origin in triangle (a, b, c),
// negative if outside; -inf for collinear normals.
fn origin_margin(a: Point2, b: Point2, c: Point2) -> f64 {
    let det = (b - a).cross(c - a);
    if det.abs() < 1e-12 {
        return f64::NEG_INFINITY;
    }
    let l1 = b.cross(c) / det;
    let l2 = c.cross(a) / det;
    let l3 = a.cross(b) / det;
    l1.min(l2).min(l3)
}

/// Independent check of an optimal containment: inner ⊂ outer, every touch
/// lies in the inner body and on a supporting line of the outer body with
/// the given normal, and 0 is in the hull of the normals.
pub fn verify_certificate(k: &Polygon, c: &Polygon, res: &ContainmentResult) -> bool {
    let (inner, outer) = res.bodies(k, c);
    let tol = EPS_CMP * inner.scale().max(outer.scale()).max(1.0);
    if !outer.contains(&inner, tol) {
        return false;
    }
    if res.rho <= EPS_GEOM {
        return match res.kind {
            Containment::Circumscribed => k.is_point(),
            Containment::Inscribed => res.degenerate && !k.is_full_dimensional(),
        };
    }
    let m = res.certificate.len();
    if !(2..=3).contains(&m) {
        return false;
    }
    for tch in &res.certificate {
        if !inner.contains_point(tch.point, tol) {
            return false;
        }
        let h = outer.support(tch.normal);
        if (tch.normal.dot(tch.point) - h).abs() > tol {
            return false;
        }
    }
    let normals: Vec<Point2> = res.certificate.iter().map(|t| t.normal).collect();
    match convex_hull(&normals) {
        Ok(h) => h.contains_point(Point2::ORIGIN, EPS_CMP),
        Err(_) => false,
    }
}

/// Minkowski asymmetry `s(C) = R(C, -C)` and the Minkowski center
/// `t / (s + 1)`, where `C ⊂ t - s C`.
pub fn asymmetry(c: &Polygon) -> Result<(f64, Point2)> {
    if !c.is_full_dimensional() {
        return Err(GeomError::GaugeDegenerate);
    }
    let res = circumradius(c, &c.negate())?;
    let s = if res.rho < 1.0 + 1e-12 { 1.0 } else { res.rho };
    Ok((s, res.t * (1.0 / (s + 1.0))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(f64, f64)]) -> Polygon {
        Polygon::from_points(&v.iter().map(|&(x, y)| Point2::new(x, y)).collect::<Vec<_>>())
            .unwrap()
    }

    fn tri() -> Polygon {
        let h = 3f64.sqrt() / 2.0;
        poly(&[(0.0, 1.0), (-h, -0.5), (h, -0.5)])
    }

    fn square() -> Polygon {
        poly(&[(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)])
    }

    #[test]
    fn triangle_asymmetry_is_two() {
        let (s, c) = asymmetry(&tri()).unwrap();
        assert!((s - 2.0).abs() < 1e-9);
        assert!(c.norm() < 1e-9);
    }

    #[test]
    fn symmetric_body_has_asymmetry_one() {
        let (s, c) = asymmetry(&square().translate(Point2::new(3.0, -1.0))).unwrap();
        assert_eq!(s, 1.0);
        assert!((c - Point2::new(3.0, -1.0)).norm() < 1e-9);
    }

    #[test]
    fn square_in_square() {
        let k = square().scale_by(0.5).translate(Point2::new(0.2, 0.1));
        let r = circumradius(&k, &square()).unwrap();
        assert!((r.rho - 0.5).abs() < 1e-12);
        assert!(verify_certificate(&k, &square(), &r));
        let i = inradius(&k, &square()).unwrap();
        assert!((i.rho - 0.5).abs() < 1e-12);
        assert!(verify_certificate(&k, &square(), &i));
    }

    #[test]
    fn triangle_versus_its_reflection() {
        // R(T, -T) = 2 and r(T, -T) = 1/2
        let t = tri();
        let r = circumradius(&t, &t.negate()).unwrap();
        assert!((r.rho - 2.0).abs() < 1e-9);
        assert_eq!(r.certificate.len(), 3);
        assert!(verify_certificate(&t, &t.negate(), &r));
        let i = inradius(&t, &t.negate()).unwrap();
        assert!((i.rho - 0.5).abs() < 1e-9);
        assert!(verify_certificate(&t, &t.negate(), &i));
    }

    #[test]
    fn segment_and_point_bodies() {
        let seg = poly(&[(-0.5, 0.0), (0.5, 0.0)]);
        let r = circumradius(&seg, &square()).unwrap();
        assert!((r.rho - 0.5).abs() < 1e-12);
        assert_eq!(r.certificate.len(), 2);
        assert!(verify_certificate(&seg, &square(), &r));
        let i = inradius(&seg, &square()).unwrap();
        assert!(i.degenerate && i.rho == 0.0);
        assert!(verify_certificate(&seg, &square(), &i));
        let pt = Polygon::point(Point2::new(0.3, 0.3));
        let r = circumradius(&pt, &square()).unwrap();
        assert!(r.rho.abs() < 1e-12);
        assert!(verify_certificate(&pt, &square(), &r));
    }

    #[test]
    fn degenerate_gauge_rejected() {
        let seg = poly(&[(-0.5, 0.0), (0.5, 0.0)]);
        assert_eq!(circumradius(&square(), &seg).unwrap_err(), GeomError::GaugeDegenerate);
        assert_eq!(inradius(&square(), &seg).unwrap_err(), GeomError::GaugeDegenerate);
    }

    #[test]
    fn bad_certificate_rejected() {
        let k = square().scale_by(0.5);
        let mut r = circumradius(&k, &square()).unwrap();
        r.rho *= 0.9;
        assert!(!verify_certificate(&k, &square(), &r));
    }
}
