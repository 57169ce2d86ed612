//! Completions: the supercompletion, intersections of translated gauges,
//! completeness and constant width tests, the outer symmetric support and
//! the diametric-triangle construction.

use serde::Serialize;

use crate::context::GaugeContext;
use crate::convex2d::{halfplane_intersection, HalfPlane, Point2, Polygon};
use crate::diameters::{breadth_ratio, diameter};
use crate::error::{GeomError, Result};
use crate::symmetry::{difference_body, Mode};
use crate::tol::{EPS_CMP, EPS_GEOM};

#[derive(Clone, Debug, Serialize)]
pub struct CompletenessReport {
    pub complete: bool,
    /// Regular-slab normal with sub-diametral breadth, if any.
    pub witness: Option<Point2>,
    pub breadth_at_witness: f64,
    pub diameter: f64,
    /// Setwise `K = K^sup`.
    pub equals_supercompletion: bool,
    /// Every regular slab has breadth `D`.
    pub slabs_diametral: bool,
}

/// `⋂_{x ∈ X} x + D C_m`.
pub fn k_x(x: &[Point2], d: f64, cm: &Polygon) -> Result<Polygon> {
    if x.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    if !(d > 0.0 && d.is_finite()) {
        return Err(GeomError::ParamOutOfRange {
            name: "D",
            value: d,
            domain: "(0, inf)",
        });
    }
    if !cm.is_full_dimensional() {
        return Err(GeomError::GaugeDegenerate);
    }
    let fs = cm.facets();
    let mut hs = Vec::with_capacity(fs.len());
    for f in &fs {
        // min over X of a.x
        let lo = x.iter().map(|p| f.normal.dot(*p)).fold(f64::INFINITY, f64::min);
        hs.push(HalfPlane::new(f.normal, d * f.offset + lo));
    }
    halfplane_intersection(&hs)
}

/// `K^sup = ⋂_{x ∈ K} x + D_m(K, C) C_m`.
pub fn supercompletion(k: &Polygon, ctx: &GaugeContext, mode: Mode) -> Result<Polygon> {
    let d = diameter(k, ctx, mode)?.value;
    if d <= 0.0 {
        return Err(GeomError::Degenerate("supercompletion of a point"));
    }
    k_x(k.vertices(), d, ctx.sym(mode))
}

pub fn is_complete(k: &Polygon, ctx: &GaugeContext, mode: Mode) -> CompletenessReport {
    is_complete_tol(k, ctx, mode, EPS_CMP)
}

/// Completeness with a caller-supplied tolerance (relative to `D`).
pub fn is_complete_tol(k: &Polygon, ctx: &GaugeContext, mode: Mode, tol: f64) -> CompletenessReport {
    let incomplete = |d: f64| CompletenessReport {
        complete: false,
        witness: None,
        breadth_at_witness: 0.0,
        diameter: d,
        equals_supercompletion: false,
        slabs_diametral: false,
    };
    if !k.is_full_dimensional() {
        let d = diameter(k, ctx, mode).map(|r| r.value).unwrap_or(0.0);
        return incomplete(d);
    }
    let Ok(dr) = diameter(k, ctx, mode) else {
        return incomplete(f64::NAN);
    };
    let d = dr.value;
    let sym = ctx.sym(mode);
    let abs_tol = tol * d.max(1.0);

    let equals_supercompletion = match k_x(k.vertices(), d, sym) {
        Ok(sup) => sup.approx_eq(k, abs_tol * k.scale().max(1.0)),
        Err(_) => false,
    };

    let mut witness = None;
    let mut worst = f64::INFINITY;
    for f in k.facets() {
        for u in [f.normal, -f.normal] {
            let b = breadth_ratio(k, sym, u);
            if b < worst {
                worst = b;
                if b < d - abs_tol {
                    witness = Some(u);
                }
            }
        }
    }
    let slabs_diametral = witness.is_none();
    CompletenessReport {
        complete: equals_supercompletion && slabs_diametral,
        witness,
        breadth_at_witness: if witness.is_some() { worst } else { d },
        diameter: d,
        equals_supercompletion,
        slabs_diametral,
    }
}

/// `(K - K) / 2 = (D / 2) C_m` setwise, cross-checked against `w = D`.
pub fn constant_width(k: &Polygon, ctx: &GaugeContext, mode: Mode) -> bool {
    if !k.is_full_dimensional() {
        return false;
    }
    let Ok(dr) = diameter(k, ctx, mode) else {
        return false;
    };
    let d = dr.value;
    let kam = difference_body(k);
    let target = ctx.sym(mode).scale_by(d / 2.0);
    let tol = EPS_CMP * kam.scale().max(1.0);
    let setwise = kam.approx_eq(&target, tol);
    let by_width = crate::diameters::width(k, ctx, mode)
        .map(|w| (w.value - d).abs() <= EPS_CMP * d.max(1.0))
        .unwrap_or(false);
    setwise && by_width
}

#[derive(Clone, Debug, Serialize)]
pub struct DiametricCompletion {
    pub triangle: [Point2; 3],
    pub diameter: f64,
    pub completion: Polygon,
}

#[derive(Clone, Copy, Debug)]
pub struct DiametricOptions {
    /// Largest vertex count searched.
    pub max_vertices: usize,
    /// Relative slack when deciding that a pair is diametral.
    pub tol: f64,
}

impl Default for DiametricOptions {
    fn default() -> Self {
        DiametricOptions {
            max_vertices: 512,
            tol: EPS_CMP,
        }
    }
}

/// Looks for three vertices of `k` pairwise at distance `D_m(K)`; if found,
/// returns `K_X` for that triangle, checked to be complete. `Ok(None)` means
/// no diametric triangle exists among the vertices.
pub fn complete_via_diametric_simplex(
    k: &Polygon,
    ctx: &GaugeContext,
    mode: Mode,
    opts: DiametricOptions,
) -> Result<Option<DiametricCompletion>> {
    let v = k.vertices();
    if v.len() > opts.max_vertices {
        return Err(GeomError::ParamOutOfRange {
            name: "vertex count",
            value: v.len() as f64,
            domain: "at most the configured cap",
        });
    }
    let d = diameter(k, ctx, mode)?.value;
    if d <= 0.0 || v.len() < 3 {
        return Ok(None);
    }
    let sym = ctx.sym(mode);
    let ev = crate::convex2d::GaugeEvaluator::new(sym)?;
    let thr = d * (1.0 - opts.tol);
    let n = v.len();
    // adjacency of diametral pairs, then triangles in that graph
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let dij = ev.norm(v[j] - v[i]);
            if dij >= thr {
                adj[i].push((j, dij));
            }
        }
    }
    let mut best: Option<(f64, [usize; 3])> = None;
    for i in 0..n {
        for (a, &(j, dij)) in adj[i].iter().enumerate() {
            for &(l, dil) in &adj[i][a + 1..] {
                if let Some(&(_, djl)) = adj[j].iter().find(|e| e.0 == l) {
                    let m = dij.min(dil).min(djl);
                    if best.is_none_or(|b| m > b.0) {
                        best = Some((m, [i, j, l]));
                    }
                }
            }
        }
    }
    let Some((_, [i, j, l])) = best else {
        return Ok(None);
    };
    let tri = [v[i], v[j], v[l]];
    let completion = k_x(&tri, d, sym)?;
    let rep = is_complete_tol(&completion, ctx, mode, opts.tol.max(EPS_CMP));
    if !rep.complete {
        return Err(GeomError::Completion(format!(
            "K_X for a diametric triangle is not complete (breadth {} vs D {})",
            rep.breadth_at_witness, rep.diameter
        )));
    }
    Ok(Some(DiametricCompletion {
        triangle: tri,
        diameter: d,
        completion,
    }))
}

/// `A_out = bd(C°) ∩ bd(-C°)` and `C_out = ⋂_{a ∈ A_out} {x : a.x <= 1}`.
pub fn outer_symmetric_support(c: &Polygon) -> Result<(Vec<Point2>, Polygon)> {
    let p = c.polar()?;
    let q = p.negate();
    let tol = EPS_GEOM * p.scale() * 10.0;
    let (pv, qv) = (p.vertices(), q.vertices());
    let mut pts: Vec<Point2> = Vec::new();
    for i in 0..pv.len() {
        let (a, b) = (pv[i], pv[(i + 1) % pv.len()]);
        for j in 0..qv.len() {
            let (c2, d2) = (qv[j], qv[(j + 1) % qv.len()]);
            segment_meet(a, b, c2, d2, tol, &mut pts);
        }
    }
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup_by(|a, b| a.dist(*b) <= tol);
    if pts.is_empty() {
        return Err(GeomError::Unbounded);
    }
    let hs: Vec<HalfPlane> = pts.iter().map(|&a| HalfPlane::new(a, 1.0)).collect();
    let out = halfplane_intersection(&hs)?;
    Ok((pts, out))
}

// Proper crossings, touching points, and endpoints of collinear overlaps.
fn segment_meet(a: Point2, b: Point2, c: Point2, d: Point2, tol: f64, out: &mut Vec<Point2>) {
    let r = b - a;
    let s = d - c;
    let den = r.cross(s);
    let rl = r.norm();
    let sl = s.norm();
    if den.abs() <= 1e-12 * rl * sl {
        // parallel: collinear overlap?
        if (c - a).cross(r).abs() > tol * rl {
            return;
        }
        let rr = r.dot(r);
        let t0 = (c - a).dot(r) / rr;
        let t1 = (d - a).dot(r) / rr;
        let (lo, hi) = (t0.min(t1).max(0.0), t0.max(t1).min(1.0));
        if lo <= hi + tol / rl {
            out.push(a + r * lo.clamp(0.0, 1.0));
            out.push(a + r * hi.clamp(0.0, 1.0));
        }
        return;
    }
    let t = (c - a).cross(s) / den;
    let u = (c - a).cross(r) / den;
    let et = tol / rl;
    let eu = tol / sl;
    if t >= -et && t <= 1.0 + et && u >= -eu && u <= 1.0 + eu {
        out.push(a + r * t.clamp(0.0, 1.0));
    }
}
