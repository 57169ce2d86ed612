use super::{Point2, Polygon};
use crate::error::{GeomError, Result};
use crate::tol::EPS_GEOM;

/// Convex hull by Andrew's monotone chain.
///
/// Near-duplicate and near-collinear points (relative to the bounding-box
/// scale) are dropped, so the result has strictly convex turns.
pub fn convex_hull(pts: &[Point2]) -> Result<Polygon> {
    if pts.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    if pts.iter().any(|p| !p.is_finite()) {
        return Err(GeomError::NonFinite);
    }
    let mut p: Vec<Point2> = pts.to_vec();
    p.sort_by(|a, b| a.lex_cmp(b));
    let (lo, hi) = (p[0], p[p.len() - 1]);
    let (mut ylo, mut yhi) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut mag: f64 = 0.0;
    for q in &p {
        ylo = ylo.min(q.y);
        yhi = yhi.max(q.y);
        mag = mag.max(q.norm_inf());
    }
    let ext = (hi.x - lo.x).max(yhi - ylo);
    // Absolute tolerances; `mag` guards against cancellation far from the origin.
    let dtol = EPS_GEOM * ext.max(mag * 1e-6);
    if ext <= dtol || ext == 0.0 {
        return Ok(Polygon::from_canonical(vec![p[0]]));
    }
    p.dedup_by(|a, b| a.dist(*b) <= dtol);

    // Drop `a` when it lies within `dtol` of the line through `o` and `b`.
    let turn = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o) - dtol * (b - o).norm();
    let mut h: Vec<Point2> = Vec::with_capacity(2 * p.len());
    for &q in &p {
        while h.len() >= 2 && turn(h[h.len() - 2], h[h.len() - 1], q) <= 0.0 {
            h.pop();
        }
        h.push(q);
    }
    let lower = h.len() + 1;
    for &q in p.iter().rev().skip(1) {
        while h.len() >= lower && turn(h[h.len() - 2], h[h.len() - 1], q) <= 0.0 {
            h.pop();
        }
        h.push(q);
    }
    h.pop();
    // Near-duplicates that survived dedup (non-adjacent in sort order).
    let mut out: Vec<Point2> = Vec::with_capacity(h.len());
    for q in h {
        if out.last().is_none_or(|l: &Point2| l.dist(q) > dtol) {
            out.push(q);
        }
    }
    while out.len() > 1 && out[0].dist(out[out.len() - 1]) <= dtol {
        out.pop();
    }
    if out.len() == 2 || out.len() == 1 {
        return Ok(Polygon::from_canonical(out));
    }
    // Wrap-around turns are already covered by the two chains; re-check the
    // whole ring once to drop anything made collinear by the dedup above.
    let ring = prune_collinear(out, dtol);
    Ok(Polygon::from_canonical(ring))
}

fn prune_collinear(mut v: Vec<Point2>, dtol: f64) -> Vec<Point2> {
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let bad = (0..n).find(|&i| {
            let o = v[(i + n - 1) % n];
            let b = v[(i + 1) % n] - o;
            (v[i] - o).cross(b) <= dtol * b.norm()
        });
        match bad {
            Some(i) => {
                v.remove(i);
            }
            None => {
                // restore the lexicographically smallest start
                let s = (0..v.len())
                    .min_by(|&a, &b| v[a].lex_cmp(&v[b]))
                    .unwrap_or(0);
                v.rotate_left(s);
                return v;
            }
        }
    }
}
