use super::{Point2, Polygon};

/// Minkowski sum by merging edge sequences sorted by polar angle.
pub fn minkowski_sum(p: &Polygon, q: &Polygon) -> Polygon {
    let (p0, ep) = edges_from_bottom(p);
    let (q0, eq) = edges_from_bottom(q);
    let mut cur = p0 + q0;
    let mut out = Vec::with_capacity(ep.len() + eq.len() + 1);
    out.push(cur);
    let (mut i, mut j) = (0, 0);
    while i < ep.len() || j < eq.len() {
        let e = if j == eq.len() {
            i += 1;
            ep[i - 1]
        } else if i == ep.len() {
            j += 1;
            eq[j - 1]
        } else {
            match angle_cmp(ep[i], eq[j]) {
                std::cmp::Ordering::Less => {
                    i += 1;
                    ep[i - 1]
                }
                std::cmp::Ordering::Greater => {
                    j += 1;
                    eq[j - 1]
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    ep[i - 1] + eq[j - 1]
                }
            }
        };
        cur = cur + e;
        out.push(cur);
    }
    if out.len() > 1 {
        // the walk closes on its start
        out.pop();
    }
    Polygon::from_points(&out).expect("sum of valid polygons")
}

// Start at the lowest vertex (ties: leftmost); edges then have
// non-decreasing polar angle in [0, 2pi).
fn edges_from_bottom(p: &Polygon) -> (Point2, Vec<Point2>) {
    let v = p.vertices();
    let n = v.len();
    let s = (0..n)
        .min_by(|&a, &b| v[a].y.total_cmp(&v[b].y).then(v[a].x.total_cmp(&v[b].x)))
        .unwrap_or(0);
    if n == 1 {
        return (v[0], Vec::new());
    }
    let e = (0..n).map(|k| v[(s + k + 1) % n] - v[(s + k) % n]).collect();
    (v[s], e)
}

fn half(e: Point2) -> u8 {
    if e.y > 0.0 || (e.y == 0.0 && e.x > 0.0) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: Point2, b: Point2) -> std::cmp::Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = a.cross(b);
        if c > 0.0 {
            std::cmp::Ordering::Less
        } else if c < 0.0 {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    })
}
