//! Closed-form extremal bodies and seeded random hulls.
//!
//! Coordinates use the equilateral triangle `T = conv{p1, p2, p3}` with
//! `p1 = (0, 1)`, `p2 = (-√3/2, -1/2)`, `p3 = (√3/2, -1/2)`, which is
//! Minkowski-centred with circumradius 1 about the origin.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convex2d::{halfplane_intersection, minkowski_sum, Point2, Polygon};
use crate::error::{GeomError, Result};
use crate::radii::circumradius;

const H: f64 = 0.866_025_403_784_438_6; // √3 / 2

pub const P1: Point2 = Point2::new(0.0, 1.0);
pub const P2: Point2 = Point2::new(-H, -0.5);
pub const P3: Point2 = Point2::new(H, -0.5);

#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    EquilateralT,
    TAlpha(f64),
    SLambda(f64),
    ZLambda(f64),
    /// Points per circular arc.
    Reuleaux(usize),
    /// Asymmetry `s` of the gauge `T ∩ s(-T)`.
    MinEqualityPair(f64),
    Interpolate(Box<Polygon>, Box<Polygon>, f64),
    RandomHull { seed: u64, n: usize },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::EquilateralT => "EQUILATERAL_T",
            FamilySpec::TAlpha(_) => "T_ALPHA",
            FamilySpec::SLambda(_) => "S_LAMBDA",
            FamilySpec::ZLambda(_) => "Z_LAMBDA",
            FamilySpec::Reuleaux(_) => "REULEAUX",
            FamilySpec::MinEqualityPair(_) => "MIN_EQUALITY_PAIR",
            FamilySpec::Interpolate(..) => "INTERPOLATE",
            FamilySpec::RandomHull { .. } => "RANDOM_HULL",
        }
    }
}

/// A body, plus its gauge for families that come as a pair.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyBody {
    pub body: Polygon,
    pub gauge: Option<Polygon>,
}

fn out_of_range(name: &'static str, value: f64, domain: &'static str) -> GeomError {
    GeomError::ParamOutOfRange {
        name,
        value,
        domain,
    }
}

fn poly(p: &[Point2]) -> Polygon {
    Polygon::from_points(p).expect("finite family coordinates")
}

pub fn triangle() -> Polygon {
    poly(&[P1, P2, P3])
}

pub fn t_alpha(a: f64) -> Result<Polygon> {
    if !(1.0 / 3.0 - 1e-12..=2.0 / 3.0 + 1e-12).contains(&a) {
        return Err(out_of_range("alpha", a, "[1/3, 2/3]"));
    }
    let b = 1.0 - a;
    Ok(poly(&[P1 * a + P2 * b, P2 * a + P3 * b, P3 * a + P1 * b]))
}

pub fn s_lambda(l: f64) -> Result<Polygon> {
    if !(0.5..=1.0).contains(&l) {
        return Err(out_of_range("lambda", l, "[1/2, 1]"));
    }
    let q1 = (P2 + P3) * 0.5;
    let q2 = P1 * l + P3 * (1.0 - l);
    let q3 = P1 * l + P2 * (1.0 - l);
    Ok(poly(&[q1, q2, q3]))
}

pub fn z_lambda(l: f64) -> Result<Polygon> {
    if !(l > 0.0 && l < 1.0) {
        return Err(out_of_range("lambda", l, "(0, 1)"));
    }
    Ok(poly(&[
        Point2::new(-H, -0.5),
        Point2::new(H, -0.5),
        Point2::new(l * H, 1.0 - l / 2.0),
        Point2::new(-l * H, 1.0 - l / 2.0),
    ]))
}

/// Inscribed polygon of the Reuleaux triangle `⋂ p_i + √3 B`, with
/// `per_arc` vertices on each arc (arc endpoints are the `p_i`).
pub fn reuleaux(per_arc: usize) -> Result<Polygon> {
    if per_arc < 3 {
        return Err(out_of_range("resolution", per_arc as f64, "at least 3"));
    }
    let p = [P1, P2, P3];
    let r = 3f64.sqrt();
    let mut pts = Vec::with_capacity(3 * per_arc);
    for i in 0..3 {
        // arc centred at p[i] from p[i+1] to p[i+2]
        let c = p[i];
        let (a, b) = (p[(i + 1) % 3] - c, p[(i + 2) % 3] - c);
        let (ta, mut tb) = (a.y.atan2(a.x), b.y.atan2(b.x));
        if tb < ta {
            tb += std::f64::consts::TAU;
        }
        for k in 0..per_arc {
            let t = ta + (tb - ta) * k as f64 / per_arc as f64;
            pts.push(if k == 0 { p[(i + 1) % 3] } else { c + Point2::new(t.cos(), t.sin()) * r });
        }
    }
    Polygon::from_points(&pts)
}

/// `(K, C) = (-T, T ∩ s(-T))`.
pub fn min_equality_pair(s: f64) -> Result<(Polygon, Polygon)> {
    if !(1.0..=2.0).contains(&s) {
        return Err(out_of_range("s", s, "[1, 2]"));
    }
    let t = triangle();
    let mut hs = t.facets();
    hs.extend(t.negate().scale_by(s).facets());
    Ok((t.negate(), halfplane_intersection(&hs)?))
}

/// `(1 - t) K1 + t K2`.
pub fn interpolate(k1: &Polygon, k2: &Polygon, t: f64) -> Result<Polygon> {
    if !(0.0..=1.0).contains(&t) {
        return Err(out_of_range("t", t, "[0, 1]"));
    }
    Ok(minkowski_sum(&k1.scale_by(1.0 - t), &k2.scale_by(t)))
}

#[derive(Clone, Copy, Debug)]
pub enum Normalization<'a> {
    None,
    /// Translate and scale so that `K ⊂ C` optimally with `t = 0`.
    OptInGauge(&'a Polygon),
}

/// Independent stream for item `index` of a run seeded with `seed`.
pub fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix(seed ^ splitmix(index.wrapping_add(0x9e37_79b9_7f4a_7c15))))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Hull of `n` uniform points in `[-1, 1]^2`; degenerate draws are retried
/// (up to 16 times) from fresh substreams.
pub fn random_hull(seed: u64, n: usize, norm: Normalization) -> Result<Polygon> {
    if n < 3 {
        return Err(out_of_range("n", n as f64, "at least 3"));
    }
    for attempt in 0..16 {
        let mut rng = substream(seed, attempt);
        let pts: Vec<Point2> = (0..n)
            .map(|_| Point2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let k = Polygon::from_points(&pts)?;
        if !k.is_full_dimensional() || k.area() < 1e-6 {
            continue;
        }
        return match norm {
            Normalization::None => Ok(k),
            Normalization::OptInGauge(c) => normalize_in(&k, c),
        };
    }
    Err(GeomError::Degenerate("16 degenerate random draws"))
}

/// Rescales `k` so that `R(k, c) = 1` with translation vector 0.
pub fn normalize_in(k: &Polygon, c: &Polygon) -> Result<Polygon> {
    let r = circumradius(k, c)?;
    if r.rho <= 0.0 {
        return Err(GeomError::Degenerate("point body"));
    }
    Ok(k.translate(-r.t).scale_by(1.0 / r.rho))
}

pub fn build(spec: &FamilySpec) -> Result<FamilyBody> {
    let single = |b: Polygon| FamilyBody {
        body: b,
        gauge: None,
    };
    Ok(match spec {
        FamilySpec::EquilateralT => single(triangle()),
        FamilySpec::TAlpha(a) => single(t_alpha(*a)?),
        FamilySpec::SLambda(l) => single(s_lambda(*l)?),
        FamilySpec::ZLambda(l) => single(z_lambda(*l)?),
        FamilySpec::Reuleaux(n) => single(reuleaux(*n)?),
        FamilySpec::MinEqualityPair(s) => {
            let (k, c) = min_equality_pair(*s)?;
            FamilyBody {
                body: k,
                gauge: Some(c),
            }
        }
        FamilySpec::Interpolate(a, b, t) => single(interpolate(a, b, *t)?),
        FamilySpec::RandomHull { seed, n } => single(random_hull(*seed, *n, Normalization::None)?),
    })
}
