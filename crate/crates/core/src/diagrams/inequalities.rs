//! Per-mode inequality lists relating r, R and D_m.
//!
//! Every inequality is stored as `lhs <= rhs`; the margin is
//! `(rhs - lhs) / R`.

use serde::Serialize;

use crate::context::GaugeContext;
use crate::convex2d::Polygon;
use crate::diameters::diameter;
use crate::error::{GeomError, Result};
use crate::radii::{circumradius, inradius};
use crate::symmetry::Mode;
use crate::tol::EPS_CMP;

#[derive(Clone, Debug, Serialize)]
pub struct Inequality {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub satisfied: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    pub mode: Mode,
    pub items: Vec<Inequality>,
}

impl InequalityReport {
    pub fn all_satisfied(&self) -> bool {
        self.items.iter().all(|i| i.satisfied)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Inequality> {
        self.items.iter().filter(|i| !i.satisfied)
    }

    pub fn min_margin(&self) -> f64 {
        self.items.iter().map(|i| i.margin).fold(f64::INFINITY, f64::min)
    }

    pub fn get(&self, name: &str) -> Option<&Inequality> {
        self.items.iter().find(|i| i.name == name)
    }
}

/// Radii and diameters of one body, everything the inequality lists need.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Measured {
    pub r: f64,
    pub big_r: f64,
    pub d: f64,
    pub d_am: f64,
}

pub fn measure(k: &Polygon, ctx: &GaugeContext, mode: Mode) -> Result<Measured> {
    if k.is_point() {
        return Err(GeomError::Degenerate("point body"));
    }
    let big_r = circumradius(k, &ctx.gauge)?.rho;
    let r = inradius(k, &ctx.gauge)?.rho;
    let d = diameter(k, ctx, mode)?.value;
    let d_am = if mode == Mode::Am {
        d
    } else {
        diameter(k, ctx, Mode::Am)?.value
    };
    Ok(Measured { r, big_r, d, d_am })
}

pub fn verify_inequalities(k: &Polygon, ctx: &GaugeContext, mode: Mode) -> Result<InequalityReport> {
    Ok(check(&measure(k, ctx, mode)?, ctx, mode))
}

struct List {
    big_r: f64,
    tol: f64,
    items: Vec<Inequality>,
}

impl List {
    fn le(&mut self, name: &'static str, lhs: f64, rhs: f64) {
        let margin = (rhs - lhs) / self.big_r;
        self.items.push(Inequality {
            name,
            lhs,
            rhs,
            margin,
            satisfied: margin >= -self.tol,
        });
    }
}

/// Comparison slack, overridable through `GAUGE_EPS_CMP`.
pub fn cmp_tolerance() -> f64 {
    std::env::var("GAUGE_EPS_CMP")
        .ok()
        .and_then(|v| v.parse::<f64>().ok())
        .filter(|v| v.is_finite() && *v > 0.0)
        .unwrap_or(EPS_CMP)
}

/// Evaluates every inequality that applies to `mode` and the gauge class.
pub fn check(m: &Measured, ctx: &GaugeContext, mode: Mode) -> InequalityReport {
    let Measured { r, big_r: rr, d, d_am } = *m;
    let s = ctx.asymmetry;
    let f = ctx.factors(mode);
    let q = ctx.sym_radius(mode);
    let tri = ctx.is_triangle() && ctx.centered;
    let mut l = List {
        big_r: rr,
        tol: cmp_tolerance(),
        items: Vec::new(),
    };
    let y = d / (2.0 * rr);

    l.le("0 <= r", 0.0, r);
    l.le("r <= R", r, rr);
    l.le("rho_m D_AM <= D_m", f.rho * d_am, d);
    l.le("D_m <= delta_m D_AM", d, f.delta * d_am);
    if ctx.centered {
        l.le("delta_m r <= D_m/2", f.delta * r, d / 2.0);
        l.le("D_m/2 <= delta_m R", d / 2.0, f.delta * rr);
        l.le("rho_m (s r + R) <= (s+1) D_m/2", f.rho * (s * r + rr), (s + 1.0) * d / 2.0);
        l.le("r + R <= R(C_m,C) D_m", r + rr, q * d);
        l.le("R <= D_m", rr, d);
    }

    match mode {
        Mode::Am => {
            l.le("D <= 2R", d, 2.0 * rr);
            l.le("4r + 2R <= 3D", 4.0 * r + 2.0 * rr, 3.0 * d);
            l.le("(D/2R)(1-D/2R) <= r/R", y * (1.0 - y) * rr, r);
        }
        Mode::Max => {
            // D_MAX >= 2R/3 needs only 0 in C
            l.le("2R/3 <= D", 2.0 * rr / 3.0, d);
            if ctx.centered {
                l.le("D/2 <= R", d / 2.0, rr);
                l.le("r <= D/2", r, d / 2.0);
                l.le("s r + R <= s D", s * r + rr, s * d);
                l.le("R <= D", rr, d);
                let u = 2.0 * d / (3.0 * rr);
                l.le("(2D/3R)(1-2D/3R) <= r/R", u * (1.0 - u) * rr, r);
            }
            if tri {
                let u = d / rr;
                l.le("(D/R-1/2)(3/2-D/R) <= r/R", (u - 0.5) * (1.5 - u) * rr, r);
            }
        }
        Mode::Hm if ctx.centered => {
            l.le("D/2 <= delta R", d / 2.0, f.delta * rr);
            l.le("delta r <= D/2", f.delta * r, d / 2.0);
            l.le("s r + R <= (s+1)/(2 rho) D", s * r + rr, (s + 1.0) / (2.0 * f.rho) * d);
            l.le("r + R <= 2s/(s+1) D", r + rr, 2.0 * s / (s + 1.0) * d);
            l.le("9R/8 <= D", 9.0 * rr / 8.0, d);
            l.le("D <= 3R", d, 3.0 * rr);
            l.le("2r <= D", 2.0 * r, d);
            l.le("(D/2R)(1-D/2R) <= r/R", y * (1.0 - y) * rr, r);
            if tri {
                l.le("3r <= D", 3.0 * r, d);
                l.le("R <= 2D/3", rr, 2.0 * d / 3.0);
                let u = d / rr;
                l.le("(4/9)(D/R-3/4)(9/4-D/R) <= r/R", 4.0 / 9.0 * (u - 0.75) * (2.25 - u) * rr, r);
            }
        }
        Mode::Min if ctx.centered => {
            l.le("D <= (s+1)R", d, (s + 1.0) * rr);
            l.le("(s+1)r <= D", (s + 1.0) * r, d);
            l.le("s r + R <= (s+1)/2 D", s * r + rr, (s + 1.0) / 2.0 * d);
            l.le("r + R <= D", r + rr, d);
            l.le("3R/2 <= D", 1.5 * rr, d);
            l.le("D <= 3R", d, 3.0 * rr);
            l.le("(D/2R)(1-D/2R) <= r/R", y * (1.0 - y) * rr, r);
            if tri {
                l.le("2r + R <= D", 2.0 * r + rr, d);
                let u = d / (3.0 * rr);
                l.le("(D/3R)(1-D/3R) <= r/R", u * (1.0 - u) * rr, r);
            }
        }
        Mode::Hm | Mode::Min => {}
    }
    InequalityReport { mode, items: l.items }
}
