//! A gauge together with its asymmetry, symmetrizations and factors,
//! computed once and reused by every functional.

use serde::Serialize;

use crate::convex2d::{Point2, Polygon};
use crate::error::{GeomError, Result};
use crate::radii::{asymmetry, circumradius};
use crate::symmetry::{factors_of, symmetrize, verify_firey_chain, Factors, FireyReport, Mode};
use crate::tol::EPS_GEOM;

#[derive(Clone, Debug)]
pub struct GaugeContext {
    /// The gauge, translated to its Minkowski center unless built uncentered.
    pub gauge: Polygon,
    /// Minkowski asymmetry `s(C)`.
    pub asymmetry: f64,
    /// Translation applied to the input gauge.
    pub shift: Point2,
    pub centered: bool,
    sym: [Polygon; 4],
    factors: [Factors; 4],
    // R(C_m, C)
    sym_radius: [f64; 4],
    pub firey: FireyReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ContextSummary {
    pub asymmetry: f64,
    pub shift: Point2,
    pub centered: bool,
    pub factors: Vec<(Mode, Factors)>,
    pub firey_chain_holds: bool,
}

impl GaugeContext {
    /// Centres `c` at its Minkowski center and precomputes everything.
    /// Fails if the symmetrization chain does not hold numerically.
    pub fn new(c: &Polygon) -> Result<Self> {
        let (s, center) = asymmetry(c)?;
        let gauge = c.translate(-center);
        let ctx = Self::build(gauge, s, -center, true)?;
        if !ctx.firey.holds {
            return Err(GeomError::FireyChain(format!("{:?}", ctx.firey)));
        }
        Ok(ctx)
    }

    /// Uses `c` as given; the origin must be interior.
    pub fn uncentered(c: &Polygon) -> Result<Self> {
        if !c.is_full_dimensional() {
            return Err(GeomError::GaugeDegenerate);
        }
        if !c.has_origin_interior(EPS_GEOM * c.scale()) {
            return Err(GeomError::OriginNotInterior);
        }
        let (s, _) = asymmetry(c)?;
        Self::build(c.clone(), s, Point2::ORIGIN, false)
    }

    fn build(gauge: Polygon, s: f64, shift: Point2, centered: bool) -> Result<Self> {
        let sym = [
            symmetrize(&gauge, Mode::Min)?,
            symmetrize(&gauge, Mode::Hm)?,
            symmetrize(&gauge, Mode::Am)?,
            symmetrize(&gauge, Mode::Max)?,
        ];
        let mut factors = [Factors { rho: 0.0, delta: 0.0 }; 4];
        let mut sym_radius = [0.0; 4];
        for m in Mode::ALL {
            factors[m.index()] = factors_of(&sym[2], &sym[m.index()])?;
            sym_radius[m.index()] = circumradius(&sym[m.index()], &gauge)?.rho;
        }
        let firey = verify_firey_chain(&sym)?;
        Ok(GaugeContext {
            gauge,
            asymmetry: s,
            shift,
            centered,
            sym,
            factors,
            sym_radius,
            firey,
        })
    }

    pub fn sym(&self, m: Mode) -> &Polygon {
        &self.sym[m.index()]
    }

    pub fn factors(&self, m: Mode) -> Factors {
        self.factors[m.index()]
    }

    /// `R(C_m, C)`.
    pub fn sym_radius(&self, m: Mode) -> f64 {
        self.sym_radius[m.index()]
    }

    /// True if the gauge is a triangle (up to tolerance).
    pub fn is_triangle(&self) -> bool {
        self.gauge.len() == 3
    }

    pub fn summary(&self) -> ContextSummary {
        ContextSummary {
            asymmetry: self.asymmetry,
            shift: self.shift,
            centered: self.centered,
            factors: Mode::ALL.iter().map(|&m| (m, self.factors(m))).collect(),
            firey_chain_holds: self.firey.holds,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centres_a_shifted_triangle() {
        let h = 3f64.sqrt() / 2.0;
        let t = Polygon::from_points(&[
            Point2::new(1.0, 2.0),
            Point2::new(1.0 - h, 0.5),
            Point2::new(1.0 + h, 0.5),
        ])
        .unwrap();
        let ctx = GaugeContext::new(&t).unwrap();
        assert!((ctx.asymmetry - 2.0).abs() < 1e-9);
        assert!((ctx.shift - Point2::new(-1.0, -1.0)).norm() < 1e-9);
        assert!(ctx.is_triangle());
        assert!((ctx.sym_radius(Mode::Max) - 2.0).abs() < 1e-9);
        assert!((ctx.sym_radius(Mode::Min) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn uncentered_requires_interior_origin() {
        let t = Polygon::from_points(&[
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(
            GaugeContext::uncentered(&t).unwrap_err(),
            GeomError::OriginNotInterior
        );
        let ctx = GaugeContext::uncentered(&t.translate(Point2::new(-0.1, -0.1))).unwrap();
        assert!(!ctx.centered);
    }
}
