//! The four symmetrizations of a gauge and their radius factors.
//!
//! For a gauge `C` with the origin in its interior:
//! `MIN = C ∩ -C`, `HM = polar((C° - C°) / 2)`, `AM = (C - C) / 2`,
//! `MAX = conv(C ∪ -C)`. They are nested in that order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::convex2d::{convex_hull, halfplane_intersection, minkowski_sum, Polygon};
use crate::error::{GeomError, Result};
use crate::radii::{circumradius, inradius};
use crate::tol::{EPS_CMP, EPS_GEOM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Mode {
    Min,
    Hm,
    Am,
    Max,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::Min, Mode::Hm, Mode::Am, Mode::Max];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Min => "MIN",
            Mode::Hm => "HM",
            Mode::Am => "AM",
            Mode::Max => "MAX",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "MIN" => Ok(Mode::Min),
            "HM" => Ok(Mode::Hm),
            "AM" => Ok(Mode::Am),
            "MAX" => Ok(Mode::Max),
            _ => Err(format!("unknown mode {s:?} (expected MIN, HM, AM or MAX)")),
        }
    }
}

/// `(C - C) / 2`; needs no interior origin.
pub fn difference_body(c: &Polygon) -> Polygon {
    minkowski_sum(c, &c.negate()).scale_by(0.5)
}

pub fn symmetrize(c: &Polygon, mode: Mode) -> Result<Polygon> {
    if !c.is_full_dimensional() {
        return Err(GeomError::GaugeDegenerate);
    }
    match mode {
        Mode::Am => Ok(difference_body(c)),
        Mode::Max => {
            let mut pts = c.vertices().to_vec();
            pts.extend(c.vertices().iter().map(|v| -*v));
            convex_hull(&pts)
        }
        Mode::Min => {
            if !c.has_origin_interior(EPS_GEOM * c.scale()) {
                return Err(GeomError::OriginNotInterior);
            }
            let mut hs = c.facets();
            hs.extend(c.negate().facets());
            halfplane_intersection(&hs)
        }
        Mode::Hm => {
            let p = c.polar()?;
            difference_body(&p).polar()
        }
    }
}

/// `rho = r(C_AM, C_m)` and `delta = R(C_AM, C_m)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Factors {
    pub rho: f64,
    pub delta: f64,
}

pub fn factors(c: &Polygon, mode: Mode) -> Result<Factors> {
    let am = symmetrize(c, Mode::Am)?;
    let m = symmetrize(c, mode)?;
    factors_of(&am, &m)
}

pub(crate) fn factors_of(am: &Polygon, m: &Polygon) -> Result<Factors> {
    Ok(Factors {
        rho: inradius(am, m)?.rho,
        delta: circumradius(am, m)?.rho,
    })
}

/// Numerical check of `C_MIN ⊂ C_HM ⊂ C_AM ⊂ C_MAX` together with the two
/// outer containments being optimal (`R(C_MIN, C_HM) = R(C_AM, C_MAX) = 1`).
#[derive(Clone, Debug, Serialize)]
pub struct FireyReport {
    pub min_in_hm: bool,
    pub hm_in_am: bool,
    pub am_in_max: bool,
    pub r_min_hm: f64,
    pub r_am_max: f64,
    pub holds: bool,
}

pub fn verify_firey_chain(sym: &[Polygon; 4]) -> Result<FireyReport> {
    let tol = EPS_CMP * sym[3].scale();
    let [min, hm, am, max] = sym;
    let min_in_hm = hm.contains(min, tol);
    let hm_in_am = am.contains(hm, tol);
    let am_in_max = max.contains(am, tol);
    let r_min_hm = circumradius(min, hm)?.rho;
    let r_am_max = circumradius(am, max)?.rho;
    let holds = min_in_hm
        && hm_in_am
        && am_in_max
        && (r_min_hm - 1.0).abs() <= EPS_CMP
        && (r_am_max - 1.0).abs() <= EPS_CMP;
    Ok(FireyReport {
        min_in_hm,
        hm_in_am,
        am_in_max,
        r_min_hm,
        r_am_max,
        holds,
    })
}
