//! Numerical tolerances shared across the crate.
//!
//! `EPS_GEOM` is relative to the bounding-box scale of the polygon at hand;
//! `EPS_CMP` is the absolute slack for comparisons between the outputs of
//! different pipelines (hull, LP, halfplane intersection chained together);
//! `EPS_LP` applies to LP rows normalised to unit infinity norm.

/// Collinearity and duplicate detection, relative to bounding-box scale.
pub const EPS_GEOM: f64 = 1e-9;

/// Cross-operation equality.
pub const EPS_CMP: f64 = 1e-7;

/// Feasibility slack on normalised LP rows.
pub const EPS_LP: f64 = 1e-9;
