//! Planar convex geometry under asymmetric gauges.
//!
//! Bodies and gauges are convex polygons. The crate computes circumradius,
//! inradius, diameter and width of a body with respect to a gauge and four
//! of its symmetrizations, builds completions, and samples the resulting
//! (r, R, D) diagrams against known inequality sets.

pub mod completion;
pub mod context;
pub mod convex2d;
pub mod diagrams;
pub mod diameters;
pub mod error;
pub mod families;
pub mod lp;
pub mod radii;
pub mod symmetry;
pub mod tol;

pub use context::GaugeContext;
pub use convex2d::{Point2, Polygon};
pub use error::{GeomError, Result};
pub use symmetry::Mode;
