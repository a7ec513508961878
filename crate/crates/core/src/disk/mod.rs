//! The unit-disk conformal model with curvature fixed at `k = 1`.
//!
//! Lines are arcs orthogonal to the boundary (or diameters), angles are
//! Euclidean tangent angles, and distance is the logarithm of a cross-ratio of
//! chord lengths. Everything here is computed independently of [`crate::trig`],
//! so the two can check each other.

mod cline;
mod curve;
mod geodesic;
mod isometry;
mod ops;
mod point;

pub use cline::Cline;
pub use curve::{level, Curve, CurveObject};
pub use geodesic::{Geodesic, GeodesicShape, Side};
pub use isometry::Isometry;
pub use ops::{
    angle_of_parallelism_numeric, corresponding_point, erect_perpendicular, dist, dist_closed_form, intersect, measure_angle,
    perpendicular, Figure, Perpendicular,
};
pub use point::{Anchor, DiskPoint, IdealPoint};
