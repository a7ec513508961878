//! Hyperbolic plane geometry: closed-form trigonometry in the linear constant
//! `k`, an independent Poincare-disk model used as a numerical oracle, a
//! compass-and-straightedge construction engine over that model, and the
//! exact planner deciding which circles admit a polygonal quadrature.
//!
//! The numeric modules are generic over [`Real`] (`f32` or `f64`); the
//! aliases at the crate root fix them to `f64`.

pub mod construct;
pub mod disk;
pub mod error;
pub mod planner;
pub mod scalar;
pub mod trig;

pub use error::{GeometryError, Result};
pub use scalar::Real;

pub type Curvature = trig::Curvature<f64>;
pub type Length = trig::Length<f64>;
pub type Angle = trig::Angle<f64>;
pub type Area = trig::Area<f64>;
pub type ArcRatio = trig::ArcRatio<f64>;
pub type RightTriangle = trig::RightTriangle<f64>;
pub type GeneralTriangle = trig::GeneralTriangle<f64>;

pub type DiskPoint = disk::DiskPoint<f64>;
pub type IdealPoint = disk::IdealPoint<f64>;
pub type Geodesic = disk::Geodesic<f64>;
pub type CurveObject = disk::CurveObject<f64>;
pub type Isometry = disk::Isometry<f64>;
