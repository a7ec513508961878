use std::fmt;

use crate::error::{domain, GeometryError, Result};
use crate::scalar::Real;

/// The linear constant `k`: the distance at which concentric horocyclic
/// arcs shrink by a factor of `e`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Curvature<T>(T);

impl<T: Real> Curvature<T> {
    pub fn new(k: T) -> Result<Self> {
        if !k.is_finite() {
            return Err(GeometryError::NonFinite("curvature"));
        }
        if k <= T::zero() {
            return Err(domain("curvature", format!("k must be positive, got {k}")));
        }
        Ok(Self(k))
    }

    pub fn unit() -> Self {
        Self(T::one())
    }

    #[inline]
    pub fn k(self) -> T {
        self.0
    }

    /// `x / k`, refusing exponent arguments past the overflow guard.
    pub(crate) fn scaled(self, x: T) -> Result<T> {
        guard(x / self.0)
    }
}

/// Checks an exponent argument against the overflow guard.
pub(crate) fn guard<T: Real>(t: T) -> Result<T> {
    if !t.is_finite() {
        return Err(GeometryError::NonFinite("exponent argument"));
    }
    if t.abs() > T::lit(T::EXP_LIMIT) {
        return Err(GeometryError::OutOfRange {
            arg: t.to_f64().unwrap_or(f64::INFINITY),
            limit: T::EXP_LIMIT,
        });
    }
    Ok(t)
}

/// A non-negative segment or arc length, in the same units as `k`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Length<T>(T);

impl<T: Real> Length<T> {
    pub fn new(value: T) -> Result<Self> {
        if !value.is_finite() {
            return Err(GeometryError::NonFinite("length"));
        }
        if value < T::zero() {
            return Err(domain("length", format!("negative length {value}")));
        }
        Ok(Self(value))
    }

    pub fn zero() -> Self {
        Self(T::zero())
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }

    /// Length from a computed value that may carry a rounding-level sign error.
    pub(crate) fn computed(value: T) -> Self {
        Self(value.max(T::zero()))
    }
}

impl<T: fmt::Display> fmt::Display for Length<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An angle in radians, `0 <= radians <= pi`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle<T>(T);

impl<T: Real> Angle<T> {
    pub fn new(radians: T) -> Result<Self> {
        if !radians.is_finite() {
            return Err(GeometryError::NonFinite("angle"));
        }
        if radians < T::zero() || radians > T::PI() {
            return Err(domain("angle", format!("{radians} rad is outside [0, pi]")));
        }
        Ok(Self(radians))
    }

    pub fn from_degrees(degrees: T) -> Result<Self> {
        Self::new(degrees.to_radians())
    }

    pub fn right() -> Self {
        Self(T::FRAC_PI_2())
    }

    #[inline]
    pub fn radians(self) -> T {
        self.0
    }

    pub fn degrees(self) -> T {
        self.0.to_degrees()
    }

    pub(crate) fn computed(radians: T) -> Self {
        Self(radians.max(T::zero()).min(T::PI()))
    }
}

impl<T: fmt::Display> fmt::Display for Angle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Ratio `X = e^{x/k}` of two concentric horocyclic arcs a distance `x` apart.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ArcRatio<T>(T);

impl<T: Real> ArcRatio<T> {
    pub(crate) fn from_exponent(t: T) -> Self {
        Self(t.exp())
    }

    #[inline]
    pub fn ratio(self) -> T {
        self.0
    }
}

/// A plane, surface, or solid measure (units of `k^2` or `k^3`).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Area<T>(pub(crate) T);

impl<T: Real> Area<T> {
    pub fn new(value: T) -> Result<Self> {
        if !value.is_finite() {
            return Err(GeometryError::NonFinite("area"));
        }
        if value < T::zero() {
            return Err(domain("area", format!("negative area {value}")));
        }
        Ok(Self(value))
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }
}

impl<T: fmt::Display> fmt::Display for Area<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `cosh(x) - 1` without cancellation.
#[inline]
pub(crate) fn cosh_m1<T: Real>(x: T) -> T {
    let s = (x * T::half()).sinh();
    T::two() * s * s
}

/// Inverse of [`cosh_m1`]: the non-negative `x` with `cosh(x) - 1 = m`.
#[inline]
pub(crate) fn acosh_1p<T: Real>(m: T) -> T {
    T::two() * (m.max(T::zero()) * T::half()).sqrt().asinh()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curvature_rejects_non_positive_and_nan() {
        assert!(Curvature::new(0.0_f64).is_err());
        assert!(Curvature::new(-1.0_f64).is_err());
        assert!(matches!(Curvature::new(f64::NAN), Err(GeometryError::NonFinite(_))));
        assert_eq!(Curvature::new(2.5_f64).unwrap().k(), 2.5);
    }

    #[test]
    fn length_and_angle_ranges() {
        assert!(Length::new(-1e-300_f64).is_err());
        assert!(Length::new(f64::INFINITY).is_err());
        assert!(Angle::new(std::f64::consts::PI + 1e-12).is_err());
        assert!(Angle::new(-0.1_f64).is_err());
        let a = Angle::from_degrees(90.0_f64).unwrap();
        assert!((a.radians() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn guard_trips_past_limit() {
        let k = Curvature::new(1.0_f64).unwrap();
        assert!(k.scaled(700.0).is_ok());
        assert!(matches!(k.scaled(700.5), Err(GeometryError::OutOfRange { .. })));
    }

    #[test]
    fn cosh_m1_round_trip() {
        for &x in &[1e-9_f64, 1e-3, 0.7, 5.0] {
            let m = cosh_m1(x);
            assert!((acosh_1p(m) - x).abs() <= 1e-15 * x.max(1.0) + 1e-24);
        }
    }
}
