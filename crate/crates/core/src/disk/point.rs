use num_complex::Complex;

use crate::error::{domain, GeometryError, Result};
use crate::scalar::Real;

/// A point strictly inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint<T> {
    z: Complex<T>,
}

impl<T: Real> DiskPoint<T> {
    /// Rejects points at or beyond `1 - BOUNDARY_GUARD` from the centre.
    pub fn new(u: T, v: T) -> Result<Self> {
        Self::from_complex(Complex::new(u, v))
    }

    pub fn from_complex(z: Complex<T>) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(GeometryError::NonFinite("disk point"));
        }
        if z.norm() > T::one() - T::lit(T::BOUNDARY_GUARD) {
            return Err(domain("disk point", format!("({}, {}) is not inside the disk", z.re, z.im)));
        }
        Ok(Self { z })
    }

    pub fn origin() -> Self {
        Self { z: Complex::new(T::zero(), T::zero()) }
    }

    /// The point at hyperbolic distance `r` from the origin in direction `theta`.
    pub fn polar(r: T, theta: T) -> Result<Self> {
        if r < T::zero() {
            return Err(domain("disk point", "negative radius"));
        }
        Self::from_complex(Complex::from_polar((r * T::half()).tanh(), theta))
    }

    /// Image of an interior point under a map known to preserve the disk.
    pub(crate) fn image(z: Complex<T>) -> Self {
        Self { z }
    }

    #[inline]
    pub fn z(&self) -> Complex<T> {
        self.z
    }

    #[inline]
    pub fn u(&self) -> T {
        self.z.re
    }

    #[inline]
    pub fn v(&self) -> T {
        self.z.im
    }
}

/// A point of the boundary circle, `e^{i theta}` with `theta` in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealPoint<T> {
    theta: T,
}

impl<T: Real> IdealPoint<T> {
    pub fn new(theta: T) -> Result<Self> {
        if !theta.is_finite() {
            return Err(GeometryError::NonFinite("ideal point"));
        }
        Ok(Self::from_complex(Complex::from_polar(T::one(), theta)))
    }

    pub(crate) fn from_complex(z: Complex<T>) -> Self {
        Self { theta: z.im.atan2(z.re) }
    }

    #[inline]
    pub fn theta(&self) -> T {
        self.theta
    }

    #[inline]
    pub fn z(&self) -> Complex<T> {
        Complex::from_polar(T::one(), self.theta)
    }

    /// Angular separation along the boundary, in `[0, pi]`.
    pub fn separation(&self, other: &Self) -> T {
        let w = other.z() * self.z().conj();
        w.im.atan2(w.re).abs()
    }
}

/// Either kind of point; geodesics and angles accept both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Anchor<T> {
    Interior(DiskPoint<T>),
    Ideal(IdealPoint<T>),
}

impl<T: Real> Anchor<T> {
    pub fn z(&self) -> Complex<T> {
        match self {
            Anchor::Interior(p) => p.z(),
            Anchor::Ideal(p) => p.z(),
        }
    }
}

impl<T> From<DiskPoint<T>> for Anchor<T> {
    fn from(p: DiskPoint<T>) -> Self {
        Anchor::Interior(p)
    }
}

impl<T> From<IdealPoint<T>> for Anchor<T> {
    fn from(p: IdealPoint<T>) -> Self {
        Anchor::Ideal(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_guard() {
        assert!(DiskPoint::new(0.5_f64, 0.5).is_ok());
        assert!(DiskPoint::new(1.0_f64, 0.0).is_err());
        assert!(DiskPoint::new(1.0_f64 - 1e-11, 0.0).is_err());
        assert!(DiskPoint::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn ideal_angle_wraps() {
        let p = IdealPoint::new(3.0 * std::f64::consts::PI).unwrap();
        assert!((p.theta().abs() - std::f64::consts::PI).abs() < 1e-12);
        let q = IdealPoint::new(-0.1_f64).unwrap();
        assert!((p.separation(&q) - (std::f64::consts::PI - 0.1)).abs() < 1e-12);
    }
}
