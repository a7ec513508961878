use num_complex::Complex;

use crate::error::{GeometryError, Result};
use crate::scalar::Real;

use super::cline::Cline;
use super::isometry::Isometry;
use super::point::{Anchor, DiskPoint, IdealPoint};

/// Euclidean radius above which an arc is drawn as a diameter.
const DIAMETER_FALLBACK: f64 = 1e6;

/// Which side of an oriented geodesic a point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    On,
    Right,
}

/// Euclidean picture of a geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicShape<T> {
    /// The diameter through `±dir`.
    Diameter { dir: Complex<T> },
    /// An arc of the circle orthogonal to the unit circle.
    Arc { center: Complex<T>, radius: T },
}

/// An oriented geodesic, stored as its ideal endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic<T> {
    start: IdealPoint<T>,
    end: IdealPoint<T>,
}

impl<T: Real> Geodesic<T> {
    pub fn from_ideal(start: IdealPoint<T>, end: IdealPoint<T>) -> Result<Self> {
        if start.separation(&end) < T::lit(T::COINCIDENT) {
            return Err(GeometryError::Degenerate("geodesic endpoints coincide".into()));
        }
        Ok(Self { start, end })
    }

    pub(crate) fn from_ends_unchecked(start: IdealPoint<T>, end: IdealPoint<T>) -> Self {
        Self { start, end }
    }

    /// The geodesic through `a` and `b`, oriented from `a` towards `b`.
    pub fn through(a: Anchor<T>, b: Anchor<T>) -> Result<Self> {
        match (a, b) {
            (Anchor::Ideal(p), Anchor::Ideal(q)) => Self::from_ideal(p, q),
            (Anchor::Ideal(_), Anchor::Interior(_)) => Ok(Self::through(b, a)?.reversed()),
            (Anchor::Interior(p), _) => {
                let t = Isometry::to_origin(&p);
                let w = t.apply(b.z());
                let r = w.norm();
                if r < T::lit(T::COINCIDENT) {
                    return Err(GeometryError::Degenerate("geodesic through coincident points".into()));
                }
                let dir = w / r;
                let back = t.inverse();
                Ok(Self {
                    start: IdealPoint::from_complex(back.apply(-dir)),
                    end: IdealPoint::from_complex(back.apply(dir)),
                })
            }
        }
    }

    #[inline]
    pub fn start(&self) -> IdealPoint<T> {
        self.start
    }

    #[inline]
    pub fn end(&self) -> IdealPoint<T> {
        self.end
    }

    pub fn reversed(&self) -> Self {
        Self { start: self.end, end: self.start }
    }

    /// Whether both geodesics have the same endpoints, in either order.
    pub fn same_line(&self, other: &Self, tol: T) -> bool {
        let same = |p: IdealPoint<T>, q: IdealPoint<T>| p.separation(&q) <= tol;
        (same(self.start, other.start) && same(self.end, other.end))
            || (same(self.start, other.end) && same(self.end, other.start))
    }

    /// The isometry taking this geodesic to the real diameter, `start` to `-1`
    /// and `end` to `+1`.
    pub fn frame(&self) -> Isometry<T> {
        let (e1, e2) = (self.start.z(), self.end.z());
        let nearest = (e1 + e2) / (T::two() + (e1 - e2).norm());
        let t = Isometry::to_origin(&DiskPoint::image(nearest));
        let w = t.apply(e2);
        Isometry::rotation_about_origin(-w.im.atan2(w.re)).compose(&t)
    }

    /// Signed hyperbolic distance from `p` to the line, positive on the left.
    pub fn signed_distance(&self, p: &DiskPoint<T>) -> T {
        let w = self.frame().apply(p.z());
        (T::two() * w.im / (T::one() - w.norm_sqr())).asinh()
    }

    pub fn contains(&self, p: &DiskPoint<T>, tol: T) -> bool {
        self.signed_distance(p).abs() <= tol
    }

    pub fn side(&self, p: &DiskPoint<T>, tol: T) -> Side {
        let d = self.signed_distance(p);
        if d.abs() <= tol {
            Side::On
        } else if d > T::zero() {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn shape(&self) -> GeodesicShape<T> {
        let (e1, e2) = (self.start.z(), self.end.z());
        let s = e1 + e2;
        let radius = (e1 - e2).norm() / s.norm();
        if !(radius <= T::lit(DIAMETER_FALLBACK)) {
            let d = e2 - e1;
            return GeodesicShape::Diameter { dir: d / d.norm() };
        }
        GeodesicShape::Arc { center: s * (T::two() / s.norm_sqr()), radius }
    }

    pub fn cline(&self) -> Cline<T> {
        match self.shape() {
            GeodesicShape::Diameter { dir } => Cline::Line { point: Complex::new(T::zero(), T::zero()), dir },
            GeodesicShape::Arc { center, radius } => Cline::Circle { center, radius },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn pt(u: f64, v: f64) -> Anchor<f64> {
        DiskPoint::new(u, v).unwrap().into()
    }

    #[test]
    fn horizontal_diameter() {
        let g = Geodesic::through(pt(0.0, 0.0), pt(0.5, 0.0)).unwrap();
        assert!((g.start().theta().abs() - PI).abs() < 1e-15);
        assert!(g.end().theta().abs() < 1e-15);
        assert!(matches!(g.shape(), GeodesicShape::Diameter { .. }));
    }

    #[test]
    fn arc_through_two_points() {
        let g = Geodesic::through(pt(0.5, 0.0), pt(0.0, 0.5)).unwrap();
        match g.shape() {
            GeodesicShape::Arc { center, radius } => {
                assert!((center - Complex::new(1.25, 1.25)).norm() < 1e-12, "{center}");
                assert!((radius - 2.125_f64.sqrt()).abs() < 1e-12);
                assert!((center.norm_sqr() - radius * radius - 1.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ideal_pair() {
        let g = Geodesic::from_ideal(IdealPoint::new(0.0).unwrap(), IdealPoint::new(FRAC_PI_2).unwrap()).unwrap();
        match g.shape() {
            GeodesicShape::Arc { center, radius } => {
                assert!((center - Complex::new(1.0, 1.0)).norm() < 1e-12);
                assert!((radius - 1.0).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coincident_inputs_rejected() {
        assert!(Geodesic::through(pt(0.3, 0.2), pt(0.3, 0.2)).is_err());
        let p = IdealPoint::new(1.0_f64).unwrap();
        assert!(Geodesic::from_ideal(p, p).is_err());
    }

    #[test]
    fn frame_sends_ends_to_real_axis() {
        let g = Geodesic::through(pt(0.6, 0.1), pt(-0.2, 0.7)).unwrap();
        let f = g.frame();
        assert!((f.apply(g.start().z()) + Complex::new(1.0, 0.0)).norm() < 1e-13);
        assert!((f.apply(g.end().z()) - Complex::new(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn orientation_and_sides() {
        let g = Geodesic::through(pt(0.0, 0.0), pt(0.5, 0.0)).unwrap();
        let up = DiskPoint::new(0.1, 0.3).unwrap();
        assert_eq!(g.side(&up, 1e-12), Side::Left);
        assert_eq!(g.reversed().side(&up, 1e-12), Side::Right);
        let h = Geodesic::through(pt(0.6, 0.1), pt(0.2, 0.7)).unwrap();
        for a in [pt(0.6, 0.1), pt(0.2, 0.7)] {
            let Anchor::Interior(p) = a else { unreachable!() };
            assert!(h.contains(&p, 1e-13));
        }
    }

    #[test]
    fn ideal_anchor_orientation() {
        let w = IdealPoint::new(0.0_f64).unwrap();
        let g = Geodesic::through(pt(-0.3, 0.2), w.into()).unwrap();
        assert!(g.end().separation(&w) < 1e-14);
        let h = Geodesic::through(w.into(), pt(-0.3, 0.2)).unwrap();
        assert!(h.start().separation(&w) < 1e-14);
    }
}
