use num_complex::Complex;

use crate::error::{domain, Result};
use crate::scalar::Real;

use super::cline::Cline;
use super::geodesic::Geodesic;
use super::ops::dist;
use super::point::{DiskPoint, IdealPoint};

/// The three kinds of curve of constant curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curve<T> {
    /// Hyperbolic circle of radius `radius` about `center`.
    Circle { center: DiskPoint<T>, radius: T },
    /// Horocycle with centre `omega` passing through `through`.
    Horocycle { omega: IdealPoint<T>, through: DiskPoint<T> },
    /// Points at signed distance `offset` from `base`; positive offsets lie to
    /// the left of the oriented base.
    Equidistant { base: Geodesic<T>, offset: T },
}

/// A curve together with its Euclidean realization in the disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveObject<T> {
    kind: Curve<T>,
    cline: Cline<T>,
}

impl<T: Real> CurveObject<T> {
    pub fn circle(center: DiskPoint<T>, radius: T) -> Result<Self> {
        if !(radius > T::zero()) || !radius.is_finite() {
            return Err(domain("circle radius", format!("{radius} is not a positive length")));
        }
        Ok(Self::from_kind(Curve::Circle { center, radius }))
    }

    /// The circle about `center` through `point`.
    pub fn circle_through(center: DiskPoint<T>, point: &DiskPoint<T>) -> Result<Self> {
        Self::circle(center, dist(&center, point)?)
    }

    pub fn horocycle(omega: IdealPoint<T>, through: DiskPoint<T>) -> Self {
        Self::from_kind(Curve::Horocycle { omega, through })
    }

    pub fn equidistant(base: Geodesic<T>, offset: T) -> Result<Self> {
        if !offset.is_finite() {
            return Err(domain("equidistant offset", "non-finite"));
        }
        Ok(Self::from_kind(Curve::Equidistant { base, offset }))
    }

    pub(crate) fn from_kind(kind: Curve<T>) -> Self {
        Self { kind, cline: realize(&kind) }
    }

    #[inline]
    pub fn kind(&self) -> &Curve<T> {
        &self.kind
    }

    /// The Euclidean line or circle carrying the curve.
    #[inline]
    pub fn realization(&self) -> Cline<T> {
        self.cline
    }

    /// Hyperbolic test of incidence; `tol` bounds the defining quantity's drift.
    pub fn contains(&self, p: &DiskPoint<T>, tol: T) -> bool {
        match &self.kind {
            Curve::Circle { center, radius } => dist(center, p).map(|d| (d - *radius).abs() <= tol).unwrap_or(false),
            Curve::Horocycle { omega, through } => (level(omega, p) - level(omega, through)).abs() <= tol,
            Curve::Equidistant { base, offset } => (base.signed_distance(p) - *offset).abs() <= tol,
        }
    }
}

/// Busemann level of `p` relative to `omega`: constant along each horocycle
/// centred at `omega`, and changing at unit rate along geodesics into `omega`.
pub fn level<T: Real>(omega: &IdealPoint<T>, p: &DiskPoint<T>) -> T {
    let z = p.z();
    ((omega.z() - z).norm_sqr() / (T::one() - z.norm_sqr())).ln()
}

fn realize<T: Real>(kind: &Curve<T>) -> Cline<T> {
    match kind {
        Curve::Circle { center, radius } => {
            let t = (*radius * T::half()).tanh();
            let c = center.z();
            let (t2, c2) = (t * t, c.norm_sqr());
            let den = T::one() - t2 * c2;
            Cline::Circle { center: c * ((T::one() - t2) / den), radius: t * (T::one() - c2) / den }
        }
        Curve::Horocycle { omega, through } => {
            let e = omega.z();
            let gap = (e - through.z()).norm_sqr();
            let r = gap / (gap + T::one() - through.z().norm_sqr());
            Cline::Circle { center: e * (T::one() - r), radius: r }
        }
        Curve::Equidistant { base, offset } => {
            if *offset == T::zero() {
                return base.cline();
            }
            let back = base.frame().inverse();
            let top = Complex::new(T::zero(), (*offset * T::half()).tanh());
            Cline::through3(base.start().z(), back.apply(top), base.end().z())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::point::Anchor;

    fn pt(u: f64, v: f64) -> DiskPoint<f64> {
        DiskPoint::new(u, v).unwrap()
    }

    fn samples(c: &Cline<f64>, n: usize) -> Vec<Complex<f64>> {
        let Cline::Circle { center, radius } = *c else { panic!("expected a circle") };
        (0..n)
            .map(|i| center + Complex::from_polar(radius, 2.0 * std::f64::consts::PI * i as f64 / n as f64))
            .filter(|z| z.norm() < 1.0 - 1e-9)
            .collect()
    }

    #[test]
    fn circle_at_origin() {
        let rho = 1.3_f64;
        let c = CurveObject::circle(DiskPoint::origin(), rho).unwrap();
        match c.realization() {
            Cline::Circle { center, radius } => {
                assert!(center.norm() < 1e-16);
                assert!((radius - (rho / 2.0).tanh()).abs() < 1e-15);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn circle_points_are_at_radius() {
        let center = pt(0.4, -0.35);
        let c = CurveObject::circle(center, 0.9).unwrap();
        for z in samples(&c.realization(), 64) {
            let d = dist(&center, &DiskPoint::from_complex(z).unwrap()).unwrap();
            assert!((d - 0.9).abs() < 1e-10);
        }
    }

    #[test]
    fn horocycle_through_origin() {
        let h = CurveObject::horocycle(IdealPoint::new(0.0_f64).unwrap(), DiskPoint::origin());
        match h.realization() {
            Cline::Circle { center, radius } => {
                assert!((center - Complex::new(0.5, 0.0)).norm() < 1e-15);
                assert!((radius - 0.5).abs() < 1e-15);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn horocycle_is_tangent_at_omega() {
        let omega = IdealPoint::new(2.1).unwrap();
        let h = CurveObject::horocycle(omega, pt(0.1, 0.3));
        let Cline::Circle { center, radius } = h.realization() else { panic!() };
        assert!((center.norm() + radius - 1.0).abs() < 1e-14);
        assert!(((center - omega.z()).norm() - radius).abs() < 1e-14);
        for z in samples(&h.realization(), 64) {
            assert!(h.contains(&DiskPoint::from_complex(z).unwrap(), 1e-9));
        }
    }

    #[test]
    fn equidistant_keeps_distance() {
        let base = Geodesic::through(Anchor::from(pt(0.5, 0.1)), Anchor::from(pt(-0.2, 0.6))).unwrap();
        for d in [0.7, -0.4] {
            let e = CurveObject::equidistant(base, d).unwrap();
            let real = e.realization();
            for end in [base.start().z(), base.end().z()] {
                assert!(real.distance(end) < 1e-12);
            }
            for z in samples(&real, 64) {
                let p = DiskPoint::from_complex(z).unwrap();
                if base.signed_distance(&p).signum() == d.signum() {
                    assert!((base.signed_distance(&p) - d).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn zero_offset_is_base() {
        let base = Geodesic::through(Anchor::from(pt(0.5, 0.1)), Anchor::from(pt(-0.2, 0.6))).unwrap();
        let e = CurveObject::equidistant(base, 0.0).unwrap();
        assert!(e.realization().same_as(&base.cline(), 1e-12));
    }

    #[test]
    fn non_positive_radius_rejected() {
        assert!(CurveObject::circle(DiskPoint::<f64>::origin(), 0.0).is_err());
        assert!(CurveObject::circle(DiskPoint::<f64>::origin(), f64::NAN).is_err());
    }
}
