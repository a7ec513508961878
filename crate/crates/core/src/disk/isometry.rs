use num_complex::Complex;

use crate::scalar::Real;

use super::curve::{Curve, CurveObject};
use super::geodesic::Geodesic;
use super::point::{Anchor, DiskPoint, IdealPoint};

/// An isometry of the disk, stored in normal form
/// `z -> (a w + b) / (conj(b) w + conj(a))` with `|a|^2 - |b|^2 = 1`, where
/// `w = conj(z)` for orientation-reversing maps and `w = z` otherwise.
///
/// Every isometry is a product of at most three reflections; the normal form
/// keeps composition chains from growing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry<T> {
    a: Complex<T>,
    b: Complex<T>,
    reversing: bool,
}

impl<T: Real> Isometry<T> {
    pub fn identity() -> Self {
        Self { a: Complex::new(T::one(), T::zero()), b: Complex::new(T::zero(), T::zero()), reversing: false }
    }

    fn normalized(a: Complex<T>, b: Complex<T>, reversing: bool) -> Self {
        let det = a.norm_sqr() - b.norm_sqr();
        let s = det.sqrt();
        Self { a: a / s, b: b / s, reversing }
    }

    /// Euclidean rotation about the origin.
    pub fn rotation_about_origin(phi: T) -> Self {
        Self { a: Complex::from_polar(T::one(), phi * T::half()), b: Complex::new(T::zero(), T::zero()), reversing: false }
    }

    /// The transvection along the diameter through `p` that sends `p` to the origin.
    pub fn to_origin(p: &DiskPoint<T>) -> Self {
        let m = p.z();
        let s = (T::one() - m.norm_sqr()).sqrt();
        Self { a: Complex::new(T::one() / s, T::zero()), b: -m / s, reversing: false }
    }

    /// Complex conjugation: reflection in the real diameter.
    pub fn conjugation() -> Self {
        Self { reversing: true, ..Self::identity() }
    }

    /// Translation by hyperbolic distance `d` along the real diameter, towards `+1`.
    pub fn real_translation(d: T) -> Self {
        let h = d * T::half();
        Self { a: Complex::new(h.cosh(), T::zero()), b: Complex::new(h.sinh(), T::zero()), reversing: false }
    }

    pub fn rotation(center: &DiskPoint<T>, phi: T) -> Self {
        let t = Self::to_origin(center);
        t.inverse().compose(&Self::rotation_about_origin(phi)).compose(&t)
    }

    pub fn reflection(g: &Geodesic<T>) -> Self {
        let f = g.frame();
        f.inverse().compose(&Self::conjugation()).compose(&f)
    }

    /// Moves every point of `g` a distance `d` along it, from `start` towards `end`.
    pub fn translation_along(g: &Geodesic<T>, d: T) -> Self {
        let f = g.frame();
        f.inverse().compose(&Self::real_translation(d)).compose(&f)
    }

    /// The composite of reflections applied in order (first reflection first).
    pub fn reflections(lines: &[Geodesic<T>]) -> Self {
        lines.iter().fold(Self::identity(), |acc, g| Self::reflection(g).compose(&acc))
    }

    pub fn is_reversing(&self) -> bool {
        self.reversing
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let (c, d) = if self.reversing { (other.a.conj(), other.b.conj()) } else { (other.a, other.b) };
        // [a b; conj b conj a] * [c d; conj d conj c]
        let a = self.a * c + self.b * d.conj();
        let b = self.a * d + self.b * c.conj();
        Self::normalized(a, b, self.reversing ^ other.reversing)
    }

    pub fn inverse(&self) -> Self {
        // the matrix inverse is [conj a, -b; -conj b, a]; a reversing map
        // w -> M conj(w) inverts to w -> conj(M^{-1}) conj(w)
        let (a, b) = (self.a.conj(), -self.b);
        if self.reversing {
            Self { a: a.conj(), b: b.conj(), reversing: true }
        } else {
            Self { a, b, reversing: false }
        }
    }

    pub fn apply(&self, z: Complex<T>) -> Complex<T> {
        let w = if self.reversing { z.conj() } else { z };
        (self.a * w + self.b) / (self.b.conj() * w + self.a.conj())
    }

    pub fn apply_point(&self, p: &DiskPoint<T>) -> DiskPoint<T> {
        DiskPoint::image(self.apply(p.z()))
    }

    pub fn apply_ideal(&self, p: &IdealPoint<T>) -> IdealPoint<T> {
        IdealPoint::from_complex(self.apply(p.z()))
    }

    pub fn apply_anchor(&self, p: &Anchor<T>) -> Anchor<T> {
        match p {
            Anchor::Interior(q) => Anchor::Interior(self.apply_point(q)),
            Anchor::Ideal(q) => Anchor::Ideal(self.apply_ideal(q)),
        }
    }

    pub fn apply_geodesic(&self, g: &Geodesic<T>) -> Geodesic<T> {
        Geodesic::from_ends_unchecked(self.apply_ideal(&g.start()), self.apply_ideal(&g.end()))
    }

    pub fn apply_curve(&self, c: &CurveObject<T>) -> CurveObject<T> {
        let kind = match c.kind() {
            Curve::Circle { center, radius } => Curve::Circle { center: self.apply_point(center), radius: *radius },
            Curve::Horocycle { omega, through } => {
                Curve::Horocycle { omega: self.apply_ideal(omega), through: self.apply_point(through) }
            }
            Curve::Equidistant { base, offset } => Curve::Equidistant {
                base: self.apply_geodesic(base),
                offset: if self.reversing { -*offset } else { *offset },
            },
        };
        CurveObject::from_kind(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::ops::dist;

    fn pt(u: f64, v: f64) -> DiskPoint<f64> {
        DiskPoint::new(u, v).unwrap()
    }

    #[test]
    fn to_origin_sends_point_to_zero() {
        let p = pt(0.3, -0.6);
        assert!(Isometry::to_origin(&p).apply(p.z()).norm() < 1e-15);
    }

    #[test]
    fn inverse_and_compose() {
        let p = pt(0.2, 0.1);
        let g = Geodesic::through(pt(0.1, 0.5).into(), pt(-0.4, 0.2).into()).unwrap();
        let maps = [
            Isometry::rotation(&p, 0.7),
            Isometry::reflection(&g),
            Isometry::translation_along(&g, 1.3),
            Isometry::reflection(&g).compose(&Isometry::rotation(&p, -2.0)),
        ];
        let q = pt(-0.3, 0.45);
        for m in maps {
            let back = m.inverse().apply(m.apply(q.z()));
            assert!((back - q.z()).norm() < 1e-14, "{m:?}");
            let back = m.compose(&m.inverse()).apply(q.z());
            assert!((back - q.z()).norm() < 1e-14);
        }
    }

    #[test]
    fn rotation_about_origin_is_euclidean() {
        let r = Isometry::rotation(&DiskPoint::origin(), 0.9_f64);
        let z = Complex::new(0.3, 0.4);
        assert!((r.apply(z) - z * Complex::from_polar(1.0, 0.9)).norm() < 1e-15);
    }

    #[test]
    fn real_translation_moves_origin() {
        let d = 1.7_f64;
        let g = Geodesic::through(DiskPoint::origin().into(), pt(0.5, 0.0).into()).unwrap();
        let image = Isometry::translation_along(&g, d).apply(Complex::new(0.0, 0.0));
        assert!((image - Complex::new((d / 2.0).tanh(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn reflection_is_an_involution() {
        let g = Geodesic::through(pt(0.6, 0.1).into(), pt(0.2, 0.7).into()).unwrap();
        let r = Isometry::reflection(&g);
        assert!(r.is_reversing());
        let q = pt(-0.2, -0.3);
        assert!((r.apply(r.apply(q.z())) - q.z()).norm() < 1e-14);
        // fixes the line pointwise
        let on = Isometry::translation_along(&g, 0.4).apply(pt(0.6, 0.1).z());
        assert!((r.apply(on) - on).norm() < 1e-14);
    }

    #[test]
    fn translation_moves_points_of_the_line_by_d() {
        let a = pt(0.6, 0.1);
        let g = Geodesic::through(a.into(), pt(0.2, 0.7).into()).unwrap();
        let t = Isometry::translation_along(&g, 0.8);
        let moved = t.apply_point(&a);
        assert!((dist(&a, &moved).unwrap() - 0.8).abs() < 1e-13);
        assert!(g.contains(&moved, 1e-12));
    }

    use proptest::prelude::*;

    fn point() -> impl Strategy<Value = DiskPoint<f64>> {
        (0.0..3.0f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| DiskPoint::polar(r, t).unwrap())
    }

    fn line() -> impl Strategy<Value = Geodesic<f64>> {
        (0.0..std::f64::consts::TAU, 0.2..6.0f64).prop_map(|(a, gap)| {
            Geodesic::from_ideal(IdealPoint::new(a).unwrap(), IdealPoint::new(a + gap).unwrap()).unwrap()
        })
    }

    /// Products of up to three reflections: every isometry has this form.
    fn isometry() -> impl Strategy<Value = Isometry<f64>> {
        prop::collection::vec(line(), 1..=3).prop_map(|ls| Isometry::reflections(&ls))
    }

    proptest! {
        #[test]
        fn isometries_preserve_distance(f in isometry(), p in point(), q in point()) {
            let before = dist(&p, &q).unwrap();
            let after = dist(&f.apply_point(&p), &f.apply_point(&q)).unwrap();
            prop_assert!((before - after).abs() < 1e-9 * (1.0 + before));
        }

        #[test]
        fn composition_is_associative_and_inverts(f in isometry(), g in isometry(), h in isometry(), p in point()) {
            let left = f.compose(&g).compose(&h).apply(p.z());
            let right = f.compose(&g.compose(&h)).apply(p.z());
            prop_assert!((left - right).norm() < 1e-9);
            let back = f.inverse().compose(&f).apply(p.z());
            prop_assert!((back - p.z()).norm() < 1e-9);
        }

        #[test]
        fn orientation_follows_reflection_parity(ls in prop::collection::vec(line(), 1..=4)) {
            prop_assert_eq!(Isometry::reflections(&ls).is_reversing(), ls.len() % 2 == 1);
        }

        #[test]
        fn images_of_lines_pass_through_images_of_their_points(f in isometry(), g in line(), t in -3.0..3.0f64) {
            let on = DiskPoint::from_complex(g.frame().inverse().apply(Complex::new((t / 2.0).tanh(), 0.0))).unwrap();
            prop_assert!(f.apply_geodesic(&g).contains(&f.apply_point(&on), 1e-8));
        }
    }
}
