use num_complex::Complex;

use crate::error::{domain, GeometryError, Result};
use crate::scalar::Real;

use super::cline::{order_by_centres, Cline};
use super::curve::CurveObject;
use super::geodesic::Geodesic;
use super::isometry::Isometry;
use super::point::{Anchor, DiskPoint, IdealPoint};

/// Distance between interior points: the logarithm of the cross-ratio of the
/// chords to the ideal endpoints `X` (on `a`'s side) and `P` (on `m`'s side),
/// `ln(AP * XM / (XA * MP))`.
pub fn dist<T: Real>(a: &DiskPoint<T>, m: &DiskPoint<T>) -> Result<T> {
    let (za, zm) = (a.z(), m.z());
    if (za - zm).norm() < T::lit(T::COINCIDENT) {
        // the chord ratio is 1 to working precision; use the closed form
        return Ok(dist_closed_form(a, m));
    }
    let g = Geodesic::through(Anchor::Interior(*a), Anchor::Interior(*m))?;
    let (x, p) = (g.start().z(), g.end().z());
    let ratio = ((za - p).norm() * (x - zm).norm()) / ((x - za).norm() * (zm - p).norm());
    Ok(ratio.ln().max(T::zero()))
}

/// `2 atanh |(a - m) / (1 - conj(a) m)|`, the textbook disk metric.
pub fn dist_closed_form<T: Real>(a: &DiskPoint<T>, m: &DiskPoint<T>) -> T {
    let (za, zm) = (a.z(), m.z());
    let q = (za - zm).norm() / (Complex::new(T::one(), T::zero()) - za.conj() * zm).norm();
    T::two() * q.atanh()
}

/// A line or a curve, the two kinds of figure that can be intersected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Figure<T> {
    Line(Geodesic<T>),
    Curve(CurveObject<T>),
}

impl<T> From<Geodesic<T>> for Figure<T> {
    fn from(g: Geodesic<T>) -> Self {
        Figure::Line(g)
    }
}

impl<T> From<CurveObject<T>> for Figure<T> {
    fn from(c: CurveObject<T>) -> Self {
        Figure::Curve(c)
    }
}

impl<T: Real> Figure<T> {
    pub fn cline(&self) -> Cline<T> {
        match self {
            Figure::Line(g) => g.cline(),
            Figure::Curve(c) => c.realization(),
        }
    }
}

fn inside<T: Real>(z: &Complex<T>) -> bool {
    z.norm() < T::one() - T::lit(T::BOUNDARY_GUARD)
}

fn real_axis<T: Real>() -> Cline<T> {
    Cline::Line { point: Complex::new(T::zero(), T::zero()), dir: Complex::new(T::one(), T::zero()) }
}

/// Points where `other` (already in the frame of `g`) crosses the real
/// diameter, mapped back and ordered from `g.start` to `g.end`.
fn along_line<T: Real>(g: &Geodesic<T>, other: Cline<T>) -> Vec<DiskPoint<T>> {
    let frame = g.frame();
    let mut xs: Vec<T> = real_axis()
        .intersections(&other)
        .into_iter()
        .filter(inside)
        .map(|z| z.re)
        .collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let back = frame.inverse();
    xs.into_iter().map(|x| DiskPoint::image(back.apply(Complex::new(x, T::zero())))).collect()
}

/// Intersection points strictly inside the disk.
///
/// When a line is involved the points are ordered along it, from its start
/// towards its end. Two curves order their points left-first as seen from the
/// first realization's centre looking at the second's. Tangency yields one
/// point.
pub fn intersect<T: Real>(a: &Figure<T>, b: &Figure<T>) -> Result<Vec<DiskPoint<T>>> {
    let tol = T::lit(1e-12);
    match (a, b) {
        (Figure::Line(g), Figure::Line(h)) => {
            if g.same_line(h, tol) {
                return Err(GeometryError::Degenerate("intersecting a line with itself".into()));
            }
            let f = g.frame();
            let moved = f.apply_geodesic(h);
            // lines sharing an ideal endpoint meet only at infinity
            let one = IdealPoint::new(T::zero())?;
            let minus = IdealPoint::new(T::PI())?;
            for end in [moved.start(), moved.end()] {
                if end.separation(&one) < tol || end.separation(&minus) < tol {
                    return Ok(Vec::new());
                }
            }
            if moved.start().z().im.signum() == moved.end().z().im.signum() {
                return Ok(Vec::new());
            }
            Ok(along_line(g, moved.cline()))
        }
        (Figure::Line(g), Figure::Curve(c)) | (Figure::Curve(c), Figure::Line(g)) => {
            let moved = g.frame().apply_curve(c);
            if moved.realization().same_as(&real_axis(), tol) {
                return Err(GeometryError::Degenerate("curve coincides with the line".into()));
            }
            Ok(along_line(g, moved.realization()))
        }
        (Figure::Curve(c), Figure::Curve(d)) => {
            let (ca, cb) = (c.realization(), d.realization());
            if ca.same_as(&cb, tol) {
                return Err(GeometryError::Degenerate("intersecting a curve with itself".into()));
            }
            let mut pts: Vec<_> = ca.intersections(&cb).into_iter().filter(inside).collect();
            order_by_centres(&mut pts, &ca, &cb);
            Ok(pts.into_iter().map(DiskPoint::image).collect())
        }
    }
}

/// Foot and line of the perpendicular from a point to a geodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Perpendicular<T> {
    pub foot: DiskPoint<T>,
    /// Oriented from `p` towards the foot; when `p` lies on the line it is the
    /// erected perpendicular, pointing to the left of `g`.
    pub line: Geodesic<T>,
}

pub fn perpendicular<T: Real>(p: &DiskPoint<T>, g: &Geodesic<T>) -> Perpendicular<T> {
    let t = Isometry::to_origin(p);
    let back = t.inverse();
    let (f1, f2) = (t.apply(g.start().z()), t.apply(g.end().z()));
    let foot = (f1 + f2) / (T::two() + (f1 - f2).norm());
    if foot.norm() < T::lit(T::COINCIDENT) {
        return Perpendicular { foot: *p, line: erect_perpendicular(p, g) };
    }
    let dir = foot / foot.norm();
    let line = Geodesic::from_ends_unchecked(
        IdealPoint::from_complex(back.apply(-dir)),
        IdealPoint::from_complex(back.apply(dir)),
    );
    Perpendicular { foot: DiskPoint::image(back.apply(foot)), line }
}

/// The perpendicular to `g` through `p`, pointing to the left of `g`. Meant for
/// points on `g`; otherwise it is the perpendicular to the line through `p`
/// with the same ideal-point directions as seen from `p`.
pub fn erect_perpendicular<T: Real>(p: &DiskPoint<T>, g: &Geodesic<T>) -> Geodesic<T> {
    let t = Isometry::to_origin(p);
    let back = t.inverse();
    let (f1, f2) = (t.apply(g.start().z()), t.apply(g.end().z()));
    let d = Complex::new(T::zero(), T::one()) * (f2 - f1);
    let dir = d / d.norm();
    Geodesic::from_ends_unchecked(IdealPoint::from_complex(back.apply(-dir)), IdealPoint::from_complex(back.apply(dir)))
}

/// The angle at `p` between the rays towards `q` and `r`, in `[0, pi]`.
pub fn measure_angle<T: Real>(p: &DiskPoint<T>, q: &Anchor<T>, r: &Anchor<T>) -> Result<T> {
    let t = Isometry::to_origin(p);
    let (wq, wr) = (t.apply(q.z()), t.apply(r.z()));
    let eps = T::lit(T::COINCIDENT);
    if wq.norm() < eps || wr.norm() < eps {
        return Err(GeometryError::Degenerate("angle ray of zero length".into()));
    }
    let w = wr * wq.conj();
    Ok(w.im.atan2(w.re).abs())
}

/// The point `F` of `a` corresponding to `b` with respect to the common ideal
/// point `omega`: `F` is where the horocycle about `omega` through `b` meets `a`.
pub fn corresponding_point<T: Real>(b: &DiskPoint<T>, a: &Geodesic<T>, omega: &IdealPoint<T>) -> Result<DiskPoint<T>> {
    let tol = T::lit(1e-9);
    let line = if a.end().separation(omega) <= tol {
        *a
    } else if a.start().separation(omega) <= tol {
        a.reversed()
    } else {
        return Err(domain("corresponding point", "omega is not an end of the line"));
    };
    let frame = line.frame();
    let w = frame.apply(b.z());
    let gap = (Complex::new(T::one(), T::zero()) - w).norm_sqr();
    let rho = gap / (gap + T::one() - w.norm_sqr());
    let f = Complex::new(T::one() - T::two() * rho, T::zero());
    Ok(DiskPoint::image(frame.inverse().apply(f)))
}

/// The angle at `p` between the perpendicular to `g` and the ray parallel to
/// `g` in the direction of `g.end`.
pub fn angle_of_parallelism_numeric<T: Real>(p: &DiskPoint<T>, g: &Geodesic<T>) -> Result<T> {
    if g.contains(p, T::lit(T::COINCIDENT)) {
        return Err(domain("angle of parallelism", "the point lies on the line"));
    }
    let foot = perpendicular(p, g).foot;
    measure_angle(p, &Anchor::Interior(foot), &Anchor::Ideal(g.end()))
}
