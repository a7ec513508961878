use num_complex::Complex;

use crate::scalar::Real;

/// A Euclidean line or circle: the realization of a disk-model object.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cline<T> {
    /// Line through `point` with unit direction `dir`.
    Line { point: Complex<T>, dir: Complex<T> },
    Circle { center: Complex<T>, radius: T },
}

fn cross<T: Real>(a: Complex<T>, b: Complex<T>) -> T {
    a.re * b.im - a.im * b.re
}

/// Relative discriminant below which two clines are treated as tangent.
const TANGENT: f64 = 1e-12;

impl<T: Real> Cline<T> {
    /// Circle through three points, or the line through them when collinear.
    pub fn through3(p: Complex<T>, q: Complex<T>, r: Complex<T>) -> Self {
        let (b, c) = (q - p, r - p);
        let d = T::two() * cross(b, c);
        let scale = b.norm() * c.norm() * (q - r).norm();
        if d.abs() <= T::lit(1e-14) * scale.max(T::min_positive_value()) {
            let dir = if (r - p).norm() > (q - p).norm() { r - p } else { q - p };
            return Cline::Line { point: p, dir: dir / dir.norm() };
        }
        let (b2, c2) = (b.norm_sqr(), c.norm_sqr());
        let ux = (c.im * b2 - b.im * c2) / d;
        let uy = (b.re * c2 - c.re * b2) / d;
        let off = Complex::new(ux, uy);
        Cline::Circle { center: p + off, radius: off.norm() }
    }

    /// Point the orientation rule measures from: the centre, or for a line the
    /// foot of the perpendicular from the origin.
    pub fn anchor(&self) -> Complex<T> {
        match *self {
            Cline::Circle { center, .. } => center,
            Cline::Line { point, dir } => {
                let along = point.re * dir.re + point.im * dir.im;
                point - dir * along
            }
        }
    }

    /// Euclidean distance from `z` to the curve.
    pub fn distance(&self, z: Complex<T>) -> T {
        match *self {
            Cline::Circle { center, radius } => ((z - center).norm() - radius).abs(),
            Cline::Line { point, dir } => cross(dir, z - point).abs(),
        }
    }

    pub fn same_as(&self, other: &Self, tol: T) -> bool {
        match (*self, *other) {
            (Cline::Circle { center: c1, radius: r1 }, Cline::Circle { center: c2, radius: r2 }) => {
                (c1 - c2).norm() <= tol && (r1 - r2).abs() <= tol
            }
            (Cline::Line { point, dir }, Cline::Line { dir: d2, point: p2 }) => {
                cross(dir, d2).abs() <= tol && cross(dir, p2 - point).abs() <= tol
            }
            _ => false,
        }
    }

    /// All Euclidean intersection points, tangency giving one.
    pub fn intersections(&self, other: &Self) -> Vec<Complex<T>> {
        match (*self, *other) {
            (Cline::Line { point: p1, dir: d1 }, Cline::Line { point: p2, dir: d2 }) => {
                let den = cross(d1, d2);
                if den.abs() < T::lit(1e-15) {
                    return Vec::new();
                }
                let t = cross(p2 - p1, d2) / den;
                vec![p1 + d1 * t]
            }
            (Cline::Line { point, dir }, Cline::Circle { center, radius })
            | (Cline::Circle { center, radius }, Cline::Line { point, dir }) => {
                let foot_t = (center - point).re * dir.re + (center - point).im * dir.im;
                let foot = point + dir * foot_t;
                let h = (center - foot).norm();
                let disc = radius * radius - h * h;
                if disc.abs() <= T::lit(TANGENT) * radius * radius {
                    vec![foot]
                } else if disc < T::zero() {
                    Vec::new()
                } else {
                    let s = disc.sqrt();
                    vec![foot - dir * s, foot + dir * s]
                }
            }
            (Cline::Circle { center: c1, radius: r1 }, Cline::Circle { center: c2, radius: r2 }) => {
                let delta = c2 - c1;
                let d = delta.norm();
                if d < T::lit(1e-15) {
                    return Vec::new();
                }
                let a = (d * d + r1 * r1 - r2 * r2) / (T::two() * d);
                let h2 = r1 * r1 - a * a;
                let u = delta / d;
                let base = c1 + u * a;
                if h2.abs() <= T::lit(TANGENT) * r1 * r1 {
                    vec![base]
                } else if h2 < T::zero() {
                    Vec::new()
                } else {
                    let h = h2.sqrt();
                    let n = Complex::new(-u.im, u.re);
                    vec![base + n * h, base - n * h]
                }
            }
        }
    }
}

/// Orders two intersection points by the side of the centre line they fall
/// on: the point left of `anchor_a -> anchor_b` comes first.
pub(crate) fn order_by_centres<T: Real>(points: &mut [Complex<T>], a: &Cline<T>, b: &Cline<T>) {
    let (ca, cb) = (a.anchor(), b.anchor());
    let key = |p: &Complex<T>| {
        let s = cross(cb - ca, *p - ca);
        // left first; ties fall back to lexicographic order
        (if s > T::zero() { 0 } else { 1 }, p.re, p.im)
    };
    points.sort_by(|p, q| key(p).partial_cmp(&key(q)).unwrap_or(std::cmp::Ordering::Equal));
}
