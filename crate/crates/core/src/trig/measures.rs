//! Closed-form lengths, areas and volumes of the hyperbolic plane and space.
//!
//! Every quantity takes the linear constant `k` explicitly. Formulas are
//! written in their `sinh`/`cosh` form; the exponential forms they come from
//! appear in the tests as a second route.

use crate::error::{domain, GeometryError, Result};
use crate::scalar::{sinh_minus_identity, Real};

use super::units::{guard, Angle, ArcRatio, Area, Curvature, Length};

/// `X = e^{x/k}`: ratio of two concentric horocyclic arcs a distance `x` apart.
pub fn arc_ratio<T: Real>(x: Length<T>, k: Curvature<T>) -> Result<ArcRatio<T>> {
    Ok(ArcRatio::from_exponent(k.scaled(x.value())?))
}

/// Angle of parallelism `u` of a perpendicular of length `y`: `cot(u/2) = e^{y/k}`.
pub fn angle_of_parallelism<T: Real>(y: Length<T>, k: Curvature<T>) -> Result<Angle<T>> {
    let t = k.scaled(y.value())?;
    Ok(Angle::computed(T::two() * (-t).exp().atan()))
}

/// Inverse of [`angle_of_parallelism`]: the segment whose parallel angle is `u`.
pub fn parallelism_segment<T: Real>(u: Angle<T>, k: Curvature<T>) -> Result<Length<T>> {
    let u = u.radians();
    if u <= T::zero() || u > T::FRAC_PI_2() {
        return Err(domain("parallelism angle", format!("{u} rad is not in (0, pi/2]")));
    }
    // atanh(cos u) loses digits as u -> 0, -ln tan(u/2) as u -> pi/2
    let t = if u < T::FRAC_PI_4() {
        -(u * T::half()).tan().ln()
    } else {
        u.cos().atanh()
    };
    Ok(Length::computed(k.k() * t))
}

/// Circumference `2 pi k sinh(r/k)` of a circle of radius `r`.
pub fn circle_circumference<T: Real>(r: Length<T>, k: Curvature<T>) -> Result<Length<T>> {
    let t = k.scaled(r.value())?;
    Ok(Length::computed(T::two() * T::PI() * k.k() * t.sinh()))
}

/// Area `4 pi k^2 sinh^2(r/2k)` of a disc of radius `r`.
pub fn circle_area<T: Real>(r: Length<T>, k: Curvature<T>) -> Result<Area<T>> {
    let t = k.scaled(r.value())?;
    let s = (t * T::half()).sinh();
    Ok(Area(T::lit(4.0) * T::PI() * k.k() * k.k() * s * s))
}

/// Length `a cosh(b/k)` of the equidistant arc at distance `b` over a base segment `a`.
pub fn equidistant_arc_length<T: Real>(
    a: Length<T>,
    b: Length<T>,
    k: Curvature<T>,
) -> Result<Length<T>> {
    let t = k.scaled(b.value())?;
    Ok(Length::computed(a.value() * t.cosh()))
}

/// The same arc through the angle of parallelism: `a / sin(Pi(b))`.
pub fn equidistant_arc_length_via_parallelism<T: Real>(
    a: Length<T>,
    b: Length<T>,
    k: Curvature<T>,
) -> Result<Length<T>> {
    let u = angle_of_parallelism(b, k)?;
    Ok(Length::computed(a.value() / u.radians().sin()))
}

/// Horocyclic arc `k sinh(y/k)` over a semichord `y`.
pub fn horocycle_arc_length<T: Real>(y: Length<T>, k: Curvature<T>) -> Result<Length<T>> {
    let t = k.scaled(y.value())?;
    Ok(Length::computed(k.k() * t.sinh()))
}

/// Semichord `y` of the horocyclic arc through the ends of a chord `s`:
/// `sinh(s/2k) = sinh(y/k) / 2`.
pub fn chord_to_semichord<T: Real>(s: Length<T>, k: Curvature<T>) -> Result<Length<T>> {
    let t = k.scaled(s.value())?;
    let y = (T::two() * (t * T::half()).sinh()).asinh();
    Ok(Length::computed(k.k() * y))
}

/// Ordinate of the horocycle through the origin in rectangular coordinates:
/// `Y = X + sqrt(X^2 - 1)` with `X = e^{x/k}`, `Y = e^{y/k}`.
pub fn lcurve_point<T: Real>(x: Length<T>, k: Curvature<T>) -> Result<Length<T>> {
    let t = k.scaled(x.value())?;
    // y/k = acosh(X)
    let y = if t < T::one() {
        let xm1 = t.exp_m1();
        (T::one() + xm1 + (xm1 * (xm1 + T::two())).sqrt()).ln()
    } else {
        t + (T::one() + (-(T::lit(-2.0) * t).exp_m1()).sqrt()).ln()
    };
    Ok(Length::computed(k.k() * y))
}

/// The same ordinate through the angle of parallelism: `Y = cot(asin(1/X)/2)`.
pub fn lcurve_point_via_parallelism<T: Real>(x: Length<T>, k: Curvature<T>) -> Result<Length<T>> {
    let ratio = arc_ratio(x, k)?.ratio();
    let cbn = (T::one() / ratio).asin();
    let y = (T::one() / (cbn * T::half()).tan()).ln();
    Ok(Length::computed(k.k() * y))
}

/// Horocyclic arc from the origin to abscissa `x`: `k sqrt(X^2 - 1)`.
pub fn lcurve_arc_length<T: Real>(x: Length<T>, k: Curvature<T>) -> Result<Length<T>> {
    let t = k.scaled(x.value())?;
    let z = if t < T::one() {
        (T::two() * t).exp_m1().sqrt()
    } else {
        t.exp() * (-(T::lit(-2.0) * t).exp_m1()).sqrt()
    };
    Ok(Length::computed(k.k() * z))
}

/// How far a horocyclic strip extends from its base arc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SectorExtent<T> {
    Finite(Length<T>),
    Infinite,
}

/// Area `r k (1 - e^{-x/k})` between a horocyclic arc `r`, the concentric arc
/// at distance `x`, and the two axes joining them.
pub fn horocycle_sector_area<T: Real>(
    r: Length<T>,
    extent: SectorExtent<T>,
    k: Curvature<T>,
) -> Result<Area<T>> {
    let fraction = match extent {
        SectorExtent::Infinite => T::one(),
        SectorExtent::Finite(x) => -(-k.scaled(x.value())?).exp_m1(),
    };
    Ok(Area(r.value() * k.k() * fraction))
}

/// Volume `p k / 2` of the solid bounded by a horospherical region of area `p`
/// and the axes through its boundary.
pub fn axial_volume<T: Real>(p: Area<T>, k: Curvature<T>) -> Area<T> {
    Area(p.value() * k.k() * T::half())
}

/// Measures of regions bounded by a line and its equidistant curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquidistantMeasures<T> {
    /// Quadrilateral over a base `p` between the line and the curve at distance `q`.
    pub area: Area<T>,
    /// Solid between a plane rectangle and its equidistant surface.
    pub prism_volume: Area<T>,
    /// Surface swept by the curve rotating about the base line.
    pub revolution_surface: Area<T>,
    /// Solid swept by the same rotation.
    pub revolution_volume: Area<T>,
}

pub fn equidistant_region_measures<T: Real>(
    p: Length<T>,
    q: Length<T>,
    k: Curvature<T>,
) -> Result<EquidistantMeasures<T>> {
    let t = k.scaled(q.value())?;
    let t2 = guard(T::two() * t)?;
    let (p, q, kk) = (p.value(), q.value(), k.k());
    let pi = T::PI();
    Ok(EquidistantMeasures {
        area: Area(p * kk * t.sinh()),
        prism_volume: Area(T::lit(0.25) * p * kk * t2.sinh() + T::half() * p * q),
        revolution_surface: Area(pi * kk * p * t2.sinh()),
        revolution_volume: Area(pi * kk * kk * p * t.sinh() * t.sinh()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereMeasures<T> {
    pub great_circle: Length<T>,
    pub surface: Area<T>,
    pub volume: Area<T>,
}

/// Great circle, surface, and volume of a sphere of radius `x`.
pub fn sphere_measures<T: Real>(x: Length<T>, k: Curvature<T>) -> Result<SphereMeasures<T>> {
    let t = k.scaled(x.value())?;
    let t2 = guard(T::two() * t)?;
    let kk = k.k();
    let pi = T::PI();
    let great = T::two() * pi * kk * t.sinh();
    Ok(SphereMeasures {
        great_circle: Length::computed(great),
        surface: Area(great * great / pi),
        // pi k^3 sinh(2x/k) - 2 pi k^2 x, without the cancellation
        volume: Area(pi * kk * kk * kk * sinh_minus_identity(t2)),
    })
}

/// Cap of a sphere with great circle `p` cut off at polar angle `u`.
pub fn spherical_cap_area<T: Real>(p: Length<T>, u: Angle<T>) -> Result<Area<T>> {
    let p = p.value();
    if p <= T::zero() {
        return Err(domain("great circle", "must be positive"));
    }
    let pi = T::PI();
    Ok(Area((T::one() - u.radians().cos()) / (T::two() * pi) * p * p))
}

/// Spherical triangle of angular `excess` on a sphere with great circle `p`.
pub fn spherical_triangle_area<T: Real>(excess: T, p: Length<T>) -> Result<Area<T>> {
    let pi = T::PI();
    if !excess.is_finite() {
        return Err(GeometryError::NonFinite("spherical excess"));
    }
    if excess <= T::zero() || excess >= T::two() * pi {
        return Err(domain("spherical excess", format!("{excess} is not in (0, 2 pi)")));
    }
    let p = p.value();
    if p <= T::zero() {
        return Err(domain("great circle", "must be positive"));
    }
    Ok(Area(excess * p * p / (T::lit(4.0) * pi * pi)))
}

/// Angle `A` opposite leg arc `a` in a right spherical triangle with
/// hypotenuse arc `b`: `sin A = sin a / sin b`. Independent of `k`.
pub fn spherical_right_sine<T: Real>(a: Angle<T>, b: Angle<T>) -> Result<Angle<T>> {
    let (a, b) = (a.radians(), b.radians());
    if a <= T::zero() || b >= T::PI() || a > b {
        return Err(domain("spherical arcs", format!("need 0 < a <= b < pi, got a={a}, b={b}")));
    }
    let ratio = a.sin() / b.sin();
    if ratio > T::one() + T::lit(1e-12) {
        return Err(domain("spherical arcs", "sin a exceeds sin b"));
    }
    Ok(Angle::computed(ratio.min(T::one()).asin()))
}

/// Area `k^2 ((n-2) pi - sum of angles)` of a polygon with the given interior angles.
pub fn polygon_area_from_angles<T: Real>(angles: &[Angle<T>], k: Curvature<T>) -> Result<Area<T>> {
    let n = angles.len();
    if n < 3 {
        return Err(domain("polygon", format!("{n} angles; need at least 3")));
    }
    if let Some(a) = angles.iter().find(|a| a.radians() >= T::PI()) {
        return Err(domain("polygon angle", format!("{} rad is not below pi", a.radians())));
    }
    let sum = angles.iter().fold(T::zero(), |acc, a| acc + a.radians());
    let defect = T::lit((n - 2) as f64) * T::PI() - sum;
    if defect <= T::zero() {
        return Err(GeometryError::NoSuchFigure(format!(
            "angle sum {sum} leaves no positive defect"
        )));
    }
    Ok(Area(k.k() * k.k() * defect))
}

/// Area `pi k^2 tan^2 z` of the circle whose quadrature angle is `z`.
pub fn circle_area_from_quadrature_angle<T: Real>(z: Angle<T>, k: Curvature<T>) -> Result<Area<T>> {
    let z = z.radians();
    if z >= T::FRAC_PI_2() {
        return Err(domain("quadrature angle", "must be acute"));
    }
    let t = z.tan();
    Ok(Area(T::PI() * k.k() * k.k() * t * t))
}
