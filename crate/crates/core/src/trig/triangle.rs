//! Right and general triangle solvers.
//!
//! Right triangles use the labelling: legs `a`, `b`, hypotenuse `c`, angle
//! `alpha` opposite `a`, `beta` opposite `b`, right angle opposite `c`.
//! Internally every side is carried as `side / k`.

use crate::error::{domain, GeometryError, Result};
use crate::scalar::Real;

use super::units::{acosh_1p, cosh_m1, Angle, Curvature, Length};

/// Relative agreement required between redundant givens.
const CONSISTENCY: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RightTriangle<T> {
    pub a: Length<T>,
    pub b: Length<T>,
    pub c: Length<T>,
    pub alpha: Angle<T>,
    pub beta: Angle<T>,
    pub k: Curvature<T>,
}

/// Residuals of the five right-triangle relations, each relative to the
/// magnitude of its terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RightResiduals<T> {
    /// `sin alpha = sinh a / sinh c`
    pub sine: T,
    /// `cos alpha = cosh a sin beta` and its mirror, the larger of the two
    pub angle_cosine: T,
    /// `cosh c = cosh a cosh b`
    pub pythagorean: T,
    /// `sinh^2 c = cosh^2 a sinh^2 b + sinh^2 a`
    pub sinh_squared: T,
    /// `cot alpha cot beta = cosh c`
    pub cot_product: T,
}

impl<T: Real> RightResiduals<T> {
    pub fn max(&self) -> T {
        [self.sine, self.angle_cosine, self.pythagorean, self.sinh_squared, self.cot_product]
            .into_iter()
            .fold(T::zero(), T::max)
    }
}

fn rel<T: Real>(lhs: T, rhs: T) -> T {
    (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(T::min_positive_value())
}

impl<T: Real> RightTriangle<T> {
    pub fn residuals(&self) -> RightResiduals<T> {
        let kk = self.k.k();
        let (a, b, c) = (self.a.value() / kk, self.b.value() / kk, self.c.value() / kk);
        let (al, be) = (self.alpha.radians(), self.beta.radians());
        let sh = |x: T| x.sinh();
        RightResiduals {
            sine: rel(al.sin() * sh(c), sh(a)),
            angle_cosine: rel(al.cos(), a.cosh() * be.sin()).max(rel(be.cos(), b.cosh() * al.sin())),
            pythagorean: rel(c.cosh(), a.cosh() * b.cosh()),
            sinh_squared: rel(sh(c).powi(2), a.cosh().powi(2) * sh(b).powi(2) + sh(a).powi(2)),
            cot_product: rel(T::one() / (al.tan() * be.tan()), c.cosh()),
        }
    }

    /// Angle-sum defect `pi/2 - alpha - beta`.
    pub fn defect(&self) -> T {
        T::FRAC_PI_2() - self.alpha.radians() - self.beta.radians()
    }

    pub fn area(&self) -> T {
        self.k.k() * self.k.k() * self.defect()
    }

    fn mirrored(self) -> Self {
        Self { a: self.b, b: self.a, alpha: self.beta, beta: self.alpha, ..self }
    }
}

/// Known elements of a right triangle; any two determine the rest.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RightGivens<T> {
    pub a: Option<Length<T>>,
    pub b: Option<Length<T>>,
    pub c: Option<Length<T>>,
    pub alpha: Option<Angle<T>>,
    pub beta: Option<Angle<T>>,
}

impl<T: Real> RightGivens<T> {
    pub fn legs(a: Length<T>, b: Length<T>) -> Self {
        Self { a: Some(a), b: Some(b), ..Self::default() }
    }

    pub fn angles(alpha: Angle<T>, beta: Angle<T>) -> Self {
        Self { alpha: Some(alpha), beta: Some(beta), ..Self::default() }
    }

    fn count(&self) -> usize {
        [self.a.is_some(), self.b.is_some(), self.c.is_some(), self.alpha.is_some(), self.beta.is_some()]
            .iter()
            .filter(|&&x| x)
            .count()
    }

    fn mirrored(self) -> Self {
        Self { a: self.b, b: self.a, alpha: self.beta, beta: self.alpha, c: self.c }
    }
}

fn positive_side<T: Real>(x: Length<T>, what: &'static str) -> Result<()> {
    if x.value() <= T::zero() {
        return Err(domain(what, "side must be positive"));
    }
    Ok(())
}

fn acute<T: Real>(x: Angle<T>, what: &'static str) -> Result<()> {
    let r = x.radians();
    if r <= T::zero() || r >= T::FRAC_PI_2() {
        return Err(domain(what, format!("{r} rad is not an acute angle")));
    }
    Ok(())
}

/// Fills in every element from the dimensionless legs.
fn from_legs<T: Real>(a: T, b: T, k: Curvature<T>) -> RightTriangle<T> {
    let kk = k.k();
    // cosh c - 1 = (cosh a - 1) cosh b + (cosh b - 1)
    let c = acosh_1p(cosh_m1(a) * b.cosh() + cosh_m1(b));
    RightTriangle {
        a: Length::computed(a * kk),
        b: Length::computed(b * kk),
        c: Length::computed(c * kk),
        alpha: Angle::computed(a.tanh().atan2(b.sinh())),
        beta: Angle::computed(b.tanh().atan2(a.sinh())),
        k,
    }
}

/// Solves the triangle from the first sufficient pair among the givens
/// (in the order `{a,b}`, `{a,c}`, `{c,alpha}`, `{a,alpha}`, `{a,beta}`,
/// `{alpha,beta}` and their mirror images); any further givens must agree.
pub fn solve_right_triangle<T: Real>(givens: RightGivens<T>, k: Curvature<T>) -> Result<RightTriangle<T>> {
    if givens.count() < 2 {
        return Err(GeometryError::Insufficient(format!(
            "{} element(s) given; a right triangle needs two",
            givens.count()
        )));
    }
    for side in [givens.a, givens.b, givens.c].into_iter().flatten() {
        positive_side(side, "right triangle")?;
    }
    for angle in [givens.alpha, givens.beta].into_iter().flatten() {
        acute(angle, "right triangle")?;
    }

    let solved = solve_pair(&givens, k)
        .or_else(|| solve_pair(&givens.mirrored(), k).map(|r| r.map(RightTriangle::mirrored)))
        .expect("two givens always form a pair")?;
    check_consistent(&givens, &solved)?;
    Ok(overwrite_givens(solved, &givens))
}

/// Tries the pairs whose first member is on the `a` side; `None` if none apply.
fn solve_pair<T: Real>(g: &RightGivens<T>, k: Curvature<T>) -> Option<Result<RightTriangle<T>>> {
    let kk = k.k();
    let d = |x: Length<T>| x.value() / kk;
    let out = match (g.a, g.b, g.c, g.alpha, g.beta) {
        (Some(a), Some(b), ..) => Ok(from_legs(d(a), d(b), k)),
        (Some(a), _, Some(c), ..) => {
            let (a, c) = (d(a), d(c));
            if c <= a {
                Err(GeometryError::NoSuchFigure(format!(
                    "hypotenuse {} is not longer than leg {}",
                    c * kk,
                    a * kk
                )))
            } else {
                // cosh b = cosh c / cosh a
                let diff = T::two() * ((c + a) * T::half()).sinh() * ((c - a) * T::half()).sinh();
                Ok(from_legs(a, acosh_1p(diff / a.cosh()), k))
            }
        }
        (_, _, Some(c), Some(alpha), _) => {
            let (c, al) = (d(c), alpha.radians());
            let a = (c.sinh() * al.sin()).asinh();
            let b = (c.tanh() * al.cos()).atanh();
            Ok(from_legs(a, b, k))
        }
        (Some(a), _, _, Some(alpha), _) => {
            let a = d(a);
            let b = (a.tanh() / alpha.radians().tan()).asinh();
            Ok(from_legs(a, b, k))
        }
        (Some(a), _, _, _, Some(beta)) => {
            let a = d(a);
            let t = a.sinh() * beta.radians().tan();
            if t >= T::one() {
                Err(GeometryError::NoSuchFigure(
                    "adjacent angle reaches the angle of parallelism of the leg".into(),
                ))
            } else {
                Ok(from_legs(a, t.atanh(), k))
            }
        }
        (_, _, _, Some(alpha), Some(beta)) => {
            let (al, be) = (alpha.radians(), beta.radians());
            let defect = T::FRAC_PI_2() - al - be;
            if defect <= T::zero() {
                Err(GeometryError::NoSuchFigure(format!(
                    "alpha + beta = {} leaves no positive defect",
                    al + be
                )))
            } else {
                // cosh a = cos alpha / sin beta, written as cosh a - 1 without cancellation
                let two_sin = |x: T, y: T| {
                    T::two() * ((T::FRAC_PI_2() + x - y) * T::half()).sin() * (defect * T::half()).sin()
                };
                let a = acosh_1p(two_sin(al, be) / be.sin());
                let b = acosh_1p(two_sin(be, al) / al.sin());
                Ok(from_legs(a, b, k))
            }
        }
        _ => return None,
    };
    Some(out)
}

fn check_consistent<T: Real>(g: &RightGivens<T>, t: &RightTriangle<T>) -> Result<()> {
    let tol = T::lit(CONSISTENCY);
    let check = |given: Option<T>, solved: T, name: &str| -> Result<()> {
        if let Some(v) = given {
            if rel(v, solved) > tol && (v - solved).abs() > tol {
                return Err(GeometryError::Contradictory(format!(
                    "given {name} = {v} but the other givens force {solved}"
                )));
            }
        }
        Ok(())
    };
    check(g.a.map(Length::value), t.a.value(), "a")?;
    check(g.b.map(Length::value), t.b.value(), "b")?;
    check(g.c.map(Length::value), t.c.value(), "c")?;
    check(g.alpha.map(Angle::radians), t.alpha.radians(), "alpha")?;
    check(g.beta.map(Angle::radians), t.beta.radians(), "beta")
}

fn overwrite_givens<T: Real>(mut t: RightTriangle<T>, g: &RightGivens<T>) -> RightTriangle<T> {
    t.a = g.a.unwrap_or(t.a);
    t.b = g.b.unwrap_or(t.b);
    t.c = g.c.unwrap_or(t.c);
    t.alpha = g.alpha.unwrap_or(t.alpha);
    t.beta = g.beta.unwrap_or(t.beta);
    t
}

/// A triangle with sides `a, b, c` opposite angles `alpha, beta, gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralTriangle<T> {
    pub a: Length<T>,
    pub b: Length<T>,
    pub c: Length<T>,
    pub alpha: Angle<T>,
    pub beta: Angle<T>,
    pub gamma: Angle<T>,
    pub k: Curvature<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GeneralGivens<T> {
    pub a: Option<Length<T>>,
    pub b: Option<Length<T>>,
    pub c: Option<Length<T>>,
    pub alpha: Option<Angle<T>>,
    pub beta: Option<Angle<T>>,
    pub gamma: Option<Angle<T>>,
}

impl<T: Real> GeneralGivens<T> {
    pub fn sss(a: Length<T>, b: Length<T>, c: Length<T>) -> Self {
        Self { a: Some(a), b: Some(b), c: Some(c), ..Self::default() }
    }

    pub fn aaa(alpha: Angle<T>, beta: Angle<T>, gamma: Angle<T>) -> Self {
        Self { alpha: Some(alpha), beta: Some(beta), gamma: Some(gamma), ..Self::default() }
    }

    /// Two sides and the angle they enclose (`alpha` sits between `b` and `c`).
    pub fn sas(b: Length<T>, alpha: Angle<T>, c: Length<T>) -> Self {
        Self { b: Some(b), c: Some(c), alpha: Some(alpha), ..Self::default() }
    }

    /// Two angles and the side between them (`a` joins the vertices of `beta` and `gamma`).
    pub fn asa(beta: Angle<T>, a: Length<T>, gamma: Angle<T>) -> Self {
        Self { a: Some(a), beta: Some(beta), gamma: Some(gamma), ..Self::default() }
    }

    /// Rotates labels so that slot 0 becomes slot `shift`.
    fn rotated(self, shift: usize) -> Self {
        let sides = [self.a, self.b, self.c];
        let angles = [self.alpha, self.beta, self.gamma];
        let at = |i: usize| (i + shift) % 3;
        Self {
            a: sides[at(0)],
            b: sides[at(1)],
            c: sides[at(2)],
            alpha: angles[at(0)],
            beta: angles[at(1)],
            gamma: angles[at(2)],
        }
    }
}

impl<T: Real> GeneralTriangle<T> {
    fn rotated(self, shift: usize) -> Self {
        // inverse of GeneralGivens::rotated
        let sides = [self.a, self.b, self.c];
        let angles = [self.alpha, self.beta, self.gamma];
        let at = |i: usize| (i + 3 - shift) % 3;
        Self {
            a: sides[at(0)],
            b: sides[at(1)],
            c: sides[at(2)],
            alpha: angles[at(0)],
            beta: angles[at(1)],
            gamma: angles[at(2)],
            k: self.k,
        }
    }

    pub fn defect(&self) -> T {
        T::PI() - self.alpha.radians() - self.beta.radians() - self.gamma.radians()
    }

    pub fn area(&self) -> T {
        self.k.k() * self.k.k() * self.defect()
    }

    /// Largest relative residual of the side law of cosines (at each vertex)
    /// and of the sine law.
    pub fn residual(&self) -> T {
        let kk = self.k.k();
        let s = [self.a.value() / kk, self.b.value() / kk, self.c.value() / kk];
        let ang = [self.alpha.radians(), self.beta.radians(), self.gamma.radians()];
        let mut worst = T::zero();
        for i in 0..3 {
            let (j, l) = ((i + 1) % 3, (i + 2) % 3);
            let rhs = s[j].cosh() * s[l].cosh() - s[j].sinh() * s[l].sinh() * ang[i].cos();
            worst = worst.max(rel(s[i].cosh(), rhs));
        }
        let ratios: Vec<T> = (0..3).map(|i| ang[i].sin() / s[i].sinh()).collect();
        worst = worst.max(rel(ratios[0], ratios[1])).max(rel(ratios[1], ratios[2]));
        worst
    }
}

/// Angle opposite side `a` from three dimensionless sides (half-angle form).
fn angle_from_sides<T: Real>(a: T, b: T, c: T) -> T {
    let s = (a + b + c) * T::half();
    let num = (s - b).sinh() * (s - c).sinh();
    let den = s.sinh() * (s - a).sinh();
    T::two() * (num / den).sqrt().atan()
}

/// Side opposite `alpha` from three angles: `cosh a = (cos alpha + cos beta cos gamma) / (sin beta sin gamma)`.
fn side_from_angles<T: Real>(alpha: T, beta: T, gamma: T) -> T {
    let m = T::two() * ((alpha + beta + gamma) * T::half()).cos() * ((beta + gamma - alpha) * T::half()).cos()
        / (beta.sin() * gamma.sin());
    acosh_1p(m)
}

/// Solves from SSS, SAS, ASA or AAA givens. Three angles determine a triangle.
pub fn solve_general_triangle<T: Real>(g: GeneralGivens<T>, k: Curvature<T>) -> Result<GeneralTriangle<T>> {
    for side in [g.a, g.b, g.c].into_iter().flatten() {
        positive_side(side, "triangle")?;
    }
    for angle in [g.alpha, g.beta, g.gamma].into_iter().flatten() {
        let r = angle.radians();
        if r <= T::zero() || r >= T::PI() {
            return Err(domain("triangle angle", format!("{r} rad is not in (0, pi)")));
        }
    }
    let kk = k.k();
    let d = |x: Length<T>| x.value() / kk;

    let solved = if let (Some(a), Some(b), Some(c)) = (g.a, g.b, g.c) {
        let (a, b, c) = (d(a), d(b), d(c));
        if a >= b + c || b >= a + c || c >= a + b {
            return Err(GeometryError::NoSuchFigure("sides violate the triangle inequality".into()));
        }
        assemble([a, b, c], [angle_from_sides(a, b, c), angle_from_sides(b, c, a), angle_from_sides(c, a, b)], k)
    } else if let Some(shift) = (0..3).find(|&s| {
        let r = g.rotated(s);
        r.b.is_some() && r.c.is_some() && r.alpha.is_some()
    }) {
        let r = g.rotated(shift);
        let (b, c, al) = (d(r.b.unwrap()), d(r.c.unwrap()), r.alpha.unwrap().radians());
        let sh = (al * T::half()).sin();
        let a = acosh_1p(cosh_m1(b - c) + T::two() * b.sinh() * c.sinh() * sh * sh);
        assemble([a, b, c], [al, angle_from_sides(b, c, a), angle_from_sides(c, a, b)], k).rotated(shift)
    } else if let Some(shift) = (0..3).find(|&s| {
        let r = g.rotated(s);
        r.a.is_some() && r.beta.is_some() && r.gamma.is_some()
    }) {
        let r = g.rotated(shift);
        let (a, be, ga) = (d(r.a.unwrap()), r.beta.unwrap().radians(), r.gamma.unwrap().radians());
        if be + ga >= T::PI() {
            return Err(GeometryError::NoSuchFigure("two angles already reach pi".into()));
        }
        // cos alpha = -cos beta cos gamma + sin beta sin gamma cosh a
        let cos_al = be.sin() * ga.sin() * cosh_m1(a) - (be + ga).cos();
        if cos_al >= T::one() {
            return Err(GeometryError::NoSuchFigure("side too long for the two angles".into()));
        }
        let al = cos_al.max(-T::one()).acos();
        let b = side_from_angles(be, ga, al);
        let c = side_from_angles(ga, al, be);
        assemble([a, b, c], [al, be, ga], k).rotated(shift)
    } else if let (Some(al), Some(be), Some(ga)) = (g.alpha, g.beta, g.gamma) {
        let (al, be, ga) = (al.radians(), be.radians(), ga.radians());
        if al + be + ga >= T::PI() {
            return Err(GeometryError::NoSuchFigure(format!(
                "angle sum {} leaves no positive defect",
                al + be + ga
            )));
        }
        let sides = [side_from_angles(al, be, ga), side_from_angles(be, ga, al), side_from_angles(ga, al, be)];
        assemble(sides, [al, be, ga], k)
    } else {
        return Err(GeometryError::Insufficient(
            "need three sides, two sides with their included angle, two angles with their included side, or three angles".into(),
        ));
    };

    let pairs = [
        (g.a.map(Length::value), solved.a.value(), "a"),
        (g.b.map(Length::value), solved.b.value(), "b"),
        (g.c.map(Length::value), solved.c.value(), "c"),
        (g.alpha.map(Angle::radians), solved.alpha.radians(), "alpha"),
        (g.beta.map(Angle::radians), solved.beta.radians(), "beta"),
        (g.gamma.map(Angle::radians), solved.gamma.radians(), "gamma"),
    ];
    let tol = T::lit(CONSISTENCY);
    for (given, value, name) in pairs {
        if let Some(v) = given {
            if rel(v, value) > tol && (v - value).abs() > tol {
                return Err(GeometryError::Contradictory(format!(
                    "given {name} = {v} but the other givens force {value}"
                )));
            }
        }
    }
    Ok(solved)
}

fn assemble<T: Real>(sides: [T; 3], angles: [T; 3], k: Curvature<T>) -> GeneralTriangle<T> {
    let kk = k.k();
    GeneralTriangle {
        a: Length::computed(sides[0] * kk),
        b: Length::computed(sides[1] * kk),
        c: Length::computed(sides[2] * kk),
        alpha: Angle::computed(angles[0]),
        beta: Angle::computed(angles[1]),
        gamma: Angle::computed(angles[2]),
        k,
    }
}
