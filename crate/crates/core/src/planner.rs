//! Which circles can be squared: the Gauss condition on `tan^2 z` and the
//! regular polygon realizing the quadrature.
//!
//! All decisions are made in exact rational arithmetic; angles are carried as
//! rational multiples of `pi`.

use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::error::Result as GeoResult;
use crate::scalar::Real;
use crate::trig::{Angle, Curvature, Length};

pub type Rational = Rational64;

/// The known Fermat primes `2^(2^m) + 1`.
pub const FERMAT_PRIMES: [i64; 5] = [3, 5, 17, 257, 65537];

/// Largest side count tried before giving up.
pub const SEARCH_BOUND: i64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("tan^2 z must be positive, got {0}")]
    NonPositive(Rational),
    #[error(
        "tan^2 z = {q} is not admissible: its denominator {den} = {factors} is not a power of two times distinct Fermat primes"
    )]
    Inadmissible { q: Rational, den: i64, factors: String },
    #[error("no polygon with at most {bound} sides has a constructible angle for tan^2 z = {q}")]
    Unplanned { q: Rational, bound: i64 },
}

/// Prime factorization `[(p, e), ...]` in increasing order of `p`.
pub fn factorize(mut n: i64) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Renders a factorization as `2^2 * 3`.
pub fn format_factors(n: i64) -> String {
    if n == 1 {
        return "1".into();
    }
    factorize(n)
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Whether the regular `n`-gon is constructible: `n` is a power of two times
/// a product of distinct Fermat primes.
pub fn gauss_constructible(n: i64) -> bool {
    if n < 1 {
        return false;
    }
    let mut m = n >> n.trailing_zeros();
    for p in FERMAT_PRIMES {
        if m % p == 0 {
            m /= p;
        }
    }
    m == 1
}

/// `q` is admissible when it is an integer or its reduced denominator passes
/// [`gauss_constructible`]. The numerator is not constrained.
pub fn admissible_tan2z(q: Rational) -> Result<bool, PlanError> {
    if !q.is_positive() {
        return Err(PlanError::NonPositive(q));
    }
    Ok(q.is_integer() || gauss_constructible(*q.denom()))
}

/// A regular polygon whose area equals that of the circle with the given `tan^2 z`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraturePlan {
    pub tan2z: Rational,
    pub n: i64,
    /// Interior angle as a multiple of `pi`.
    pub v_over_pi: Rational,
    /// The polygon's defect over `pi`, equal to `tan2z`.
    pub defect_over_pi: Rational,
    /// Denominator of the interior angle as a fraction of the full turn.
    pub angle_denominator: i64,
    pub certificate: String,
}

impl QuadraturePlan {
    pub fn v<T: Real>(&self) -> GeoResult<Angle<T>> {
        Angle::new(T::PI() * rational_to::<T>(self.v_over_pi))
    }

    /// `pi * tan^2 z`, the target area in units of `k^2`.
    pub fn target_area_over_k2(&self) -> f64 {
        std::f64::consts::PI * self.tan2z.to_f64().unwrap_or(f64::NAN)
    }
}

pub(crate) fn rational_to<T: Real>(r: Rational) -> T {
    T::lit(*r.numer() as f64) / T::lit(*r.denom() as f64)
}

/// The smallest `n >= 3` whose interior angle `v = pi ((n - 2) - q) / n` is
/// positive and constructible (`v / 2pi` has a Gauss denominator).
pub fn plan(q: Rational) -> Result<QuadraturePlan, PlanError> {
    if !admissible_tan2z(q)? {
        let den = *q.denom();
        return Err(PlanError::Inadmissible { q, den, factors: format_factors(den) });
    }
    for n in 3..=SEARCH_BOUND {
        let big_n = Rational::from_integer(n);
        let v = (Rational::from_integer(n - 2) - q) / big_n;
        if !v.is_positive() {
            continue;
        }
        let turn = v / Rational::from_integer(2);
        let den = *turn.denom();
        if gauss_constructible(den) {
            let defect = Rational::from_integer(n - 2) - big_n * v;
            debug_assert_eq!(defect, q);
            return Ok(QuadraturePlan {
                tan2z: q,
                n,
                v_over_pi: v,
                defect_over_pi: defect,
                angle_denominator: den,
                certificate: format!("v = 2pi * {turn}, {den} = {}", format_factors(den)),
            });
        }
    }
    Err(PlanError::Unplanned { q, bound: SEARCH_BOUND })
}

/// Circumradius, apothem and side of a regular polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygonDimensions<T> {
    pub circumradius: Length<T>,
    pub apothem: Length<T>,
    pub side: Length<T>,
}

/// From the right triangle centre / edge midpoint / vertex, whose angles are
/// `pi/n` at the centre and `v/2` at the vertex.
pub fn polygon_dimensions<T: Real>(n: u32, v: Angle<T>, k: Curvature<T>) -> GeoResult<PolygonDimensions<T>> {
    if n < 3 {
        return Err(crate::error::domain("polygon", format!("{n} sides")));
    }
    let central = T::PI() / T::lit(n as f64);
    let half_v = v.radians() * T::half();
    let max = T::PI() - T::two() * central;
    if !(v.radians() > T::zero() && v.radians() < max) {
        return Err(crate::error::domain(
            "polygon angle",
            format!("{} is outside (0, {}) so the defect is not positive", v.radians(), max),
        ));
    }
    let cosh_r = (central.tan() * half_v.tan()).recip();
    let cosh_apothem = half_v.cos() / central.sin();
    let cosh_half_side = central.cos() / half_v.sin();
    let kk = k.k();
    let grow = |c: T| Length::new(kk * c.max(T::one()).acosh());
    Ok(PolygonDimensions {
        circumradius: grow(cosh_r)?,
        apothem: grow(cosh_apothem)?,
        side: Length::new(T::two() * kk * cosh_half_side.max(T::one()).acosh())?,
    })
}

/// Radius `s` of the circle whose area is `pi k^2 q`: `sinh(s / 2k) = sqrt(q) / 2`.
pub fn quadrature_radius<T: Real>(q: Rational, k: Curvature<T>) -> GeoResult<Length<T>> {
    if !q.is_positive() {
        return Err(crate::error::domain("tan^2 z", format!("{q} is not positive")));
    }
    let root = rational_to::<T>(q).sqrt();
    Length::new(T::two() * k.k() * (root * T::half()).asinh())
}

/// Every `n` in `1..=limit` that is a power of two times a product of distinct
/// Fermat primes, enumerated directly from the subsets.
pub fn constructible_up_to(limit: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << FERMAT_PRIMES.len()) {
        let mut odd: i64 = 1;
        for (i, p) in FERMAT_PRIMES.iter().enumerate() {
            if mask & (1 << i) != 0 {
                odd = odd.saturating_mul(*p);
            }
        }
        let mut m = odd;
        while m <= limit {
            out.push(m);
            m *= 2;
        }
    }
    out.sort_unstable();
    out
}

/// Parses `3`, `1/7` or `0.25` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let (n, d): (i64, i64) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
        return (!d.is_zero()).then(|| Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = frac.len() as u32;
        let scale = 10i64.checked_pow(digits)?;
        let whole: i64 = format!("{int}{frac}").parse().ok()?;
        return Some(Rational::new(whole, scale));
    }
    s.parse::<i64>().ok().map(Rational::from_integer)
}
