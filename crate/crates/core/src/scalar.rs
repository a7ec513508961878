use std::fmt;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the geometry kernel is written against.
///
/// Implemented for `f32` and `f64`. Everything outside the exact rational
/// planner is generic over this trait.
pub trait Real:
    Float + FloatConst + FromPrimitive + fmt::Debug + fmt::Display + Default + Send + Sync + 'static
{
    /// Largest `|t|` accepted as an exponent argument `e^t`.
    const EXP_LIMIT: f64;

    /// Separation below which two boundary or interior points coincide.
    const COINCIDENT: f64;

    /// Points with `|z| > 1 - BOUNDARY_GUARD` are treated as ideal.
    const BOUNDARY_GUARD: f64;

    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }
}

impl Real for f64 {
    const EXP_LIMIT: f64 = 700.0;
    const COINCIDENT: f64 = 1e-12;
    const BOUNDARY_GUARD: f64 = 1e-10;
}

impl Real for f32 {
    const EXP_LIMIT: f64 = 87.0;
    const COINCIDENT: f64 = 1e-6;
    const BOUNDARY_GUARD: f64 = 1e-6;
}

/// `sinh(t) - t`, accurate for small `t` where the subtraction cancels.
pub fn sinh_minus_identity<T: Real>(t: T) -> T {
    if t.abs() < T::half() {
        // t^3/3! + t^5/5! + ... ; 12 terms is far past f64 resolution at |t| < 1/2
        let t2 = t * t;
        let mut term = t * t2 / T::lit(6.0);
        let mut sum = term;
        let mut n = 3.0;
        for _ in 0..12 {
            term = term * t2 / T::lit((n + 1.0) * (n + 2.0));
            sum = sum + term;
            n += 2.0;
        }
        sum
    } else {
        t.sinh() - t
    }
}
