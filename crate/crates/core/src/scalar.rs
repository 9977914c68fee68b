//! Coefficient and floating-point traits shared by the polynomial types.
//!
//! The exact pipeline runs over [`BigRational`](num_rational::BigRational);
//! the same code accepts `Rational64` or plain floats where overflow or
//! rounding is acceptable to the caller.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// Coefficient ring for [`LaurentPoly`](crate::LaurentPoly) and [`XYPoly`](crate::XYPoly).
///
/// Division is only ever used where the quotient is known to be exact.
pub trait Coeff:
    Clone + PartialEq + PartialOrd + Debug + Display + FromStr + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    /// Whether the value is an integer.
    fn is_integral(&self) -> bool;

    /// Lossy conversion used by the numeric layer.
    fn to_f64_lossy(&self) -> f64;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits coefficient type")
    }
}

impl<T> Coeff for Ratio<T>
where
    T: Clone + Integer + Debug + Display + FromStr + Neg<Output = T> + FromPrimitive + ToPrimitive + Send + Sync,
    Ratio<T>: FromStr + FromPrimitive + ToPrimitive,
{
    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Coeff for f64 {
    fn is_integral(&self) -> bool {
        self.fract() == 0.0
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Coeff for f32 {
    fn is_integral(&self) -> bool {
        self.fract() == 0.0
    }

    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

/// Floating point scalar for numeric evaluation: f32 or f64.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an exact integer to the numeric scalar, saturating to infinity.
pub fn bigint_to_real<F: Real>(v: &BigInt) -> F {
    F::from_f64(v.to_f64().unwrap_or(f64::INFINITY)).unwrap_or_else(F::infinity)
}
