//! Scalar abstraction: every numeric kernel in this crate is generic over a
//! floating-point type implementing [`Real`].

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar: f32 or f64.
///
/// f64 is the working precision for everything with tight tolerances; f32
/// instantiations exist so callers can trade accuracy for footprint.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Conversion from an f64 literal or intermediate.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 value not representable in scalar type")
    }

    /// Conversion from an unsigned integer (quantum numbers, indices).
    fn from_uint(k: u64) -> Self {
        Self::from_u64(k).expect("u64 value not representable in scalar type")
    }

    /// Conversion from a signed integer.
    fn from_int(k: i64) -> Self {
        Self::from_i64(k).expect("i64 value not representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
