//! Scalar abstraction: the library is generic over `f32`/`f64`.

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the numerics run on.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Lift an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn fl<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

/// Lift a `usize` into the working scalar type.
#[inline]
pub(crate) fn fu<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("count representable in scalar type")
}
