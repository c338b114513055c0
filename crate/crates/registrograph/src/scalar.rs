//! Scalar abstraction for the numeric pipeline.
//!
//! All statistics, distances, dimension scores, and sampling weights are
//! generic over [`Real`] so the same code runs in `f32` or `f64`. The crate
//! root exports `f64` aliases for the common case.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar used throughout the numeric pipeline.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum<Self> + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64`, for literals and parsed config values.
    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).expect("finite f64 converts to any Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}
