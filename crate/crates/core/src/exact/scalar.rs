use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{Num, Signed};

/// Field-like scalar the geometric types are generic over.
///
/// Exact code paths instantiate this with [`Rat`](crate::Rat); `f64` is
/// used for float cross-checks and for steering the searches.
pub trait Scalar: Num + Signed + Clone + PartialEq + PartialOrd + Debug + Neg<Output = Self> {
    /// Best-effort floating rendering, used only for diagnostics.
    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for f64 {
    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for num_rational::BigRational {
    fn to_f64_lossy(&self) -> f64 {
        super::rat_to_f64(self)
    }
}
