//! Exact scalar types used for fitted slopes, intercepts and bounds.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed};

/// An exact ordered field element with an accessible reduced denominator.
pub trait ExactScalar: Clone + Ord + Signed + FromPrimitive + Display + Debug {
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("value fits the scalar type")
    }

    fn ratio(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer).expect("value fits") / Self::from_i64(denom).expect("value fits")
    }

    /// Reduced denominator, or `None` if it does not fit a `u64`.
    fn denominator_u64(&self) -> Option<u64>;
}

impl<T> ExactScalar for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + num_traits::ToPrimitive + Display + Debug,
    Ratio<T>: FromPrimitive,
{
    fn denominator_u64(&self) -> Option<u64> {
        self.denom().to_u64()
    }
}
