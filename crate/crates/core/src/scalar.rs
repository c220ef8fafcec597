//! Numeric scalar abstraction shared by weights, the orbit program and s-values.
//!
//! Exact rationals are the intended instantiation. Floating point types are
//! supported for quick estimates; comparisons against zero then use a small
//! absolute slack.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, ToPrimitive};

pub trait Scalar: Clone + Debug + Display + PartialOrd + Signed + Send + Sync + 'static {
    fn from_int(value: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn from_usize(value: usize) -> Self {
        Self::from_int(value as i64)
    }

    fn to_f64(&self) -> f64;

    fn is_exact() -> bool;

    /// True when the value is zero up to the type's resolution.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn is_strictly_positive(&self) -> bool {
        !self.is_negligible() && self.is_positive()
    }

    fn is_strictly_negative(&self) -> bool {
        !self.is_negligible() && self.is_negative()
    }

    /// Equality up to the type's resolution.
    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_negligible()
    }
}

impl Scalar for f64 {
    fn from_int(value: i64) -> Self {
        value as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_exact() -> bool {
        false
    }

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }
}

impl Scalar for f32 {
    fn from_int(value: i64) -> Self {
        value as f32
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }

    fn is_exact() -> bool {
        false
    }

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-5
    }
}

impl Scalar for Ratio<i64> {
    fn from_int(value: i64) -> Self {
        Ratio::from_integer(value)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for BigRational {
    fn from_int(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        true
    }
}

/// Sum of a slice of scalars.
pub fn sum<T: Scalar>(values: impl IntoIterator<Item = T>) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc + v)
}
