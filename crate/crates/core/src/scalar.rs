//! Coefficient fields for [`crate::series::Series3`].

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A field of series coefficients. Exact for rationals; floats are accepted
/// for quick approximate expansions.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {
    fn from_int(v: i64) -> Self;

    /// The value as an integer, if it is one exactly.
    fn as_exact_integer(&self) -> Option<BigInt>;
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + FromPrimitive + Into<BigInt>,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("representable"))
    }

    fn as_exact_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone().into())
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn as_exact_integer(&self) -> Option<BigInt> {
        (self.is_finite() && self.fract() == 0.0)
            .then(|| BigInt::from_f64(*self))
            .flatten()
    }
}

impl Scalar for f32 {
    fn from_int(v: i64) -> Self {
        v as f32
    }

    fn as_exact_integer(&self) -> Option<BigInt> {
        (self.is_finite() && self.fract() == 0.0)
            .then(|| BigInt::from_f32(*self))
            .flatten()
    }
}
