//! Coefficient fields.
//!
//! Every algebraic object in the crate is generic over a [`Field`]. The
//! checks performed by the verifier are exact zero tests, so only exact
//! fields are provided: arbitrary precision rationals ([`crate::Q`]) and the
//! fixed-width `Ratio<i64>` / `Ratio<i128>` which are handy in tests.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact field of characteristic zero.
pub trait Field:
    Num + Signed + Clone + PartialEq + Debug + Display + FromStr + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

macro_rules! impl_ratio_field {
    ($($int:ty),*) => {$(
        impl Field for Ratio<$int> {
            fn from_i64(n: i64) -> Self {
                Ratio::from_integer(<$int>::from(n))
            }
        }
    )*};
}

impl_ratio_field!(i64, i128, BigInt);
