//! Exact integer scalars used as group-ring coefficients.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// An exact, signed integer type.
///
/// Everything above dimension 2 is linear algebra over `Z G`; the coefficient
/// type only needs exact ring operations, a Euclidean gcd, and a text form.
/// `BigInt` is the default (see [`crate::Int`]); machine integers are useful
/// for fast tests where intermediate growth is known to be bounded.
pub trait Scalar:
    Clone + Debug + Display + Hash + Ord + Signed + Integer + FromPrimitive + FromStr + Send + Sync
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("i64 fits every scalar type")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Hash
        + Ord
        + Signed
        + Integer
        + FromPrimitive
        + FromStr
        + Send
        + Sync
{
}
