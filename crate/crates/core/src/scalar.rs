use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Integer scalar the exact types are generic over.
///
/// Implemented for every signed integer type that supports Euclidean
/// division, in practice `i64`, `i128` and [`num_bigint::BigInt`]. Fixed-width
/// scalars overflow on large indices; use `BigInt` unless the range is known
/// to be small.
pub trait Scalar:
    Integer + Signed + Clone + FromPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + FromPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
}

/// Lift a machine integer into the scalar type.
#[inline]
pub fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent an i64 literal")
}

/// `(-1)^n` as a scalar.
#[inline]
pub(crate) fn alt_sign<T: Scalar>(n: i64) -> T {
    if n.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}
