//! Exact arithmetic for the Pell family of integer sequences.
//!
//! The crate is organised around a handful of exact objects:
//!
//! * [`sequences`]: one affine linear-recurrence engine that evaluates the
//!   Pell numbers `E`, the companion sequence `Q`, the Pell–Lucas numbers `Q̂`
//!   and the auxiliary sequences `b`, `r`, `a`, `s`, `J`.
//! * [`zsqrt2`]: the ring `ℤ[√2]`, used to check Binet-type closed forms
//!   without floating point.
//! * [`pellmat`]: 3×3 integer matrices, the three binary generators `u₁`,
//!   `u₂`, `u₃`, their closed-form powers and inverse powers.
//! * [`identities`]: a catalog of identities between the sequences together
//!   with an exact range checker.
//! * [`numtheory`]: congruences, gcd structure and the Sidon property of `r`.
//! * [`classifier`]: the census of all 512 binary 3×3 matrices.
//!
//! Core types are generic over an integer [`Scalar`]; the aliases below fix
//! the scalar to [`BigInt`], which is what every public checker uses.

pub mod classifier;
mod error;
pub mod identities;
pub mod numtheory;
pub mod pellmat;
mod scalar;
pub mod sequences;
pub mod serde_int;
pub mod zsqrt2;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use scalar::{int, Scalar};

/// Arbitrary-precision integer used throughout the checkers.
pub type Int = BigInt;
/// `ℤ[√2]` over arbitrary-precision integers.
pub type BigZsqrt2 = zsqrt2::Zsqrt2<BigInt>;
/// 3×3 arbitrary-precision integer matrix.
pub type BigMat3 = pellmat::Mat3<BigInt>;
/// 2×2 arbitrary-precision integer matrix.
pub type BigMat2 = pellmat::Mat2<BigInt>;
/// Recurrence over arbitrary-precision integers.
pub type BigRecurrence = sequences::RecurrenceSpec<BigInt>;
/// Characteristic polynomial with arbitrary-precision coefficients.
pub type BigCharPoly = pellmat::CharPoly<BigInt>;
/// Eigenpair over `ℤ[√2]` with arbitrary-precision coordinates.
pub type BigEigenTriple = pellmat::EigenTriple<BigInt>;
