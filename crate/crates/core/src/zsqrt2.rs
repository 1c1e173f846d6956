//! The ring `ℤ[√2]` and the Binet-type closed forms it certifies.
//!
//! Every closed form with a `1/2` or `1/(2√2)` factor is multiplied through,
//! so all checks stay inside `ℤ[√2]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{alt_sign, int, Scalar};
use crate::sequences::{builtin_spec, companion_extended, SequenceId};

/// `a + b√2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Zsqrt2<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> Zsqrt2<T> {
    pub fn new(a: T, b: T) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(int(a), int(b))
    }

    /// Embeds an ordinary integer.
    pub fn rational(a: T) -> Self {
        Self::new(a, T::zero())
    }

    /// `1 + √2`.
    pub fn silver() -> Self {
        Self::from_ints(1, 1)
    }

    /// `a - b√2`.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    /// `a² - 2b²`, multiplicative.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - int::<T>(2) * self.b.clone() * self.b.clone()
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.a.clone() * k.clone(), self.b.clone() * k.clone())
    }

    /// Binary powering; `x⁰ = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<T: Scalar> Zero for Zsqrt2<T> {
    fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Scalar> One for Zsqrt2<T> {
    fn one() -> Self {
        Self::new(T::one(), T::zero())
    }
}

impl<T: Scalar> Add for Zsqrt2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Scalar> Sub for Zsqrt2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Scalar> Neg for Zsqrt2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<T: Scalar> Mul for Zsqrt2<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let two: T = int(2);
        Self::new(
            self.a.clone() * rhs.a.clone() + two * self.b.clone() * rhs.b.clone(),
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl<T: Scalar> fmt::Display for Zsqrt2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}√2", self.a, self.b.abs())
        } else {
            write!(f, "{}+{}√2", self.a, self.b)
        }
    }
}

fn require_positive(what: &str, n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::domain(what, n, 1));
    }
    Ok(())
}

/// `(1+√2)ⁿ = Q(n-1) + E(n)√2` and, by conjugation, `(1-√2)ⁿ = Q(n-1) - E(n)√2`.
///
/// Adding and subtracting the two gives the classical Binet forms for `Q` and
/// `E` with the denominators cleared.
pub fn binet_check(n: i64) -> Result<bool> {
    require_positive("Binet index", n)?;
    let e = builtin_spec::<BigInt>(SequenceId::E).term(n)?;
    let q = builtin_spec::<BigInt>(SequenceId::Q).term(n - 1)?;
    let up = Zsqrt2::<BigInt>::silver().pow(n as u64);
    let down = Zsqrt2::<BigInt>::silver().conj().pow(n as u64);
    Ok(up == Zsqrt2::new(q.clone(), e.clone()) && down == Zsqrt2::new(q, -e))
}

/// `(1+√2)ⁿ + (1-√2)ⁿ = 2Q(n-1)` with the √2 parts cancelling, and
/// `(1+√2)ⁿ - (1-√2)ⁿ = 2√2·E(n)`.
pub fn binet_sum_difference(n: i64) -> Result<bool> {
    require_positive("Binet index", n)?;
    let e = builtin_spec::<BigInt>(SequenceId::E).term(n)?;
    let q = builtin_spec::<BigInt>(SequenceId::Q).term(n - 1)?;
    let up = Zsqrt2::<BigInt>::silver().pow(n as u64);
    let down = Zsqrt2::<BigInt>::silver().conj().pow(n as u64);
    let two = BigInt::from(2);
    let sum = up.clone() + down.clone();
    let diff = up - down;
    Ok(sum == Zsqrt2::rational(&two * q) && diff == Zsqrt2::new(BigInt::zero(), two * e))
}

/// Rational part of `(1+√2)ⁿ` equals `E(n) + E(n-1)`.
pub fn binet_consecutive_sum(n: i64) -> Result<bool> {
    require_positive("Binet index", n)?;
    let e = builtin_spec::<BigInt>(SequenceId::E).terms(n - 1, n)?;
    let up = Zsqrt2::<BigInt>::silver().pow(n as u64);
    Ok(up.a == &e[0] + &e[1])
}

/// Cleared Binet forms for `b`: `2b(n) = (-1)^(n+1) + Q(n-1)`,
/// `2(E(n)+E(n-1)-b(n)) = (-1)ⁿ + Q(n-1)` and
/// `4b(n) = 2(-1)^(n+1) + [(1+√2)ⁿ + (1-√2)ⁿ]`.
pub fn binet_b(n: i64) -> Result<bool> {
    require_positive("Binet index", n)?;
    let b = builtin_spec::<BigInt>(SequenceId::B).term(n)?;
    let e = builtin_spec::<BigInt>(SequenceId::E).terms(n - 1, n)?;
    let q = builtin_spec::<BigInt>(SequenceId::Q).term(n - 1)?;
    let sign: BigInt = alt_sign(n);
    let two = BigInt::from(2);
    let powers =
        Zsqrt2::<BigInt>::silver().pow(n as u64) + Zsqrt2::<BigInt>::silver().conj().pow(n as u64);
    let first = &two * &b == -&sign + &q;
    let diagonal = &two * (&e[0] + &e[1] - &b) == &sign + &q;
    let with_powers = Zsqrt2::rational(BigInt::from(4) * &b)
        == Zsqrt2::rational(-(&two * &sign)) + powers;
    Ok(first && diagonal && with_powers)
}

/// Cleared Binet forms for `a` and `r`: `2a(n) = 1 + Q(n-1)`,
/// `2r(n) = Q(n-1) - 1`, and `4a(n) = 2 + [(1+√2)ⁿ + (1-√2)ⁿ]`,
/// `4r(n) = -2 + [(1+√2)ⁿ + (1-√2)ⁿ]`.
///
/// Valid from `n = 0` using the backward value `Q(-1) = 1`.
pub fn binet_a_r(n: i64) -> Result<bool> {
    if n < 0 {
        return Err(Error::domain("Binet index", n, 0));
    }
    let a = builtin_spec::<BigInt>(SequenceId::A).term(n)?;
    let r = builtin_spec::<BigInt>(SequenceId::R).term(n)?;
    let q = companion_extended::<BigInt>().term(n - 1)?;
    let one = BigInt::one();
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    let powers =
        Zsqrt2::<BigInt>::silver().pow(n as u64) + Zsqrt2::<BigInt>::silver().conj().pow(n as u64);
    Ok(&two * &a == &one + &q
        && &two * &r == &q - &one
        && Zsqrt2::rational(&four * &a) == Zsqrt2::rational(two.clone()) + powers.clone()
        && Zsqrt2::rational(&four * &r) == Zsqrt2::rational(-two) + powers)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = Zsqrt2<i64>;

    #[test]
    fn products() {
        assert_eq!(Z::silver() * Z::silver(), Z::from_ints(3, 2));
        let x = Z::from_ints(-7, 4);
        assert_eq!(Z::one() * x.clone(), x);
        assert_eq!(Z::from_ints(1, 1) * Z::from_ints(1, -1), Z::from_ints(-1, 0));
        assert_eq!(Z::silver().norm(), -1);
    }

    #[test]
    fn powers() {
        assert_eq!(Z::silver().pow(1), Z::silver());
        assert_eq!(Z::silver().pow(0), Z::one());
        assert_eq!(Z::silver().pow(4), Z::from_ints(17, 12));
        assert_eq!(Z::zero().pow(0), Z::one());
        assert_eq!(Z::zero().pow(3), Z::zero());
    }

    #[test]
    fn conjugates() {
        assert_eq!(Z::silver().conj(), Z::from_ints(1, -1));
        assert_eq!(Z::from_ints(5, 0).conj(), Z::from_ints(5, 0));
        assert_eq!(Z::from_ints(3, 2).conj(), Z::from_ints(3, -2));
    }

    #[test]
    fn display() {
        assert_eq!(Z::from_ints(3, -2).to_string(), "3-2√2");
        assert_eq!(Z::from_ints(-1, 0).to_string(), "-1+0√2");
    }

    #[test]
    fn binet_small() {
        assert!(binet_check(1).unwrap());
        assert!(binet_check(2).unwrap());
        assert!(binet_check(0).is_err());
        assert!(binet_a_r(0).unwrap());
        assert!(binet_a_r(-1).is_err());
        assert!(binet_b(1).unwrap());
        assert!(binet_consecutive_sum(1).unwrap());
        assert!(binet_sum_difference(3).unwrap());
    }
}
