//! Affine linear recurrences and the builtin Pell-family sequences.
//!
//! Every sequence is described by a [`RecurrenceSpec`]:
//!
//! ```text
//! x(k) = c[0]·x(k-1) + c[1]·x(k-2) + … + c[order-1]·x(k-order) + constant
//! ```
//!
//! with `order` initial values stored from `base_index` onward. Evaluation is
//! a single forward pass; matrix-based evaluation lives in [`crate::pellmat`]
//! so the two routes can check each other.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// The builtin sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SequenceId {
    /// Pell numbers: `E(n+1) = 2E(n) + E(n-1)`, `E(0) = 0`, `E(1) = 1`.
    E,
    /// Companion Pell sequence, same recurrence with `Q(0) = 1`, `Q(1) = 3`.
    Q,
    /// Pell–Lucas numbers, same recurrence with `Q̂(0) = Q̂(1) = 2`.
    QHat,
    /// `b(n) = b(n-1) + 3b(n-2) + b(n-3)`, `b = 0, 1, 1, …`.
    B,
    /// `r(n) = 2r(n-1) + r(n-2) + 1`, `r = 0, 0, 1, …`.
    R,
    /// `a(n) = 3a(n-1) - a(n-2) - a(n-3)`, `a = 1, 1, 2, …`.
    A,
    /// Partial sums of `r`: `s(n) = 3s(n-1) - s(n-2) - s(n-3) + 1`, `s = 0, 0, 1, …`.
    S,
    /// `J(n) = 6J(n-2) - J(n-4)`, `J = 0, 1, 4, 7, …`.
    J,
}

impl SequenceId {
    pub const ALL: [SequenceId; 8] = [
        SequenceId::E,
        SequenceId::Q,
        SequenceId::QHat,
        SequenceId::B,
        SequenceId::R,
        SequenceId::A,
        SequenceId::S,
        SequenceId::J,
    ];

    /// Short tag used on the command line and in reports.
    pub fn tag(self) -> &'static str {
        match self {
            SequenceId::E => "E",
            SequenceId::Q => "Q",
            SequenceId::QHat => "QHAT",
            SequenceId::B => "B",
            SequenceId::R => "R",
            SequenceId::A => "A",
            SequenceId::S => "S",
            SequenceId::J => "J",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        SequenceId::ALL
            .into_iter()
            .find(|id| id.tag() == upper)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

/// An affine linear recurrence with its initial window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec<T> {
    coeffs: Vec<T>,
    constant: T,
    initials: Vec<T>,
    base_index: i64,
}

impl<T: Scalar> RecurrenceSpec<T> {
    /// `coeffs[0]` multiplies the most recent term. `initials[0]` sits at
    /// `base_index`.
    pub fn new(coeffs: Vec<T>, constant: T, initials: Vec<T>, base_index: i64) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidRecurrence("order must be positive".into()));
        }
        if coeffs.len() != initials.len() {
            return Err(Error::InvalidRecurrence(format!(
                "{} coefficients but {} initial values",
                coeffs.len(),
                initials.len()
            )));
        }
        Ok(Self {
            coeffs,
            constant,
            initials,
            base_index,
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn constant(&self) -> &T {
        &self.constant
    }

    pub fn initials(&self) -> &[T] {
        &self.initials
    }

    pub fn base_index(&self) -> i64 {
        self.base_index
    }

    /// Infinite iterator over the terms starting at `base_index`.
    pub fn iter(&self) -> Terms<'_, T> {
        Terms {
            spec: self,
            window: VecDeque::with_capacity(self.order()),
            emitted: 0,
        }
    }

    fn check_index(&self, n: i64) -> Result<usize> {
        if n < self.base_index {
            return Err(Error::domain("sequence index", n, self.base_index));
        }
        Ok((n - self.base_index) as usize)
    }

    /// Exact term at index `n`.
    pub fn term(&self, n: i64) -> Result<T> {
        let offset = self.check_index(n)?;
        Ok(self.iter().nth(offset).expect("recurrence iterator is infinite"))
    }

    /// Terms for every index in `lo..=hi`, computed in one pass.
    pub fn terms(&self, lo: i64, hi: i64) -> Result<Vec<T>> {
        if lo > hi {
            return Err(Error::EmptyRange { lo, hi });
        }
        let skip = self.check_index(lo)?;
        Ok(self.iter().skip(skip).take((hi - lo + 1) as usize).collect())
    }

    /// Runs the recurrence backwards for `steps` indices.
    ///
    /// Needs the oldest coefficient to be a unit (`±1`) so the earlier term
    /// is an integer. Returns a spec describing the same sequence with
    /// `base_index` lowered by `steps`.
    pub fn extend_backward(&self, steps: usize) -> Result<Self> {
        let order = self.order();
        let last = self.coeffs[order - 1].clone();
        if !(last.is_one() || (-last.clone()).is_one()) {
            return Err(Error::InvalidRecurrence(format!(
                "oldest coefficient {last} is not a unit; cannot run backwards"
            )));
        }
        let mut window: VecDeque<T> = self.initials.iter().cloned().collect();
        for _ in 0..steps {
            // window[0] is x(k-order+1) .. window[order-1] is x(k); the next
            // value written at the front is x(k-order).
            let newest = window[order - 1].clone();
            let mut rest = newest - self.constant.clone();
            for i in 1..order {
                rest = rest - self.coeffs[i - 1].clone() * window[order - 1 - i].clone();
            }
            let earlier = rest * last.clone();
            window.pop_back();
            window.push_front(earlier);
        }
        Ok(Self {
            coeffs: self.coeffs.clone(),
            constant: self.constant.clone(),
            initials: window.into_iter().collect(),
            base_index: self.base_index - steps as i64,
        })
    }
}

/// Iterator produced by [`RecurrenceSpec::iter`].
pub struct Terms<'a, T> {
    spec: &'a RecurrenceSpec<T>,
    window: VecDeque<T>,
    emitted: usize,
}

impl<T: Scalar> Iterator for Terms<'_, T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let order = self.spec.order();
        let value = if self.emitted < order {
            self.spec.initials[self.emitted].clone()
        } else {
            let mut acc = self.spec.constant.clone();
            for (i, c) in self.spec.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc + c.clone() * self.window[order - 1 - i].clone();
                }
            }
            acc
        };
        if self.window.len() == order {
            self.window.pop_front();
        }
        self.window.push_back(value.clone());
        self.emitted += 1;
        Some(value)
    }
}

fn spec<T: Scalar>(coeffs: &[i64], constant: i64, initials: &[i64]) -> RecurrenceSpec<T> {
    RecurrenceSpec::new(
        coeffs.iter().map(|&c| int(c)).collect(),
        int(constant),
        initials.iter().map(|&v| int(v)).collect(),
        0,
    )
    .expect("builtin recurrence is well formed")
}

/// The recurrence defining a builtin sequence. All builtin sequences start at
/// index 0.
pub fn builtin_spec<T: Scalar>(id: SequenceId) -> RecurrenceSpec<T> {
    match id {
        SequenceId::E => spec(&[2, 1], 0, &[0, 1]),
        SequenceId::Q => spec(&[2, 1], 0, &[1, 3]),
        SequenceId::QHat => spec(&[2, 1], 0, &[2, 2]),
        SequenceId::B => spec(&[1, 3, 1], 0, &[0, 1, 1]),
        SequenceId::R => spec(&[2, 1], 1, &[0, 0]),
        SequenceId::A => spec(&[3, -1, -1], 0, &[1, 1, 2]),
        SequenceId::S => spec(&[3, -1, -1], 1, &[0, 0, 1]),
        SequenceId::J => spec(&[0, 6, 0, -1], 0, &[0, 1, 4, 7]),
    }
}

/// `id(n)` as an arbitrary-precision integer.
pub fn term(id: SequenceId, n: i64) -> Result<BigInt> {
    builtin_spec::<BigInt>(id).term(n)
}

/// `id(lo), …, id(hi)`.
pub fn terms(id: SequenceId, lo: i64, hi: i64) -> Result<Vec<BigInt>> {
    builtin_spec::<BigInt>(id).terms(lo, hi)
}

/// `r(0) + r(1) + … + r(n)` by direct summation.
pub fn partial_sum(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain("partial sum bound", n, 0));
    }
    Ok(terms(SequenceId::R, 0, n)?.into_iter().sum())
}

/// Pell numbers with the one-step backward extension `E(-1) = 1`.
pub fn pell_extended<T: Scalar>() -> RecurrenceSpec<T> {
    builtin_spec::<T>(SequenceId::E)
        .extend_backward(1)
        .expect("Pell recurrence has a unit oldest coefficient")
}

/// Companion sequence with the one-step backward extension `Q(-1) = 1`.
pub fn companion_extended<T: Scalar>() -> RecurrenceSpec<T> {
    builtin_spec::<T>(SequenceId::Q)
        .extend_backward(1)
        .expect("companion recurrence has a unit oldest coefficient")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(big).collect()
    }

    #[test]
    fn builtin_shapes() {
        let e = builtin_spec::<i64>(SequenceId::E);
        assert_eq!(e.order(), 2);
        assert_eq!(e.coeffs(), &[2, 1]);
        assert_eq!(*e.constant(), 0);
        assert_eq!(e.initials(), &[0, 1]);
        assert_eq!(e.base_index(), 0);

        let r = builtin_spec::<i64>(SequenceId::R);
        assert_eq!(r.coeffs(), &[2, 1]);
        assert_eq!(*r.constant(), 1);
        assert_eq!(r.initials(), &[0, 0]);

        let j = builtin_spec::<i64>(SequenceId::J);
        assert_eq!(j.order(), 4);
        assert_eq!(j.coeffs(), &[0, 6, 0, -1]);
        assert_eq!(j.initials(), &[0, 1, 4, 7]);
    }

    #[test]
    fn pell_ground_truth() {
        assert_eq!(term(SequenceId::E, 7).unwrap(), big(169));
        assert_eq!(term(SequenceId::E, 0).unwrap(), big(0));
        assert_eq!(
            terms(SequenceId::E, 1, 8).unwrap(),
            bigs(&[1, 2, 5, 12, 29, 70, 169, 408])
        );
    }

    #[test]
    fn small_terms() {
        assert_eq!(term(SequenceId::R, 7).unwrap(), big(119));
        assert_eq!(term(SequenceId::B, 5).unwrap(), big(21));
        assert_eq!(terms(SequenceId::Q, 0, 3).unwrap(), bigs(&[1, 3, 7, 17]));
        assert_eq!(terms(SequenceId::R, 0, 0).unwrap(), bigs(&[0]));
        assert_eq!(term(SequenceId::R, 2).unwrap(), big(1));
        assert_eq!(terms(SequenceId::A, 0, 3).unwrap(), bigs(&[1, 1, 2, 4]));
    }

    #[test]
    fn initial_window_is_returned_unchanged() {
        for id in SequenceId::ALL {
            let s = builtin_spec::<i64>(id);
            for (k, v) in s.initials().iter().enumerate() {
                assert_eq!(s.term(k as i64).unwrap(), *v, "{id} at {k}");
            }
        }
    }

    #[test]
    fn index_errors() {
        assert!(matches!(
            term(SequenceId::E, -1),
            Err(Error::Domain { value: -1, min: 0, .. })
        ));
        assert!(matches!(
            terms(SequenceId::E, 4, 3),
            Err(Error::EmptyRange { lo: 4, hi: 3 })
        ));
        assert!(matches!(terms(SequenceId::E, -2, 3), Err(Error::Domain { .. })));
    }

    #[test]
    fn partial_sums() {
        assert_eq!(partial_sum(2).unwrap(), big(1));
        assert_eq!(partial_sum(0).unwrap(), big(0));
        assert_eq!(partial_sum(5).unwrap(), big(32));
        assert!(partial_sum(-1).is_err());
    }

    #[test]
    fn backward_extension() {
        let e = pell_extended::<i64>();
        assert_eq!(e.base_index(), -1);
        assert_eq!(e.term(-1).unwrap(), 1);
        assert_eq!(e.terms(-1, 3).unwrap(), vec![1, 0, 1, 2, 5]);
        assert_eq!(companion_extended::<i64>().term(-1).unwrap(), 1);
        let r = builtin_spec::<i64>(SequenceId::R).extend_backward(1).unwrap();
        assert_eq!(r.term(-1).unwrap(), -1);
        let j = builtin_spec::<i64>(SequenceId::J).extend_backward(2).unwrap();
        assert_eq!(j.terms(-2, 5).unwrap()[2..], builtin_spec::<i64>(SequenceId::J).terms(0, 5).unwrap()[..]);

        let not_unit = RecurrenceSpec::new(vec![1i64, 2], 0, vec![0, 1], 0).unwrap();
        assert!(not_unit.extend_backward(1).is_err());
    }

    #[test]
    fn invalid_specs() {
        assert!(RecurrenceSpec::<i64>::new(vec![], 0, vec![], 0).is_err());
        assert!(RecurrenceSpec::new(vec![1i64, 1], 0, vec![0], 0).is_err());
    }

    #[test]
    fn tags_round_trip() {
        for id in SequenceId::ALL {
            assert_eq!(id.tag().parse::<SequenceId>().unwrap(), id);
        }
        assert_eq!("qhat".parse::<SequenceId>().unwrap(), SequenceId::QHat);
        assert!("X".parse::<SequenceId>().is_err());
    }
}
