//! Divisibility, congruence, gcd and Sidon checks for `r`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::{builtin_spec, SequenceId};

fn r_terms(hi: i64) -> Vec<BigInt> {
    builtin_spec::<BigInt>(SequenceId::R).terms(0, hi.max(0)).expect("valid range")
}

fn require(what: &str, value: i64, min: i64) -> Result<()> {
    if value < min {
        return Err(Error::domain(what, value, min));
    }
    Ok(())
}

/// `d | x`, with `0 | 0` true and `0 | x` false otherwise.
pub fn divides(d: &BigInt, x: &BigInt) -> bool {
    if d.is_zero() {
        x.is_zero()
    } else {
        (x % d).is_zero()
    }
}

/// `r(2m+1) ≡ r(2m) (mod 4)` for even `m`, `≡ r(2m) + 2` for odd `m`.
pub fn congruence_mod4(m: i64) -> Result<bool> {
    require("congruence index m", m, 1)?;
    let r = r_terms(2 * m + 1);
    let shift: u32 = if m.is_even() { 0 } else { 2 };
    let four = BigInt::from(4);
    let lhs = r[(2 * m + 1) as usize].mod_floor(&four);
    let rhs = (&r[(2 * m) as usize] + shift).mod_floor(&four);
    Ok(lhs == rhs)
}

/// Detail of the double-index relation at one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleIndex {
    pub n: i64,
    #[serde(with = "crate::serde_int")]
    pub r_n: BigInt,
    #[serde(with = "crate::serde_int")]
    pub r_2n: BigInt,
    /// `r(2n)` for even `n`, `r(2n) - 1` for odd `n`.
    #[serde(with = "crate::serde_int")]
    pub target: BigInt,
    pub equation: bool,
    /// `4 | target`, `r(n) | target`, `(r(n)+1) | target`.
    pub divisibility: [bool; 3],
}

impl DoubleIndex {
    pub fn holds(&self) -> bool {
        self.equation && self.divisibility.iter().all(|&d| d)
    }
}

pub fn double_index(n: i64) -> Result<DoubleIndex> {
    require("double-index n", n, 1)?;
    let r = r_terms(2 * n);
    let r_n = r[n as usize].clone();
    let r_2n = r[(2 * n) as usize].clone();
    let target = if n.is_even() { r_2n.clone() } else { &r_2n - 1 };
    let r_n1 = &r_n + 1;
    let equation = target == BigInt::from(4) * &r_n * &r_n1;
    let divisibility = [
        divides(&BigInt::from(4), &target),
        divides(&r_n, &target),
        divides(&r_n1, &target),
    ];
    Ok(DoubleIndex { n, r_n, r_2n, target, equation, divisibility })
}

/// `r(2n) = 4r(n)(r(n)+1)` for even `n`, `r(2n) - 1 = 4r(n)(r(n)+1)` for odd
/// `n`, together with the three divisibilities each implies.
pub fn double_index_check(n: i64) -> Result<bool> {
    Ok(double_index(n)?.holds())
}

/// `gcd(r(n), r(n-1))`.
pub fn gcd_consecutive(n: i64) -> Result<BigInt> {
    require("gcd index n", n, 2)?;
    let r = r_terms(n);
    Ok(r[n as usize].gcd(&r[(n - 1) as usize]))
}

/// The value [`gcd_consecutive`] should take: `J((n-1)/2)` for odd `n`,
/// 1 for even `n`.
pub fn gcd_expected(n: i64) -> Result<BigInt> {
    require("gcd index n", n, 2)?;
    if n.is_even() {
        Ok(BigInt::one())
    } else {
        builtin_spec::<BigInt>(SequenceId::J).term((n - 1) / 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdConsecutiveRow {
    pub n: i64,
    #[serde(with = "crate::serde_int")]
    pub gcd: BigInt,
    #[serde(with = "crate::serde_int")]
    pub expected: BigInt,
    pub pass: bool,
}

/// [`gcd_consecutive`] against [`gcd_expected`] for `2 ≤ n ≤ n_max`.
pub fn gcd_table(n_max: i64) -> Result<Vec<GcdConsecutiveRow>> {
    require("gcd n_max", n_max, 2)?;
    let r = r_terms(n_max);
    let j = builtin_spec::<BigInt>(SequenceId::J).terms(0, (n_max - 1) / 2)?;
    Ok((2..=n_max)
        .map(|n| {
            let gcd = r[n as usize].gcd(&r[(n - 1) as usize]);
            let expected = if n.is_even() { BigInt::one() } else { j[((n - 1) / 2) as usize].clone() };
            GcdConsecutiveRow { n, pass: gcd == expected, gcd, expected }
        })
        .collect())
}

/// One row of the gcd reduction table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdRow {
    pub n: i64,
    pub k: i64,
    /// The two reduced arguments; the first may be negative.
    #[serde(with = "crate::serde_int::pair")]
    pub lhs: (BigInt, BigInt),
    #[serde(with = "crate::serde_int")]
    pub gcd_reduced: BigInt,
    #[serde(with = "crate::serde_int")]
    pub gcd_direct: BigInt,
}

impl GcdRow {
    pub fn agrees(&self) -> bool {
        self.gcd_reduced == self.gcd_direct
    }
}

fn parity_error(what: &str, expected: &'static str, value: i64) -> Error {
    Error::Parity { what: what.to_string(), expected, value }
}

fn reduction_rows(
    n: i64,
    ks: &[i64],
    k_min: i64,
    args: impl Fn(&[BigInt], usize, usize) -> (BigInt, BigInt),
) -> Result<Vec<GcdRow>> {
    let r = r_terms(n);
    let direct = r[n as usize].gcd(&r[(n - 1) as usize]);
    ks.iter()
        .map(|&k| {
            if k < k_min || k > n {
                return Err(Error::Argument(format!("k = {k} outside [{k_min}, {n}]")));
            }
            let lhs = args(&r, (n - k) as usize, k as usize);
            Ok(GcdRow {
                n,
                k,
                gcd_reduced: lhs.0.gcd(&lhs.1),
                gcd_direct: direct.clone(),
                lhs,
            })
        })
        .collect()
}

/// Even branch: `gcd(r(n-k+1) - r(k-2), r(n-k) + r(k-1) + 1)` next to
/// `gcd(r(n), r(n-1))`, for even `n` and even `k` in `[2, n]`.
pub fn gcd_reduction_rows(n: i64, ks: &[i64]) -> Result<Vec<GcdRow>> {
    if n.is_odd() {
        return Err(parity_error("gcd reduction n", "even", n));
    }
    require("gcd reduction n", n, 2)?;
    if let Some(&k) = ks.iter().find(|k| k.is_odd()) {
        return Err(parity_error("gcd reduction k", "even", k));
    }
    reduction_rows(n, ks, 2, |r, nk, k| {
        (&r[nk + 1] - &r[k - 2], &r[nk] + &r[k - 1] + 1)
    })
}

/// Odd branch: `gcd(r(n-k+1) + r(k-2) + 1, r(n-k) - r(k-1))` next to
/// `gcd(r(n), r(n-1))`, for odd `n` and odd `k` in `[3, n]`.
pub fn gcd_reduction_rows_odd(n: i64, ks: &[i64]) -> Result<Vec<GcdRow>> {
    if n.is_even() {
        return Err(parity_error("gcd reduction n", "odd", n));
    }
    require("gcd reduction n", n, 3)?;
    if let Some(&k) = ks.iter().find(|k| k.is_even()) {
        return Err(parity_error("gcd reduction k", "odd", k));
    }
    reduction_rows(n, ks, 3, |r, nk, k| {
        (&r[nk + 1] + &r[k - 2] + 1, &r[nk] - &r[k - 1])
    })
}

/// All even `k` in `[2, n]`.
pub fn even_ks(n: i64) -> Vec<i64> {
    (2..=n).step_by(2).collect()
}

/// `s(n) < r(n+1)` for every `1 ≤ n ≤ n_max`.
pub fn partial_sum_bound(n_max: i64) -> Result<bool> {
    require("partial-sum n_max", n_max, 1)?;
    let r = r_terms(n_max + 1);
    let mut s = BigInt::zero();
    for n in 0..=n_max as usize {
        s += &r[n];
        if n >= 1 && s >= r[n + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidonReport {
    pub n_max: i64,
    pub distinct: bool,
    /// `(i, j, k, l)` with `r(i)+r(j) = r(k)+r(l)`, the later pair second.
    pub first_collision: Option<(i64, i64, i64, i64)>,
}

/// Pairwise sums `r(i) + r(j)` over `1 ≤ i ≤ j ≤ n_max`.
pub fn sidon_check(n_max: i64) -> Result<SidonReport> {
    require("Sidon n_max", n_max, 1)?;
    let r = r_terms(n_max);
    let mut seen: HashMap<BigInt, (i64, i64)> = HashMap::new();
    for i in 1..=n_max {
        for j in i..=n_max {
            let sum = &r[i as usize] + &r[j as usize];
            if let Some(&(k, l)) = seen.get(&sum) {
                return Ok(SidonReport {
                    n_max,
                    distinct: false,
                    first_collision: Some((k, l, i, j)),
                });
            }
            seen.insert(sum, (i, j));
        }
    }
    Ok(SidonReport { n_max, distinct: true, first_collision: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn congruence_examples() {
        assert!(congruence_mod4(1).unwrap());
        assert!(congruence_mod4(2).unwrap());
        assert!(matches!(congruence_mod4(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn double_index_examples() {
        let d = double_index(2).unwrap();
        assert_eq!((d.r_2n.clone(), d.holds()), (big(8), true));
        let d = double_index(3).unwrap();
        assert_eq!((d.target.clone(), d.holds()), (big(48), true));
        let d = double_index(1).unwrap();
        assert_eq!((d.target.clone(), d.holds()), (big(0), true));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_consecutive(5).unwrap(), big(4));
        assert_eq!(gcd_consecutive(7).unwrap(), big(7));
        assert_eq!(gcd_consecutive(2).unwrap(), big(1));
        assert!(gcd_consecutive(1).is_err());
        assert!(gcd_table(21).unwrap().iter().all(|r| r.pass));
    }

    #[test]
    fn reduction_examples() {
        let row = &gcd_reduction_rows(2, &[2]).unwrap()[0];
        assert_eq!(row.lhs, (big(0), big(1)));
        assert_eq!(row.gcd_reduced, big(1));
        let row = &gcd_reduction_rows(8, &[4]).unwrap()[0];
        assert!(row.agrees());
        assert_eq!(row.gcd_direct, big(1));
        let row = &gcd_reduction_rows(6, &[6]).unwrap()[0];
        assert_eq!(row.gcd_reduced, big(1));
        assert!(matches!(gcd_reduction_rows(7, &[2]), Err(Error::Parity { .. })));
        assert!(matches!(gcd_reduction_rows(8, &[3]), Err(Error::Parity { .. })));
        assert!(gcd_reduction_rows(8, &[10]).is_err());
        let rows = gcd_reduction_rows_odd(9, &[3, 5, 7, 9]).unwrap();
        assert!(rows.iter().all(|r| r.agrees() && r.gcd_direct == big(24)));
    }

    #[test]
    fn partial_sums_and_sidon() {
        assert!(partial_sum_bound(1).unwrap());
        assert!(partial_sum_bound(5).unwrap());
        assert!(partial_sum_bound(40).unwrap());
        assert!(sidon_check(3).unwrap().distinct);
        assert!(sidon_check(1).unwrap().distinct);
        let report = sidon_check(40).unwrap();
        assert_eq!((report.distinct, report.first_collision), (true, None));
        assert!(sidon_check(0).is_err());
    }

    #[test]
    fn divides_zero_convention() {
        assert!(divides(&big(0), &big(0)));
        assert!(!divides(&big(0), &big(3)));
        assert!(divides(&big(-4), &big(8)));
    }
}
