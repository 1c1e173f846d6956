//! Exact 3×3 integer matrices and the three binary Pell generators.
//!
//! | generator | rows                         | det |
//! |-----------|------------------------------|-----|
//! | `u₁`      | `001 / 111 / 111`            | 0   |
//! | `u₁ᵀ`     | `011 / 011 / 111`            | 0   |
//! | `u₂`      | `011 / 101 / 111`            | 1   |
//! | `u₃`      | `101 / 011 / 111`            | -1  |
//!
//! The `closed_form_*` functions build `uⁿ` and `u⁻ⁿ` entry by entry from the
//! sequences in [`crate::sequences`]; [`Mat3::pow`] builds the same matrices by
//! repeated squaring, and the two are compared in the tests.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{alt_sign, int, Scalar};
use crate::sequences::{builtin_spec, pell_extended, SequenceId};
use crate::zsqrt2::Zsqrt2;

/// 3×3 matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat3<T> {
    pub rows: [[T; 3]; 3],
}

impl<T: Scalar> Mat3<T> {
    pub fn new(rows: [[T; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Self::new(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Self::from_fn(|i, j| int(rows[i][j]))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| T::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn trace(&self) -> T {
        self.rows[0][0].clone() + self.rows[1][1].clone() + self.rows[2][2].clone()
    }

    /// 2×2 minor obtained by deleting row `i` and column `j`.
    fn minor(&self, i: usize, j: usize) -> T {
        let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        self.rows[r[0]][c[0]].clone() * self.rows[r[1]][c[1]].clone()
            - self.rows[r[0]][c[1]].clone() * self.rows[r[1]][c[0]].clone()
    }

    fn cofactor(&self, i: usize, j: usize) -> T {
        let m = self.minor(i, j);
        if (i + j).is_multiple_of(2) {
            m
        } else {
            -m
        }
    }

    /// Cofactor expansion along the first row.
    pub fn det(&self) -> T {
        (0..3).fold(T::zero(), |acc, j| {
            acc + self.rows[0][j].clone() * self.cofactor(0, j)
        })
    }

    /// Transposed cofactor matrix; `M · adj(M) = det(M) · I`.
    pub fn adjugate(&self) -> Self {
        Self::from_fn(|i, j| self.cofactor(j, i))
    }

    /// Exact inverse when `det = ±1`, `None` otherwise.
    pub fn inverse_unimodular(&self) -> Option<Self> {
        let d = self.det();
        if d.is_one() {
            Some(self.adjugate())
        } else if (-d).is_one() {
            Some(-self.adjugate())
        } else {
            None
        }
    }

    /// `Mⁿ` by binary powering; `M⁰ = I`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Characteristic polynomial `det(xI - M)`.
    pub fn char_poly(&self) -> CharPoly<T> {
        let principal_minors = self.minor(0, 0) + self.minor(1, 1) + self.minor(2, 2);
        CharPoly {
            c2: -self.trace(),
            c1: principal_minors,
            c0: -self.det(),
        }
    }

    /// `M · v` over `ℤ[√2]`.
    pub fn apply(&self, v: &[Zsqrt2<T>; 3]) -> [Zsqrt2<T>; 3] {
        std::array::from_fn(|i| {
            (0..3).fold(Zsqrt2::rational(T::zero()), |acc, j| {
                acc + v[j].scale(&self.rows[i][j])
            })
        })
    }

    /// Row sums, sorted; invariant under simultaneous row/column permutation.
    pub fn row_sum_multiset(&self) -> [T; 3] {
        let mut sums: [T; 3] = std::array::from_fn(|i| {
            self.rows[i][0].clone() + self.rows[i][1].clone() + self.rows[i][2].clone()
        });
        sums.sort();
        sums
    }
}

impl<T: Scalar> Mul for &Mat3<T> {
    type Output = Mat3<T>;
    fn mul(self, rhs: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| {
            (0..3).fold(T::zero(), |acc, k| {
                acc + self.rows[i][k].clone() * rhs.rows[k][j].clone()
            })
        })
    }
}

impl<T: Scalar> Mul for Mat3<T> {
    type Output = Mat3<T>;
    fn mul(self, rhs: Mat3<T>) -> Mat3<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Add for &Mat3<T> {
    type Output = Mat3<T>;
    fn add(self, rhs: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| self.rows[i][j].clone() + rhs.rows[i][j].clone())
    }
}

impl<T: Scalar> Sub for &Mat3<T> {
    type Output = Mat3<T>;
    fn sub(self, rhs: &Mat3<T>) -> Mat3<T> {
        Mat3::from_fn(|i, j| self.rows[i][j].clone() - rhs.rows[i][j].clone())
    }
}

impl<T: Scalar> Neg for Mat3<T> {
    type Output = Mat3<T>;
    fn neg(self) -> Mat3<T> {
        Mat3::from_fn(|i, j| -self.rows[i][j].clone())
    }
}

impl<T: Scalar> fmt::Display for Mat3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// 2×2 matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    pub rows: [[T; 2]; 2],
}

impl<T: Scalar> Mat2<T> {
    pub fn new(rows: [[T; 2]; 2]) -> Self {
        Self { rows }
    }

    pub fn from_ints(rows: [[i64; 2]; 2]) -> Self {
        Self::new(rows.map(|r| r.map(int)))
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0], [0, 1]])
    }

    /// `[[2, 1], [1, 0]]`.
    pub fn pell() -> Self {
        Self::from_ints([[2, 1], [1, 0]])
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl<T: Scalar> Mul for &Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, rhs: &Mat2<T>) -> Mat2<T> {
        let e = |i: usize, j: usize| {
            self.rows[i][0].clone() * rhs.rows[0][j].clone()
                + self.rows[i][1].clone() * rhs.rows[1][j].clone()
        };
        Mat2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

/// Monic cubic `x³ + c2·x² + c1·x + c0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: fmt::Display",
    deserialize = "T: std::str::FromStr, T::Err: fmt::Display"
))]
pub struct CharPoly<T> {
    #[serde(with = "crate::serde_int")]
    pub c2: T,
    #[serde(with = "crate::serde_int")]
    pub c1: T,
    #[serde(with = "crate::serde_int")]
    pub c0: T,
}

impl<T: Scalar> CharPoly<T> {
    pub fn from_ints(c2: i64, c1: i64, c0: i64) -> Self {
        Self {
            c2: int(c2),
            c1: int(c1),
            c0: int(c0),
        }
    }

    pub fn eval(&self, x: &T) -> T {
        ((x.clone() + self.c2.clone()) * x.clone() + self.c1.clone()) * x.clone() + self.c0.clone()
    }

    /// Divides by the monic quadratic `x² + p1·x + p0`; returns the linear
    /// quotient constant `q` (quotient `x + q`) and the remainder `(r1, r0)`.
    pub fn div_monic_quadratic(&self, p1: &T, p0: &T) -> (T, [T; 2]) {
        let q = self.c2.clone() - p1.clone();
        let r1 = self.c1.clone() - p0.clone() - q.clone() * p1.clone();
        let r0 = self.c0.clone() - q.clone() * p0.clone();
        (q, [r1, r0])
    }

    /// If `x² - 2x - 1` divides the polynomial, the remaining integer root.
    pub fn pell_cofactor_root(&self) -> Option<T> {
        let (q, [r1, r0]) = self.div_monic_quadratic(&int(-2), &int(-1));
        (r1.is_zero() && r0.is_zero()).then(|| -q)
    }

    /// Discriminant; zero exactly when the cubic has a repeated root, i.e.
    /// when it shares a factor with its derivative.
    pub fn discriminant(&self) -> T {
        let (b, c, d) = (self.c2.clone(), self.c1.clone(), self.c0.clone());
        let sq = |x: &T| x.clone() * x.clone();
        let cube = |x: &T| x.clone() * x.clone() * x.clone();
        int::<T>(18) * b.clone() * c.clone() * d.clone() - int::<T>(4) * cube(&b) * d.clone()
            + sq(&b) * sq(&c)
            - int::<T>(4) * cube(&c)
            - int::<T>(27) * sq(&d)
    }

    pub fn is_squarefree(&self) -> bool {
        !self.discriminant().is_zero()
    }
}

impl<T: Scalar> fmt::Display for CharPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^3")?;
        for (c, mono) in [(&self.c2, "x^2"), (&self.c1, "x"), (&self.c0, "")] {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            if mono.is_empty() {
                write!(f, " {sign} {mag}")?;
            } else if mag.is_one() {
                write!(f, " {sign} {mono}")?;
            } else {
                write!(f, " {sign} {mag}{mono}")?;
            }
        }
        Ok(())
    }
}

/// Eigenvalue with an eigenvector whose denominators have been cleared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenTriple<T> {
    pub lam: Zsqrt2<T>,
    pub vec: [Zsqrt2<T>; 3],
}

impl<T: Scalar> EigenTriple<T> {
    /// `lam = l0 + l1√2`, coordinates `(a, b)` meaning `a + b√2`.
    pub fn from_ints(lam: (i64, i64), vec: [(i64, i64); 3]) -> Self {
        Self {
            lam: Zsqrt2::from_ints(lam.0, lam.1),
            vec: vec.map(|(a, b)| Zsqrt2::from_ints(a, b)),
        }
    }
}

/// `M·v - λ·v = 0` exactly.
pub fn eigen_residual<T: Scalar>(m: &Mat3<T>, t: &EigenTriple<T>) -> bool {
    let image = m.apply(&t.vec);
    image
        .iter()
        .zip(t.vec.iter())
        .all(|(mv, v)| *mv == t.lam.clone() * v.clone())
}

/// The named generator matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    U1,
    U1T,
    U2,
    U3,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::U1, Generator::U1T, Generator::U2, Generator::U3];

    pub fn name(self) -> &'static str {
        match self {
            Generator::U1 => "u1",
            Generator::U1T => "u1T",
            Generator::U2 => "u2",
            Generator::U3 => "u3",
        }
    }

    pub fn matrix<T: Scalar>(self) -> Mat3<T> {
        match self {
            Generator::U1 => u1(),
            Generator::U1T => u1t(),
            Generator::U2 => u2(),
            Generator::U3 => u3(),
        }
    }

    /// Closed form for the n-th power, `n ≥ 1`.
    pub fn closed_form(self, n: i64) -> Result<Mat3<BigInt>> {
        match self {
            Generator::U1 => closed_form_u1(n),
            Generator::U1T => closed_form_u1t(n),
            Generator::U2 => closed_form_u2(n),
            Generator::U3 => closed_form_u3(n),
        }
    }

    /// Eigen-systems with denominators cleared. Third-root eigenvalue first,
    /// then `1-√2`, then `1+√2`.
    pub fn eigen_system<T: Scalar>(self) -> Vec<EigenTriple<T>> {
        let lower = (1, -1);
        let upper = (1, 1);
        match self {
            Generator::U1 => vec![
                EigenTriple::from_ints((0, 0), [(-1, 0), (1, 0), (0, 0)]),
                EigenTriple::from_ints(lower, [(-1, -1), (1, 0), (1, 0)]),
                EigenTriple::from_ints(upper, [(-1, 1), (1, 0), (1, 0)]),
            ],
            Generator::U1T => vec![
                EigenTriple::from_ints((0, 0), [(0, 0), (-1, 0), (1, 0)]),
                EigenTriple::from_ints(lower, [(0, -1), (0, -1), (2, 0)]),
                EigenTriple::from_ints(upper, [(0, 1), (0, 1), (2, 0)]),
            ],
            Generator::U2 => vec![
                EigenTriple::from_ints((-1, 0), [(-1, 0), (1, 0), (0, 0)]),
                EigenTriple::from_ints(lower, [(0, -1), (0, -1), (2, 0)]),
                EigenTriple::from_ints(upper, [(0, 1), (0, 1), (2, 0)]),
            ],
            Generator::U3 => vec![
                EigenTriple::from_ints((1, 0), [(-1, 0), (1, 0), (0, 0)]),
                EigenTriple::from_ints(lower, [(0, -1), (0, -1), (2, 0)]),
                EigenTriple::from_ints(upper, [(0, 1), (0, 1), (2, 0)]),
            ],
        }
    }
}

/// Determinant-zero generator.
pub fn u1<T: Scalar>() -> Mat3<T> {
    Mat3::from_ints([[0, 0, 1], [1, 1, 1], [1, 1, 1]])
}

/// Transpose of [`u1`].
pub fn u1t<T: Scalar>() -> Mat3<T> {
    Mat3::from_ints([[0, 1, 1], [0, 1, 1], [1, 1, 1]])
}

/// Symmetric determinant-one generator.
pub fn u2<T: Scalar>() -> Mat3<T> {
    Mat3::from_ints([[0, 1, 1], [1, 0, 1], [1, 1, 1]])
}

/// Symmetric determinant-minus-one generator.
pub fn u3<T: Scalar>() -> Mat3<T> {
    Mat3::from_ints([[1, 0, 1], [0, 1, 1], [1, 1, 1]])
}

/// `M^n` for the scalar-generic matrix.
pub fn mat_pow<T: Scalar>(m: &Mat3<T>, n: u64) -> Mat3<T> {
    m.pow(n)
}

pub fn trace<T: Scalar>(m: &Mat3<T>) -> T {
    m.trace()
}

pub fn det<T: Scalar>(m: &Mat3<T>) -> T {
    m.det()
}

struct Terms {
    e: BigInt,
    e1: BigInt,
    e2: BigInt,
    q1: BigInt,
    b: BigInt,
    r: BigInt,
    a: BigInt,
    sign: BigInt,
}

fn terms_at(n: i64) -> Result<Terms> {
    if n < 1 {
        return Err(Error::domain("matrix power exponent", n, 1));
    }
    let e = pell_extended::<BigInt>().terms(n - 2, n)?;
    Ok(Terms {
        e: e[2].clone(),
        e1: e[1].clone(),
        e2: e[0].clone(),
        q1: builtin_spec::<BigInt>(SequenceId::Q).term(n - 1)?,
        b: builtin_spec::<BigInt>(SequenceId::B).term(n)?,
        r: builtin_spec::<BigInt>(SequenceId::R).term(n)?,
        a: builtin_spec::<BigInt>(SequenceId::A).term(n)?,
        sign: alt_sign(n),
    })
}

/// `u₁ⁿ = [[E(n-1), E(n-1), E(n-1)+E(n-2)], [E(n), E(n), E(n)+E(n-1)], [E(n), E(n), E(n)+E(n-1)]]`,
/// using `E(-1) = 1` at `n = 1`.
pub fn closed_form_u1(n: i64) -> Result<Mat3<BigInt>> {
    let t = terms_at(n)?;
    let top = [t.e1.clone(), t.e1.clone(), &t.e1 + &t.e2];
    let low = [t.e.clone(), t.e.clone(), &t.e + &t.e1];
    Ok(Mat3::new([top, low.clone(), low]))
}

/// `(u₁ᵀ)ⁿ`, the transpose layout of [`closed_form_u1`].
pub fn closed_form_u1t(n: i64) -> Result<Mat3<BigInt>> {
    let t = terms_at(n)?;
    let col0 = [t.e1.clone(), t.e1.clone(), &t.e1 + &t.e2];
    let col1 = [t.e.clone(), t.e.clone(), &t.e + &t.e1];
    Ok(Mat3::from_fn(|i, j| if j == 0 { col0[i].clone() } else { col1[i].clone() }))
}

/// `u₂ⁿ` from `E` and `b`.
pub fn closed_form_u2(n: i64) -> Result<Mat3<BigInt>> {
    let t = terms_at(n)?;
    let d = &t.e + &t.e1 - &t.b;
    Ok(Mat3::new([
        [d.clone(), t.b.clone(), t.e.clone()],
        [t.b.clone(), d, t.e.clone()],
        [t.e.clone(), t.e.clone(), &t.e + &t.e1],
    ]))
}

/// `u₂⁻ⁿ` from `Q`, `r` and `E`.
pub fn closed_form_u2_inv(n: i64) -> Result<Mat3<BigInt>> {
    let t = terms_at(n)?;
    let d = &t.sign * (&t.q1 - &t.r);
    let off = &t.sign * &t.r;
    let edge = -&t.sign * &t.e;
    Ok(Mat3::new([
        [d.clone(), off.clone(), edge.clone()],
        [off, d, edge.clone()],
        [edge.clone(), edge, &t.sign * &t.q1],
    ]))
}

/// `u₃ⁿ` from `a`, `r` and `E`.
pub fn closed_form_u3(n: i64) -> Result<Mat3<BigInt>> {
    let t = terms_at(n)?;
    Ok(Mat3::new([
        [t.a.clone(), t.r.clone(), t.e.clone()],
        [t.r.clone(), t.a.clone(), t.e.clone()],
        [t.e.clone(), t.e.clone(), &t.r + &t.a],
    ]))
}

/// `u₃⁻ⁿ` from `b`, `E` and `Q`.
pub fn closed_form_u3_inv(n: i64) -> Result<Mat3<BigInt>> {
    let t = terms_at(n)?;
    let off = &t.sign * &t.b;
    let d = BigInt::from(1) + &off;
    let edge = -&t.sign * &t.e;
    Ok(Mat3::new([
        [d.clone(), off.clone(), edge.clone()],
        [off, d, edge.clone()],
        [edge.clone(), edge, &t.sign * &t.q1],
    ]))
}

/// Outcome of the similarity test over `ℚ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Similarity {
    Similar,
    NotSimilar,
    /// Equal characteristic polynomials with a repeated root; the
    /// characteristic polynomial alone does not decide similarity.
    Indeterminate,
}

impl Similarity {
    pub fn is_similar(self) -> bool {
        self == Similarity::Similar
    }
}

/// Similarity over `ℚ` via characteristic polynomials. Equal squarefree
/// characteristic polynomials mean both matrices are diagonalisable over the
/// algebraic closure with the same simple spectrum, hence similar over `ℚ`.
pub fn similar_over_rationals<T: Scalar>(a: &Mat3<T>, b: &Mat3<T>) -> Similarity {
    let pa = a.char_poly();
    if pa != b.char_poly() {
        Similarity::NotSimilar
    } else if pa.is_squarefree() {
        Similarity::Similar
    } else {
        Similarity::Indeterminate
    }
}

/// `[[2,1],[1,0]]ⁿ = [[E(n+1), E(n)], [E(n), E(n-1)]]`.
pub fn intro_mat2_check(n: i64) -> Result<bool> {
    if n < 1 {
        return Err(Error::domain("matrix power exponent", n, 1));
    }
    let e = builtin_spec::<BigInt>(SequenceId::E).terms(n - 1, n + 1)?;
    let expected = Mat2::new([[e[2].clone(), e[1].clone()], [e[1].clone(), e[0].clone()]]);
    Ok(Mat2::<BigInt>::pell().pow(n as u64) == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = Mat3<i64>;

    fn big(rows: [[i64; 3]; 3]) -> Mat3<BigInt> {
        Mat3::from_ints(rows)
    }

    #[test]
    fn generator_powers() {
        assert_eq!(u1::<i64>().pow(2), M::from_ints([[1, 1, 1], [2, 2, 3], [2, 2, 3]]));
        assert_eq!(u2::<i64>().pow(0), M::identity());
        assert_eq!(u3::<i64>().pow(2), M::from_ints([[2, 1, 2], [1, 2, 2], [2, 2, 3]]));
        assert_eq!(u2::<i64>().pow(2), u3::<i64>().pow(2));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_u1(2).unwrap(), big([[1, 1, 1], [2, 2, 3], [2, 2, 3]]));
        assert_eq!(closed_form_u1(1).unwrap(), u1());
        assert_eq!(closed_form_u1(3).unwrap(), big([[2, 2, 3], [5, 5, 7], [5, 5, 7]]));
        assert_eq!(closed_form_u1t(2).unwrap(), closed_form_u1(2).unwrap().transpose());
        assert_eq!(closed_form_u1t(1).unwrap(), u1t());
        assert_eq!(closed_form_u1t(4).unwrap(), closed_form_u1(4).unwrap().transpose());
        assert_eq!(closed_form_u2(1).unwrap(), u2());
        assert_eq!(closed_form_u2(2).unwrap(), big([[2, 1, 2], [1, 2, 2], [2, 2, 3]]));
        assert_eq!(closed_form_u3(2).unwrap(), big([[2, 1, 2], [1, 2, 2], [2, 2, 3]]));
        assert_eq!(closed_form_u3(1).unwrap(), u3());
        assert_eq!(closed_form_u3(3).unwrap(), big([[4, 3, 5], [3, 4, 5], [5, 5, 7]]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            closed_form_u2_inv(1).unwrap(),
            big([[-1, 0, 1], [0, -1, 1], [1, 1, -1]])
        );
        assert_eq!(
            closed_form_u2_inv(2).unwrap(),
            big([[2, 1, -2], [1, 2, -2], [-2, -2, 3]])
        );
        assert_eq!(
            closed_form_u3_inv(1).unwrap(),
            big([[0, -1, 1], [-1, 0, 1], [1, 1, -1]])
        );
        assert_eq!(
            closed_form_u3_inv(2).unwrap(),
            big([[2, 1, -2], [1, 2, -2], [-2, -2, 3]])
        );
        assert_eq!(u2::<i64>().inverse_unimodular().unwrap(), M::from_ints([[-1, 0, 1], [0, -1, 1], [1, 1, -1]]));
        assert!(u1::<i64>().inverse_unimodular().is_none());
    }

    #[test]
    fn exponent_domain() {
        for f in [
            closed_form_u1,
            closed_form_u1t,
            closed_form_u2,
            closed_form_u2_inv,
            closed_form_u3,
            closed_form_u3_inv,
        ] {
            assert!(matches!(f(0), Err(Error::Domain { min: 1, .. })));
        }
        assert!(intro_mat2_check(0).is_err());
    }

    #[test]
    fn traces_and_dets() {
        assert_eq!(u1::<i64>().pow(2).trace(), 6);
        assert_eq!(M::identity().trace(), 3);
        assert_eq!(u1::<i64>().trace(), 2);
        assert_eq!(u2::<i64>().det(), 1);
        assert_eq!(u3::<i64>().det(), -1);
        assert_eq!(u1::<i64>().det(), 0);
    }

    #[test]
    fn eigen_examples() {
        let u2m = u2::<i64>();
        assert!(eigen_residual(&u2m, &EigenTriple::from_ints((-1, 0), [(-1, 0), (1, 0), (0, 0)])));
        assert!(eigen_residual(&u3::<i64>(), &EigenTriple::from_ints((1, 0), [(-1, 0), (1, 0), (0, 0)])));
        assert!(eigen_residual(&u2m, &EigenTriple::from_ints((1, 1), [(0, 1), (0, 1), (2, 0)])));
        assert!(!eigen_residual(&u2m, &EigenTriple::from_ints((1, 0), [(-1, 0), (1, 0), (0, 0)])));
        for g in Generator::ALL {
            for t in g.eigen_system::<i64>() {
                assert!(eigen_residual(&g.matrix(), &t), "{}: {:?}", g.name(), t);
            }
        }
    }

    #[test]
    fn similarity() {
        assert_eq!(similar_over_rationals(&u1::<i64>(), &u1t()), Similarity::Similar);
        assert_eq!(similar_over_rationals(&u1::<i64>(), &M::identity()), Similarity::NotSimilar);
        assert_eq!(similar_over_rationals(&u2::<i64>(), &u3()), Similarity::NotSimilar);
        assert_eq!(
            similar_over_rationals(&M::identity(), &M::identity()),
            Similarity::Indeterminate
        );
    }

    #[test]
    fn char_polys() {
        assert_eq!(u1::<i64>().char_poly(), CharPoly::from_ints(-2, -1, 0));
        assert_eq!(M::identity().char_poly(), CharPoly::from_ints(-3, 3, -1));
        assert_eq!(u3::<i64>().char_poly(), CharPoly::from_ints(-3, 1, 1));
        assert_eq!(u2::<i64>().char_poly(), CharPoly::from_ints(-1, -3, -1));
        assert_eq!(u3::<i64>().char_poly().pell_cofactor_root(), Some(1));
        assert_eq!(M::identity().char_poly().pell_cofactor_root(), None);
        assert_eq!(CharPoly::<i64>::from_ints(-3, 1, 1).to_string(), "x^3 - 3x^2 + x + 1");
        assert_eq!(CharPoly::<i64>::from_ints(-2, -1, 0).to_string(), "x^3 - 2x^2 - x");
    }

    #[test]
    fn char_poly_vanishes_on_integer_eigenvalues() {
        assert_eq!(u1::<i64>().char_poly().eval(&0), 0);
        assert_eq!(u2::<i64>().char_poly().eval(&-1), 0);
        assert_eq!(u3::<i64>().char_poly().eval(&1), 0);
    }

    #[test]
    fn mat2() {
        assert!(intro_mat2_check(1).unwrap());
        assert!(intro_mat2_check(3).unwrap());
        assert!(intro_mat2_check(50).unwrap());
    }

    #[test]
    fn adjugate_identity() {
        let m = M::from_ints([[2, -1, 3], [0, 4, 1], [5, 2, -2]]);
        let d = m.det();
        assert_eq!(&m * &m.adjugate(), M::from_fn(|i, j| if i == j { d } else { 0 }));
    }
}
