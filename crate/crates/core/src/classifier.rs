//! Census of all 512 binary 3×3 matrices: which ones carry the Pell
//! quadratic `x² - 2x - 1` in their characteristic polynomial, and how they
//! split into classes.
//!
//! Three views of "class" are reported side by side: characteristic
//! polynomial buckets, similarity over ℚ (the same thing here, since every
//! bucket polynomial is squarefree), and orbits under conjugation by the six
//! permutation matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::pellmat::{u1, u2, u3, CharPoly, Mat3};
use crate::scalar::Scalar;
use crate::sequences::companion_extended;

/// A 3×3 matrix with small integer entries.
pub type Bin3 = Mat3<i64>;

pub const MATRIX_COUNT: u16 = 512;

/// Largest `n` used by the trace check in [`ClassificationReport::validate`].
pub const TRACE_CHECK_MAX: i64 = 30;

/// Entry `(i, j)` is bit `8 - (3i + j)` of the index, so bit 8 is the
/// top-left entry.
pub fn matrix_from_index(index: u16) -> Bin3 {
    assert!(index < MATRIX_COUNT, "binary 3x3 index out of range: {index}");
    Mat3::from_fn(|i, j| i64::from((index >> (8 - (3 * i + j))) & 1))
}

/// Inverse of [`matrix_from_index`]; `None` for non-binary matrices.
pub fn index_of(m: &Bin3) -> Option<u16> {
    let mut index = 0u16;
    for i in 0..3 {
        for j in 0..3 {
            match *m.get(i, j) {
                0 => {}
                1 => index |= 1 << (8 - (3 * i + j)),
                _ => return None,
            }
        }
    }
    Some(index)
}

/// All binary 3×3 matrices in index order.
pub fn enumerate_binary3() -> Vec<Bin3> {
    (0..MATRIX_COUNT).map(matrix_from_index).collect()
}

pub fn char_poly<T: Scalar>(m: &Mat3<T>) -> CharPoly<T> {
    m.char_poly()
}

/// `x² - 2x - 1` divides the characteristic polynomial.
pub fn is_pell_generating<T: Scalar>(m: &Mat3<T>) -> bool {
    m.char_poly().pell_cofactor_root().is_some()
}

/// The six 3×3 permutation matrices, identity first.
pub fn permutation_matrices() -> [Bin3; 6] {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.map(|p| Mat3::from_fn(|i, j| i64::from(p[i] == j)))
}

/// `P M P⁻¹` for a permutation matrix `P` (whose inverse is its transpose).
pub fn conjugate(p: &Bin3, m: &Bin3) -> Bin3 {
    &(p * m) * &p.transpose()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Partition of `set` under permutation conjugation. Parts are ordered by
/// their first element's position in `set`, and members keep input order.
/// Conjugates that fall outside `set` are ignored.
pub fn permutation_orbits(set: &[Bin3]) -> Vec<Vec<Bin3>> {
    let perms = permutation_matrices();
    let mut parent: Vec<usize> = (0..set.len()).collect();
    for (i, m) in set.iter().enumerate() {
        for p in &perms {
            let c = conjugate(p, m);
            if let Some(j) = set.iter().position(|x| *x == c) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut parts: BTreeMap<usize, Vec<Bin3>> = BTreeMap::new();
    for (i, m) in set.iter().enumerate() {
        let root = find(&mut parent, i);
        parts.entry(root).or_default().push(m.clone());
    }
    parts.into_values().collect()
}

/// `(x - root)(x² - 2x - 1)` written out.
pub fn factored(root: i64) -> String {
    let linear = match root {
        0 => "x".to_string(),
        r if r < 0 => format!("(x + {})", -r),
        r => format!("(x - {r})"),
    };
    format!("{linear}(x^2 - 2x - 1)")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bucket {
    pub key: CharPoly<i64>,
    pub poly: String,
    pub factored: String,
    pub third_root: i64,
    pub trace: i64,
    pub det: i64,
    pub squarefree: bool,
    pub members: Vec<u16>,
    pub orbits: Vec<Vec<u16>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representative {
    pub name: String,
    pub index: u16,
    pub bucket: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub total: usize,
    pub pell_count: usize,
    /// Buckets sorted by `(c2, c1, c0)`.
    pub buckets: Vec<Bucket>,
    pub orbit_count_per_bucket: BTreeMap<String, usize>,
    /// Number of similarity classes over ℚ. Known only when every bucket
    /// polynomial is squarefree, in which case it equals the bucket count.
    pub rational_similarity_classes: Option<usize>,
    pub representatives: Vec<Representative>,
}

/// Runs the census.
pub fn classify() -> ClassificationReport {
    let all = enumerate_binary3();
    let mut grouped: BTreeMap<CharPoly<i64>, Vec<u16>> = BTreeMap::new();
    for (index, m) in all.iter().enumerate() {
        if is_pell_generating(m) {
            grouped.entry(m.char_poly()).or_default().push(index as u16);
        }
    }
    let pell_count = grouped.values().map(Vec::len).sum();

    let buckets: Vec<Bucket> = grouped
        .into_iter()
        .map(|(key, members)| {
            let root = key.pell_cofactor_root().expect("filtered on divisibility");
            let mats: Vec<Bin3> = members.iter().map(|&i| matrix_from_index(i)).collect();
            let orbits = permutation_orbits(&mats)
                .iter()
                .map(|part| part.iter().map(|m| index_of(m).expect("binary")).collect())
                .collect();
            Bucket {
                poly: key.to_string(),
                factored: factored(root),
                third_root: root,
                trace: -key.c2,
                det: -key.c0,
                squarefree: key.is_squarefree(),
                key,
                members,
                orbits,
            }
        })
        .collect();

    let orbit_count_per_bucket = buckets.iter().map(|b| (b.factored.clone(), b.orbits.len())).collect();
    let rational_similarity_classes = buckets.iter().all(|b| b.squarefree).then_some(buckets.len());

    let representatives = [("u1", u1::<i64>()), ("u2", u2()), ("u3", u3())]
        .into_iter()
        .map(|(name, m)| {
            let key = m.char_poly();
            let bucket = buckets
                .iter()
                .find(|b| b.key == key)
                .map(|b| b.factored.clone())
                .unwrap_or_default();
            Representative {
                name: name.to_string(),
                index: index_of(&m).expect("generators are binary"),
                bucket,
            }
        })
        .collect();

    ClassificationReport {
        total: all.len(),
        pell_count,
        buckets,
        orbit_count_per_bucket,
        rational_similarity_classes,
        representatives,
    }
}

/// `trace(Mⁿ) - rootⁿ = 2Q(n-1)` for `1 ≤ n ≤ n_max`.
pub fn trace_identity(m: &Bin3, root: i64, n_max: i64) -> bool {
    let big: Mat3<BigInt> = Mat3::from_fn(|i, j| BigInt::from(*m.get(i, j)));
    let q = companion_extended::<BigInt>().terms(0, n_max).expect("valid range");
    let root = BigInt::from(root);
    let mut power = big.clone();
    let mut root_pow = root.clone();
    for n in 1..=n_max {
        if power.trace() - &root_pow != BigInt::from(2) * &q[(n - 1) as usize] {
            return false;
        }
        power = &power * &big;
        root_pow *= &root;
    }
    true
}

impl ClassificationReport {
    /// Structural checks; returns one message per violation.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.total != MATRIX_COUNT as usize {
            out.push(format!("total {} != {MATRIX_COUNT}", self.total));
        }
        let mut seen = std::collections::BTreeSet::new();
        for b in &self.buckets {
            for &i in &b.members {
                if !seen.insert(i) {
                    out.push(format!("matrix {i} appears in more than one bucket"));
                }
                let m = matrix_from_index(i);
                if m.trace() != b.trace || m.det() != b.det {
                    out.push(format!("matrix {i} has trace/det off its bucket {}", b.factored));
                }
                if !trace_identity(&m, b.third_root, TRACE_CHECK_MAX) {
                    out.push(format!("matrix {i} fails the trace identity"));
                }
            }
            let mut flat: Vec<u16> = b.orbits.iter().flatten().copied().collect();
            flat.sort_unstable();
            if flat != b.members {
                out.push(format!("orbits of {} do not partition its members", b.factored));
            }
            for orbit in &b.orbits {
                let mats: Vec<Bin3> = orbit.iter().map(|&i| matrix_from_index(i)).collect();
                if permutation_orbits(&mats).len() != 1 {
                    out.push(format!("orbit {orbit:?} splits on re-run"));
                }
            }
        }
        if seen.len() != self.pell_count {
            out.push(format!("bucketed {} matrices, pell_count {}", seen.len(), self.pell_count));
        }
        let reps: std::collections::BTreeSet<&str> =
            self.representatives.iter().map(|r| r.bucket.as_str()).collect();
        if reps.len() != self.representatives.len() || reps.contains("") {
            out.push("representatives do not occupy distinct buckets".into());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_layout() {
        assert_eq!(matrix_from_index(0), Bin3::zero());
        assert_eq!(matrix_from_index(511), Bin3::from_ints([[1; 3]; 3]));
        assert_eq!(index_of(&u1()), Some(127));
        assert_eq!(index_of(&u2()), Some(239));
        assert_eq!(index_of(&u3()), Some(351));
        assert_eq!(index_of(&Bin3::from_ints([[2, 0, 0], [0, 0, 0], [0, 0, 0]])), None);
        for i in 0..MATRIX_COUNT {
            assert_eq!(index_of(&matrix_from_index(i)), Some(i));
        }
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&u1::<i64>()), CharPoly::from_ints(-2, -1, 0));
        assert_eq!(char_poly(&Bin3::identity()), CharPoly::from_ints(-3, 3, -1));
        assert_eq!(char_poly(&u3::<i64>()), CharPoly::from_ints(-3, 1, 1));
    }

    #[test]
    fn pell_filter() {
        assert!(is_pell_generating(&u2::<i64>()));
        assert!(!is_pell_generating(&Bin3::identity()));
        assert!(!is_pell_generating(&Bin3::zero()));
    }

    #[test]
    fn orbits() {
        let orbit = permutation_orbits(&enumerate_binary3())
            .into_iter()
            .find(|o| o.contains(&u2()))
            .unwrap();
        assert!(orbit.len() <= 6);
        assert_eq!(permutation_orbits(&[Bin3::identity()]).len(), 1);
        let u1 = u1::<i64>();
        assert_eq!(permutation_orbits(&[u1.clone(), u1.transpose()]).len(), 2);
    }

    #[test]
    fn factored_names() {
        assert_eq!(factored(0), "x(x^2 - 2x - 1)");
        assert_eq!(factored(-1), "(x + 1)(x^2 - 2x - 1)");
        assert_eq!(factored(1), "(x - 1)(x^2 - 2x - 1)");
    }

    #[test]
    fn report_is_clean() {
        let report = classify();
        assert_eq!(report.validate(), Vec::<String>::new());
        assert_eq!(report.buckets.len(), 3);
    }
}
